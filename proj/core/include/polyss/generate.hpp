#pragma once

// Seeded random instances: polycomplexes, snake diagrams, matrices.

#include <cstddef>
#include <random>

#include "polyss/polycomplex.hpp"
#include "polyss/snake.hpp"

namespace polyss {

using Rng = std::mt19937_64;

/// Uniform residues over GF(p); integers in [-3, 3] over the rationals.
Matrix random_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols, Rng& rng);
/// Rejection-samples an invertible n x n matrix.
Matrix random_invertible(const FieldSpec& field, std::size_t n, Rng& rng);

/// left * right with both factors of full rank r.
Matrix random_matrix_of_rank(const FieldSpec& field, std::size_t rows, std::size_t cols, std::size_t r, Rng& rng);

struct PolycomplexShape {
    std::size_t k = 2;
    int extent = 3;             ///< coordinates range over 0..extent-1 on every axis
    std::size_t max_cell_dim = 2;
    /// Fraction of cells left empty.
    double empty_fraction = 0.15;
    /// If true, every incoming map has maximal rank allowed by the axioms; otherwise ranks are random.
    bool generic = false;
};

/// A random polycomplex satisfying the square-zero and anticommutation axioms.
///
/// Cells are filled in order of coordinate sum. The maps into a new cell y form a
/// block row M; the axioms at y say exactly M D = 0 for the block D of the total
/// differential that lands in the cells y - e_i, so the rows of M are drawn from
/// the left kernel of D.
Polycomplex random_polycomplex(const FieldSpec& field, const PolycomplexShape& shape, Rng& rng);

struct DirectSumShape {
    std::size_t k = 2;
    int extent = 3;        ///< coordinates range over 0..extent-1 on every axis
    std::size_t pieces = 0; ///< 0 means one piece per lattice point of the box
    double zigzag_fraction = 0.3;
    double dot_fraction = 0.05;
    int max_zigzag_length = 6;
};

/// A direct sum of elementary polycomplexes, then a random change of basis in every cell.
///
/// Pieces are cubes (the tensor product of the intervals k -> k along a random
/// nonempty set of axes, with Koszul signs), zigzags alternating between two axes,
/// and single cells. For k = 2 these are exactly the indecomposable bicomplexes,
/// so every bicomplex over a field arises this way up to isomorphism.
Polycomplex random_direct_sum_polycomplex(const FieldSpec& field, const DirectSumShape& shape, Rng& rng);

/// A snake diagram with exact rows and commuting squares; every space has dimension <= max_dim.
SnakeDiagram random_snake(const FieldSpec& field, std::size_t max_dim, Rng& rng);

} // namespace polyss
