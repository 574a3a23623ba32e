#pragma once

// The snake lemma extracted from the two spectral sequences of a two-row bicomplex.
//
//   0 -> D --top_left--> E --top_right--> F -> 0
//        ^alpha          ^beta            ^gamma
//   0 -> A --bottom_left-> B --bottom_right-> C -> 0

#include <array>
#include <cstddef>
#include <string>

#include "polyss/polycomplex.hpp"
#include "polyss/spectral.hpp"

namespace polyss {

struct SnakeDiagram {
    FieldSpec field;
    Matrix bottom_left;  ///< A -> B
    Matrix bottom_right; ///< B -> C
    Matrix top_left;     ///< D -> E
    Matrix top_right;    ///< E -> F
    Matrix alpha;        ///< A -> D
    Matrix beta;         ///< B -> E
    Matrix gamma;        ///< C -> F

    std::size_t dim_a() const noexcept { return bottom_left.cols(); }
    std::size_t dim_b() const noexcept { return bottom_left.rows(); }
    std::size_t dim_c() const noexcept { return bottom_right.rows(); }
    std::size_t dim_d() const noexcept { return top_left.cols(); }
    std::size_t dim_e() const noexcept { return top_left.rows(); }
    std::size_t dim_f() const noexcept { return top_right.rows(); }
};

/// Throws Error(snake_input) naming the first failure: a shape mismatch, an
/// inexact row, or a non-commuting square.
void validate_snake(const SnakeDiagram& s);

/// The commuting-square bicomplex: A, B, C at (0,0), (1,0), (2,0); D, E, F at (0,1), (1,1), (2,1).
Polycomplex snake_bicomplex(const SnakeDiagram& s);

struct SnakeResult {
    /// ker alpha, ker beta, ker gamma, coker alpha, coker beta, coker gamma.
    std::array<Subquotient, 6> terms;
    /// The five maps between consecutive terms; maps[2] is the connecting map delta.
    std::array<Matrix, 5> maps;
    /// Exactness at each of the six terms (including injectivity at the first and surjectivity at the last).
    std::array<bool, 6> exact_at{};
    bool horizontal_e1_zero = false;
    bool vertical_converges_to_zero = false;
    bool horizontal_converges_to_zero = false;
    /// d_2 : E_2(0, 1) -> E_2(2, 0) of the vertical filtration; an isomorphism.
    Matrix d2;
    SpectralSequence vertical;
    SpectralSequence horizontal;

    const Matrix& delta() const noexcept { return maps[2]; }
    bool exact() const noexcept;
};

SnakeResult snake(const SnakeDiagram& s);

const char* snake_term_name(std::size_t i) noexcept;

} // namespace polyss
