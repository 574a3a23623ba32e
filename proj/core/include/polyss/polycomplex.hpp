#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyss/cochain.hpp"

namespace polyss {

/// Coordinates (x_1, ..., x_k) of a cell, all non-negative. Ordered lexicographically.
class MultiDegree {
public:
    MultiDegree() = default;
    explicit MultiDegree(std::vector<int> coords);
    MultiDegree(std::initializer_list<int> coords) : MultiDegree(std::vector<int>(coords)) {}

    std::size_t size() const noexcept { return coords_.size(); }
    int operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<int>& coords() const noexcept { return coords_; }
    int total() const noexcept;
    /// Sum of the coordinates whose 1-based index is in `indices`.
    int partial_sum(const std::vector<std::size_t>& indices) const;
    /// x + delta * e_i with i 1-based; may produce a negative coordinate.
    MultiDegree shifted(std::size_t i, int delta = 1) const;
    bool is_nonnegative() const noexcept;

    std::string to_string() const;

    friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

private:
    std::vector<int> coords_;
};

/// A k-graded space with differentials partial_1..partial_k, partial_i of polydegree e_i.
///
/// Cells with dimension zero are not stored. `degree_shift()` is subtracted from
/// coordinate sums when totalizing (used by slices).
class Polycomplex {
public:
    Polycomplex(const FieldSpec& field, std::size_t k);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t k() const noexcept { return k_; }
    int degree_shift() const noexcept { return degree_shift_; }
    void set_degree_shift(int shift) noexcept { degree_shift_ = shift; }

    /// Setting dimension 0 removes the cell together with any maps touching it.
    void set_dim(const MultiDegree& x, std::size_t dim);
    std::size_t dim(const MultiDegree& x) const;
    const std::map<MultiDegree, std::size_t>& cells() const noexcept { return dims_; }

    /// partial_i(x) : V^x -> V^{x + e_i}, i 1-based. Throws Error(shape) on a shape mismatch.
    void set_partial(std::size_t i, const MultiDegree& from, Matrix m);
    /// Stored matrix or the zero map of the right shape.
    Matrix partial(std::size_t i, const MultiDegree& from) const;
    /// Stored (nonzero-shaped) maps keyed by (i, source).
    const std::map<std::pair<std::size_t, MultiDegree>, Matrix>& partials() const noexcept { return partial_; }

    /// Largest coordinate sum minus degree_shift(); -1 when empty.
    int top_degree() const noexcept;

private:
    void check_degree(const MultiDegree& x) const;

    FieldSpec field_;
    std::size_t k_;
    int degree_shift_ = 0;
    std::map<MultiDegree, std::size_t> dims_;
    std::map<std::pair<std::size_t, MultiDegree>, Matrix> partial_;
};

struct PolycomplexViolation {
    std::size_t i; ///< i == j for a square-zero failure
    std::size_t j;
    MultiDegree x;
    std::string message;
};

/// Checks partial_i^2 = 0 and partial_i partial_j + partial_j partial_i = 0 at every cell.
std::optional<PolycomplexViolation> validate_polycomplex(const Polycomplex& v);

/// Replaces partial_i at x by (-1)^{x_j} partial_i. The input must have
/// commuting partial_i, partial_j (Error(axiom) otherwise).
Polycomplex anticommutify(const Polycomplex& v, std::size_t i, std::size_t j);

enum class SummandOrder { ascending_lex, descending_lex };

struct TotalComplex {
    CochainComplex underlying;
    /// summand_order[n]: multidegrees of total degree n, in assembly order.
    std::vector<std::vector<MultiDegree>> summand_order;
    /// offsets[n][x]: first coordinate of the V^x block inside T^n.
    std::vector<std::map<MultiDegree, std::size_t>> offsets;
    /// block_sizes[n][x] = dim V^x.
    std::vector<std::map<MultiDegree, std::size_t>> block_sizes;

    std::size_t offset(int n, const MultiDegree& x) const;
    /// Coordinates of the V^x block inside T^n.
    std::vector<std::size_t> block_coordinates(int n, const MultiDegree& x) const;
};

/// T(V)^n = sum of V^x over coordinate sum n, d = partial_1 + ... + partial_k.
TotalComplex totalize(const Polycomplex& v, SummandOrder order = SummandOrder::ascending_lex);

/// The sub-polycomplex on {x : sum_{i in A} x_i = p}, keeping only partial_j for j
/// not in A. Native coordinates are kept; its totalization is shifted down by p.
/// Throws Error(invalid_subset) unless A is a nonempty proper subset of {1..k}.
Polycomplex slice(const Polycomplex& v, const std::vector<std::size_t>& subset, int p);

/// Throws Error(invalid_subset) unless `subset` is a nonempty proper subset of {1..k}
/// without repetitions. Returns it sorted.
std::vector<std::size_t> checked_index_subset(std::vector<std::size_t> subset, std::size_t k);

} // namespace polyss
