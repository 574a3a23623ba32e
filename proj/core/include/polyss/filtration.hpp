#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyss/cochain.hpp"
#include "polyss/polycomplex.hpp"

namespace polyss {

/// A cochain complex with a decreasing filtration F(p, n), p >= 0.
///
/// Levels are stored for p = 0..top_level(); F(p, n) for p above that repeats
/// the top level and F(p, n) for p < 0 is F(0, n). Construction only checks shapes;
/// the filtration axioms are checked by validate_filtration.
class FilteredComplex {
public:
    /// levels[n][p] is F(p, n) inside C^n; every degree must carry the same number of levels.
    FilteredComplex(CochainComplex complex, std::vector<std::vector<Subspace>> levels);

    const CochainComplex& complex() const noexcept { return complex_; }
    const FieldSpec& field() const noexcept { return complex_.field(); }
    int top_degree() const noexcept { return complex_.top_degree(); }
    int top_level() const noexcept { return top_level_; }
    /// Requires 0 <= n <= top_degree().
    const Subspace& level(int p, int n) const;

private:
    CochainComplex complex_;
    std::vector<std::vector<Subspace>> levels_;
    int top_level_;
};

/// F(0) = everything, F(1) = 0.
FilteredComplex trivial_filtration(const CochainComplex& c);

enum class FiltrationFault { not_full_at_zero, not_decreasing, not_stable };

struct FiltrationViolation {
    FiltrationFault fault;
    int p;
    int n;
    std::string message;
};

std::optional<FiltrationViolation> validate_filtration(const FilteredComplex& fc);

enum class Boundedness { canonically_bounded, bounded, unbounded_within_window };

const char* to_string(Boundedness b) noexcept;

/// Relative to the stored window: bounded iff the top stored level vanishes in every degree.
Boundedness classify_boundedness(const FilteredComplex& fc);

/// The filtration sum_{i in A} x_i >= s on a total complex. Indices are 1-based and sorted.
class IndexSubsetFiltration {
public:
    /// Throws Error(invalid_subset) unless A is a nonempty proper subset of {1..k}.
    IndexSubsetFiltration(std::vector<std::size_t> indices, std::size_t k);

    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    std::size_t k() const noexcept { return k_; }
    bool is_strict_subset_of(const IndexSubsetFiltration& other) const;
    std::string to_string() const;

    friend bool operator==(const IndexSubsetFiltration&, const IndexSubsetFiltration&) = default;

private:
    std::vector<std::size_t> indices_;
    std::size_t k_;
};

/// All 2^k - 2 nonempty proper index subsets, ordered by size then lexicographically.
std::vector<IndexSubsetFiltration> canonical_filtrations(std::size_t k);
std::vector<IndexSubsetFiltration> canonical_filtrations(const Polycomplex& v);

/// F(p, n) = span of the blocks V^x of T^n with sum_{i in A} x_i >= p, for p = 0..top+1.
FilteredComplex apply_filtration(const TotalComplex& t, const IndexSubsetFiltration& a);

} // namespace polyss
