#include "polyss/filtration.hpp"

#include <algorithm>

#include "polyss/error.hpp"

namespace polyss {

FilteredComplex::FilteredComplex(CochainComplex complex, std::vector<std::vector<Subspace>> levels)
    : complex_(std::move(complex)), levels_(std::move(levels)), top_level_(-1)
{
    if (levels_.size() != complex_.dims().size())
        fail(ErrorKind::shape, "filtration needs levels for each of the " + std::to_string(complex_.dims().size()) + " degrees");
    for (std::size_t n = 0; n < levels_.size(); ++n) {
        if (levels_[n].empty())
            fail(ErrorKind::shape, "filtration has no levels in degree " + std::to_string(n));
        if (n > 0 && levels_[n].size() != levels_[0].size())
            fail(ErrorKind::shape, "filtration has a ragged level count in degree " + std::to_string(n));
        for (const auto& s : levels_[n]) {
            require_same_field(complex_.field(), s.field());
            if (s.ambient_dim() != complex_.dims()[n])
                fail(ErrorKind::shape, "filtration level in degree " + std::to_string(n) + " has the wrong ambient dimension");
        }
    }
    top_level_ = levels_.empty() ? 0 : static_cast<int>(levels_[0].size()) - 1;
}

const Subspace& FilteredComplex::level(int p, int n) const
{
    if (n < 0 || n > top_degree())
        fail(ErrorKind::dimension_mismatch, "filtration level requested outside degree window: n = " + std::to_string(n));
    auto idx = static_cast<std::size_t>(std::clamp(p, 0, top_level_));
    return levels_[static_cast<std::size_t>(n)][idx];
}

FilteredComplex trivial_filtration(const CochainComplex& c)
{
    std::vector<std::vector<Subspace>> levels;
    for (auto d : c.dims())
        levels.push_back({Subspace::full(c.field(), d), Subspace::zero(c.field(), d)});
    return FilteredComplex(c, std::move(levels));
}

std::optional<FiltrationViolation> validate_filtration(const FilteredComplex& fc)
{
    const auto& c = fc.complex();
    for (int n = 0; n <= fc.top_degree(); ++n)
        if (fc.level(0, n).dim() != c.dim(n))
            return FiltrationViolation{FiltrationFault::not_full_at_zero, 0, n, "F(0, " + std::to_string(n) + ") is not the whole space"};
    for (int p = 0; p <= fc.top_level(); ++p)
        for (int n = 0; n <= fc.top_degree(); ++n) {
            if (p > 0 && !fc.level(p - 1, n).contains(fc.level(p, n)))
                return FiltrationViolation{FiltrationFault::not_decreasing, p, n,
                                           "F(" + std::to_string(p) + ", " + std::to_string(n) + ") is not contained in F(" +
                                               std::to_string(p - 1) + ", " + std::to_string(n) + ")"};
            if (n < fc.top_degree()) {
                Matrix moved = c.differential(n) * fc.level(p, n).basis();
                if (!fc.level(p, n + 1).contains(moved))
                    return FiltrationViolation{FiltrationFault::not_stable, p, n,
                                               "d maps F(" + std::to_string(p) + ", " + std::to_string(n) + ") outside F(" +
                                                   std::to_string(p) + ", " + std::to_string(n + 1) + ")"};
            }
        }
    return std::nullopt;
}

const char* to_string(Boundedness b) noexcept
{
    switch (b) {
    case Boundedness::canonically_bounded: return "canonically-bounded";
    case Boundedness::bounded: return "bounded";
    case Boundedness::unbounded_within_window: return "unbounded-within-window";
    }
    return "unknown";
}

Boundedness classify_boundedness(const FilteredComplex& fc)
{
    bool vanishes = true;
    bool canonical = true;
    for (int n = 0; n <= fc.top_degree(); ++n) {
        if (fc.level(fc.top_level(), n).dim() != 0)
            vanishes = false;
        if (fc.level(n + 1, n).dim() != 0 || fc.level(0, n).dim() != fc.complex().dim(n))
            canonical = false;
    }
    if (!vanishes)
        return Boundedness::unbounded_within_window;
    return canonical ? Boundedness::canonically_bounded : Boundedness::bounded;
}

IndexSubsetFiltration::IndexSubsetFiltration(std::vector<std::size_t> indices, std::size_t k)
    : indices_(checked_index_subset(std::move(indices), k)), k_(k)
{
}

bool IndexSubsetFiltration::is_strict_subset_of(const IndexSubsetFiltration& other) const
{
    return k_ == other.k_ && indices_.size() < other.indices_.size() &&
           std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
}

std::string IndexSubsetFiltration::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < indices_.size(); ++i)
        s += (i ? "," : "") + std::to_string(indices_[i]);
    return s + "}";
}

std::vector<IndexSubsetFiltration> canonical_filtrations(std::size_t k)
{
    std::vector<IndexSubsetFiltration> out;
    if (k < 2)
        return out;
    for (std::size_t size = 1; size < k; ++size) {
        // Lexicographic combinations of {1..k} of the given size.
        std::vector<std::size_t> comb(size);
        for (std::size_t i = 0; i < size; ++i)
            comb[i] = i + 1;
        while (true) {
            out.emplace_back(comb, k);
            std::size_t i = size;
            while (i > 0 && comb[i - 1] == k - size + i)
                --i;
            if (i == 0)
                break;
            ++comb[i - 1];
            for (std::size_t j = i; j < size; ++j)
                comb[j] = comb[j - 1] + 1;
        }
    }
    return out;
}

std::vector<IndexSubsetFiltration> canonical_filtrations(const Polycomplex& v)
{
    return canonical_filtrations(v.k());
}

FilteredComplex apply_filtration(const TotalComplex& t, const IndexSubsetFiltration& a)
{
    const auto& c = t.underlying;
    const int top = c.top_degree();
    std::vector<std::vector<Subspace>> levels;
    for (int n = 0; n <= top; ++n) {
        const auto un = static_cast<std::size_t>(n);
        std::vector<Subspace> per_level;
        for (int p = 0; p <= top + 1; ++p) {
            std::vector<std::size_t> coords;
            for (const auto& x : t.summand_order[un]) {
                if (x.partial_sum(a.indices()) < p)
                    continue;
                auto block = t.block_coordinates(n, x);
                coords.insert(coords.end(), block.begin(), block.end());
            }
            std::sort(coords.begin(), coords.end());
            per_level.push_back(Subspace::coordinates(c.field(), c.dim(n), coords));
        }
        levels.push_back(std::move(per_level));
    }
    return FilteredComplex(c, std::move(levels));
}

} // namespace polyss
