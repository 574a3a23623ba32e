#include "polyss/morphism.hpp"

#include <algorithm>
#include <set>

#include "polyss/error.hpp"

namespace polyss {

SSMorphism::SSMorphism(const FieldSpec& field, SpectralSequence source, SpectralSequence target,
                       std::vector<std::map<Bidegree, Matrix>> maps)
    : field_(field), source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps))
{
}

const std::map<Bidegree, Matrix>& SSMorphism::page(int r) const
{
    return maps_.at(static_cast<std::size_t>(std::min(r, last_page())));
}

Matrix SSMorphism::at(int r, int p, int q) const
{
    const auto& m = page(r);
    auto it = m.find({p, q});
    if (it != m.end())
        return it->second;
    const int rr = std::min(r, last_page());
    return Matrix(field_, target_.page(rr).dim(p, q), source_.page(rr).dim(p, q));
}

namespace {

void require_filtered(const CochainMap& phi, const FilteredComplex& source, const FilteredComplex& target)
{
    const int top_level = std::max(source.top_level(), target.top_level());
    for (int n = 0; n <= source.top_degree(); ++n) {
        const Matrix m = phi.at(n);
        for (int p = 0; p <= top_level; ++p) {
            if (n > target.top_degree())
                continue;
            if (!target.level(p, n).contains(m * source.level(p, n).basis()))
                fail(ErrorKind::hypothesis, "cochain map does not preserve the filtration at (p, n) = (" + std::to_string(p) + ", " +
                                                std::to_string(n) + ")");
        }
    }
}

Matrix zero_between(const FieldSpec& f, std::size_t rows, std::size_t cols)
{
    return Matrix(f, rows, cols);
}

} // namespace

SSMorphism induced_morphism(const CochainMap& phi, const FilteredComplex& source, const FilteredComplex& target)
{
    if (auto bad = validate_cochain_map(phi))
        fail(ErrorKind::hypothesis, "not a cochain map: " + bad->message);
    if (!(phi.source().dims() == source.complex().dims()) || !(phi.target().dims() == target.complex().dims()))
        fail(ErrorKind::shape, "cochain map does not match the filtered complexes");
    require_filtered(phi, source, target);

    // Align page counts so both sequences are computed over the same range of r.
    const int natural_src = std::max({source.top_level(), source.top_degree() + 1, 1}) + 1;
    const int natural_tgt = std::max({target.top_level(), target.top_degree() + 1, 1}) + 1;
    const int last = std::max(natural_src, natural_tgt);
    auto src_ss = compute_pages(source, {.max_page = std::nullopt, .min_last_page = last});
    auto tgt_ss = compute_pages(target, {.max_page = std::nullopt, .min_last_page = last});
    const auto& f = source.field();

    std::vector<std::map<Bidegree, Matrix>> maps;
    for (int r = 0; r <= last; ++r) {
        const auto& sp = src_ss.page(r);
        const auto& tp = tgt_ss.page(r);
        std::set<Bidegree> cells;
        for (const auto& kv : sp.cells())
            cells.insert(kv.first);
        for (const auto& kv : tp.cells())
            cells.insert(kv.first);
        std::map<Bidegree, Matrix> page;
        for (const auto& bd : cells) {
            const auto* s = sp.find(bd.first, bd.second);
            const auto* t = tp.find(bd.first, bd.second);
            if (s && t) {
                try {
                    page.emplace(bd, induced_map(s->sq, t->sq, phi.at(s->degree())));
                } catch (const Error& e) {
                    fail(ErrorKind::internal, "f_" + std::to_string(r) + " at (" + std::to_string(bd.first) + ", " +
                                                  std::to_string(bd.second) + "): " + e.what());
                }
            } else {
                page.emplace(bd, zero_between(f, t ? t->dim() : 0, s ? s->dim() : 0));
            }
        }
        maps.push_back(std::move(page));
    }

    auto map_at = [&](int r, const Bidegree& bd) -> Matrix {
        auto it = maps[static_cast<std::size_t>(r)].find(bd);
        if (it != maps[static_cast<std::size_t>(r)].end())
            return it->second;
        return zero_between(f, tgt_ss.page(r).dim(bd.first, bd.second), src_ss.page(r).dim(bd.first, bd.second));
    };
    auto d_at = [&](const Page& page, const Bidegree& bd, std::size_t target_dim) -> Matrix {
        if (page.find(bd.first, bd.second)) {
            const auto& d = page.differential(bd.first, bd.second);
            if (d.rows() == target_dim)
                return d;
            return zero_between(f, target_dim, d.cols());
        }
        return zero_between(f, target_dim, 0);
    };

    for (int r = 0; r <= last; ++r) {
        const auto& sp = src_ss.page(r);
        const auto& tp = tgt_ss.page(r);
        for (const auto& [bd, m] : maps[static_cast<std::size_t>(r)]) {
            Bidegree to{bd.first + r, bd.second - r + 1};
            Matrix lhs = map_at(r, to) * d_at(sp, bd, sp.dim(to.first, to.second));
            Matrix rhs = d_at(tp, bd, tp.dim(to.first, to.second)) * m;
            if (!(lhs == rhs))
                fail(ErrorKind::internal, "f_" + std::to_string(r) + " does not commute with d_" + std::to_string(r) + " at (" +
                                              std::to_string(bd.first) + ", " + std::to_string(bd.second) + ")");
        }
        if (r == last)
            break;
        // f_{r+1} must be the map f_r induces on cohomology: transport each E_{r+1} representative.
        const auto& snext = src_ss.page(r + 1);
        const auto& tnext = tgt_ss.page(r + 1);
        for (const auto& [bd, next_map] : maps[static_cast<std::size_t>(r + 1)]) {
            const auto* s_next = snext.find(bd.first, bd.second);
            const auto* s_cur = sp.find(bd.first, bd.second);
            const auto* t_cur = tp.find(bd.first, bd.second);
            const auto* t_next = tnext.find(bd.first, bd.second);
            if (!s_next || !s_cur || !t_cur || !t_next || s_next->dim() == 0)
                continue;
            Matrix via_old = map_at(r, bd) * s_cur->sq.projection() * s_next->sq.reps();
            Matrix via_new = t_cur->sq.projection() * t_next->sq.reps() * next_map;
            Subspace boundaries = Subspace::zero(f, t_cur->dim());
            if (const auto* src = tp.find(bd.first - r, bd.second + r - 1))
                boundaries = image_basis(tp.differential(src->p, src->q));
            if (!boundaries.contains(via_old - via_new))
                fail(ErrorKind::internal, "f_" + std::to_string(r + 1) + " is not induced by f_" + std::to_string(r) + " at (" +
                                              std::to_string(bd.first) + ", " + std::to_string(bd.second) + ")");
        }
    }
    return SSMorphism(f, std::move(src_ss), std::move(tgt_ss), std::move(maps));
}

SSMorphism inclusion_morphism(const Polycomplex& v, const IndexSubsetFiltration& a, const IndexSubsetFiltration& b)
{
    if (a.k() != v.k() || b.k() != v.k())
        fail(ErrorKind::invalid_subset, "index subsets do not match k = " + std::to_string(v.k()));
    if (!a.is_strict_subset_of(b))
        fail(ErrorKind::invalid_subset, a.to_string() + " is not a strict subset of " + b.to_string());
    const auto total = totalize(v);
    return induced_morphism(CochainMap::identity(total.underlying), apply_filtration(total, a), apply_filtration(total, b));
}

} // namespace polyss
