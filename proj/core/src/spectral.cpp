#include "polyss/spectral.hpp"

#include <algorithm>
#include <tuple>

#include "polyss/error.hpp"

namespace polyss {

const PageCell* Page::find(int p, int q) const
{
    auto it = cells_.find({p, q});
    return it == cells_.end() ? nullptr : &it->second;
}

std::size_t Page::dim(int p, int q) const
{
    const auto* c = find(p, q);
    return c ? c->dim() : 0;
}

const Matrix& Page::differential(int p, int q) const
{
    auto it = d_.find({p, q});
    if (it == d_.end())
        fail(ErrorKind::dimension_mismatch, "no cell (" + std::to_string(p) + ", " + std::to_string(q) + ") on page " + std::to_string(r_));
    return it->second;
}

SpectralSequence::SpectralSequence(std::vector<Page> pages, int stabilization_page, bool complete)
    : pages_(std::move(pages)), r_stab_(stabilization_page), complete_(complete)
{
}

const Page& SpectralSequence::page(int r) const
{
    if (r < 0)
        fail(ErrorKind::dimension_mismatch, "negative page index");
    if (r <= last_page())
        return pages_[static_cast<std::size_t>(r)];
    if (!complete_)
        fail(ErrorKind::hypothesis, "page " + std::to_string(r) + " was not computed");
    return pages_.back();
}

const Page& SpectralSequence::e_infinity() const
{
    if (!complete_)
        fail(ErrorKind::hypothesis, "spectral sequence was truncated before stabilizing");
    return pages_.back();
}

class PageEngine {
public:
    explicit PageEngine(const FilteredComplex& fc) : fc_(fc), c_(fc.complex()) {}

    int top_degree() const { return fc_.top_degree(); }
    int top_level() const { return fc_.top_level(); }

    bool in_window(int p, int n) const
    {
        if (p < 0 || p >= top_level() || n < 0 || n > top_degree())
            return false;
        return n - p >= 0 || fc_.level(p, n).dim() > 0;
    }

    // F(p, n) ∩ d^{-1} F(p + r, n + 1)
    const Subspace& z(int r, int p, int n)
    {
        const int lo = std::clamp(p, 0, top_level());
        const int hi = std::clamp(p + r, 0, top_level());
        auto key = std::make_tuple(lo, hi, n);
        auto it = z_cache_.find(key);
        if (it != z_cache_.end())
            return it->second;
        Subspace value = fc_.level(lo, n);
        if (n < top_degree()) {
            const auto& target = fc_.level(hi, n + 1);
            if (target.dim() != target.ambient_dim())
                value = intersect(value, preimage(c_.differential(n), target));
        }
        return z_cache_.emplace(key, std::move(value)).first->second;
    }

    Subspace boundaries(int r, int p, int n)
    {
        Subspace b = z(r - 1, p + 1, n);
        if (n >= 1)
            b = sum(b, image(c_.differential(n - 1), z(r - 1, p - r + 1, n - 1)));
        return b;
    }

    Page build(int r)
    {
        Page page(r);
        for (int n = 0; n <= top_degree(); ++n)
            for (int p = 0; p < top_level(); ++p) {
                if (!in_window(p, n))
                    continue;
                page.cells_.emplace(Bidegree{p, n - p}, PageCell{p, n - p, r, Subquotient(z(r, p, n), boundaries(r, p, n))});
            }
        for (const auto& [bd, cell] : page.cells_) {
            auto [tp, tq] = page.target(cell.p, cell.q);
            const PageCell* tgt = page.find(tp, tq);
            if (!tgt) {
                page.d_.emplace(bd, Matrix(c_.field(), 0, cell.dim()));
                continue;
            }
            try {
                page.d_.emplace(bd, induced_map(cell.sq, tgt->sq, c_.differential(cell.degree())));
            } catch (const Error& e) {
                fail(ErrorKind::internal, "d_" + std::to_string(r) + " at (" + std::to_string(cell.p) + ", " + std::to_string(cell.q) +
                                              ") is not well defined: " + e.what());
            }
        }
        return page;
    }

    // E_{r+1} must be ker d_r / im d_r inside E_r, as subspaces of E_r's quotient coordinates.
    void verify_recursion(const Page& cur, const Page& next)
    {
        const int r = cur.r();
        for (const auto& [bd, cell] : cur.cells_) {
            auto [p, q] = bd;
            const PageCell* up = next.find(p, q);
            if (!up)
                fail(ErrorKind::internal, "page " + std::to_string(r + 1) + " lost a cell");
            const auto& proj = cell.sq.projection();
            Subspace kernel = kernel_basis(cur.differential(p, q));
            Subspace incoming = Subspace::zero(c_.field(), cell.dim());
            if (const PageCell* src = cur.find(p - r, q + r - 1))
                incoming = image_basis(cur.differential(src->p, src->q));
            if (!(Subspace::span(proj * up->sq.numerator().basis()) == kernel) ||
                !(Subspace::span(proj * up->sq.denominator().basis()) == incoming))
                fail(ErrorKind::internal, "E_" + std::to_string(r + 1) + "(" + std::to_string(p) + ", " + std::to_string(q) +
                                              ") is not the cohomology of E_" + std::to_string(r));
            const auto& out = cur.differential(p, q);
            auto [tp, tq] = cur.target(p, q);
            if (const PageCell* tgt = cur.find(tp, tq)) {
                if (!(cur.differential(tgt->p, tgt->q) * out).is_zero())
                    fail(ErrorKind::internal, "d_" + std::to_string(r) + " squares to a nonzero map at (" + std::to_string(p) + ", " +
                                                  std::to_string(q) + ")");
            }
        }
    }

private:
    const FilteredComplex& fc_;
    const CochainComplex& c_;
    std::map<std::tuple<int, int, int>, Subspace> z_cache_;
};

namespace {

void require_bounded(const FilteredComplex& fc)
{
    if (auto v = validate_filtration(fc))
        fail(ErrorKind::hypothesis, "invalid filtration: " + v->message);
    if (classify_boundedness(fc) == Boundedness::unbounded_within_window)
        fail(ErrorKind::hypothesis, "filtration is not bounded within its window; convergence is not guaranteed");
}

bool same_cells(const Page& a, const Page& b)
{
    if (a.cells().size() != b.cells().size())
        return false;
    for (const auto& [bd, cell] : a.cells()) {
        const auto* other = b.find(bd.first, bd.second);
        if (!other || !(other->sq == cell.sq))
            return false;
    }
    return true;
}

} // namespace

SpectralSequence compute_pages(const FilteredComplex& fc, const PageOptions& options)
{
    require_bounded(fc);
    PageEngine engine(fc);
    const int natural_last = std::max({fc.top_level(), fc.top_degree() + 1, 1}) + 1;
    const int last = std::max(natural_last, options.min_last_page);
    const int stop = options.max_page ? std::min(*options.max_page, last) : last;
    if (stop < 0)
        fail(ErrorKind::dimension_mismatch, "max_page must be non-negative");

    std::vector<Page> pages;
    for (int r = 0; r <= stop; ++r) {
        pages.push_back(engine.build(r));
        if (r > 0)
            engine.verify_recursion(pages[static_cast<std::size_t>(r - 1)], pages.back());
    }

    int r_stab = stop + 1;
    while (r_stab > 0) {
        const auto& d = pages[static_cast<std::size_t>(r_stab - 1)].differentials();
        if (!std::all_of(d.begin(), d.end(), [](const auto& kv) { return kv.second.is_zero(); }))
            break;
        --r_stab;
    }

    const bool complete = stop == last;
    if (complete && !same_cells(pages[pages.size() - 2], pages.back()))
        fail(ErrorKind::internal, "pages " + std::to_string(last - 1) + " and " + std::to_string(last) + " differ past the stabilization bound");
    return SpectralSequence(std::move(pages), r_stab, complete);
}

std::map<Bidegree, Subquotient> associated_graded_H(const FilteredComplex& fc)
{
    require_bounded(fc);
    const auto& c = fc.complex();
    std::map<Bidegree, Subquotient> out;
    for (int n = 0; n <= fc.top_degree(); ++n) {
        auto cycles = kernel_basis(c.differential(n));
        auto bounds = image_basis(c.differential(n - 1));
        auto filtered = [&](int p) { return sum(intersect(fc.level(p, n), cycles), bounds); };
        for (int p = 0; p < fc.top_level(); ++p) {
            if (n - p < 0 && fc.level(p, n).dim() == 0)
                continue;
            out.emplace(Bidegree{p, n - p}, Subquotient(filtered(p), filtered(p + 1)));
        }
    }
    return out;
}

ConvergenceReport check_convergence(const SpectralSequence& ss, const FilteredComplex& fc)
{
    ConvergenceReport report;
    const auto h = cohomology(fc.complex());
    const auto graded = associated_graded_H(fc);
    const auto& einf = ss.e_infinity();
    report.e_infinity_totals.assign(static_cast<std::size_t>(std::max(fc.top_degree() + 1, 0)), 0);
    report.converged = true;
    for (int n = 0; n <= fc.top_degree(); ++n)
        report.cohomology_dims.push_back(h.dim(n));
    for (const auto& [bd, sq] : graded) {
        GradedComparison cmp{einf.dim(bd.first, bd.second), sq.dim()};
        report.cells.emplace(bd, cmp);
        if (cmp.e_infinity != cmp.graded)
            report.converged = false;
    }
    for (const auto& [bd, cell] : einf.cells()) {
        if (!report.cells.count(bd)) {
            report.cells.emplace(bd, GradedComparison{cell.dim(), 0});
            if (cell.dim() != 0)
                report.converged = false;
        }
        report.e_infinity_totals[static_cast<std::size_t>(cell.degree())] += cell.dim();
    }
    for (std::size_t n = 0; n < report.cohomology_dims.size(); ++n)
        if (report.e_infinity_totals[n] != report.cohomology_dims[n])
            report.converged = false;
    return report;
}

std::vector<EdgeMaps> edge_morphisms(const SpectralSequence& ss, const FilteredComplex& fc)
{
    if (classify_boundedness(fc) != Boundedness::canonically_bounded)
        fail(ErrorKind::hypothesis, "edge morphisms need a canonically bounded filtration");
    const auto h = cohomology(fc.complex());
    const auto& e2 = ss.page(2);
    const auto& einf = ss.e_infinity();
    const auto& c = fc.complex();
    std::vector<EdgeMaps> out;
    for (int n = 0; n <= fc.top_degree(); ++n) {
        const auto& hn = h.groups[static_cast<std::size_t>(n)];
        const auto id = Matrix::identity(c.field(), c.dim(n));
        const auto zero = Subquotient::whole(Subspace::zero(c.field(), c.dim(n)));
        auto cell = [&](const Page& page, int p, int q) -> const Subquotient& {
            const PageCell* found = page.find(p, q);
            return found ? found->sq : zero;
        };
        const Subquotient& top2 = cell(e2, 0, n);
        const Subquotient& topinf = cell(einf, 0, n);
        const Subquotient& bottom2 = cell(e2, n, 0);
        const Subquotient& bottominf = cell(einf, n, 0);
        try {
            EdgeMaps e{n,
                       induced_map(hn, top2, id),
                       induced_map(hn, topinf, id),
                       induced_map(topinf, top2, id),
                       induced_map(bottom2, hn, id),
                       induced_map(bottom2, bottominf, id),
                       induced_map(bottominf, hn, id)};
            if (!(e.h_to_e2 == e.einf_to_e2 * e.h_to_einf) || !(e.e2_to_h == e.einf_to_h * e.e2_to_einf))
                fail(ErrorKind::internal, "edge morphism factorization fails in degree " + std::to_string(n));
            out.push_back(std::move(e));
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::internal)
                throw;
            fail(ErrorKind::internal, "edge morphism in degree " + std::to_string(n) + ": " + err.what());
        }
    }
    return out;
}

namespace {

// Cohomology of the complex of subquotients along direction `outer` (1-based),
// where each cell carries the `inner`-direction cohomology of the bicomplex.
std::size_t iterated_cohomology(const Polycomplex& v, std::size_t inner, std::size_t outer, const MultiDegree& x)
{
    const auto& f = v.field();
    auto inner_h = [&](const MultiDegree& y) {
        if (!y.is_nonnegative())
            return Subquotient::whole(Subspace::zero(f, 0));
        auto z = kernel_basis(v.partial(inner, y));
        auto below = y.shifted(inner, -1);
        auto b = below.is_nonnegative() ? image_basis(v.partial(inner, below)) : Subspace::zero(f, v.dim(y));
        return Subquotient(std::move(z), std::move(b));
    };
    auto here = inner_h(x);
    auto prev_deg = x.shifted(outer, -1);
    auto next_deg = x.shifted(outer, 1);
    auto next = inner_h(next_deg);
    Matrix out = induced_map(here, next, v.partial(outer, x));
    std::size_t incoming = 0;
    if (prev_deg.is_nonnegative()) {
        auto prev = inner_h(prev_deg);
        incoming = rank(induced_map(prev, here, v.partial(outer, prev_deg)));
    }
    return here.dim() - rank(out) - incoming;
}

} // namespace

std::map<Bidegree, E2Comparison> bicomplex_E2_identification(const Polycomplex& v)
{
    if (v.k() != 2)
        fail(ErrorKind::shape, "bicomplex E_2 identification needs k = 2, got k = " + std::to_string(v.k()));
    if (auto bad = validate_polycomplex(v))
        fail(ErrorKind::axiom, bad->message);
    const auto total = totalize(v);
    const auto vertical = compute_pages(apply_filtration(total, IndexSubsetFiltration({1}, 2)), {.max_page = 2});
    const auto horizontal = compute_pages(apply_filtration(total, IndexSubsetFiltration({2}, 2)), {.max_page = 2});
    std::map<Bidegree, E2Comparison> out;
    const int top = total.underlying.top_degree();
    for (int n = 0; n <= top; ++n)
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            E2Comparison cmp;
            cmp.vertical_pages = vertical.page(2).dim(p, q);
            cmp.horizontal_pages = horizontal.page(2).dim(p, q);
            // 'E_2(p, q) = H_h^p(H_v^q) at cell (p, q); ''E_2(p, q) = H_v^p(H_h^q) at cell (q, p).
            cmp.vertical_direct = iterated_cohomology(v, 2, 1, MultiDegree{p, q});
            cmp.horizontal_direct = iterated_cohomology(v, 1, 2, MultiDegree{q, p});
            out.emplace(Bidegree{p, q}, cmp);
        }
    return out;
}

} // namespace polyss
