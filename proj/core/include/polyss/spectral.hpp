#pragma once

// Spectral sequence of a bounded filtered cochain complex.
//
// Page r is realized in closed form: with n = p + q,
//   Z_r(p, n) = F(p, n) ∩ d^{-1} F(p + r, n + 1)
//   E_r(p, q) = Z_r(p, n) / (Z_{r-1}(p + 1, n) + d Z_{r-1}(p - r + 1, n - 1)),
// and d_r is induced by d on the stored representatives. compute_pages checks on
// every run that E_{r+1} is the cohomology of (E_r, d_r) as subspaces of E_r.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "polyss/filtration.hpp"
#include "polyss/linalg.hpp"

namespace polyss {

/// (p, q): filtration level and complementary degree.
using Bidegree = std::pair<int, int>;

struct PageCell {
    int p;
    int q;
    int r;
    Subquotient sq; ///< inside C^{p+q}

    int degree() const noexcept { return p + q; }
    std::size_t dim() const noexcept { return sq.dim(); }
};

class Page {
public:
    explicit Page(int r) : r_(r) {}

    int r() const noexcept { return r_; }
    const std::map<Bidegree, PageCell>& cells() const noexcept { return cells_; }
    /// nullptr outside the materialized window (such cells are zero).
    const PageCell* find(int p, int q) const;
    std::size_t dim(int p, int q) const;
    /// d_r : E_r(p, q) -> E_r(p + r, q - r + 1). Has 0 rows when the target lies outside the window.
    const Matrix& differential(int p, int q) const;
    const std::map<Bidegree, Matrix>& differentials() const noexcept { return d_; }
    /// Target bidegree of the differential leaving (p, q).
    Bidegree target(int p, int q) const noexcept { return {p + r_, q - r_ + 1}; }

private:
    friend class PageEngine;

    int r_;
    std::map<Bidegree, PageCell> cells_;
    std::map<Bidegree, Matrix> d_;
};

struct PageOptions {
    /// Stop after this page. The sequence is then incomplete unless it had already stabilized.
    std::optional<int> max_page;
    /// Compute at least this many pages (used to align two sequences).
    int min_last_page = 0;
};

class SpectralSequence {
public:
    SpectralSequence(std::vector<Page> pages, int stabilization_page, bool complete);

    const std::vector<Page>& pages() const noexcept { return pages_; }
    /// For r past the last computed page of a complete sequence, the last page.
    const Page& page(int r) const;
    int last_page() const noexcept { return static_cast<int>(pages_.size()) - 1; }
    /// Least r from which every computed d_r vanishes.
    int stabilization_page() const noexcept { return r_stab_; }
    /// False when truncated by PageOptions::max_page before stabilizing.
    bool complete() const noexcept { return complete_; }
    /// Throws Error(hypothesis) if the sequence is incomplete.
    const Page& e_infinity() const;

private:
    std::vector<Page> pages_;
    int r_stab_;
    bool complete_;
};

/// Throws Error(hypothesis) unless the filtration is valid and bounded, and
/// Error(internal) if the page recursion or a well-definedness check fails.
SpectralSequence compute_pages(const FilteredComplex& fc, const PageOptions& options = {});

/// F^p H^n / F^{p+1} H^n with F^p H^n the image of H^n(F^p C) in H^n(C).
std::map<Bidegree, Subquotient> associated_graded_H(const FilteredComplex& fc);

struct GradedComparison {
    std::size_t e_infinity = 0;
    std::size_t graded = 0;
};

struct ConvergenceReport {
    std::vector<std::size_t> cohomology_dims;
    std::map<Bidegree, GradedComparison> cells;
    /// sum over p + q = n of dim E_inf(p, q)
    std::vector<std::size_t> e_infinity_totals;
    bool converged = false;
};

ConvergenceReport check_convergence(const SpectralSequence& ss, const FilteredComplex& fc);

/// The edge morphisms in degree n together with the factors they are built from.
struct EdgeMaps {
    int n;
    Matrix h_to_e2;     ///< H^n -> E_2(0, n)
    Matrix h_to_einf;   ///< H^n ->> E_inf(0, n)
    Matrix einf_to_e2;  ///< E_inf(0, n) >-> E_2(0, n)
    Matrix e2_to_h;     ///< E_2(n, 0) -> H^n
    Matrix e2_to_einf;  ///< E_2(n, 0) ->> E_inf(n, 0)
    Matrix einf_to_h;   ///< E_inf(n, 0) >-> H^n
};

/// Throws Error(hypothesis) unless the filtration is canonically bounded.
std::vector<EdgeMaps> edge_morphisms(const SpectralSequence& ss, const FilteredComplex& fc);

struct E2Comparison {
    std::size_t vertical_pages = 0;   ///< dim 'E_2(p, q) from the page engine
    std::size_t vertical_direct = 0;  ///< dim H_h^p(H_v^q)
    std::size_t horizontal_pages = 0; ///< dim ''E_2(p, q)
    std::size_t horizontal_direct = 0;///< dim H_v^p(H_h^q)
};

/// For a bicomplex (k = 2, x_1 horizontal, x_2 vertical): compares both E_2 pages
/// with iterated cohomology computed directly from the bicomplex. Throws Error(shape) if k != 2.
std::map<Bidegree, E2Comparison> bicomplex_E2_identification(const Polycomplex& v);

} // namespace polyss
