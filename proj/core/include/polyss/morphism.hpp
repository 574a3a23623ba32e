#pragma once

#include <map>
#include <vector>

#include "polyss/cochain.hpp"
#include "polyss/filtration.hpp"
#include "polyss/spectral.hpp"

namespace polyss {

/// A family of bidegree (0, 0) maps f_r : E_r(p, q) -> E'_r(p, q).
class SSMorphism {
public:
    SSMorphism(const FieldSpec& field, SpectralSequence source, SpectralSequence target,
               std::vector<std::map<Bidegree, Matrix>> maps);

    const SpectralSequence& source() const noexcept { return source_; }
    const SpectralSequence& target() const noexcept { return target_; }
    int last_page() const noexcept { return static_cast<int>(maps_.size()) - 1; }
    /// Cells of page r with a nonzero source or target.
    const std::map<Bidegree, Matrix>& page(int r) const;
    /// Zero-shaped map when neither side materializes the cell.
    Matrix at(int r, int p, int q) const;

private:
    FieldSpec field_;
    SpectralSequence source_;
    SpectralSequence target_;
    std::vector<std::map<Bidegree, Matrix>> maps_;
};

/// Morphism induced by a cochain map with phi(F_src(p, n)) ⊆ F_tgt(p, n).
/// Throws Error(hypothesis) naming (p, n) if the map is not filtered, and
/// Error(internal) if commutation with d_r or the page recursion fails.
SSMorphism induced_morphism(const CochainMap& phi, const FilteredComplex& source, const FilteredComplex& target);

/// The morphism E_A -> E_B induced by the identity of T(V) when A is a strict subset of B.
/// Throws Error(invalid_subset) otherwise.
SSMorphism inclusion_morphism(const Polycomplex& v, const IndexSubsetFiltration& a, const IndexSubsetFiltration& b);

} // namespace polyss
