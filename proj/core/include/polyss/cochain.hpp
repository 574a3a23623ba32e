#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyss/linalg.hpp"

namespace polyss {

/// A cochain complex supported in degrees [0, top_degree()]; zero elsewhere.
/// d(n) has shape dim(n+1) x dim(n), including d(top) : V^top -> 0.
class CochainComplex {
public:
    /// `differentials` may hold dims.size() matrices or one fewer (the last map
    /// into the zero space is then implied). Throws Error(shape) on mismatch.
    CochainComplex(const FieldSpec& field, std::vector<std::size_t> dims, std::vector<Matrix> differentials);

    const FieldSpec& field() const noexcept { return field_; }
    /// -1 for the empty complex.
    int top_degree() const noexcept { return static_cast<int>(dims_.size()) - 1; }
    std::size_t dim(int n) const noexcept;
    /// Zero-shaped outside the support.
    Matrix differential(int n) const;
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }

private:
    FieldSpec field_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> d_;
};

struct ComplexViolation {
    int degree; ///< d(degree + 1) * d(degree) != 0
    std::string message;
};

/// Empty when every composite d(n+1) d(n) vanishes.
std::optional<ComplexViolation> validate_complex(const CochainComplex& c);

struct CohomologyResult {
    /// groups[n] = ker d(n) / im d(n-1)
    std::vector<Subquotient> groups;

    std::size_t dim(int n) const noexcept
    {
        return n >= 0 && static_cast<std::size_t>(n) < groups.size() ? groups[static_cast<std::size_t>(n)].dim() : 0;
    }
};

CohomologyResult cohomology(const CochainComplex& c);

/// Alternating sum of the dimensions.
long euler_characteristic(const std::vector<std::size_t>& dims);

class CochainMap {
public:
    /// phi[n] : source^n -> target^n; missing degrees are zero. Throws Error(shape).
    CochainMap(CochainComplex source, CochainComplex target, std::vector<Matrix> phi);

    static CochainMap identity(const CochainComplex& c);
    static CochainMap zero(const CochainComplex& source, const CochainComplex& target);

    const CochainComplex& source() const noexcept { return source_; }
    const CochainComplex& target() const noexcept { return target_; }
    /// Zero-shaped outside the stored window.
    Matrix at(int n) const;
    int top_degree() const noexcept { return static_cast<int>(phi_.size()) - 1; }

private:
    CochainComplex source_;
    CochainComplex target_;
    std::vector<Matrix> phi_;
};

struct MapViolation {
    int degree; ///< phi(degree+1) d_src(degree) != d_tgt(degree) phi(degree)
    std::string message;
};

std::optional<MapViolation> validate_cochain_map(const CochainMap& f);

/// Composite g o f; the middle complexes must agree in shape.
CochainMap compose(const CochainMap& g, const CochainMap& f);

} // namespace polyss
