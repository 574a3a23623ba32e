#include "polyss/cochain.hpp"

#include <algorithm>

#include "polyss/error.hpp"

namespace polyss {

CochainComplex::CochainComplex(const FieldSpec& field, std::vector<std::size_t> dims, std::vector<Matrix> differentials)
    : field_(field), dims_(std::move(dims)), d_(std::move(differentials))
{
    if (d_.size() + 1 == dims_.size())
        d_.emplace_back(field_, 0, dims_.back());
    if (d_.size() != dims_.size())
        fail(ErrorKind::shape, "complex with " + std::to_string(dims_.size()) + " degrees needs as many differentials, got " +
                                   std::to_string(d_.size()));
    for (std::size_t n = 0; n < d_.size(); ++n) {
        require_same_field(field_, d_[n].field());
        std::size_t rows = n + 1 < dims_.size() ? dims_[n + 1] : 0;
        if (d_[n].rows() != rows || d_[n].cols() != dims_[n])
            fail(ErrorKind::shape, "d(" + std::to_string(n) + ") must be " + std::to_string(rows) + "x" + std::to_string(dims_[n]) +
                                       ", got " + std::to_string(d_[n].rows()) + "x" + std::to_string(d_[n].cols()));
    }
}

std::size_t CochainComplex::dim(int n) const noexcept
{
    return n >= 0 && n <= top_degree() ? dims_[static_cast<std::size_t>(n)] : 0;
}

Matrix CochainComplex::differential(int n) const
{
    if (n >= 0 && n <= top_degree())
        return d_[static_cast<std::size_t>(n)];
    return Matrix(field_, dim(n + 1), dim(n));
}

std::optional<ComplexViolation> validate_complex(const CochainComplex& c)
{
    for (int n = 0; n + 1 <= c.top_degree(); ++n)
        if (!(c.differential(n + 1) * c.differential(n)).is_zero())
            return ComplexViolation{n, "d(" + std::to_string(n + 1) + ") d(" + std::to_string(n) + ") is nonzero"};
    return std::nullopt;
}

CohomologyResult cohomology(const CochainComplex& c)
{
    CohomologyResult result;
    for (int n = 0; n <= c.top_degree(); ++n) {
        auto z = kernel_basis(c.differential(n));
        auto b = image_basis(c.differential(n - 1));
        result.groups.emplace_back(std::move(z), std::move(b));
    }
    return result;
}

long euler_characteristic(const std::vector<std::size_t>& dims)
{
    long chi = 0;
    for (std::size_t n = 0; n < dims.size(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(dims[n]);
    return chi;
}

CochainMap::CochainMap(CochainComplex source, CochainComplex target, std::vector<Matrix> phi)
    : source_(std::move(source)), target_(std::move(target)), phi_(std::move(phi))
{
    require_same_field(source_.field(), target_.field());
    for (std::size_t n = 0; n < phi_.size(); ++n) {
        int deg = static_cast<int>(n);
        require_same_field(source_.field(), phi_[n].field());
        if (phi_[n].rows() != target_.dim(deg) || phi_[n].cols() != source_.dim(deg))
            fail(ErrorKind::shape, "phi(" + std::to_string(n) + ") must be " + std::to_string(target_.dim(deg)) + "x" +
                                       std::to_string(source_.dim(deg)));
    }
}

CochainMap CochainMap::identity(const CochainComplex& c)
{
    std::vector<Matrix> phi;
    for (auto d : c.dims())
        phi.push_back(Matrix::identity(c.field(), d));
    return CochainMap(c, c, std::move(phi));
}

CochainMap CochainMap::zero(const CochainComplex& source, const CochainComplex& target)
{
    return CochainMap(source, target, {});
}

Matrix CochainMap::at(int n) const
{
    if (n >= 0 && n <= top_degree())
        return phi_[static_cast<std::size_t>(n)];
    return Matrix(source_.field(), target_.dim(n), source_.dim(n));
}

std::optional<MapViolation> validate_cochain_map(const CochainMap& f)
{
    int top = std::max(f.source().top_degree(), f.target().top_degree());
    for (int n = 0; n <= top; ++n) {
        Matrix lhs = f.at(n + 1) * f.source().differential(n);
        Matrix rhs = f.target().differential(n) * f.at(n);
        if (!(lhs == rhs))
            return MapViolation{n, "square at degree " + std::to_string(n) + " does not commute"};
    }
    return std::nullopt;
}

CochainMap compose(const CochainMap& g, const CochainMap& f)
{
    if (f.target().dims() != g.source().dims())
        fail(ErrorKind::shape, "compose: middle complexes differ");
    int top = std::max(f.top_degree(), g.top_degree());
    std::vector<Matrix> phi;
    for (int n = 0; n <= top; ++n)
        phi.push_back(g.at(n) * f.at(n));
    return CochainMap(f.source(), g.target(), std::move(phi));
}

} // namespace polyss
