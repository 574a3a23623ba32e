#include "polyss/linalg.hpp"

#include "polyss/error.hpp"

namespace polyss {

RrefResult rref(const Matrix& m)
{
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pick = row;
        while (pick < a.rows() && a(pick, col).is_zero())
            ++pick;
        if (pick == a.rows())
            continue;
        if (pick != row)
            for (std::size_t j = col; j < a.cols(); ++j)
                std::swap(a.at(pick, j), a.at(row, j));
        if (!a(row, col).is_one()) {
            Scalar inv = a(row, col).inverse();
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(row, j) = inv * a(row, j);
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero())
                continue;
            Scalar factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (!a(row, j).is_zero())
                    a.at(i, j) -= factor * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(a), std::move(pivots), row};
}

std::size_t rank(const Matrix& m)
{
    return rref(m).rank;
}

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        fail(ErrorKind::dimension_mismatch, "inverse of non-square " + m.to_string());
    const std::size_t n = m.rows();
    auto r = rref(hstack(m, Matrix::identity(m.field(), n)));
    if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1))
        fail(ErrorKind::division_by_zero, "matrix is singular");
    return r.reduced.block(0, n, n, n);
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(const Matrix& columns)
{
    auto r = rref(columns.transpose());
    Matrix basis = r.reduced.block(0, r.rank, 0, columns.rows()).transpose();
    return Subspace(std::move(basis), std::move(r.pivots));
}

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient_dim)
{
    return Subspace(Matrix(field, ambient_dim, 0), {});
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient_dim)
{
    std::vector<std::size_t> pivots(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i)
        pivots[i] = i;
    return Subspace(Matrix::identity(field, ambient_dim), std::move(pivots));
}

Subspace Subspace::coordinates(const FieldSpec& field, std::size_t ambient_dim, const std::vector<std::size_t>& indices)
{
    Matrix cols(field, ambient_dim, indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] >= ambient_dim)
            fail(ErrorKind::dimension_mismatch, "coordinate index out of range");
        cols.at(indices[j], j) = Scalar::one(field);
    }
    return span(cols);
}

Matrix Subspace::reduce(const Matrix& vectors) const
{
    require_same_field(field(), vectors.field());
    if (vectors.rows() != ambient_dim())
        fail(ErrorKind::dimension_mismatch, "vectors of length " + std::to_string(vectors.rows()) +
                                                " in ambient dimension " + std::to_string(ambient_dim()));
    Matrix r = vectors;
    for (std::size_t c = 0; c < r.cols(); ++c)
        for (std::size_t j = 0; j < pivots_.size(); ++j) {
            Scalar coeff = r(pivots_[j], c);
            if (coeff.is_zero())
                continue;
            for (std::size_t i = 0; i < r.rows(); ++i)
                if (!basis_(i, j).is_zero())
                    r.at(i, c) -= coeff * basis_(i, j);
        }
    return r;
}

std::size_t Subspace::first_outside(const Matrix& vectors) const
{
    Matrix r = reduce(vectors);
    for (std::size_t c = 0; c < r.cols(); ++c)
        for (std::size_t i = 0; i < r.rows(); ++i)
            if (!r(i, c).is_zero())
                return c;
    return r.cols();
}

bool Subspace::contains(const Matrix& vectors) const
{
    return first_outside(vectors) == vectors.cols();
}

bool Subspace::contains(const Subspace& other) const
{
    return contains(other.basis_);
}

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v, const char* op)
{
    require_same_field(u.field(), v.field());
    if (u.ambient_dim() != v.ambient_dim())
        fail(ErrorKind::dimension_mismatch, std::string(op) + ": ambient dimensions " + std::to_string(u.ambient_dim()) +
                                                " and " + std::to_string(v.ambient_dim()) + " differ");
}

} // namespace

Subspace kernel_basis(const Matrix& m)
{
    auto r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots)
        is_pivot[p] = true;
    Matrix basis(m.field(), n, n - r.rank);
    std::size_t col = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        basis.at(f, col) = Scalar::one(m.field());
        for (std::size_t i = 0; i < r.rank; ++i)
            basis.at(r.pivots[i], col) = -r.reduced(i, f);
        ++col;
    }
    return Subspace::span(basis);
}

Subspace image_basis(const Matrix& m)
{
    return Subspace::span(m);
}

Subspace image(const Matrix& m, const Subspace& u)
{
    if (m.cols() != u.ambient_dim())
        fail(ErrorKind::dimension_mismatch, "image: map has " + std::to_string(m.cols()) + " columns, subspace lives in dimension " +
                                                std::to_string(u.ambient_dim()));
    return Subspace::span(m * u.basis());
}

Subspace sum(const Subspace& u, const Subspace& v)
{
    require_same_ambient(u, v, "sum");
    if (u.dim() == 0)
        return v;
    if (v.dim() == 0)
        return u;
    return Subspace::span(hstack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v)
{
    require_same_ambient(u, v, "intersect");
    if (u.dim() == 0 || v.dim() == 0)
        return Subspace::zero(u.field(), u.ambient_dim());
    if (u.dim() == u.ambient_dim())
        return v;
    if (v.dim() == v.ambient_dim())
        return u;
    auto k = kernel_basis(hstack(u.basis(), -v.basis()));
    return Subspace::span(u.basis() * k.basis().block(0, u.dim(), 0, k.dim()));
}

Subspace preimage(const Matrix& m, const Subspace& w)
{
    require_same_field(m.field(), w.field());
    if (m.rows() != w.ambient_dim())
        fail(ErrorKind::dimension_mismatch, "preimage: map has " + std::to_string(m.rows()) + " rows, subspace lives in dimension " +
                                                std::to_string(w.ambient_dim()));
    if (w.dim() == w.ambient_dim())
        return Subspace::full(m.field(), m.cols());
    auto k = kernel_basis(hstack(m, -w.basis()));
    return Subspace::span(k.basis().block(0, m.cols(), 0, k.dim()));
}

// ------------------------------------------------------------- Subquotient

Subquotient::Subquotient(Subspace numerator, Subspace denominator)
    : z_(std::move(numerator)), b_(std::move(denominator)), reps_(z_.field(), z_.ambient_dim(), 0),
      project_(z_.field(), 0, z_.ambient_dim())
{
    require_same_ambient(z_, b_, "subquotient");
    std::size_t bad = z_.first_outside(b_.basis());
    if (bad != b_.dim())
        fail(ErrorKind::containment, "subquotient: denominator basis vector " + std::to_string(bad) + " is not in the numerator");

    // Reduced representatives vanish on B's pivot rows, so their echelon pivots avoid them.
    auto complement = Subspace::span(b_.reduce(z_.basis()));
    reps_ = complement.basis();

    // project = E_R^T (I - B E_B^T): clear B's pivot coordinates, then read the rep pivots.
    const auto& bp = b_.pivots();
    const auto& rp = complement.pivots();
    project_ = Matrix(field(), rp.size(), ambient_dim());
    for (std::size_t j = 0; j < rp.size(); ++j) {
        project_.at(j, rp[j]) = Scalar::one(field());
        for (std::size_t i = 0; i < bp.size(); ++i) {
            const Scalar& c = b_.basis()(rp[j], i);
            if (!c.is_zero())
                project_.at(j, bp[i]) = -c;
        }
    }
}

Matrix induced_map(const Subquotient& src, const Subquotient& dst, const Matrix& m)
{
    require_same_field(src.field(), m.field());
    require_same_field(dst.field(), m.field());
    if (m.cols() != src.ambient_dim() || m.rows() != dst.ambient_dim())
        fail(ErrorKind::dimension_mismatch, "induced_map: " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                                " map between ambient dimensions " + std::to_string(src.ambient_dim()) +
                                                " and " + std::to_string(dst.ambient_dim()));
    Matrix mz = m * src.numerator().basis();
    if (auto bad = dst.numerator().first_outside(mz); bad != mz.cols())
        fail(ErrorKind::induced_map, "induced_map: numerator basis vector " + std::to_string(bad) +
                                         " is sent outside the target numerator");
    Matrix mb = m * src.denominator().basis();
    if (auto bad = dst.denominator().first_outside(mb); bad != mb.cols())
        fail(ErrorKind::induced_map, "induced_map: denominator basis vector " + std::to_string(bad) +
                                         " is sent outside the target denominator");
    return dst.projection() * (m * src.reps());
}

} // namespace polyss
