#pragma once

// Exact dense linear algebra: echelon forms, subspaces in canonical form,
// and subquotients Z/B with explicit coset representatives.

#include <cstddef>
#include <vector>

#include "polyss/matrix.hpp"

namespace polyss {

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots; ///< pivot column of each nonzero row, ascending
    std::size_t rank = 0;
};

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry in column order.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Throws Error(division_by_zero) if m is singular, Error(dimension_mismatch) if not square.
Matrix inverse(const Matrix& m);

/// A subspace of k^n held as an n x dim basis in reduced column echelon form.
///
/// The form is canonical: basis column j has a 1 in row pivots()[j] and zeros in
/// every other pivot row, with pivots ascending. Two subspaces are equal iff their
/// bases are entry-wise equal.
class Subspace {
public:
    /// Canonical basis of the column span of `columns`.
    static Subspace span(const Matrix& columns);
    static Subspace zero(const FieldSpec& field, std::size_t ambient_dim);
    static Subspace full(const FieldSpec& field, std::size_t ambient_dim);
    /// Span of the standard basis vectors e_i, i in `indices`.
    static Subspace coordinates(const FieldSpec& field, std::size_t ambient_dim, const std::vector<std::size_t>& indices);

    const FieldSpec& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.rows(); }
    std::size_t dim() const noexcept { return basis_.cols(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// v - sum_j v[pivot_j] * basis_j, column by column. Zero exactly on members.
    Matrix reduce(const Matrix& vectors) const;
    /// True iff every column of `vectors` lies in the subspace.
    bool contains(const Matrix& vectors) const;
    /// Index of the first column of `vectors` outside the subspace, or vectors.cols().
    std::size_t first_outside(const Matrix& vectors) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}; dimension cols - rank.
Subspace kernel_basis(const Matrix& m);
/// Column span of m.
Subspace image_basis(const Matrix& m);
/// m(U).
Subspace image(const Matrix& m, const Subspace& u);
Subspace sum(const Subspace& u, const Subspace& v);
/// Computed from the kernel of [U | -V].
Subspace intersect(const Subspace& u, const Subspace& v);
/// {v : m v in W}.
Subspace preimage(const Matrix& m, const Subspace& w);

/// The quotient Z/B of nested subspaces B within Z.
///
/// Representatives are the canonical complement of B in Z obtained by reducing
/// Z's basis modulo B and re-echelonizing, so they depend only on (Z, B).
/// `projection()` sends an element of Z to its quotient coordinates and is
/// undefined (but still computed) off Z.
class Subquotient {
public:
    /// Throws Error(containment) unless B is a subspace of Z.
    Subquotient(Subspace numerator, Subspace denominator);

    static Subquotient whole(const Subspace& z) { return Subquotient(z, Subspace::zero(z.field(), z.ambient_dim())); }

    const FieldSpec& field() const noexcept { return z_.field(); }
    std::size_t ambient_dim() const noexcept { return z_.ambient_dim(); }
    std::size_t dim() const noexcept { return reps_.cols(); }
    const Subspace& numerator() const noexcept { return z_; }
    const Subspace& denominator() const noexcept { return b_; }
    /// ambient x dim
    const Matrix& reps() const noexcept { return reps_; }
    /// dim x ambient
    const Matrix& projection() const noexcept { return project_; }
    Matrix coordinates(const Matrix& vectors) const { return project_ * vectors; }

    friend bool operator==(const Subquotient& a, const Subquotient& b) { return a.z_ == b.z_ && a.b_ == b.b_; }

private:
    Subspace z_;
    Subspace b_;
    Matrix reps_;
    Matrix project_;
};

/// Quotient-coordinate matrix of the map induced by m : Z_src/B_src -> Z_dst/B_dst.
/// Throws Error(induced_map) naming the offending basis vector if m does not
/// carry Z_src into Z_dst and B_src into B_dst.
Matrix induced_map(const Subquotient& src, const Subquotient& dst, const Matrix& m);

} // namespace polyss
