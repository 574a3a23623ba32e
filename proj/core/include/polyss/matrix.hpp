#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "polyss/scalar.hpp"

namespace polyss {

/// Dense row-major matrix over a FieldSpec. 0 x n and n x 0 shapes are legal.
class Matrix {
public:
    Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldSpec& field, std::size_t n);
    /// Integer entries reduced into the field; the shape is explicit so empty matrices are expressible.
    static Matrix from_ints(const FieldSpec& field, std::size_t rows, std::size_t cols,
                            std::initializer_list<std::initializer_list<std::int64_t>> entries);
    static Matrix from_ints(const FieldSpec& field, const std::vector<std::vector<std::int64_t>>& entries,
                            std::size_t cols);
    static Matrix column(const std::vector<Scalar>& entries);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    /// Field-checked write.
    void set(std::size_t i, std::size_t j, Scalar value);
    /// Unchecked mutable access for kernels that only combine same-field scalars.
    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    Matrix col(std::size_t j) const;
    Matrix select_cols(const std::vector<std::size_t>& indices) const;
    Matrix select_rows(const std::vector<std::size_t>& indices) const;
    /// Rows [first, first + count) and columns [first_col, first_col + col_count).
    Matrix block(std::size_t first_row, std::size_t row_count, std::size_t first_col, std::size_t col_count) const;
    void set_block(std::size_t first_row, std::size_t first_col, const Matrix& b);

    Matrix transpose() const;
    bool is_zero() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

/// [a | b]; row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b]; column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);

} // namespace polyss
