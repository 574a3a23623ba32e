#include "polyss/matrix.hpp"

#include <sstream>

#include "polyss/error.hpp"

namespace polyss {

namespace {

std::string shape(const Matrix& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field))
{
}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_ints(const FieldSpec& field, std::size_t rows, std::size_t cols,
                         std::initializer_list<std::initializer_list<std::int64_t>> entries)
{
    if (entries.size() != rows)
        fail(ErrorKind::shape, "from_ints: expected " + std::to_string(rows) + " rows");
    Matrix m(field, rows, cols);
    std::size_t i = 0;
    for (const auto& row : entries) {
        if (row.size() != cols)
            fail(ErrorKind::shape, "from_ints: row " + std::to_string(i) + " has wrong length");
        std::size_t j = 0;
        for (auto v : row)
            m.at(i, j++) = Scalar::from_int(field, v);
        ++i;
    }
    return m;
}

Matrix Matrix::from_ints(const FieldSpec& field, const std::vector<std::vector<std::int64_t>>& entries,
                         std::size_t cols)
{
    Matrix m(field, entries.size(), cols);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].size() != cols)
            fail(ErrorKind::shape, "from_ints: row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = Scalar::from_int(field, entries[i][j]);
    }
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& entries)
{
    if (entries.empty())
        fail(ErrorKind::shape, "Matrix::column needs at least one entry to fix the field");
    Matrix m(entries.front().field(), entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.set(i, 0, entries[i]);
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar value)
{
    require_same_field(field_, value.field());
    entries_[i * cols_ + j] = std::move(value);
}

Matrix Matrix::col(std::size_t j) const
{
    return block(0, rows_, j, 1);
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& indices) const
{
    Matrix m(field_, rows_, indices.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < indices.size(); ++j)
            m.at(i, j) = (*this)(i, indices[j]);
    return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& indices) const
{
    Matrix m(field_, indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(i, j) = (*this)(indices[i], j);
    return m;
}

Matrix Matrix::block(std::size_t first_row, std::size_t row_count, std::size_t first_col, std::size_t col_count) const
{
    if (first_row + row_count > rows_ || first_col + col_count > cols_)
        fail(ErrorKind::shape, "block out of range for " + shape(*this));
    Matrix m(field_, row_count, col_count);
    for (std::size_t i = 0; i < row_count; ++i)
        for (std::size_t j = 0; j < col_count; ++j)
            m.at(i, j) = (*this)(first_row + i, first_col + j);
    return m;
}

void Matrix::set_block(std::size_t first_row, std::size_t first_col, const Matrix& b)
{
    require_same_field(field_, b.field_);
    if (first_row + b.rows_ > rows_ || first_col + b.cols_ > cols_)
        fail(ErrorKind::shape, "set_block: " + shape(b) + " does not fit in " + shape(*this));
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            at(first_row + i, first_col + j) = b(i, j);
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

Matrix Matrix::operator-() const
{
    Matrix m(field_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        m.entries_[k] = -entries_[k];
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    require_same_field(a.field_, b.field_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        fail(ErrorKind::dimension_mismatch, "cannot add " + shape(a) + " and " + shape(b));
    Matrix m(a.field_, a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        m.entries_[k] = a.entries_[k] + b.entries_[k];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    return a + (-b);
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    require_same_field(a.field_, b.field_);
    if (a.cols_ != b.rows_)
        fail(ErrorKind::dimension_mismatch, "cannot multiply " + shape(a) + " by " + shape(b));
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const Scalar& x = a(i, l);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(l, j).is_zero())
                    m.at(i, j) += x * b(l, j);
        }
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& a)
{
    require_same_field(s.field(), a.field_);
    Matrix m(a.field_, a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        m.entries_[k] = s * a.entries_[k];
    return m;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << (*this)(i, j).to_string();
    }
    os << "] (" << shape(*this) << ")";
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        fail(ErrorKind::dimension_mismatch, "hstack: row counts differ");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols())
        fail(ErrorKind::dimension_mismatch, "vstack: column counts differ");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

} // namespace polyss
