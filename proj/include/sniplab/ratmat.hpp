#pragma once

// Exact rational dense linear algebra. Everything here works over Q with
// arbitrary-precision integers; there is no floating point anywhere.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sniplab {

/// Canonical rational number (gcd(num, den) = 1, den > 0). GMP keeps mpq
/// values canonical after every arithmetic operation.
using Rational = mpq_class;
using Vector = std::vector<Rational>;
using IndexSet = std::vector<std::size_t>;

/// Parses "p", "-p" or "p/q". Rejects a zero denominator; non-canonical
/// input such as "2/4" or "3/-6" is normalized.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix identity(std::size_t n);
    static Matrix all_ones(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_symmetric() const;

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> entries() const noexcept { return entries_; }
    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    Matrix transpose() const;

    /// A[rows, cols] in the given index order.
    Matrix submatrix(const IndexSet& row_idx, const IndexSet& col_idx) const;
    /// A(i): row and column i removed.
    Matrix remove_index(std::size_t i) const;
    /// A(i,:]: only row i removed.
    Matrix remove_row(std::size_t i) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend Vector operator*(const Matrix& a, const Vector& x);
    friend bool operator==(const Matrix& a, const Matrix& b);

    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Index complement {0..n-1} \ alpha, ascending.
IndexSet complement_indices(std::size_t n, const IndexSet& alpha);

std::size_t rank(const Matrix& m);
inline std::size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

/// Columns form a basis of the right kernel. Each column is scaled so that
/// its first nonzero coordinate equals 1.
Matrix kernel_basis(const Matrix& m);

/// Some x with M x = b, or nullopt when b is not in Col(M).
std::optional<Vector> in_column_space(const Matrix& m, const Vector& b);

Matrix inverse(const Matrix& m);

/// A / A[alpha] = C - B A[alpha]^{-1} B^T over the complementary indices
/// (ascending order). Throws SingularBlock if A[alpha] is singular.
Matrix schur_complement(const Matrix& a, const IndexSet& alpha);

Rational dot(const Vector& x, const Vector& y);

}  // namespace sniplab
