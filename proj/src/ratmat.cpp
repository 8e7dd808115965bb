#include "sniplab/ratmat.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <utility>

#include "sniplab/error.hpp"

namespace sniplab {

Rational parse_rational(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\n\r");
    const auto last = text.find_last_not_of(" \t\n\r");
    std::string s = first == std::string_view::npos ? std::string()
                                                    : std::string(text.substr(first, last - first + 1));
    if (s.empty()) {
        throw Error(ErrorKind::ParseError, "empty rational");
    }
    auto valid_int = [](std::string_view part) {
        std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (start == part.size()) {
            return false;
        }
        return std::all_of(part.begin() + static_cast<long>(start), part.end(),
                           [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) {
        throw Error(ErrorKind::ParseError, "malformed rational '" + s + "'");
    }
    if (num[0] == '+') {
        num.erase(0, 1);
    }
    if (den[0] == '+') {
        den.erase(0, 1);
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) {
        throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    return value.get_str(10);
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
        }
        for (long v : r) {
            entries_.emplace_back(v);
        }
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::all_ones(std::size_t n)
{
    Matrix m(n, n);
    for (auto& e : m.entries_) {
        e = 1;
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows)
{
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) {
            throw Error(ErrorKind::ShapeMismatch, "ragged row list");
        }
        for (std::size_t c = 0; c < m.cols_; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns)
{
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) {
            throw Error(ErrorKind::ShapeMismatch, "column length mismatch");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

bool Matrix::is_symmetric() const
{
    if (!is_square()) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r + 1; c < cols_; ++c) {
            if ((*this)(r, c) != (*this)(c, r)) {
                return false;
            }
        }
    }
    return true;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(entries_.begin() + static_cast<long>(r * cols_),
                  entries_.begin() + static_cast<long>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

Matrix Matrix::submatrix(const IndexSet& row_idx, const IndexSet& col_idx) const
{
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r) {
        for (std::size_t c = 0; c < col_idx.size(); ++c) {
            if (row_idx[r] >= rows_ || col_idx[c] >= cols_) {
                throw Error(ErrorKind::OutOfRange, "submatrix index out of range");
            }
            s(r, c) = (*this)(row_idx[r], col_idx[c]);
        }
    }
    return s;
}

Matrix Matrix::remove_index(std::size_t i) const
{
    if (i >= rows_ || i >= cols_) {
        throw Error(ErrorKind::OutOfRange, "index " + std::to_string(i) + " out of range");
    }
    return submatrix(complement_indices(rows_, {i}), complement_indices(cols_, {i}));
}

Matrix Matrix::remove_row(std::size_t i) const
{
    if (i >= rows_) {
        throw Error(ErrorKind::OutOfRange, "row " + std::to_string(i) + " out of range");
    }
    IndexSet all(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        all[c] = c;
    }
    return submatrix(complement_indices(rows_, {i}), all);
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw Error(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
    }
    Matrix s = a;
    for (std::size_t k = 0; k < s.entries_.size(); ++k) {
        s.entries_[k] += b.entries_[k];
    }
    return s;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw Error(ErrorKind::ShapeMismatch, "matrix difference shape mismatch");
    }
    Matrix s = a;
    for (std::size_t k = 0; k < s.entries_.size(); ++k) {
        s.entries_[k] -= b.entries_[k];
    }
    return s;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) {
        throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
    }
    Matrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& ark = a(r, k);
            if (ark == 0) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols_; ++c) {
                p(r, c) += ark * b(k, c);
            }
        }
    }
    return p;
}

Matrix operator*(const Rational& s, const Matrix& a)
{
    Matrix p = a;
    for (auto& e : p.entries_) {
        e *= s;
    }
    return p;
}

Vector operator*(const Matrix& a, const Vector& x)
{
    if (a.cols_ != x.size()) {
        throw Error(ErrorKind::ShapeMismatch, "matrix-vector shape mismatch");
    }
    Vector y(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c) {
            y[r] += a(r, c) * x[c];
        }
    }
    return y;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

bool Matrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& e) { return e == 0; });
}

IndexSet complement_indices(std::size_t n, const IndexSet& alpha)
{
    std::vector<bool> in_alpha(n, false);
    for (std::size_t a : alpha) {
        if (a >= n) {
            throw Error(ErrorKind::OutOfRange, "index " + std::to_string(a) + " out of range");
        }
        in_alpha[a] = true;
    }
    IndexSet rest;
    for (std::size_t k = 0; k < n; ++k) {
        if (!in_alpha[k]) {
            rest.push_back(k);
        }
    }
    return rest;
}

Rational dot(const Vector& x, const Vector& y)
{
    if (x.size() != y.size()) {
        throw Error(ErrorKind::ShapeMismatch, "dot product length mismatch");
    }
    Rational s = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        s += x[k] * y[k];
    }
    return s;
}

namespace {

// Fraction-free (Bareiss) row echelon reduction used only for rank. Every
// intermediate entry is a minor of the input, so the division by the previous
// pivot is exact even when columns are skipped.

std::optional<std::size_t> bareiss_rank_i64(std::vector<std::int64_t> a, std::size_t rows,
                                            std::size_t cols)
{
    // Entries stay below 2^62 in magnitude so the 128-bit cross products
    // cannot overflow.
    constexpr __int128 hi = static_cast<__int128>(1) << 62;
    constexpr __int128 lo = -hi;
    std::int64_t prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        std::uint64_t best = 0;
        for (std::size_t k = r; k < rows; ++k) {
            std::int64_t v = a[k * cols + c];
            if (v == 0) {
                continue;
            }
            auto mag = static_cast<std::uint64_t>(v < 0 ? -static_cast<__int128>(v) : v);
            if (p == rows || mag < best) {
                p = k;
                best = mag;
            }
        }
        if (p == rows) {
            continue;
        }
        if (p != r) {
            for (std::size_t j = c; j < cols; ++j) {
                std::swap(a[p * cols + j], a[r * cols + j]);
            }
        }
        const std::int64_t piv = a[r * cols + c];
        for (std::size_t k = r + 1; k < rows; ++k) {
            const std::int64_t f = a[k * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                __int128 t = static_cast<__int128>(piv) * a[k * cols + j] -
                             static_cast<__int128>(f) * a[r * cols + j];
                t /= prev;
                if (t < lo || t > hi) {
                    return std::nullopt;
                }
                a[k * cols + j] = static_cast<std::int64_t>(t);
            }
            a[k * cols + c] = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

std::size_t bareiss_rank_mpz(std::vector<mpz_class> a, std::size_t rows, std::size_t cols)
{
    mpz_class prev = 1;
    mpz_class t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t k = r; k < rows; ++k) {
            const mpz_class& v = a[k * cols + c];
            if (v == 0) {
                continue;
            }
            if (p == rows || mpz_cmpabs(v.get_mpz_t(), a[p * cols + c].get_mpz_t()) < 0) {
                p = k;
            }
        }
        if (p == rows) {
            continue;
        }
        if (p != r) {
            for (std::size_t j = c; j < cols; ++j) {
                std::swap(a[p * cols + j], a[r * cols + j]);
            }
        }
        const mpz_class piv = a[r * cols + c];
        for (std::size_t k = r + 1; k < rows; ++k) {
            const mpz_class f = a[k * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                t = piv * a[k * cols + j] - f * a[r * cols + j];
                mpz_divexact(a[k * cols + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[k * cols + c] = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

// Reduced row echelon form over Q. Returns the pivot column of each nonzero row.
std::vector<std::size_t> rref_in_place(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = m.rows();
        for (std::size_t k = r; k < m.rows(); ++k) {
            if (m(k, c) != 0) {
                p = k;
                break;
            }
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(p, j), m(r, j));
            }
        }
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) {
            m(r, j) *= inv;
        }
        for (std::size_t k = 0; k < m.rows(); ++k) {
            if (k == r || m(k, c) == 0) {
                continue;
            }
            const Rational f = m(k, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                m(k, j) -= f * m(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) {
        return 0;
    }
    // Clear denominators row by row; row scaling does not change the rank.
    std::vector<mpz_class> ints(rows * cols);
    bool small = true;
    mpz_class scale;
    for (std::size_t r = 0; r < rows; ++r) {
        scale = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            const mpz_class& den = m(r, c).get_den();
            if (den != 1) {
                mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
            }
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const Rational& e = m(r, c);
            mpz_class& out = ints[r * cols + c];
            if (scale == 1) {
                out = e.get_num();
            } else {
                out = (scale / e.get_den()) * e.get_num();
            }
            small = small && mpz_sizeinbase(out.get_mpz_t(), 2) <= 61;
        }
    }
    if (small) {
        std::vector<std::int64_t> a(rows * cols);
        for (std::size_t k = 0; k < a.size(); ++k) {
            a[k] = ints[k].get_si();
        }
        if (auto r = bareiss_rank_i64(std::move(a), rows, cols)) {
            return *r;
        }
    }
    return bareiss_rank_mpz(std::move(ints), rows, cols);
}

Matrix kernel_basis(const Matrix& m)
{
    Matrix red = m;
    const auto pivots = rref_in_place(red);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -red(r, f);
        }
        auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
        const Rational s = 1 / *lead;
        for (auto& x : v) {
            x *= s;
        }
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(m.cols(), basis);
}

std::optional<Vector> in_column_space(const Matrix& m, const Vector& b)
{
    if (b.size() != m.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "right-hand side length mismatch");
    }
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            aug(r, c) = m(r, c);
        }
        aug(r, m.cols()) = b[r];
    }
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) {
        return std::nullopt;
    }
    Vector x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        x[pivots[r]] = aug(r, m.cols());
    }
    return x;
}

Matrix inverse(const Matrix& m)
{
    if (!m.is_square()) {
        throw Error(ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = m(r, c);
        }
        aug(r, n + r) = 1;
    }
    const auto pivots = rref_in_place(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) {
        throw Error(ErrorKind::SingularBlock, "matrix is singular");
    }
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            inv(r, c) = aug(r, n + c);
        }
    }
    return inv;
}

Matrix schur_complement(const Matrix& a, const IndexSet& alpha)
{
    if (!a.is_square()) {
        throw Error(ErrorKind::ShapeMismatch, "Schur complement needs a square matrix");
    }
    if (!a.is_symmetric()) {
        throw Error(ErrorKind::NotSymmetric, "Schur complement needs a symmetric matrix");
    }
    IndexSet sorted = alpha;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::InvalidArgument, "repeated index in alpha");
    }
    const IndexSet rest = complement_indices(a.rows(), sorted);
    const Matrix q = a.submatrix(sorted, sorted);
    if (rank(q) != q.rows()) {
        throw Error(ErrorKind::SingularBlock, "A[alpha] is singular");
    }
    const Matrix b = a.submatrix(rest, sorted);
    const Matrix c = a.submatrix(rest, rest);
    return c - b * inverse(q) * b.transpose();
}

}  // namespace sniplab
