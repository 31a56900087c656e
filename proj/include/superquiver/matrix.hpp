#pragma once

// Dense matrices over an exact field, and the elimination kernels built on
// them (rank, kernel, cokernel, solve). Everything is templated on the
// scalar so the same code runs over Q and over a prime field.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superquiver/errors.hpp"
#include "superquiver/rational.hpp"

namespace superquiver {

/// Z/P for an odd prime P < 2^32.
template <std::uint32_t P>
class PrimeField {
    static_assert(P > 2 && P % 2 == 1, "PrimeField needs an odd prime");

public:
    PrimeField() = default;
    PrimeField(long v) : v_(reduce(v)) {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] bool is_zero() const { return v_ == 0; }
    [[nodiscard]] std::uint32_t value() const { return v_; }
    [[nodiscard]] std::string to_string() const { return std::to_string(v_); }

    PrimeField& operator+=(PrimeField o) { v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + o.v_) % P); return *this; }
    PrimeField& operator-=(PrimeField o) { v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + P - o.v_) % P); return *this; }
    PrimeField& operator*=(PrimeField o) { v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % P); return *this; }
    PrimeField& operator/=(PrimeField o) { return *this *= o.inverse(); }

    friend PrimeField operator+(PrimeField a, PrimeField b) { return a += b; }
    friend PrimeField operator-(PrimeField a, PrimeField b) { return a -= b; }
    friend PrimeField operator*(PrimeField a, PrimeField b) { return a *= b; }
    friend PrimeField operator/(PrimeField a, PrimeField b) { return a /= b; }
    friend PrimeField operator-(PrimeField a) { return PrimeField{} - a; }
    friend bool operator==(PrimeField a, PrimeField b) { return a.v_ == b.v_; }

    [[nodiscard]] PrimeField inverse() const {
        if (v_ == 0) {
            throw std::domain_error("PrimeField: inverse of zero");
        }
        // Fermat: a^(P-2)
        std::uint64_t result = 1;
        std::uint64_t base = v_;
        std::uint64_t e = P - 2;
        while (e) {
            if (e & 1U) result = result * base % P;
            base = base * base % P;
            e >>= 1U;
        }
        PrimeField r;
        r.v_ = static_cast<std::uint32_t>(result);
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, PrimeField a) { return os << a.v_; }

private:
    static std::uint32_t reduce(long v) {
        long r = v % static_cast<long>(P);
        if (r < 0) r += P;
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t v_ = 0;
};

template <class Field>
class BasicMatrix {
public:
    using value_type = Field;

    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Field(0)) {}
    BasicMatrix(std::size_t rows, std::size_t cols, std::vector<Field> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) {
            throw DimensionError("BasicMatrix: entry count does not match shape");
        }
    }

    // Row-major nested initializer, e.g. {{1, 2}, {3, 4}}. An empty list
    // gives the 0x0 matrix.
    static BasicMatrix from_rows(const std::vector<std::vector<Field>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        BasicMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) {
                throw DimensionError("BasicMatrix::from_rows: ragged rows");
            }
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Field(1);
        return m;
    }

    static BasicMatrix zero(std::size_t rows, std::size_t cols) { return BasicMatrix(rows, cols); }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

    Field& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Field& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Field> entries() const { return data_; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : data_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    [[nodiscard]] BasicMatrix transpose() const {
        BasicMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // Copy of rows [r0, r0+nr) x cols [c0, c0+nc).
    [[nodiscard]] BasicMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) {
            throw DimensionError("BasicMatrix::block: out of range");
        }
        BasicMatrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const BasicMatrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
            throw DimensionError("BasicMatrix::set_block: out of range");
        }
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    // Rows / columns picked in the given order.
    [[nodiscard]] BasicMatrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
        BasicMatrix s(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
        return s;
    }

    friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
        if (a.cols_ != b.rows_) {
            throw DimensionError("matrix product: inner dimensions differ (" + std::to_string(a.rows_) + "x" +
                                 std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                 std::to_string(b.cols_) + ")");
        }
        BasicMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Field& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) {
        a.check_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) {
        a.check_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend BasicMatrix operator*(const Field& s, BasicMatrix a) {
        for (auto& x : a.data_) x *= s;
        return a;
    }

    friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const BasicMatrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    void check_same_shape(const BasicMatrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) {
            throw DimensionError("matrix sum: shapes differ");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Field> data_;
};

using Matrix = BasicMatrix<Rational>;

template <class Field>
BasicMatrix<Field> hstack(const BasicMatrix<Field>& a, const BasicMatrix<Field>& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack: row counts differ");
    BasicMatrix<Field> m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

template <class Field>
BasicMatrix<Field> vstack(const BasicMatrix<Field>& a, const BasicMatrix<Field>& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack: column counts differ");
    BasicMatrix<Field> m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

template <class Field>
BasicMatrix<Field> block_diagonal(const BasicMatrix<Field>& a, const BasicMatrix<Field>& b) {
    BasicMatrix<Field> m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

template <class Field>
struct Echelon {
    BasicMatrix<Field> reduced;        // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination. Pivot search takes
/// the first nonzero entry in the column, so the result is canonical.
template <class Field>
Echelon<Field> rref(BasicMatrix<Field> m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        }
        const Field inv = Field(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Field f = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

template <class Field>
std::size_t rank(const BasicMatrix<Field>& m) {
    return rref(m).pivots.size();
}

/// Columns form a basis of ker m: one column per free column f of the
/// echelon form, with a 1 in position f and zeros in the other free
/// positions. Columns appear in increasing order of f.
template <class Field>
BasicMatrix<Field> kernel_basis(const BasicMatrix<Field>& m) {
    const auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    BasicMatrix<Field> k(m.cols(), free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::size_t f = free_cols[j];
        k(f, j) = Field(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], j) = -r(i, f);
    }
    return k;
}

/// Projection K^rows -> K^d, d = rows - rank, whose kernel is exactly the
/// column space of m. The image of m is echelonized as a row space; its
/// pivot coordinates P are eliminated and the remaining coordinates N are
/// kept, so the projection restricted to span(e_N) is the identity.
template <class Field>
BasicMatrix<Field> cokernel_projection(const BasicMatrix<Field>& m) {
    const auto [r, pivots] = rref(m.transpose());
    const std::size_t n = m.rows();
    std::vector<int> pivot_row(n, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<int>(i);
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_row[c] < 0) keep.push_back(c);

    BasicMatrix<Field> q(keep.size(), n);
    for (std::size_t a = 0; a < keep.size(); ++a) {
        q(a, keep[a]) = Field(1);
        for (std::size_t c = 0; c < n; ++c) {
            if (pivot_row[c] >= 0) q(a, c) = -r(static_cast<std::size_t>(pivot_row[c]), keep[a]);
        }
    }
    return q;
}

/// Some x with a*x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero.
template <class Field>
std::optional<BasicMatrix<Field>> solve(const BasicMatrix<Field>& a, const BasicMatrix<Field>& b) {
    if (a.rows() != b.rows()) throw DimensionError("solve: row counts differ");
    const auto [r, pivots] = rref(hstack(a, b));
    BasicMatrix<Field> x(a.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = r(i, a.cols() + j);
    }
    return x;
}

template <class Field>
bool is_invertible(const BasicMatrix<Field>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace superquiver
