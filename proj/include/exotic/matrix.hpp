#ifndef EXOTIC_MATRIX_HPP
#define EXOTIC_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "exotic/multipoly.hpp"
#include "exotic/partitions.hpp"

namespace exotic {

/// Field operations used by the elimination routines. Specialized for
/// Rational here and for the finite fields in charp.hpp.
template <class T>
struct field_traits;

template <>
struct field_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational inverse(const Rational& x) { return Rational(1) / x; }
    static Rational embed(const Rational& x) { return x; }
};

/// Dense row-major matrix. Ring operations need only +, -, *; the
/// elimination members additionally require field_traits<T>.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one)
    {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = one;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        if (rows.empty())
            return Matrix();
        Matrix m(rows.size(), rows.front().size(), rows.front().empty() ? T() : rows.front().front());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const
    {
        Matrix t;
        t.rows_ = cols_;
        t.cols_ = rows_;
        t.data_.reserve(data_.size());
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i)
                t.data_.push_back((*this)(i, j));
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix: dimension mismatch in product");
        if (a.data_.empty() || b.data_.empty())
            return Matrix(a.rows_, b.cols_, T());
        Matrix out(a.rows_, b.cols_, a.data_.front() - a.data_.front());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) = out(i, j) + a(i, k) * b(k, j);
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        a.check_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] = a.data_[i] + b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        a.check_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] = a.data_[i] - b.data_[i];
        return a;
    }

    Matrix scaled(const T& s) const
    {
        Matrix out = *this;
        for (auto& x : out.data_)
            x = s * x;
        return out;
    }

    std::vector<T> apply(const std::vector<T>& v) const
    {
        if (v.size() != cols_)
            throw std::invalid_argument("Matrix::apply: dimension mismatch");
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            T acc = field_traits<T>::zero();
            for (std::size_t j = 0; j < cols_; ++j)
                acc = acc + (*this)(i, j) * v[j];
            out.push_back(acc);
        }
        return out;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!field_traits<T>::is_zero(x))
                return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    // --- field-only members ------------------------------------------------

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> rref_in_place()
    {
        using F = field_traits<T>;
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && F::is_zero((*this)(p, c)))
                ++p;
            if (p == rows_)
                continue;
            swap_rows(p, r);
            const T inv = F::inverse((*this)(r, c));
            for (std::size_t j = c; j < cols_; ++j)
                (*this)(r, j) = (*this)(r, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || F::is_zero((*this)(i, c)))
                    continue;
                const T f = (*this)(i, c);
                for (std::size_t j = c; j < cols_; ++j)
                    (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    Matrix rref() const
    {
        Matrix m = *this;
        m.rref_in_place();
        return m;
    }

    std::size_t rank() const
    {
        Matrix m = *this;
        return m.rref_in_place().size();
    }

    /// Basis of the right null space, one vector per free column.
    std::vector<std::vector<T>> kernel() const
    {
        using F = field_traits<T>;
        Matrix m = *this;
        const auto pivots = m.rref_in_place();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots)
            is_pivot[c] = true;
        std::vector<std::vector<T>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free])
                continue;
            std::vector<T> v(cols_, F::zero());
            v[free] = F::one();
            for (std::size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = F::zero() - m(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// One solution of (*this) x = b, or nullopt when inconsistent.
    std::optional<std::vector<T>> solve(const std::vector<T>& b) const
    {
        using F = field_traits<T>;
        if (b.size() != rows_)
            throw std::invalid_argument("Matrix::solve: dimension mismatch");
        Matrix aug(rows_, cols_ + 1, F::zero());
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j)
                aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        const auto pivots = aug.rref_in_place();
        if (!pivots.empty() && pivots.back() == cols_)
            return std::nullopt;
        std::vector<T> x(cols_, F::zero());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = aug(r, cols_);
        return x;
    }

    T determinant() const
    {
        using F = field_traits<T>;
        if (rows_ != cols_)
            throw std::invalid_argument("Matrix::determinant: not square");
        Matrix m = *this;
        T det = F::one();
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t p = c;
            while (p < rows_ && F::is_zero(m(p, c)))
                ++p;
            if (p == rows_)
                return F::zero();
            if (p != c) {
                m.swap_rows(p, c);
                det = F::zero() - det;
            }
            det = det * m(c, c);
            const T inv = F::inverse(m(c, c));
            for (std::size_t i = c + 1; i < rows_; ++i) {
                if (F::is_zero(m(i, c)))
                    continue;
                const T f = m(i, c) * inv;
                for (std::size_t j = c; j < cols_; ++j)
                    m(i, j) = m(i, j) - f * m(c, j);
            }
        }
        return det;
    }

private:
    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void check_same_shape(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> matrix_power(const Matrix<T>& m, int k)
{
    Matrix<T> out = Matrix<T>::identity(m.rows(), field_traits<T>::zero(), field_traits<T>::one());
    for (int i = 0; i < k; ++i)
        out = out * m;
    return out;
}

template <class T>
bool is_nilpotent(const Matrix<T>& m)
{
    return matrix_power(m, static_cast<int>(m.rows())).is_zero();
}

/// Jordan type of a nilpotent matrix from its rank sequence:
/// #{parts >= k} = rank(m^{k-1}) - rank(m^k).
template <class T>
Partition jordan_type(const Matrix<T>& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("jordan_type: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<std::size_t> ranks{n};
    Matrix<T> power = m;
    for (std::size_t k = 1; k <= n; ++k) {
        ranks.push_back(power.rank());
        if (ranks.back() == 0)
            break;
        power = power * m;
    }
    if (ranks.back() != 0)
        throw std::domain_error("jordan_type: not nilpotent");
    // at_least[k-1] = number of blocks of size >= k
    std::vector<int> parts;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        const int at_least = static_cast<int>(ranks[k - 1] - ranks[k]);
        const int next = k + 1 < ranks.size() ? static_cast<int>(ranks[k] - ranks[k + 1]) : 0;
        for (int c = 0; c < at_least - next; ++c)
            parts.push_back(static_cast<int>(k));
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

} // namespace exotic

#endif
