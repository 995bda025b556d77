#ifndef EXOTIC_PFAFFIAN_HPP
#define EXOTIC_PFAFFIAN_HPP

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "exotic/matrix.hpp"

namespace exotic {

/// Throws unless m is square with zero diagonal and m(j,i) = -m(i,j).
/// The diagonal test is explicit so that characteristic 2 is covered.
template <class T>
void require_alternating(const Matrix<T>& m, const T& zero)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("pfaffian: matrix is not square");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!(m(i, i) == zero))
            throw std::invalid_argument("pfaffian: non-zero diagonal entry");
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (!(m(j, i) == zero - m(i, j)))
                throw std::invalid_argument("pfaffian: matrix is not alternating");
    }
}

namespace detail {
template <class T>
T pfaffian_rec(const Matrix<T>& m, std::uint64_t remaining, const T& zero, const T& one,
               std::unordered_map<std::uint64_t, T>& memo)
{
    if (remaining == 0)
        return one;
    if (auto it = memo.find(remaining); it != memo.end())
        return it->second;
    const int first = __builtin_ctzll(remaining);
    const std::uint64_t rest = remaining & ~(std::uint64_t{1} << first);
    T acc = zero;
    bool plus = true;
    for (std::uint64_t scan = rest; scan != 0; scan &= scan - 1) {
        const int j = __builtin_ctzll(scan);
        const T& a = m(static_cast<std::size_t>(first), static_cast<std::size_t>(j));
        if (!(a == zero)) {
            const T minor = pfaffian_rec(m, rest & ~(std::uint64_t{1} << j), zero, one, memo);
            if (plus)
                acc = acc + a * minor;
            else
                acc = acc - a * minor;
        }
        plus = !plus;
    }
    memo.emplace(remaining, acc);
    return acc;
}
} // namespace detail

/* Pfaffian by expansion along the first remaining row,
 *   Pf(A) = sum_{j>1} (-1)^j a_{1j} Pf(A with rows/cols 1, j removed),
 * memoized on the set of surviving indices. Odd size gives zero.
 */
template <class T>
T pfaffian(const Matrix<T>& m, const T& zero, const T& one)
{
    require_alternating(m, zero);
    if (m.rows() > 62)
        throw std::invalid_argument("pfaffian: matrix too large");
    if (m.rows() % 2 == 1)
        return zero;
    std::unordered_map<std::uint64_t, T> memo;
    const std::uint64_t all = m.rows() == 0 ? 0 : ((std::uint64_t{1} << m.rows()) - 1);
    return detail::pfaffian_rec(m, all, zero, one, memo);
}

inline Rational pfaffian(const Matrix<Rational>& m) { return pfaffian(m, Rational(0), Rational(1)); }

} // namespace exotic

#endif
