#ifndef EXOTIC_CHARP_HPP
#define EXOTIC_CHARP_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "exotic/matrix.hpp"
#include "exotic/nilcone.hpp"

namespace exotic {

/* F_4 = F_2[x]/(x^2 + x + 1), element a + b x stored as bits (b << 1) | a.
 * F_2 is the subfield {0, 1}.
 */
class Gf4 {
public:
    constexpr Gf4() = default;
    /// Image of an integer under Z -> F_2 -> F_4.
    constexpr Gf4(int v) : bits_(static_cast<std::uint8_t>(((v % 2) + 2) % 2)) {}

    static constexpr Gf4 from_bits(unsigned b)
    {
        if (b > 3)
            throw std::invalid_argument("Gf4::from_bits: expected a value in [0, 3]");
        Gf4 g;
        g.bits_ = static_cast<std::uint8_t>(b);
        return g;
    }

    /// The class of x, a generator of F_4^*.
    static constexpr Gf4 generator() { return from_bits(2); }

    constexpr unsigned bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return from_bits(a.bits_ ^ b.bits_); }
    friend constexpr Gf4 operator-(Gf4 a, Gf4 b) { return a + b; }
    constexpr Gf4 operator-() const { return *this; }

    friend constexpr Gf4 operator*(Gf4 a, Gf4 b)
    {
        // (a0 + a1 x)(b0 + b1 x) with x^2 = x + 1
        const unsigned a0 = a.bits_ & 1u, a1 = a.bits_ >> 1;
        const unsigned b0 = b.bits_ & 1u, b1 = b.bits_ >> 1;
        const unsigned hi = a1 & b1;
        const unsigned c0 = (a0 & b0) ^ hi;
        const unsigned c1 = (a0 & b1) ^ (a1 & b0) ^ hi;
        return from_bits((c1 << 1) | c0);
    }

    constexpr Gf4 inverse() const
    {
        if (bits_ == 0)
            throw std::domain_error("Gf4: inverse of zero");
        // a^{-1} = a^2 on F_4^*
        return frobenius();
    }

    constexpr Gf4 frobenius() const { return *this * *this; }

    friend constexpr bool operator==(Gf4, Gf4) = default;

private:
    std::uint8_t bits_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Gf4 g)
{
    static const char* names[] = {"0", "1", "x", "x+1"};
    return os << names[g.bits()];
}

template <>
struct field_traits<Gf4> {
    static Gf4 zero() { return Gf4(0); }
    static Gf4 one() { return Gf4(1); }
    static bool is_zero(Gf4 x) { return x.is_zero(); }
    static Gf4 inverse(Gf4 x) { return x.inverse(); }
    /// Reduction mod 2; defined for rationals with odd denominator.
    static Gf4 embed(const Rational& x)
    {
        if (mpz_even_p(x.get_den_mpz_t()))
            throw std::domain_error("Gf4: rational with even denominator has no reduction mod 2");
        return Gf4(static_cast<int>(mpz_fdiv_ui(x.get_num_mpz_t(), 2)));
    }
};

/// F_2 as {0, 1}, F_4 as all four elements.
inline std::vector<Gf4> field_elements(int q)
{
    if (q == 2)
        return {Gf4::from_bits(0), Gf4::from_bits(1)};
    if (q == 4)
        return {Gf4::from_bits(0), Gf4::from_bits(1), Gf4::from_bits(2), Gf4::from_bits(3)};
    throw std::invalid_argument("field_elements: q must be 2 or 4");
}

using SymGMatrix = Matrix<Gf4>;

/// Sym^2 x1 + x2 with Sym^2 x1 = x1 x1^T.
inline SymGMatrix ml(const std::vector<Gf4>& x1, const Matrix<Gf4>& x2)
{
    if (x2.rows() != x1.size() || x2.cols() != x1.size())
        throw std::invalid_argument("ml: dimension mismatch");
    for (std::size_t i = 0; i < x1.size(); ++i)
        if (!x2(i, i).is_zero())
            throw std::invalid_argument("ml: x2 must have zero diagonal");
    SymGMatrix s = x2;
    for (std::size_t i = 0; i < x1.size(); ++i)
        for (std::size_t j = 0; j < x1.size(); ++j)
            s(i, j) = s(i, j) + x1[i] * x1[j];
    return s;
}

/// (S J)^{2n} = 0 with J = [[0, 1], [1, 0]] in characteristic 2.
inline bool is_nilpotent_g(const SymGMatrix& s)
{
    if (s.rows() != s.cols() || s.rows() % 2 != 0)
        throw std::invalid_argument("is_nilpotent_g: expected a 2n x 2n matrix");
    const int n = static_cast<int>(s.rows() / 2);
    return is_nilpotent(s * symplectic_form<Gf4>(n));
}

namespace detail {
inline void check_count_size(int n, int q)
{
    if ((q != 2 && q != 4) || n < 1 || n > 2)
        throw std::invalid_argument("point counts need n in {1, 2} and q in {2, 4}");
}

/// Decodes `index` as base-q digits into `out` (least significant first).
inline void decode_digits(std::uint64_t index, const std::vector<Gf4>& field, std::vector<Gf4>& out)
{
    const auto q = static_cast<std::uint64_t>(field.size());
    for (auto& x : out) {
        x = field[static_cast<std::size_t>(index % q)];
        index /= q;
    }
}

inline std::uint64_t power(std::uint64_t base, int exp)
{
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

/// Point of V from digits: the first 2n are x1, the rest the strict upper
/// triangle of x2 in alt_coordinates order.
inline ExoticVector<Gf4> exotic_point(int n, const std::vector<Gf4>& digits)
{
    ExoticVector<Gf4> v(n);
    const auto dim = static_cast<std::size_t>(2 * n);
    for (std::size_t k = 0; k < dim; ++k)
        v.x1[k] = digits[k];
    std::size_t k = dim;
    for (const auto& [i, j] : alt_coordinates(n))
        v.set_x2(i, j, digits[k++]);
    return v;
}

/// Index of a symmetric matrix from its upper triangle including the
/// diagonal, base q.
inline std::uint64_t symmetric_index(const SymGMatrix& s, int q)
{
    std::uint64_t idx = 0;
    std::uint64_t scale = 1;
    const auto base = static_cast<std::uint64_t>(q);
    for (std::size_t i = 0; i < s.rows(); ++i) {
        for (std::size_t j = i; j < s.cols(); ++j) {
            // F_2 elements have bits 0/1; F_4 elements use all four digits.
            idx += scale * s(i, j).bits();
            scale *= base;
        }
    }
    return idx;
}
} // namespace detail

/// #{(x1, x2) in V(F_q) : P_i(x2) = 0 mod 2 for all i}, by enumeration.
inline std::uint64_t count_exotic_points(int n, int q)
{
    detail::check_count_size(n, q);
    const auto field = field_elements(q);
    const int coords = n * (2 * n + 1);
    const std::uint64_t total = detail::power(static_cast<std::uint64_t>(q), coords);
    std::vector<Gf4> digits(static_cast<std::size_t>(coords));
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        detail::decode_digits(idx, field, digits);
        if (is_in_nilcone(detail::exotic_point(n, digits)))
            ++count;
    }
    return count;
}

/// #{S in Sym(2n, F_q) : S J nilpotent}, by enumeration.
inline std::uint64_t count_nilpotent_points(int n, int q)
{
    detail::check_count_size(n, q);
    const auto field = field_elements(q);
    const auto dim = static_cast<std::size_t>(2 * n);
    const int coords = n * (2 * n + 1);
    const std::uint64_t total = detail::power(static_cast<std::uint64_t>(q), coords);
    std::vector<Gf4> digits(static_cast<std::size_t>(coords));
    SymGMatrix s(dim, dim, Gf4(0));
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        detail::decode_digits(idx, field, digits);
        std::size_t k = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i; j < dim; ++j) {
                s(i, j) = digits[k];
                s(j, i) = digits[k];
                ++k;
            }
        }
        if (is_nilpotent_g(s))
            ++count;
    }
    return count;
}

struct TransportReport {
    std::uint64_t points = 0;       ///< |V(F_q)| = |g(F_q)|
    std::uint64_t exotic = 0;       ///< P_i-zeros among the points of V
    std::uint64_t images_nilpotent = 0; ///< ml-images of P_i-zeros that are nilpotent
    bool ml_bijective = false;
    bool restricts = false; ///< P_i-zero iff ml-image nilpotent, at every point
    bool ok() const { return ml_bijective && restricts; }
};

/// ml is a bijection V(F_q) -> g(F_q) carrying the P_i-zeros exactly onto
/// the nilpotent S.
inline TransportReport ml_transport_report(int n, int q)
{
    detail::check_count_size(n, q);
    const auto field = field_elements(q);
    const int coords = n * (2 * n + 1);
    const std::uint64_t total = detail::power(static_cast<std::uint64_t>(q), coords);
    std::vector<bool> hit(total, false);
    std::vector<Gf4> digits(static_cast<std::size_t>(coords));
    TransportReport r;
    r.points = total;
    bool injective = true;
    r.restricts = true;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        detail::decode_digits(idx, field, digits);
        const auto v = detail::exotic_point(n, digits);
        const SymGMatrix s = ml(v.x1, v.x2);
        const std::uint64_t image = detail::symmetric_index(s, q);
        if (image >= total || hit[image])
            injective = false;
        else
            hit[image] = true;
        const bool zero = is_in_nilcone(v);
        const bool nil = is_nilpotent_g(s);
        r.exotic += zero ? 1 : 0;
        r.images_nilpotent += (zero && nil) ? 1 : 0;
        if (zero != nil)
            r.restricts = false;
    }
    // Injective between sets of equal size.
    r.ml_bijective = injective;
    return r;
}

inline bool verify_ml_transport(int n, int q) { return ml_transport_report(n, q).ok(); }

} // namespace exotic

#endif
