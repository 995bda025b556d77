#ifndef EXOTIC_NILCONE_HPP
#define EXOTIC_NILCONE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exotic/errors.hpp"
#include "exotic/matrix.hpp"
#include "exotic/multipoly.hpp"
#include "exotic/partitions.hpp"
#include "exotic/pfaffian.hpp"
#include "exotic/weight.hpp"
#include "exotic/weyl.hpp"

namespace exotic {

/* A point (x1, x2) of V1 + Alt^2 V1 for Sp(2n). Coordinates of V1 are
 * e_1..e_2n with weight e_k for k <= n and -e_{k-n} for k > n; x2 is stored
 * as a full alternating matrix.
 */
template <class F>
struct ExoticVector {
    int n = 0;
    std::vector<F> x1;
    Matrix<F> x2;

    ExoticVector() = default;
    explicit ExoticVector(int rank)
        : n(rank), x1(static_cast<std::size_t>(2 * rank), field_traits<F>::zero()),
          x2(static_cast<std::size_t>(2 * rank), static_cast<std::size_t>(2 * rank), field_traits<F>::zero())
    {
        if (rank < 0)
            throw std::invalid_argument("ExoticVector: negative rank");
    }

    ExoticVector(int rank, std::vector<F> v1, Matrix<F> v2) : n(rank), x1(std::move(v1)), x2(std::move(v2))
    {
        const auto dim = static_cast<std::size_t>(2 * rank);
        if (x1.size() != dim || x2.rows() != dim || x2.cols() != dim)
            throw std::invalid_argument("ExoticVector: dimension mismatch");
        require_alternating(x2, field_traits<F>::zero());
    }

    /// x2(i, j) = c and x2(j, i) = -c, 1-based, i != j.
    void set_x2(int i, int j, const F& c)
    {
        if (i == j)
            throw std::invalid_argument("ExoticVector::set_x2: diagonal entry");
        x2(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = c;
        x2(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = field_traits<F>::zero() - c;
    }

    /// Adds c * v[w] for a T-weight w of V1 (+-e_k) or of Alt^2 V1
    /// (+-e_k +- e_l, k != l, or 0 paired as e_k, e_{n+k}).
    ExoticVector& add_weight_vector(const Weight& w, const F& c)
    {
        if (w.rank() != n)
            throw std::invalid_argument("add_weight_vector: rank mismatch");
        std::vector<int> idx; // V1 coordinates whose weights sum to w
        for (int k = 1; k <= n; ++k) {
            const int wk = w[k];
            if (wk == 1)
                idx.push_back(k);
            else if (wk == -1)
                idx.push_back(n + k);
            else if (wk != 0)
                throw std::invalid_argument("add_weight_vector: " + to_string(w) + " is not a weight of V");
        }
        std::sort(idx.begin(), idx.end());
        if (idx.size() == 1) {
            auto& slot = x1[static_cast<std::size_t>(idx[0] - 1)];
            slot = slot + c;
        } else if (idx.size() == 2) {
            const auto i = static_cast<std::size_t>(idx[0] - 1);
            const auto j = static_cast<std::size_t>(idx[1] - 1);
            set_x2(idx[0], idx[1], x2(i, j) + c);
        } else {
            throw std::invalid_argument("add_weight_vector: " + to_string(w) +
                                        " is not a non-zero weight of V");
        }
        return *this;
    }

    friend bool operator==(const ExoticVector& a, const ExoticVector& b)
    {
        return a.n == b.n && a.x1 == b.x1 && a.x2 == b.x2;
    }
};

using RationalVector = ExoticVector<Rational>;

/// Sum of v[w] over the listed weights, each with coefficient 1.
inline RationalVector weight_vector(int n, const std::vector<Weight>& ws)
{
    RationalVector v(n);
    for (const auto& w : ws)
        v.add_weight_vector(w, Rational(1));
    return v;
}

/// J = [[0, -1_n], [1_n, 0]].
template <class F>
Matrix<F> symplectic_form(int n)
{
    const auto dim = static_cast<std::size_t>(2 * n);
    Matrix<F> j(dim, dim, field_traits<F>::zero());
    for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
        j(k, k + static_cast<std::size_t>(n)) = field_traits<F>::zero() - field_traits<F>::one();
        j(k + static_cast<std::size_t>(n), k) = field_traits<F>::one();
    }
    return j;
}

/// Pf(J) = (-1)^{n(n+1)/2}.
inline int pfaffian_of_J(int n) { return (n * (n + 1) / 2) % 2 == 0 ? 1 : -1; }

// ---------------------------------------------------------------------------
// Defining polynomials.

/// Upper-triangle coordinates (i, j), 1 <= i < j <= 2n, in lexicographic
/// order; position in this list is the variable index of defining_polys.
inline std::vector<std::pair<int, int>> alt_coordinates(int n)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = i + 1; j <= 2 * n; ++j)
            out.emplace_back(i, j);
    return out;
}

inline int alt_variable_count(int n) { return n * (2 * n - 1); }

/// Coefficients c_0..c_n of t^n..t^0 in Pf(tJ - X) for a generic alternating
/// X, as polynomials in the upper-triangle coordinates.
inline std::vector<MultiPoly> pfaffian_t_coefficients(int n)
{
    const int nx = alt_variable_count(n);
    const int nv = nx + 1; // t is the last variable
    const auto dim = static_cast<std::size_t>(2 * n);
    const MultiPoly zero(nv);
    Matrix<MultiPoly> a(dim, dim, zero);
    const MultiPoly t = MultiPoly::variable(nv, nv);
    const auto coords = alt_coordinates(n);
    const Matrix<Rational> j = symplectic_form<Rational>(n);
    for (std::size_t k = 0; k < coords.size(); ++k) {
        const auto r = static_cast<std::size_t>(coords[k].first - 1);
        const auto c = static_cast<std::size_t>(coords[k].second - 1);
        const MultiPoly x = MultiPoly::variable(nv, static_cast<int>(k) + 1);
        a(r, c) = t * j(r, c) - x;
        a(c, r) = zero - a(r, c);
    }
    const MultiPoly pf = pfaffian(a, zero, MultiPoly::constant(nv, 1));

    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(n + 1), MultiPoly(nx));
    for (const auto& [e, c] : pf.terms()) {
        const int tdeg = e.back();
        if (tdeg > n)
            throw consistency_error("Pf(tJ - X) has t-degree above n");
        coeffs[static_cast<std::size_t>(n - tdeg)].add_term(Exponent(e.begin(), e.end() - 1), c);
    }
    return coeffs;
}

namespace detail {
inline std::mutex& defining_polys_mutex()
{
    static std::mutex m;
    return m;
}
inline std::map<int, std::vector<MultiPoly>>& defining_polys_cache()
{
    static std::map<int, std::vector<MultiPoly>> cache;
    return cache;
}
} // namespace detail

/// [P_1, ..., P_n]: the t^{n-i} coefficient of Pf(tJ - X) divided by Pf(J),
/// so that P_0 = 1. Cached per n.
inline std::vector<MultiPoly> defining_polys(int n)
{
    if (n < 1)
        throw std::invalid_argument("defining_polys: n must be positive");
    if (n > 6)
        throw std::invalid_argument("defining_polys: n too large for symbolic expansion");
    {
        std::lock_guard lock(detail::defining_polys_mutex());
        auto& cache = detail::defining_polys_cache();
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    auto coeffs = pfaffian_t_coefficients(n);
    const Rational norm(pfaffian_of_J(n));
    if (coeffs.front() != MultiPoly::constant(alt_variable_count(n), norm))
        throw consistency_error("leading coefficient of Pf(tJ - X) is not Pf(J)");
    std::vector<MultiPoly> ps;
    for (int i = 1; i <= n; ++i)
        ps.push_back(coeffs[static_cast<std::size_t>(i)] * (Rational(1) / norm));
    std::lock_guard lock(detail::defining_polys_mutex());
    detail::defining_polys_cache().emplace(n, ps);
    return ps;
}

/// Upper-triangle entries of x2 in alt_coordinates order.
template <class F>
std::vector<F> alt_entries(const Matrix<F>& x2, int n)
{
    std::vector<F> out;
    for (const auto& [i, j] : alt_coordinates(n))
        out.push_back(x2(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)));
    return out;
}

/// P_1(x2) = ... = P_n(x2) = 0; x1 is unconstrained.
template <class F>
bool is_in_nilcone(const ExoticVector<F>& v)
{
    if (v.n == 0)
        return true;
    const auto point = alt_entries(v.x2, v.n);
    for (const auto& p : defining_polys(v.n)) {
        const F value = p.template evaluate<F>(point, [](const Rational& c) { return field_traits<F>::embed(c); },
                                      field_traits<F>::zero());
        if (!field_traits<F>::is_zero(value))
            return false;
    }
    return true;
}

/// M = x2 J, conjugation-covariant under Sp.
template <class F>
Matrix<F> endomorphism_of(const ExoticVector<F>& v)
{
    return v.x2 * symplectic_form<F>(v.n);
}

/// Halved Jordan type of M: jordan_type(M) = (l1, l1, l2, l2, ...).
template <class F>
Partition exotic_jordan(const ExoticVector<F>& v)
{
    const Partition doubled = jordan_type(endomorphism_of(v));
    std::vector<int> half;
    for (int k = 1; k <= doubled.length(); k += 2) {
        if (doubled.part(k) != doubled.part(k + 1))
            throw consistency_error("Jordan type " + to_string(doubled) + " lacks even multiplicities");
        half.push_back(doubled.part(k));
    }
    return Partition(std::move(half));
}

// ---------------------------------------------------------------------------
// K-invariant.

namespace detail {
inline std::vector<Rational> flatten_block(const std::vector<Rational>& sol, std::size_t block, std::size_t dim)
{
    return std::vector<Rational>(sol.begin() + static_cast<std::ptrdiff_t>(block * dim),
                                 sol.begin() + static_cast<std::ptrdiff_t>((block + 1) * dim));
}
} // namespace detail

/* Whether witnesses xi(j) exist for the marking `a` of lambda:
 *   xi(j) in ker M^{lambda_j},  x1 = sum_j M^{lambda_j - a_j} xi(j),
 *   M^{lambda_j - 1} xi(j) != 0 exactly for the marked j.
 * The closed conditions cut an affine space S. Each open condition fails on
 * an affine subspace of S; over an infinite field finitely many proper
 * subspaces cannot cover S, so the test is that no open condition vanishes
 * identically on S.
 */
inline bool admits_witnesses(const Matrix<Rational>& m, const std::vector<Rational>& x1, const MarkedPartition& mp)
{
    const std::size_t dim = m.rows();
    const Partition& lambda = mp.lambda();
    std::vector<int> active;
    for (int j = 1; j <= lambda.length(); ++j)
        if (mp.mark(j) != 0)
            active.push_back(j);
    if (active.empty())
        return std::all_of(x1.begin(), x1.end(), [](const Rational& c) { return c == 0; });

    const std::size_t unknowns = active.size() * dim;
    const std::size_t eqs = active.size() * dim + dim;
    Matrix<Rational> sys(eqs, unknowns, Rational(0));
    std::vector<Rational> rhs(eqs, Rational(0));
    std::vector<Matrix<Rational>> top; // M^{lambda_j - 1}, per active block
    for (std::size_t b = 0; b < active.size(); ++b) {
        const int j = active[b];
        const Matrix<Rational> kill = matrix_power(m, lambda.part(j));
        const Matrix<Rational> lift = matrix_power(m, lambda.part(j) - mp.mark(j));
        top.push_back(matrix_power(m, lambda.part(j) - 1));
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                sys(b * dim + r, b * dim + c) = kill(r, c);
                sys(active.size() * dim + r, b * dim + c) = lift(r, c);
            }
        }
    }
    for (std::size_t r = 0; r < dim; ++r)
        rhs[active.size() * dim + r] = x1[r];

    const auto particular = sys.solve(rhs);
    if (!particular)
        return false;
    const auto kernel = sys.kernel();
    for (std::size_t b = 0; b < active.size(); ++b) {
        bool vanishes = top[b].apply(detail::flatten_block(*particular, b, dim)) ==
                        std::vector<Rational>(dim, Rational(0));
        for (const auto& k : kernel) {
            if (!vanishes)
                break;
            vanishes = top[b].apply(detail::flatten_block(k, b, dim)) == std::vector<Rational>(dim, Rational(0));
        }
        if (vanishes)
            return false;
    }
    return true;
}

/// All markings of the Jordan type of v that pass the literal witness test.
inline std::vector<MarkedPartition> witness_markings(const RationalVector& v)
{
    if (!is_in_nilcone(v))
        throw std::invalid_argument("witness_markings: point is not in the exotic nilcone");
    const Partition lambda = exotic_jordan(v);
    const Matrix<Rational> m = endomorphism_of(v);
    std::vector<MarkedPartition> out;
    for (const auto& mp : markings_of(lambda))
        if (admits_witnesses(m, v.x1, mp))
            out.push_back(mp);
    return out;
}

/// Basis of the centralizer {A : A M = M A} in gl(dim).
inline std::vector<Matrix<Rational>> centralizer_basis(const Matrix<Rational>& m)
{
    const std::size_t d = m.rows();
    Matrix<Rational> sys(d * d, d * d, Rational(0));
    // Unknown A(p, q) sits at column p*d + q; equation (i, j) is
    // sum_k A(i,k) M(k,j) - M(i,k) A(k,j) = 0.
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t row = i * d + j;
            for (std::size_t k = 0; k < d; ++k) {
                sys(row, i * d + k) += m(k, j);
                sys(row, k * d + j) -= m(i, k);
            }
        }
    }
    std::vector<Matrix<Rational>> basis;
    for (const auto& vec : sys.kernel()) {
        Matrix<Rational> a(d, d, Rational(0));
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q)
                a(p, q) = vec[p * d + q];
        basis.push_back(std::move(a));
    }
    return basis;
}

/// Jordan type of M restricted to the M-stable span of `gens`.
inline Partition restricted_jordan_type(const Matrix<Rational>& m, std::vector<std::vector<Rational>> gens)
{
    const std::size_t d = m.rows();
    auto span_rank = [d](const std::vector<std::vector<Rational>>& vs) {
        if (vs.empty())
            return std::size_t{0};
        Matrix<Rational> a(vs.size(), d, Rational(0));
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < d; ++j)
                a(i, j) = vs[i][j];
        return a.rank();
    };
    std::vector<std::size_t> ranks{span_rank(gens)};
    while (ranks.back() != 0) {
        for (auto& g : gens)
            g = m.apply(g);
        ranks.push_back(span_rank(gens));
        if (ranks.size() > d + 2)
            throw std::domain_error("restricted_jordan_type: not nilpotent");
    }
    std::vector<int> parts;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        const auto at_least = static_cast<int>(ranks[k - 1] - ranks[k]);
        const auto next = k + 1 < ranks.size() ? static_cast<int>(ranks[k] - ranks[k + 1]) : 0;
        for (int c = 0; c < at_least - next; ++c)
            parts.push_back(static_cast<int>(k));
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

/* The K-invariant. With lambda the halved Jordan type of M, the span
 * U = Z(M) x1 of the centralizer orbit of x1 is M-stable with Jordan type
 * (mu_1, mu_1, mu_2, mu_2, ...); the bi-partition is (mu, lambda - mu) and
 * the marking is its preimage. The answer must also pass the witness test.
 */
inline MarkedPartition k_invariant(const RationalVector& v)
{
    if (!is_in_nilcone(v))
        throw std::invalid_argument("k_invariant: point is not in the exotic nilcone");
    const Partition lambda = exotic_jordan(v);
    const Matrix<Rational> m = endomorphism_of(v);

    std::vector<std::vector<Rational>> orbit;
    for (const auto& a : centralizer_basis(m))
        orbit.push_back(a.apply(v.x1));
    const Partition doubled = restricted_jordan_type(m, std::move(orbit));

    std::vector<int> mu;
    for (int k = 1; k <= doubled.length(); k += 2) {
        if (doubled.part(k) != doubled.part(k + 1))
            throw consistency_error("centralizer span of x1 has Jordan type " + to_string(doubled));
        mu.push_back(doubled.part(k));
    }
    std::vector<int> nu;
    for (int i = 1; i <= lambda.length(); ++i) {
        const int mi = i <= static_cast<int>(mu.size()) ? mu[static_cast<std::size_t>(i - 1)] : 0;
        nu.push_back(lambda.part(i) - mi);
    }
    for (std::size_t i = 0; i < nu.size(); ++i)
        if (nu[i] < 0 || (i + 1 < nu.size() && nu[i] < nu[i + 1]))
            throw consistency_error("lambda - mu is not a partition");

    const MarkedPartition result = from_bipartition({Partition(std::move(mu)), Partition(std::move(nu))});
    if (result.lambda() != lambda)
        throw consistency_error("k_invariant: marking changes the Jordan type");
    const auto candidates = witness_markings(v);
    if (std::find(candidates.begin(), candidates.end(), result) == candidates.end())
        throw consistency_error("k_invariant " + to_string(result) + " fails the witness test");
    return result;
}

// ---------------------------------------------------------------------------
// Representatives and dimensions.

/* Jordan normal form: block i of lambda occupies V1 coordinates
 * c_i+1..c_i+lambda_i (c_i = lambda^<_i), with x2(k, n+k+1) = 1 inside the
 * block so that M e_{k+1} = e_k; x1 = sum over marked i of e_{c_i + a_i}.
 */
inline RationalVector representative(const MarkedPartition& mp)
{
    const int n = mp.n();
    const Partition& lambda = mp.lambda();
    RationalVector v(n);
    for (int i = 1; i <= lambda.length(); ++i) {
        const int c = lambda.sum_before(i);
        for (int k = c + 1; k < c + lambda.part(i); ++k)
            v.set_x2(k, n + k + 1, Rational(1));
        if (mp.mark(i) != 0)
            v.x1[static_cast<std::size_t>(c + mp.mark(i) - 1)] = 1;
    }
    return v;
}

/// A point of V^lambda_01 with pseudo-random non-zero integer coefficients
/// in [1, 9] on every weight; generically lies in the orbit of mp.
inline RationalVector base_set_point(const MarkedPartition& mp, std::uint64_t seed)
{
    const int n = mp.n();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(1, 9);
    RationalVector v(n);
    const V01Weights ws = weight_set_V01(mp);
    for (const auto& w : ws.v1)
        v.add_weight_vector(w, Rational(coeff(rng)));
    for (const auto& w : ws.v0)
        v.add_weight_vector(w, Rational(coeff(rng)));
    return v;
}

/// 4 sum_{i<j} g_i g_j over the gaps g of the d-sequence of (lambda, 0),
/// plus 2|mu|.
inline int orbit_dim(const MarkedPartition& mp)
{
    const MarkedPartition unmarked(mp.lambda(), {});
    const auto d = d_sequence(unmarked);
    std::vector<int> gaps;
    for (std::size_t k = 1; k < d.size(); ++k)
        gaps.push_back(d[k] - d[k - 1]);
    int sum = 0;
    for (std::size_t i = 0; i < gaps.size(); ++i)
        for (std::size_t j = i + 1; j < gaps.size(); ++j)
            sum += gaps[i] * gaps[j];
    return 4 * sum + 2 * to_bipartition(mp).mu.weight();
}

/// dim V - n = 2n + n(2n-1) - n.
inline int nilcone_dim(int n)
{
    if (n < 1)
        throw std::invalid_argument("nilcone_dim: n must be positive");
    return 2 * n + n * (2 * n - 1) - n;
}

} // namespace exotic

#endif
