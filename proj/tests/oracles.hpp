#ifndef EXOTIC_TESTS_ORACLES_HPP
#define EXOTIC_TESTS_ORACLES_HPP

// Independent re-derivations used as test oracles. Nothing here calls the
// library routine it is checking.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "exotic/exotic.hpp"

namespace oracle {

using exotic::Gf4;
using exotic::Matrix;
using exotic::MultiPoly;
using exotic::Rational;

/// Euler's pentagonal-number recurrence.
inline long long partition_count(int n)
{
    std::vector<long long> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            const long long sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                acc += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = acc;
    }
    return p[static_cast<std::size_t>(n)];
}

/// Partitions of n as plain vectors, any order.
inline std::vector<std::vector<int>> raw_partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = 1; k <= std::min(rem, maxp); ++k) {
            cur.push_back(k);
            rec(rem - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// The three marking conditions, read literally (1-based, zero padded).
inline bool is_marking(const std::vector<int>& lambda, const std::vector<int>& a)
{
    const int len = static_cast<int>(lambda.size());
    auto L = [&](int k) { return k >= 1 && k <= len ? lambda[static_cast<std::size_t>(k - 1)] : 0; };
    auto A = [&](int k) { return k >= 1 && k <= len ? a[static_cast<std::size_t>(k - 1)] : 0; };
    for (int k = 1; k <= len; ++k) {
        if (A(k) < 0 || A(k) > L(k))
            return false;
        if (L(k + 1) == L(k) && A(k) != 0)
            return false;
    }
    for (int p = 1; p <= len; ++p)
        for (int q = p + 1; q <= len; ++q)
            if (A(p) != 0 && A(q) != 0 && !(L(p) - L(q) > A(p) - A(q) && A(p) - A(q) > 0))
                return false;
    return true;
}

/// All (lambda, a) of weight n by exhaustive search over a in the box.
inline std::set<std::pair<std::vector<int>, std::vector<int>>> marked_partitions(int n)
{
    std::set<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& lambda : raw_partitions(n)) {
        std::vector<int> a(lambda.size(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == lambda.size()) {
                if (is_marking(lambda, a))
                    out.insert({lambda, a});
                return;
            }
            for (int v = 0; v <= lambda[k]; ++v) {
                a[k] = v;
                rec(k + 1);
            }
            a[k] = 0;
        };
        rec(0);
    }
    return out;
}

/// b_i = a_i if a_i != 0, else max({a_j + l_i - l_j : j < i} u {a_j : j >= i}).
inline std::vector<int> b_sequence(const std::vector<int>& lambda, const std::vector<int>& a)
{
    const std::size_t len = lambda.size();
    std::vector<int> b(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        if (a[i] != 0) {
            b[i] = a[i];
            continue;
        }
        int best = 0;
        for (std::size_t j = 0; j < i; ++j)
            best = std::max(best, a[j] + lambda[i] - lambda[j]);
        for (std::size_t j = i; j < len; ++j)
            best = std::max(best, a[j]);
        b[i] = best;
    }
    return b;
}

/// Standard tableaux count by removing corners, memoized.
inline long long standard_tableaux(const std::vector<int>& shape)
{
    static std::map<std::vector<int>, long long> memo;
    if (shape.empty())
        return 1;
    if (auto it = memo.find(shape); it != memo.end())
        return it->second;
    long long total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
        if (!corner)
            continue;
        std::vector<int> smaller = shape;
        if (--smaller[i] == 0)
            smaller.pop_back();
        total += standard_tableaux(smaller);
    }
    memo[shape] = total;
    return total;
}

inline long long binomial(int n, int k)
{
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// Leibniz expansion over all permutations.
template <class T>
T leibniz_det(const Matrix<T>& m, const T& zero, const T& one)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    T acc = zero;
    do {
        int inv = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                inv += perm[a] > perm[b];
        T term = one;
        for (std::size_t i = 0; i < n; ++i)
            term = term * m(i, perm[i]);
        if (inv % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

inline Rational leibniz_det(const Matrix<Rational>& m) { return leibniz_det(m, Rational(0), Rational(1)); }

/// Word lengths over s_1..s_n by breadth-first search from the identity.
inline std::map<exotic::SignedPermutation, int> bfs_lengths(int n)
{
    std::map<exotic::SignedPermutation, int> dist;
    std::queue<exotic::SignedPermutation> todo;
    const auto id = exotic::SignedPermutation::identity(n);
    dist[id] = 0;
    todo.push(id);
    while (!todo.empty()) {
        const auto w = todo.front();
        todo.pop();
        for (int i = 1; i <= n; ++i) {
            const auto next = w * exotic::simple_reflection(i, n);
            if (dist.emplace(next, dist[w] + 1).second)
                todo.push(next);
        }
    }
    return dist;
}

/// Product of the weights as linear forms in e_1..e_n.
inline MultiPoly product_of_forms(int n, const std::vector<exotic::Weight>& ws)
{
    MultiPoly out = MultiPoly::constant(n, 1);
    for (const auto& w : ws) {
        MultiPoly form(n);
        for (int i = 1; i <= n; ++i)
            if (w[i] != 0)
                form += MultiPoly::variable(n, i) * Rational(w[i]);
        out = out * form;
    }
    return out;
}

/* dim Stab_sp(X) for X = (x1, x2): A in gl(2n) with A^T J + J A = 0,
 * A x1 = 0, A x2 + x2 A^T = 0. The orbit dimension is n(2n+1) minus this.
 */
inline int stabilizer_dim(const exotic::RationalVector& v)
{
    const std::size_t d = static_cast<std::size_t>(2 * v.n);
    const auto J = exotic::symplectic_form<Rational>(v.n);
    const std::size_t unknowns = d * d;
    std::vector<std::vector<Rational>> rows;
    auto unit = [&](std::size_t p, std::size_t q) { return p * d + q; };
    // (A^T J + J A)(i, j) = sum_k A(k, i) J(k, j) + J(i, k) A(k, j)
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Rational> r(unknowns, Rational(0));
            for (std::size_t k = 0; k < d; ++k) {
                r[unit(k, i)] += J(k, j);
                r[unit(k, j)] += J(i, k);
            }
            rows.push_back(std::move(r));
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rational> r(unknowns, Rational(0));
        for (std::size_t k = 0; k < d; ++k)
            r[unit(i, k)] += v.x1[k];
        rows.push_back(std::move(r));
    }
    // (A x2 + x2 A^T)(i, j) = sum_k A(i, k) x2(k, j) + x2(i, k) A(j, k)
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Rational> r(unknowns, Rational(0));
            for (std::size_t k = 0; k < d; ++k) {
                r[unit(i, k)] += v.x2(k, j);
                r[unit(j, k)] += v.x2(i, k);
            }
            rows.push_back(std::move(r));
        }
    }
    const auto sys = Matrix<Rational>::from_rows(rows);
    return static_cast<int>(unknowns - sys.rank());
}

inline int orbit_dim(const exotic::RationalVector& v) { return v.n * (2 * v.n + 1) - stabilizer_dim(v); }

// --- characteristic 2 --------------------------------------------------------

/// Polynomials over F_4 in t, coefficient k of t^k.
using Gf4Poly = std::vector<Gf4>;

inline Gf4Poly poly_mul(const Gf4Poly& a, const Gf4Poly& b)
{
    Gf4Poly out(a.size() + b.size() - 1, Gf4(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

inline Gf4Poly poly_add(Gf4Poly a, const Gf4Poly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), Gf4(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = a[i] + b[i];
    return a;
}

/// det(t - A) by Leibniz over F_4[t]; a nilpotent A has t^dim.
inline bool charpoly_is_monomial(const Matrix<Gf4>& a)
{
    const std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Gf4Poly det{Gf4(0)};
    do {
        Gf4Poly term{Gf4(1)};
        for (std::size_t i = 0; i < n; ++i) {
            Gf4Poly entry{a(i, perm[i])}; // -a = a in characteristic 2
            if (perm[i] == i)
                entry.push_back(Gf4(1));
            term = poly_mul(term, entry);
        }
        det = poly_add(det, term); // signs are irrelevant in characteristic 2
    } while (std::next_permutation(perm.begin(), perm.end()));
    det.resize(n + 1, Gf4(0));
    for (std::size_t k = 0; k < n; ++k)
        if (!det[k].is_zero())
            return false;
    return det[n] == Gf4(1);
}

// --- generators ----------------------------------------------------------------

/// Random rational with small numerator and denominator.
inline Rational random_rational(std::mt19937_64& rng, int bound = 5)
{
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

/// Random polynomial with up to `terms` terms of total degree <= deg.
inline MultiPoly random_poly(std::mt19937_64& rng, int n, int terms = 4, int deg = 3)
{
    std::uniform_int_distribution<int> ex(0, deg);
    MultiPoly p(n);
    for (int t = 0; t < terms; ++t) {
        exotic::Exponent e(static_cast<std::size_t>(n));
        for (auto& x : e)
            x = ex(rng);
        p.add_term(e, random_rational(rng));
    }
    return p;
}

inline exotic::SignedPermutation random_signed_permutation(std::mt19937_64& rng, int n)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution flip(0.5);
    std::vector<exotic::SignedPermutation::Image> im;
    for (int t : perm)
        im.push_back({t, flip(rng) ? -1 : 1});
    return exotic::SignedPermutation(std::move(im));
}

inline Matrix<Rational> random_alternating(std::mt19937_64& rng, std::size_t d)
{
    Matrix<Rational> m(d, d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            m(i, j) = random_rational(rng);
            m(j, i) = -m(i, j);
        }
    }
    return m;
}

/// Unit lower times unit upper triangular, so always invertible.
inline Matrix<Rational> random_invertible(std::mt19937_64& rng, std::size_t d)
{
    Matrix<Rational> l(d, d, Rational(0));
    Matrix<Rational> u(d, d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        l(i, i) = 1;
        u(i, i) = 1;
        for (std::size_t j = 0; j < i; ++j) {
            l(i, j) = random_rational(rng, 3);
            u(j, i) = random_rational(rng, 3);
        }
    }
    return l * u;
}

/// Product of `count` symplectic transvections x -> x + c w(x, v) v.
inline Matrix<Rational> random_symplectic(std::mt19937_64& rng, int n, int count = 4)
{
    const auto d = static_cast<std::size_t>(2 * n);
    const auto J = exotic::symplectic_form<Rational>(n);
    auto g = Matrix<Rational>::identity(d, Rational(0), Rational(1));
    for (int t = 0; t < count; ++t) {
        std::vector<Rational> v(d);
        for (auto& x : v)
            x = random_rational(rng, 3);
        const Rational c = random_rational(rng, 3);
        Matrix<Rational> vvT(d, d, Rational(0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                vvT(i, j) = v[i] * v[j];
        const auto step = Matrix<Rational>::identity(d, Rational(0), Rational(1)) + (vvT * J).scaled(c);
        g = step * g;
    }
    return g;
}

} // namespace oracle

#endif
