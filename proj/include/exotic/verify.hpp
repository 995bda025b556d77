#ifndef EXOTIC_VERIFY_HPP
#define EXOTIC_VERIFY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "exotic/charp.hpp"
#include "exotic/joseph.hpp"
#include "exotic/laurent.hpp"
#include "exotic/matrix.hpp"
#include "exotic/multipoly.hpp"
#include "exotic/nilcone.hpp"
#include "exotic/partitions.hpp"
#include "exotic/pfaffian.hpp"
#include "exotic/weyl.hpp"

namespace exotic {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::vector<std::string> lines;    ///< what was checked
    std::vector<std::string> failures; ///< counterexamples

    explicit SuiteResult(std::string suite = {}) : name(std::move(suite)) {}

    void fail(std::string what)
    {
        passed = false;
        failures.push_back(std::move(what));
    }
    void note(std::string what) { lines.push_back(std::move(what)); }
};

struct VerifyOptions {
    bool long_run = false;          ///< unlocks the (n, q) = (2, 4) count
    std::ostream* progress = nullptr; ///< diagnostic stream, may be null
};

namespace detail {
inline void progress(const VerifyOptions& opt, const std::string& msg)
{
    if (opt.progress)
        *opt.progress << msg << '\n';
}

inline MultiPoly e(int n, int i) { return MultiPoly::variable(n, i); }

inline std::string bp_key(const BiPartition& bp) { return to_string(bp); }
} // namespace detail

// ---------------------------------------------------------------------------

inline SuiteResult verify_bijection(int nmax = 10, const VerifyOptions& opt = {})
{
    SuiteResult r("bijection");
    for (int n = 0; n <= nmax; ++n) {
        detail::progress(opt, "bijection: n=" + std::to_string(n));
        const auto marked = enumerate_marked_partitions(n);
        const auto bis = enumerate_bipartitions(n);
        std::set<std::string> image;
        for (const auto& mp : marked) {
            const BiPartition bp = to_bipartition(mp);
            if (bp.weight() != n)
                r.fail(to_string(mp) + " maps to " + to_string(bp) + " of the wrong weight");
            for (int i = 1; i <= mp.lambda().length(); ++i)
                if (bp.mu.part(i) + bp.nu.part(i) != mp.lambda().part(i))
                    r.fail(to_string(mp) + ": mu_i + nu_i != lambda_i at i=" + std::to_string(i));
            if (!image.insert(detail::bp_key(bp)).second)
                r.fail("two marked partitions map to " + to_string(bp));
            if (from_bipartition(bp) != mp)
                r.fail("from_bipartition does not invert at " + to_string(mp));
        }
        std::set<std::string> all;
        for (const auto& bp : bis)
            all.insert(detail::bp_key(bp));
        if (image != all)
            r.fail("n=" + std::to_string(n) + ": image differs from the set of bi-partitions");
        long long expected = 0;
        for (int k = 0; k <= n; ++k)
            expected += partition_count(k) * partition_count(n - k);
        if (static_cast<long long>(marked.size()) != expected)
            r.fail("n=" + std::to_string(n) + ": " + std::to_string(marked.size()) + " marked partitions, expected " +
                   std::to_string(expected));
        r.note("n=" + std::to_string(n) + ": " + std::to_string(marked.size()) + " marked partitions");
    }
    return r;
}

inline SuiteResult verify_wdlambda(int nmax = 5, const VerifyOptions& opt = {})
{
    SuiteResult r("wdlambda");
    for (int n = 1; n <= nmax; ++n) {
        detail::progress(opt, "wdlambda: n=" + std::to_string(n));
        std::size_t checked = 0;
        for (const auto& mp : enumerate_marked_partitions(n)) {
            const WeightSet computed = weight_set_V_lambda(mp);
            for (const auto& w : weight_set_V_plus(n)) {
                ++checked;
                if (computed.contains(w) != wdlambda_predicate(mp, w))
                    r.fail(to_string(mp) + ", " + to_string(w) + ": closed form says " +
                           (computed.contains(w) ? "out" : "in"));
            }
        }
        r.note("n=" + std::to_string(n) + ": " + std::to_string(checked) + " (marked partition, weight) pairs");
    }
    return r;
}

inline SuiteResult verify_degree(int nmax = 8, const VerifyOptions& opt = {})
{
    SuiteResult r("degree");
    for (int n = 1; n <= nmax; ++n) {
        detail::progress(opt, "degree: n=" + std::to_string(n));
        const auto marked = enumerate_marked_partitions(n);
        for (const auto& mp : marked) {
            const int dim = orbit_dim(mp);
            const int deg = d_poly(to_bipartition(mp)).degree();
            if (2 * deg != 2 * n * n - dim)
                r.fail(to_string(mp) + ": deg D = " + std::to_string(deg) + ", orbit dim = " + std::to_string(dim));
        }
        r.note("n=" + std::to_string(n) + ": " + std::to_string(marked.size()) + " orbits");
    }
    return r;
}

// ---------------------------------------------------------------------------
// The n = 2 tables.

struct TableCell {
    std::vector<SubvarietyPresentation> presentations; ///< empty: no orbit (N/A)
    std::vector<MultiPoly> expected;
};

struct TableRow {
    std::string name;
    int dim;
    MarkedPartition mp;
    BiPartition bp;
    RationalVector printed_representative;
    TableCell exotic;
    TableCell ordinary;
};

/// The five rows of the n = 2 orbit and Joseph polynomial tables, with the
/// printed representatives and polynomials.
inline std::vector<TableRow> table_n2()
{
    const int n = 2;
    const Weight e1 = Weight::epsilon(n, 1);
    const Weight e2 = Weight::epsilon(n, 2);
    const Weight a1 = e1 - e2;
    const MultiPoly x = detail::e(n, 1);
    const MultiPoly y = detail::e(n, 2);
    const auto exo = [&](std::vector<Weight> span) { return exotic_presentation(n, std::move(span)); };
    const auto ord = [&](std::vector<Weight> span, std::vector<Weight> eqs = {}) {
        return ordinary_presentation(n, std::move(span), std::move(eqs));
    };
    const std::vector<Weight> v_all = weight_set_V_plus(n).items();
    const std::vector<Weight> n_all = weight_set_n_plus(n).items();
    const auto without = [](std::vector<Weight> ws, const Weight& drop) {
        ws.erase(std::remove(ws.begin(), ws.end(), drop), ws.end());
        return ws;
    };
    const MultiPoly sq = x * x - y * y;

    std::vector<TableRow> rows;
    rows.push_back({"sign", 1, MarkedPartition(Partition{1, 1}, {0, 0}), {Partition{}, Partition{1, 1}},
                    weight_vector(n, {}),
                    {{exo({})}, {x * y * sq}},
                    {{ord({})}, {Rational(4) * x * y * sq}}});
    rows.push_back({"Ssign", 1, MarkedPartition(Partition{1, 1}, {0, 1}), {Partition{1, 1}, Partition{}},
                    weight_vector(n, {e1}),
                    {{exo({e1, e2})}, {sq}},
                    {{ord({e1 * 2, e2 * 2, e1 + e2}, {e1 * 2 + e2 * 2})}, {Rational(2) * sq}}});
    rows.push_back({"Lsign", 1, MarkedPartition(Partition{2}, {0}), {Partition{}, Partition{2}},
                    weight_vector(n, {a1}),
                    {{exo({e1 + e2, e1 - e2})}, {x * y}},
                    {{}, {}}});
    rows.push_back({"regular", 2, MarkedPartition(Partition{2}, {1}), {Partition{1}, Partition{1}},
                    weight_vector(n, {a1, e1}),
                    {{exo(without(v_all, a1)), exo(without(v_all, e2))}, {x - y, y}},
                    {{ord(without(n_all, a1)), ord(without(n_all, e2 * 2))}, {x - y, Rational(2) * y}}});
    rows.push_back({"triv", 1, MarkedPartition(Partition{2}, {2}), {Partition{2}, Partition{}},
                    weight_vector(n, {a1, e2}),
                    {{exo(v_all)}, {MultiPoly::constant(n, 1)}},
                    {{ord(n_all)}, {MultiPoly::constant(n, 1)}}});
    return rows;
}

/// Orbit table: representatives, K-invariants, exhaustion of bi-partitions.
inline SuiteResult verify_orbit_table_n2()
{
    SuiteResult r("orbit-table-n2");
    std::set<std::string> seen;
    for (const auto& row : table_n2()) {
        const RationalVector rep = representative(row.mp);
        if (!is_in_nilcone(rep))
            r.fail(row.name + ": representative is not in the nilcone");
        else if (k_invariant(rep) != row.mp)
            r.fail(row.name + ": K-invariant of the representative is " + to_string(k_invariant(rep)));
        if (!is_in_nilcone(row.printed_representative) || k_invariant(row.printed_representative) != row.mp)
            r.fail(row.name + ": printed representative has a different K-invariant");
        if (to_bipartition(row.mp) != row.bp)
            r.fail(row.name + ": bi-partition is " + to_string(to_bipartition(row.mp)));
        seen.insert(detail::bp_key(row.bp));
        r.note(row.name + ": " + to_string(row.mp) + " -> " + to_string(row.bp));
    }
    std::set<std::string> all;
    for (const auto& bp : enumerate_bipartitions(2))
        all.insert(detail::bp_key(bp));
    if (seen != all)
        r.fail("the five bi-partitions do not exhaust those of n=2");
    return r;
}

namespace detail {
inline bool cell_matches(const TableCell& cell, std::string& why)
{
    if (cell.presentations.size() != cell.expected.size()) {
        why = "presentation/expected size mismatch";
        return false;
    }
    for (std::size_t k = 0; k < cell.presentations.size(); ++k) {
        const MultiPoly got = joseph_poly(cell.presentations[k]);
        if (got != cell.expected[k]) {
            why = "got " + to_string(got) + ", expected " + to_string(cell.expected[k]);
            return false;
        }
    }
    return true;
}
} // namespace detail

/// Exotic column: each cell exact and D(mu, nu) among its polynomials up to
/// positive scalar.
inline SuiteResult verify_exotic_column_n2()
{
    SuiteResult r("joseph-exotic-n2");
    for (const auto& row : table_n2()) {
        std::string why;
        if (!detail::cell_matches(row.exotic, why)) {
            r.fail(row.name + " exotic: " + why);
            continue;
        }
        const MultiPoly d = d_poly(row.bp);
        const bool matched = std::any_of(row.exotic.expected.begin(), row.exotic.expected.end(),
                                         [&](const MultiPoly& p) { return equal_up_to_positive_scalar(p, d); });
        if (!matched)
            r.fail(row.name + " exotic: D" + to_string(row.bp) + " = " + to_string(d) + " matches no entry");
        std::string cell;
        for (const auto& p : row.exotic.expected)
            cell += (cell.empty() ? "" : "; ") + to_string(p);
        r.note(row.name + " exotic: " + cell + " (D = " + to_string(d) + ")");
    }
    return r;
}

inline SuiteResult verify_ordinary_column_n2()
{
    SuiteResult r("joseph-ordinary-n2");
    for (const auto& row : table_n2()) {
        if (row.ordinary.presentations.empty()) {
            r.note(row.name + " ordinary: N/A");
            continue;
        }
        std::string why;
        if (!detail::cell_matches(row.ordinary, why)) {
            r.fail(row.name + " ordinary: " + why);
            continue;
        }
        std::string cell;
        for (const auto& p : row.ordinary.expected)
            cell += (cell.empty() ? "" : "; ") + to_string(p);
        r.note(row.name + " ordinary: " + cell);
    }
    return r;
}

/// Both Joseph columns plus the orbit table: ten matched cells.
inline SuiteResult verify_table_n2()
{
    SuiteResult r("table-n2");
    for (auto part : {verify_orbit_table_n2(), verify_ordinary_column_n2(), verify_exotic_column_n2()}) {
        for (auto& f : part.failures)
            r.fail(part.name + ": " + f);
        if (part.name != "orbit-table-n2")
            for (auto& l : part.lines)
                r.note(l);
    }
    if (r.passed)
        r.note("10 matched table cells");
    return r;
}

inline SuiteResult verify_macdonald(int nmax = 3, const VerifyOptions& opt = {})
{
    SuiteResult r("macdonald");
    for (int n = 1; n <= nmax; ++n) {
        detail::progress(opt, "macdonald: n=" + std::to_string(n));
        for (const auto& bp : enumerate_bipartitions(n)) {
            const auto span = macdonald_span(d_poly(bp), n);
            const Integer expected = irrep_dim(bp);
            if (Integer(static_cast<unsigned long>(span.dimension)) != expected)
                r.fail(to_string(bp) + ": span dimension " + std::to_string(span.dimension) + ", irreducible " +
                       expected.get_str());
        }
        r.note("n=" + std::to_string(n) + ": " + std::to_string(enumerate_bipartitions(n).size()) +
               " bi-partitions");
    }
    std::string dims;
    for (const auto& row : table_n2()) {
        const auto span = macdonald_span(d_poly(row.bp), 2);
        if (static_cast<int>(span.dimension) != row.dim)
            r.fail(row.name + ": dimension " + std::to_string(span.dimension) + ", table " + std::to_string(row.dim));
        dims += (dims.empty() ? "" : ",") + std::to_string(span.dimension);
    }
    r.note("n=2 table dimensions: " + dims);
    return r;
}

// ---------------------------------------------------------------------------
// Pfaffian layer.

/// Generic alternating 2k x 2k matrix with x_{ij} (i < j) as variables in
/// alt order, over k(2k-1) + extra variables.
inline Matrix<MultiPoly> generic_alternating(int size, int extra_vars = 0)
{
    const int nv = size * (size - 1) / 2 + extra_vars;
    const MultiPoly zero(nv);
    Matrix<MultiPoly> m(static_cast<std::size_t>(size), static_cast<std::size_t>(size), zero);
    int k = 0;
    for (int i = 0; i < size; ++i) {
        for (int j = i + 1; j < size; ++j) {
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = MultiPoly::variable(nv, ++k);
            m(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = zero - MultiPoly::variable(nv, k);
        }
    }
    return m;
}

/// The permutation-sum definition:
/// Pf = 1/(2^k k!) sum_sigma sgn(sigma) prod_i a_{sigma(2i-1) sigma(2i)}.
inline MultiPoly pfaffian_permutation_sum(const Matrix<MultiPoly>& m)
{
    const int size = static_cast<int>(m.rows());
    const int nv = size == 0 ? 0 : m(0, 0).nvars();
    std::vector<int> perm(static_cast<std::size_t>(size));
    std::iota(perm.begin(), perm.end(), 0);
    MultiPoly acc(nv);
    do {
        int inversions = 0;
        for (int a = 0; a < size; ++a)
            for (int b = a + 1; b < size; ++b)
                inversions += perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)] ? 1 : 0;
        MultiPoly term = MultiPoly::constant(nv, inversions % 2 == 0 ? 1 : -1);
        for (int i = 0; i < size; i += 2)
            term *= m(static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]),
                      static_cast<std::size_t>(perm[static_cast<std::size_t>(i + 1)]));
        acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Integer norm = 1;
    for (int i = 1; i <= size / 2; ++i)
        norm *= 2 * i;
    return acc * Rational(Integer(1), norm);
}

/// Cofactor expansion along the first row; works over any commutative ring.
template <class T>
T laplace_determinant(const Matrix<T>& m, const T& zero, const T& one)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return one;
    T acc = zero;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == zero)
            continue;
        Matrix<T> minor(n - 1, n - 1, zero);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j)
                    minor(r - 1, cc++) = m(r, c);
        const T sub = laplace_determinant(minor, zero, one);
        if (j % 2 == 0)
            acc = acc + m(0, j) * sub;
        else
            acc = acc - m(0, j) * sub;
    }
    return acc;
}

/// Substitutes the block form [[0, -Y], [tY, 0]] into each polynomial in
/// the alt coordinates; images are polynomials in the n^2 entries of Y
/// (row-major).
inline std::vector<MultiPoly> restrict_to_block_form(int n, const std::vector<MultiPoly>& polys)
{
    const int ny = n * n;
    std::vector<MultiPoly> images;
    for (const auto& [i, j] : alt_coordinates(n)) {
        if (i <= n && j > n)
            images.push_back(MultiPoly::variable(ny, (i - 1) * n + (j - n)) * Rational(-1));
        else
            images.push_back(MultiPoly(ny));
    }
    std::vector<MultiPoly> out;
    for (const auto& p : polys)
        out.push_back(p.substitute(images));
    return out;
}

inline std::vector<MultiPoly> restrict_to_block_form(int n) { return restrict_to_block_form(n, defining_polys(n)); }

/// Coefficients of t^{n-1}, ..., t^0 in det(t 1_n - Y), Y generic.
inline std::vector<MultiPoly> charpoly_coefficients(int n)
{
    const int nv = n * n + 1; // t last
    const MultiPoly zero(nv);
    const MultiPoly t = MultiPoly::variable(nv, nv);
    Matrix<MultiPoly> a(static_cast<std::size_t>(n), static_cast<std::size_t>(n), zero);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                (i == j ? t : zero) - MultiPoly::variable(nv, (i - 1) * n + j);
    const MultiPoly det = laplace_determinant(a, zero, MultiPoly::constant(nv, 1));
    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(n + 1), MultiPoly(nv - 1));
    for (const auto& [e, c] : det.terms())
        coeffs[static_cast<std::size_t>(n - e.back())].add_term(Exponent(e.begin(), e.end() - 1), c);
    return {coeffs.begin() + 1, coeffs.end()};
}

/// Whether every P_i, with the lower-right block set to zero, is free of the
/// upper-left block variables.
inline bool lemma_pi_holds(int n)
{
    const auto coords = alt_coordinates(n);
    const int nx = alt_variable_count(n);
    std::vector<MultiPoly> images;
    std::vector<std::size_t> y_vars;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        const auto [i, j] = coords[k];
        if (i > n && j > n)
            images.push_back(MultiPoly(nx));
        else
            images.push_back(MultiPoly::variable(nx, static_cast<int>(k) + 1));
        if (i <= n && j <= n)
            y_vars.push_back(k);
    }
    for (const auto& p : defining_polys(n)) {
        const MultiPoly restricted = p.substitute(images);
        for (const auto& [e, c] : restricted.terms())
            for (auto k : y_vars)
                if (e[k] != 0)
                    return false;
    }
    return true;
}

inline SuiteResult verify_pfaffian(const VerifyOptions& opt = {})
{
    SuiteResult r("pfaffian");
    for (int size = 2; size <= 6; size += 2) {
        detail::progress(opt, "pfaffian: symbolic " + std::to_string(size) + "x" + std::to_string(size));
        const auto m = generic_alternating(size);
        const MultiPoly zero(m(0, 0).nvars());
        const MultiPoly rec = pfaffian(m, zero, MultiPoly::constant(zero.nvars(), 1));
        if (rec != pfaffian_permutation_sum(m))
            r.fail("recursive Pfaffian differs from the permutation sum at size " + std::to_string(size));
    }
    r.note("recursive = permutation sum for generic 2x2, 4x4, 6x6");

    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<Rational> a(6, 6, Rational(0));
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = i + 1; j < 6; ++j) {
                Rational q(num(rng), den(rng));
                q.canonicalize();
                a(i, j) = q;
                a(j, i) = -q;
            }
        }
        const Rational pf = pfaffian(a);
        if (pf * pf != a.determinant())
            r.fail("Pf^2 != det on random trial " + std::to_string(trial));
    }
    r.note("Pf^2 = det on 20 random rational 6x6 matrices");

    for (int n = 1; n <= 3; ++n)
        if (!lemma_pi_holds(n))
            r.fail("P_i depends on the upper-left block at n=" + std::to_string(n));
    r.note("P_i independent of Y on [[Y, Z], [-tZ, 0]] for n <= 3");

    for (int n = 1; n <= 3; ++n) {
        const auto restricted = restrict_to_block_form(n);
        const auto expected = charpoly_coefficients(n);
        for (int i = 0; i < n; ++i)
            if (restricted[static_cast<std::size_t>(i)] != expected[static_cast<std::size_t>(i)])
                r.fail("P_" + std::to_string(i + 1) + " on the block form is not the det(t - Y) coefficient, n=" +
                       std::to_string(n));
        // Raw t^{n-i} coefficients of Pf(tJ - X) carry the global sign Pf(J).
        const auto raw = pfaffian_t_coefficients(n);
        const auto raw_restricted =
            restrict_to_block_form(n, std::vector<MultiPoly>(raw.begin() + 1, raw.end()));
        const Rational sign(pfaffian_of_J(n));
        for (int i = 0; i < n; ++i)
            if (raw_restricted[static_cast<std::size_t>(i)] != expected[static_cast<std::size_t>(i)] * sign)
                r.fail("raw Pfaffian coefficient " + std::to_string(i + 1) + " differs from det(t - Y) by more than "
                       "the sign (-1)^(n(n+1)/2), n=" + std::to_string(n));
    }
    r.note("P_i on [[0, -Y], [tY, 0]] = coefficient of t^(n-i) in det(t 1_n - Y), n <= 3; "
           "raw Pfaffian sign (-1)^(n(n+1)/2)");
    return r;
}

inline SuiteResult verify_roundtrip(int nmax = 4, const VerifyOptions& opt = {})
{
    SuiteResult r("roundtrip");
    for (int n = 1; n <= nmax; ++n) {
        detail::progress(opt, "roundtrip: n=" + std::to_string(n));
        const auto marked = enumerate_marked_partitions(n);
        for (const auto& mp : marked) {
            const RationalVector rep = representative(mp);
            if (!is_in_nilcone(rep)) {
                r.fail(to_string(mp) + ": representative not in the nilcone");
                continue;
            }
            const MarkedPartition got = k_invariant(rep);
            if (got != mp)
                r.fail(to_string(mp) + ": representative has K-invariant " + to_string(got));
            const RationalVector base = base_set_point(mp, 7);
            if (!is_in_nilcone(base) || k_invariant(base) != mp)
                r.fail(to_string(mp) + ": base-set point lies in another orbit");
        }
        r.note("n=" + std::to_string(n) + ": " + std::to_string(marked.size()) + " representatives");
    }
    return r;
}

inline SuiteResult verify_charp(const VerifyOptions& opt = {})
{
    SuiteResult r("charp");
    std::vector<std::pair<int, int>> cases{{1, 2}, {1, 4}, {2, 2}};
    if (opt.long_run)
        cases.emplace_back(2, 4);
    for (const auto& [n, q] : cases) {
        detail::progress(opt, "charp: n=" + std::to_string(n) + " q=" + std::to_string(q));
        const TransportReport rep = ml_transport_report(n, q);
        const std::uint64_t exotic = count_exotic_points(n, q);
        const std::uint64_t nilpotent = count_nilpotent_points(n, q);
        const std::string tag = "(n,q)=(" + std::to_string(n) + "," + std::to_string(q) + ")";
        if (!rep.ml_bijective)
            r.fail(tag + ": ml is not a bijection");
        if (!rep.restricts)
            r.fail(tag + ": ml does not carry P_i-zeros onto nilpotents");
        if (exotic != nilpotent)
            r.fail(tag + ": counts differ, exotic " + std::to_string(exotic) + " vs nilpotent " +
                   std::to_string(nilpotent));
        r.note(tag + ": |N(F_q)| = " + std::to_string(exotic) + " = " + std::to_string(nilpotent) +
               ", ml bijective on " + std::to_string(rep.points) + " points");
    }
    return r;
}

// ---------------------------------------------------------------------------
// Convention reconciliation between the two D-polynomial forms.

enum class DConvention { identity, transpose_both };

inline std::string to_string(DConvention c) { return c == DConvention::identity ? "identity" : "transpose-both"; }

inline BiPartition apply_convention(DConvention c, const BiPartition& bp)
{
    if (c == DConvention::identity)
        return bp;
    return {transpose(bp.mu), transpose(bp.nu)};
}

/// First bi-partition of n where the convention fails, if any.
inline std::optional<BiPartition> convention_counterexample(DConvention c, int n)
{
    for (const auto& bp : enumerate_bipartitions(n)) {
        const BiPartition s = apply_convention(c, bp);
        if (d_poly_intro(s.mu, s.nu) != d_poly(bp))
            return bp;
    }
    return std::nullopt;
}

/* Determines sigma by brute force on n <= 3, then asserts it for n <= nmax.
 * Fails when no single sigma survives.
 */
inline SuiteResult verify_dconvention(int nmax = 6, const VerifyOptions& opt = {})
{
    SuiteResult r("dconvention");
    std::vector<DConvention> survivors;
    for (DConvention c : {DConvention::identity, DConvention::transpose_both}) {
        int first_bad = -1;
        for (int n = 0; n <= nmax && first_bad < 0; ++n) {
            detail::progress(opt, "dconvention: " + to_string(c) + " n=" + std::to_string(n));
            if (auto bad = convention_counterexample(c, n)) {
                first_bad = n;
                const BiPartition s = apply_convention(c, *bad);
                r.note(to_string(c) + ": fails at n=" + std::to_string(n) + ", " + to_string(*bad) +
                       ": intro form " + to_string(d_poly_intro(s.mu, s.nu)) + ", d-sequence form " +
                       to_string(d_poly(*bad)));
            }
        }
        if (first_bad < 0) {
            survivors.push_back(c);
            r.note(to_string(c) + ": holds for n <= " + std::to_string(nmax));
        }
    }
    if (survivors.size() != 1)
        r.fail(survivors.empty() ? "no transpose convention reconciles the two forms for n <= " + std::to_string(nmax)
                                 : "both conventions hold; sigma is not determined");
    return r;
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"bijection", "wdlambda",  "degree", "table-n2",   "macdonald",
                                                "pfaffian",  "roundtrip", "charp",  "dconvention"};
    return names;
}

/// Runs one suite by name; "all" runs every suite. Throws
/// std::invalid_argument on an unknown name.
inline std::vector<SuiteResult> run_suite(const std::string& name, const VerifyOptions& opt = {})
{
    if (name == "all") {
        std::vector<SuiteResult> out;
        for (const auto& s : suite_names()) {
            auto part = run_suite(s, opt);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (name == "bijection")
        return {verify_bijection(10, opt)};
    if (name == "wdlambda")
        return {verify_wdlambda(5, opt)};
    if (name == "degree")
        return {verify_degree(8, opt)};
    if (name == "table-n2")
        return {verify_table_n2()};
    if (name == "macdonald")
        return {verify_macdonald(3, opt)};
    if (name == "pfaffian")
        return {verify_pfaffian(opt)};
    if (name == "roundtrip")
        return {verify_roundtrip(4, opt)};
    if (name == "charp")
        return {verify_charp(opt)};
    if (name == "dconvention")
        return {verify_dconvention(6, opt)};
    throw std::invalid_argument("unknown suite \"" + name + "\"");
}

} // namespace exotic

#endif
