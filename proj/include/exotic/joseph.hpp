#ifndef EXOTIC_JOSEPH_HPP
#define EXOTIC_JOSEPH_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exotic/laurent.hpp"
#include "exotic/matrix.hpp"
#include "exotic/multipoly.hpp"
#include "exotic/partitions.hpp"
#include "exotic/weight.hpp"
#include "exotic/weyl.hpp"

namespace exotic {

/* A T-stable subvariety of the affine space with weights `ambient`: the
 * coordinate subspace on `span`, cut by a regular sequence of T-homogeneous
 * equations of the listed degrees.
 */
struct SubvarietyPresentation {
    WeightSet ambient;
    WeightSet span;
    std::vector<Weight> equations;

    SubvarietyPresentation() = default;
    SubvarietyPresentation(WeightSet amb, WeightSet sp, std::vector<Weight> eqs = {})
        : ambient(std::move(amb)), span(std::move(sp)), equations(std::move(eqs))
    {
        if (!span.is_subset_of(ambient))
            throw std::invalid_argument("presentation: span is not contained in the ambient weights");
        if (equations.size() > span.size())
            throw std::invalid_argument("presentation: more equations than span coordinates");
        const int n = ambient.empty() ? -1 : ambient.items().front().rank();
        for (const auto& e : equations)
            if (n >= 0 && e.rank() != n)
                throw std::invalid_argument("presentation: equation degree has the wrong rank");
    }

    int rank() const
    {
        if (ambient.empty())
            throw std::invalid_argument("presentation: empty ambient");
        return ambient.items().front().rank();
    }
};

/// Psi(V+) as ambient: the exotic setting.
inline SubvarietyPresentation exotic_presentation(int n, std::vector<Weight> span, std::vector<Weight> eqs = {})
{
    return {weight_set_V_plus(n), WeightSet(std::move(span)), std::move(eqs)};
}

/// R+ as ambient: the ordinary nilradical.
inline SubvarietyPresentation ordinary_presentation(int n, std::vector<Weight> span, std::vector<Weight> eqs = {})
{
    return {weight_set_n_plus(n), WeightSet(std::move(span)), std::move(eqs)};
}

/// prod_{ambient \ span} (1 - e^{-w}) * prod_{equations} (1 - e^{-d}).
inline LaurentChar k_polynomial(const SubvarietyPresentation& p)
{
    const int n = p.rank();
    LaurentChar q = LaurentChar::constant(n, 1);
    for (const auto& w : p.span.complement_in(p.ambient))
        q = q * LaurentChar::one_minus_exp_neg(w);
    for (const auto& d : p.equations)
        q = q * LaurentChar::one_minus_exp_neg(d);
    return q;
}

/// lt of the K-polynomial.
inline MultiPoly joseph_poly(const SubvarietyPresentation& p) { return lt(k_polynomial(p)); }

namespace detail {
/// prod_{lo < k < l <= hi} (e_k^2 - e_l^2)
inline MultiPoly square_vandermonde(int n, int lo, int hi)
{
    MultiPoly out = MultiPoly::constant(n, 1);
    for (int k = lo + 1; k <= hi; ++k)
        for (int l = k + 1; l <= hi; ++l)
            out *= MultiPoly::variable(n, k).pow(2) - MultiPoly::variable(n, l).pow(2);
    return out;
}

inline MultiPoly epsilon_product(int n, int lo, int hi)
{
    MultiPoly out = MultiPoly::constant(n, 1);
    for (int k = lo + 1; k <= hi; ++k)
        out *= MultiPoly::variable(n, k);
    return out;
}
} // namespace detail

/* D(mu, nu) = prod_{i < mu_1} D0_i * prod_{mu_1 <= i < mu_1 + nu_1} D+_i over
 * the d-sequence of the marked partition attached to (mu, nu), where
 * D0_i = prod_{d_i < k < l <= d_{i+1}} (e_k^2 - e_l^2) and
 * D+_i = D0_i * prod_{d_i < k <= d_{i+1}} e_k.
 */
inline MultiPoly d_poly(const BiPartition& bp)
{
    const int n = bp.weight();
    const auto d = d_sequence(from_bipartition(bp));
    const int mu1 = bp.mu.part(1);
    const int nu1 = bp.nu.part(1);
    MultiPoly out = MultiPoly::constant(n, 1);
    for (int i = 0; i < mu1 + nu1; ++i) {
        const int lo = d[static_cast<std::size_t>(i)];
        const int hi = d[static_cast<std::size_t>(i + 1)];
        out *= detail::square_vandermonde(n, lo, hi);
        if (i >= mu1)
            out *= detail::epsilon_product(n, lo, hi);
    }
    return out;
}

/* The per-part form: prod_{i > |mu|} e_i times, for each part, the square
 * Vandermonde on the block mu^<_i < k <= mu^<=_i, and on the block of
 * nu_i shifted by |mu|.
 */
inline MultiPoly d_poly_intro(const Partition& mu, const Partition& nu)
{
    const int n = mu.weight() + nu.weight();
    const int shift = mu.weight();
    MultiPoly out = detail::epsilon_product(n, shift, n);
    for (int i = 1; i <= mu.length(); ++i)
        out *= detail::square_vandermonde(n, mu.sum_before(i), mu.sum_through(i));
    for (int i = 1; i <= nu.length(); ++i)
        out *= detail::square_vandermonde(n, shift + nu.sum_before(i), shift + nu.sum_through(i));
    return out;
}

struct SpanResult {
    std::size_t dimension = 0;
    std::vector<MultiPoly> basis; ///< reduced echelon form, leading terms distinct
};

/// Dimension and echelon basis of the span of {w . seed : w in W(C_n)}.
inline SpanResult macdonald_span(const MultiPoly& seed, int n)
{
    if (seed.nvars() != n)
        throw std::invalid_argument("macdonald_span: seed has the wrong number of variables");
    if (n > 5)
        throw std::invalid_argument("macdonald_span: rank too large (n <= 5)");
    if (seed.is_zero())
        return {};

    // Echelon rows keyed by their leading monomial in graded-lex order.
    std::map<Exponent, MultiPoly, GradedLexDesc> rows;
    auto reduce = [&rows](MultiPoly f) {
        while (!f.is_zero()) {
            bool changed = false;
            for (const auto& [e, c] : f.terms()) {
                auto it = rows.find(e);
                if (it == rows.end())
                    continue;
                f -= it->second * c;
                changed = true;
                break;
            }
            if (!changed)
                break;
        }
        return f;
    };
    for (const auto& w : all_signed_permutations(n)) {
        MultiPoly f = reduce(act_on_poly(w, seed));
        if (f.is_zero())
            continue;
        const Exponent lead = f.terms().begin()->first;
        f = f * (Rational(1) / f.leading_coefficient());
        // Keep rows fully reduced against the new pivot.
        for (auto& [e, row] : rows) {
            const Rational c = row.coefficient(lead);
            if (c != 0)
                row -= f * c;
        }
        rows.emplace(lead, std::move(f));
    }
    SpanResult out;
    out.dimension = rows.size();
    for (auto& [e, row] : rows)
        out.basis.push_back(std::move(row));
    return out;
}

namespace detail {
/// Standard Young tableaux count by the hook length formula.
inline Integer standard_tableaux(const Partition& p)
{
    const Partition t = transpose(p);
    Integer num = 1;
    for (int k = 2; k <= p.weight(); ++k)
        num *= k;
    Integer hooks = 1;
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            hooks *= (p.part(i) - j) + (t.part(j) - i) + 1;
    return num / hooks;
}
} // namespace detail

/// binomial(n, |mu|) f^mu f^nu.
inline Integer irrep_dim(const BiPartition& bp)
{
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(bp.weight()),
                 static_cast<unsigned long>(bp.mu.weight()));
    return binom * detail::standard_tableaux(bp.mu) * detail::standard_tableaux(bp.nu);
}

enum class WlStructure { invariant, anti_invariant, neither };

inline std::string to_string(WlStructure s)
{
    switch (s) {
    case WlStructure::invariant:
        return "invariant";
    case WlStructure::anti_invariant:
        return "anti_invariant";
    case WlStructure::neither:
        return "neither";
    }
    return "neither";
}

/// invariant: every exponent even; anti_invariant: every exponent odd
/// (f in e1...en * C[e^2]). Zero counts as invariant.
inline WlStructure wl_structure(const MultiPoly& f, int n)
{
    if (f.nvars() != n)
        throw std::invalid_argument("wl_structure: polynomial has the wrong number of variables");
    bool all_even = true;
    bool all_odd = true;
    for (const auto& [e, c] : f.terms()) {
        for (int x : e) {
            all_even = all_even && x % 2 == 0;
            all_odd = all_odd && x % 2 == 1;
        }
    }
    if (all_even)
        return WlStructure::invariant;
    if (all_odd)
        return WlStructure::anti_invariant;
    return WlStructure::neither;
}

} // namespace exotic

#endif
