#ifndef EXOTIC_MULTIPOLY_HPP
#define EXOTIC_MULTIPOLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exotic {

using Rational = mpq_class;
using Integer = mpz_class;
using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Descending graded-lex: higher total degree first, then lexicographically
/// larger exponent first (e1 > e2 > ... > en).
struct GradedLexDesc {
    bool operator()(const Exponent& a, const Exponent& b) const
    {
        const int da = total_degree(a);
        const int db = total_degree(b);
        if (da != db)
            return da > db;
        return a > b;
    }
};

/* Sparse polynomial in nvars variables e1..en with rational coefficients.
 * Zero coefficients are never stored.
 */
class MultiPoly {
public:
    using TermMap = std::map<Exponent, Rational, GradedLexDesc>;

    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars)
    {
        if (nvars < 0)
            throw std::invalid_argument("MultiPoly: negative variable count");
    }

    static MultiPoly constant(int nvars, const Rational& c)
    {
        MultiPoly p(nvars);
        p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }

    /// The variable e_i, 1-based.
    static MultiPoly variable(int nvars, int i)
    {
        if (i < 1 || i > nvars)
            throw std::out_of_range("MultiPoly::variable: index out of range");
        MultiPoly p(nvars);
        Exponent e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        p.add_term(std::move(e), Rational(1));
        return p;
    }

    /// The linear form sum_i coeffs[i] * e_{i+1}.
    static MultiPoly linear(const std::vector<int>& coeffs)
    {
        const int n = static_cast<int>(coeffs.size());
        MultiPoly p(n);
        for (int i = 0; i < n; ++i)
            if (coeffs[static_cast<std::size_t>(i)] != 0)
                p += variable(n, i + 1) * Rational(coeffs[static_cast<std::size_t>(i)]);
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(Exponent e, const Rational& c)
    {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("MultiPoly: exponent length mismatch");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Rational coefficient(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Total degree of the leading term; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

    bool is_homogeneous() const
    {
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != degree())
                return false;
        return true;
    }

    MultiPoly homogeneous_part(int k) const
    {
        MultiPoly out(nvars_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == k)
                out.terms_.emplace(e, c);
        return out;
    }

    /// Leading coefficient in graded-lex order.
    Rational leading_coefficient() const
    {
        if (terms_.empty())
            throw std::domain_error("leading coefficient of the zero polynomial");
        return terms_.begin()->second;
    }

    MultiPoly& operator+=(const MultiPoly& o)
    {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o)
    {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    MultiPoly operator-() const
    {
        MultiPoly out(nvars_);
        for (const auto& [e, c] : terms_)
            out.terms_.emplace(e, -c);
        return out;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
    {
        a.check_compatible(b);
        MultiPoly out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e(ea);
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] += eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        }
        return out;
    }

    friend MultiPoly operator*(MultiPoly a, const Rational& s)
    {
        if (s == 0)
            return MultiPoly(a.nvars_);
        for (auto& [e, c] : a.terms_)
            c *= s;
        return a;
    }

    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return std::move(a) * s; }

    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(int k) const
    {
        if (k < 0)
            throw std::invalid_argument("MultiPoly::pow: negative exponent");
        MultiPoly result = constant(nvars_, 1);
        MultiPoly base = *this;
        while (k > 0) {
            if (k & 1)
                result *= base;
            k >>= 1;
            if (k > 0)
                base *= base;
        }
        return result;
    }

    /// Evaluates at a point over any ring F constructible from a Rational
    /// coefficient via `embed`.
    template <class F, class Embed>
    F evaluate(const std::vector<F>& point, Embed embed, F zero) const
    {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("MultiPoly::evaluate: point dimension mismatch");
        F acc = zero;
        for (const auto& [e, c] : terms_) {
            F term = embed(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k)
                    term = term * point[i];
            acc = acc + term;
        }
        return acc;
    }

    Rational evaluate(const std::vector<Rational>& point) const
    {
        return evaluate<Rational>(point, [](const Rational& c) { return c; }, Rational(0));
    }

    /// Replaces e_i by images[i-1]; all images must share one variable count.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const
    {
        if (static_cast<int>(images.size()) != nvars_)
            throw std::invalid_argument("MultiPoly::substitute: arity mismatch");
        const int target = images.empty() ? 0 : images.front().nvars();
        MultiPoly out(target);
        // Powers are cached per variable since monomials repeat exponents.
        std::vector<std::vector<MultiPoly>> powers(images.size());
        for (const auto& [e, c] : terms_) {
            MultiPoly term = constant(target, c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                auto& cache = powers[i];
                while (static_cast<int>(cache.size()) <= e[i])
                    cache.push_back(cache.empty() ? constant(target, 1) : cache.back() * images[i]);
                term *= cache[static_cast<std::size_t>(e[i])];
            }
            out += term;
        }
        return out;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const MultiPoly& o) const
    {
        if (o.nvars_ != nvars_)
            throw std::invalid_argument("MultiPoly: variable count mismatch");
    }

    int nvars_ = 0;
    TermMap terms_;
};

/// If a = s*b for a rational s, returns s; the zero polynomial is only a
/// multiple of itself.
inline std::optional<Rational> scalar_ratio(const MultiPoly& a, const MultiPoly& b)
{
    if (a.nvars() != b.nvars())
        return std::nullopt;
    if (b.is_zero())
        return a.is_zero() ? std::optional<Rational>(Rational(1)) : std::nullopt;
    if (a.term_count() != b.term_count())
        return std::nullopt;
    const Rational s = a.leading_coefficient() / b.leading_coefficient();
    if (a == b * s)
        return s;
    return std::nullopt;
}

inline bool equal_up_to_positive_scalar(const MultiPoly& a, const MultiPoly& b)
{
    const auto s = scalar_ratio(a, b);
    return s && *s > 0;
}

inline std::string rational_to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

/// "e1^2 - e2^2", "4*e1^3*e2", "1/2*e1 + 3"; "0" for the zero polynomial.
inline std::string to_string(const MultiPoly& p, const std::string& var = "e")
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            mono << (any ? "*" : "") << var << (i + 1);
            if (e[i] > 1)
                mono << '^' << e[i];
            any = true;
        }
        if (!any)
            os << rational_to_string(mag);
        else if (mag == 1)
            os << mono.str();
        else
            os << rational_to_string(mag) << '*' << mono.str();
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }

} // namespace exotic

#endif
