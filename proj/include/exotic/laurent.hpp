#ifndef EXOTIC_LAURENT_HPP
#define EXOTIC_LAURENT_HPP

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "exotic/errors.hpp"
#include "exotic/multipoly.hpp"
#include "exotic/weight.hpp"

namespace exotic {

/* Finite sums sum_mu c_mu e^mu in the representation ring of the rank-n
 * torus, with integer coefficients. Zero coefficients are never stored.
 */
class LaurentChar {
public:
    using TermMap = std::map<Weight, Integer, WeightDisplayOrder>;

    explicit LaurentChar(int rank) : rank_(rank) {}

    static LaurentChar constant(int rank, const Integer& c)
    {
        LaurentChar ch(rank);
        ch.add_term(Weight::zero(rank), c);
        return ch;
    }

    static LaurentChar exp(const Weight& mu)
    {
        LaurentChar ch(mu.rank());
        ch.add_term(mu, 1);
        return ch;
    }

    /// 1 - e^{-lambda}
    static LaurentChar one_minus_exp_neg(const Weight& lambda)
    {
        return constant(lambda.rank(), 1) - exp(-lambda);
    }

    int rank() const { return rank_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Weight& mu, const Integer& c)
    {
        if (mu.rank() != rank_)
            throw std::invalid_argument("LaurentChar: weight rank mismatch");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(mu, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    LaurentChar& operator+=(const LaurentChar& o)
    {
        check(o);
        for (const auto& [mu, c] : o.terms_)
            add_term(mu, c);
        return *this;
    }

    LaurentChar& operator-=(const LaurentChar& o)
    {
        check(o);
        for (const auto& [mu, c] : o.terms_)
            add_term(mu, -c);
        return *this;
    }

    friend LaurentChar operator+(LaurentChar a, const LaurentChar& b) { return a += b; }
    friend LaurentChar operator-(LaurentChar a, const LaurentChar& b) { return a -= b; }

    friend LaurentChar operator*(const LaurentChar& a, const LaurentChar& b)
    {
        a.check(b);
        LaurentChar out(a.rank_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(ma + mb, ca * cb);
        return out;
    }

    friend bool operator==(const LaurentChar& a, const LaurentChar& b)
    {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

private:
    void check(const LaurentChar& o) const
    {
        if (o.rank_ != rank_)
            throw std::invalid_argument("LaurentChar: rank mismatch");
    }

    int rank_;
    TermMap terms_;
};

/// "1 - e^(-e1)"
inline std::string to_string(const LaurentChar& ch)
{
    if (ch.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : ch.terms()) {
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        if (mu.is_zero()) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << '*';
        os << "e^(" << to_string(mu) << ')';
    }
    return os.str();
}

namespace detail {
inline Rational ratio(const Integer& num, const Integer& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}
} // namespace detail

/// Degree-k pieces, k = 0..max_degree, of the expansion
/// e^mu -> sum_k (mu as a linear form)^k / k!.
inline std::vector<MultiPoly> fx_graded(const LaurentChar& ch, int max_degree)
{
    const int n = ch.rank();
    std::vector<MultiPoly> pieces(static_cast<std::size_t>(max_degree + 1), MultiPoly(n));
    for (const auto& [mu, c] : ch.terms()) {
        const MultiPoly form = mu.as_linear_form();
        MultiPoly power = MultiPoly::constant(n, 1);
        Integer factorial = 1;
        for (int k = 0; k <= max_degree; ++k) {
            if (k > 0) {
                power *= form;
                factorial *= k;
            }
            pieces[static_cast<std::size_t>(k)] += power * detail::ratio(c, factorial);
        }
    }
    return pieces;
}

/* Lowest non-zero homogeneous piece of the expansion. With N distinct
 * weights in the support, the pieces of degree < N cannot all vanish
 * (Vandermonde along a direction separating the weights), so the scan
 * stops there.
 */
inline MultiPoly lt(const LaurentChar& ch)
{
    if (ch.is_zero())
        throw std::domain_error("lt: zero character");
    const int bound = static_cast<int>(ch.terms().size());
    const int n = ch.rank();
    // Powers of each weight's linear form are built incrementally, so
    // degree k costs one multiplication per weight.
    std::vector<MultiPoly> forms;
    std::vector<MultiPoly> powers;
    for (const auto& [mu, c] : ch.terms()) {
        forms.push_back(mu.as_linear_form());
        powers.push_back(MultiPoly::constant(n, 1));
    }
    Integer factorial = 1;
    for (int k = 0; k < bound; ++k) {
        if (k > 0)
            factorial *= k;
        MultiPoly piece(n);
        std::size_t idx = 0;
        for (const auto& [mu, c] : ch.terms()) {
            if (k > 0)
                powers[idx] *= forms[idx];
            piece += powers[idx] * detail::ratio(c, factorial);
            ++idx;
        }
        if (!piece.is_zero())
            return piece;
    }
    throw consistency_error("lt: no non-zero piece below the support bound");
}

inline std::ostream& operator<<(std::ostream& os, const LaurentChar& ch) { return os << to_string(ch); }

} // namespace exotic

#endif
