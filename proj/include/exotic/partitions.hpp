#ifndef EXOTIC_PARTITIONS_HPP
#define EXOTIC_PARTITIONS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exotic/errors.hpp"

namespace exotic {

/* Integer partitions with 1-based part access. Parts beyond the stored
 * length read as zero, so formulas that quantify over all i need no
 * special casing.
 */
class Partition {
public:
    Partition() = default;

    /// Trailing zeros are stripped; throws unless the parts are weakly
    /// decreasing and non-negative.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// lambda_i, 1-based; zero outside [1, length].
    int part(int i) const
    {
        if (i < 1 || i > length())
            return 0;
        return parts_[static_cast<std::size_t>(i - 1)];
    }

    /// |lambda|
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // Partial sums: lambda^<_i, lambda^<=_i, lambda^>_i, lambda^>=_i.
    int sum_before(int i) const { return range_sum(1, i - 1); }
    int sum_through(int i) const { return range_sum(1, i); }
    int sum_after(int i) const { return range_sum(i + 1, length()); }
    int sum_from(int i) const { return range_sum(i, length()); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    int range_sum(int lo, int hi) const
    {
        int s = 0;
        for (int j = std::max(lo, 1); j <= std::min(hi, length()); ++j)
            s += part(j);
        return s;
    }

    std::vector<int> parts_;
};

/// Dual partition: result_i = #{ j : p_j >= i }.
inline Partition transpose(const Partition& p)
{
    std::vector<int> cols(static_cast<std::size_t>(p.part(1)), 0);
    for (int i = 1; i <= p.part(1); ++i)
        for (int j = 1; j <= p.length(); ++j)
            if (p.part(j) >= i)
                ++cols[static_cast<std::size_t>(i - 1)];
    return Partition(std::move(cols));
}

/// "(3,1)", "()" for the empty partition.
inline std::string to_string(const Partition& p)
{
    std::ostringstream os;
    os << '(';
    for (int i = 1; i <= p.length(); ++i)
        os << (i > 1 ? "," : "") << p.part(i);
    os << ')';
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}
} // namespace detail

/// All partitions of n in descending lexicographic order: (n), (n-1,1), ...
inline std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw std::invalid_argument("partitions_of: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

// ---------------------------------------------------------------------------

struct BiPartition {
    Partition mu;
    Partition nu;

    int weight() const { return mu.weight() + nu.weight(); }

    friend bool operator==(const BiPartition&, const BiPartition&) = default;
};

inline std::string to_string(const BiPartition& bp)
{
    return "(" + to_string(bp.mu) + "," + to_string(bp.nu) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const BiPartition& bp) { return os << to_string(bp); }

/// Canonical order: |mu| descending, then mu and nu descending-lex.
inline bool canonical_less(const BiPartition& a, const BiPartition& b)
{
    if (a.mu.weight() != b.mu.weight())
        return a.mu.weight() > b.mu.weight();
    if (a.mu != b.mu)
        return a.mu > b.mu;
    return a.nu > b.nu;
}

inline std::vector<BiPartition> enumerate_bipartitions(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_bipartitions: n must be non-negative");
    std::vector<BiPartition> out;
    for (int k = n; k >= 0; --k)
        for (const auto& mu : partitions_of(k))
            for (const auto& nu : partitions_of(n - k))
                out.push_back({mu, nu});
    return out;
}

// ---------------------------------------------------------------------------

/* A marked partition (lambda, a). The marking is stored zero-padded to the
 * length of lambda; a_k for k beyond that reads as zero.
 */
class MarkedPartition {
public:
    MarkedPartition() = default;

    /// Throws std::invalid_argument unless all three marking conditions hold.
    MarkedPartition(Partition lambda, std::vector<int> marks)
        : lambda_(std::move(lambda)), marks_(std::move(marks))
    {
        while (static_cast<int>(marks_.size()) > lambda_.length() && marks_.back() == 0)
            marks_.pop_back();
        if (static_cast<int>(marks_.size()) > lambda_.length())
            throw std::invalid_argument("marking is longer than the partition");
        marks_.resize(static_cast<std::size_t>(lambda_.length()), 0);
        if (!marks_bounded())
            throw std::invalid_argument("marking violates 0 <= a_k <= lambda_k");
        if (!marks_vanish_on_repeats())
            throw std::invalid_argument("marking violates a_k = 0 when lambda_{k+1} = lambda_k");
        if (!marks_separated())
            throw std::invalid_argument(
                "marking violates lambda_p - lambda_q > a_p - a_q > 0 for marked p < q");
    }

    const Partition& lambda() const { return lambda_; }
    int n() const { return lambda_.weight(); }

    /// a_k, 1-based, zero beyond the stored length.
    int mark(int k) const
    {
        if (k < 1 || k > static_cast<int>(marks_.size()))
            return 0;
        return marks_[static_cast<std::size_t>(k - 1)];
    }

    /// Zero-padded to lambda's length.
    std::span<const int> marks() const { return marks_; }

    /// Marks with trailing zeros removed.
    std::vector<int> stripped_marks() const
    {
        std::vector<int> a = marks_;
        while (!a.empty() && a.back() == 0)
            a.pop_back();
        return a;
    }

    bool marks_bounded() const
    {
        for (int k = 1; k <= lambda_.length(); ++k)
            if (mark(k) < 0 || mark(k) > lambda_.part(k))
                return false;
        return true;
    }

    bool marks_vanish_on_repeats() const
    {
        for (int k = 1; k <= lambda_.length(); ++k)
            if (lambda_.part(k + 1) == lambda_.part(k) && mark(k) != 0)
                return false;
        return true;
    }

    bool marks_separated() const
    {
        for (int p = 1; p <= lambda_.length(); ++p) {
            for (int q = p + 1; q <= lambda_.length(); ++q) {
                if (mark(p) == 0 || mark(q) == 0)
                    continue;
                const int da = mark(p) - mark(q);
                if (!(lambda_.part(p) - lambda_.part(q) > da && da > 0))
                    return false;
            }
        }
        return true;
    }

    friend bool operator==(const MarkedPartition&, const MarkedPartition&) = default;

private:
    Partition lambda_;
    std::vector<int> marks_;
};

inline std::string to_string(const MarkedPartition& mp)
{
    std::ostringstream os;
    os << '(' << to_string(mp.lambda()) << ",(";
    for (int k = 1; k <= mp.lambda().length(); ++k)
        os << (k > 1 ? "," : "") << mp.mark(k);
    os << "))";
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const MarkedPartition& mp) { return os << to_string(mp); }

namespace detail {
// Extends marks[0..k) to full markings of lambda, pruning on the pairwise
// separation condition as soon as a new nonzero mark is placed.
inline void markings_rec(const Partition& lambda, std::vector<int>& marks, int k,
                         std::vector<std::vector<int>>& out)
{
    const int len = lambda.length();
    if (k == len) {
        out.push_back(marks);
        return;
    }
    const int idx = k + 1;
    const bool forced_zero = lambda.part(idx + 1) == lambda.part(idx);
    const int top = forced_zero ? 0 : lambda.part(idx);
    for (int a = top; a >= 0; --a) {
        bool ok = true;
        if (a != 0) {
            for (int p = 1; p < idx && ok; ++p) {
                const int ap = marks[static_cast<std::size_t>(p - 1)];
                if (ap == 0)
                    continue;
                const int da = ap - a;
                ok = lambda.part(p) - lambda.part(idx) > da && da > 0;
            }
        }
        if (!ok)
            continue;
        marks[static_cast<std::size_t>(k)] = a;
        markings_rec(lambda, marks, k + 1, out);
    }
    marks[static_cast<std::size_t>(k)] = 0;
}
} // namespace detail

/// All valid markings of a fixed lambda, descending-lex in a.
inline std::vector<MarkedPartition> markings_of(const Partition& lambda)
{
    std::vector<std::vector<int>> raw;
    std::vector<int> marks(static_cast<std::size_t>(lambda.length()), 0);
    detail::markings_rec(lambda, marks, 0, raw);
    std::vector<MarkedPartition> out;
    out.reserve(raw.size());
    for (auto& a : raw)
        out.emplace_back(lambda, std::move(a));
    return out;
}

/// Every marked partition of n: lambda descending-lex, then a descending-lex.
inline std::vector<MarkedPartition> enumerate_marked_partitions(int n)
{
    std::vector<MarkedPartition> out;
    for (const auto& lambda : partitions_of(n)) {
        auto ms = markings_of(lambda);
        out.insert(out.end(), ms.begin(), ms.end());
    }
    return out;
}

/// The b-sequence (b_1, ..., b_len) of a marked partition.
inline std::vector<int> b_sequence(const MarkedPartition& mp)
{
    const Partition& lambda = mp.lambda();
    const int len = lambda.length();
    std::vector<int> b(static_cast<std::size_t>(len), 0);
    for (int i = 1; i <= len; ++i) {
        if (mp.mark(i) != 0) {
            b[static_cast<std::size_t>(i - 1)] = mp.mark(i);
            continue;
        }
        // The candidate set always contains a_i = 0, so the max exists.
        int best = 0;
        for (int j = 1; j < i; ++j)
            best = std::max(best, mp.mark(j) + lambda.part(i) - lambda.part(j));
        for (int j = i; j <= len; ++j)
            best = std::max(best, mp.mark(j));
        b[static_cast<std::size_t>(i - 1)] = best;
    }
    return b;
}

namespace detail {
inline Partition checked_partition(std::vector<int> v, const char* which, const MarkedPartition& mp)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0 || (i + 1 < v.size() && v[i] < v[i + 1]))
            throw consistency_error(std::string(which) + " of " + to_string(mp) +
                                    " is not a partition");
    return Partition(std::move(v));
}
} // namespace detail

/// mu_i = b_i, nu_i = lambda_i - b_i.
inline BiPartition to_bipartition(const MarkedPartition& mp)
{
    const auto b = b_sequence(mp);
    std::vector<int> nu(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        nu[i] = mp.lambda().part(static_cast<int>(i) + 1) - b[i];
    return {detail::checked_partition(b, "mu", mp), detail::checked_partition(nu, "nu", mp)};
}

/* Inverse by search. Any preimage has lambda_i = mu_i + nu_i pointwise (that
 * is how nu is defined), so only the markings of that lambda are scanned.
 */
inline MarkedPartition from_bipartition(const BiPartition& bp)
{
    const int len = std::max(bp.mu.length(), bp.nu.length());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i)
        parts[static_cast<std::size_t>(i - 1)] = bp.mu.part(i) + bp.nu.part(i);
    const Partition lambda(std::move(parts));

    std::vector<MarkedPartition> hits;
    for (const auto& mp : markings_of(lambda))
        if (to_bipartition(mp) == bp)
            hits.push_back(mp);
    if (hits.empty())
        throw consistency_error("no preimage for " + to_string(bp));
    if (hits.size() > 1)
        throw consistency_error("multiple preimages for " + to_string(bp));
    return hits.front();
}

/// p(n), by the standard recurrence on the largest part (independent of
/// the enumerator above).
inline long long partition_count(int n)
{
    std::vector<long long> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m)
            p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - k)];
    return p[static_cast<std::size_t>(n)];
}

} // namespace exotic

#endif
