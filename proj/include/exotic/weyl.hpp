#ifndef EXOTIC_WEYL_HPP
#define EXOTIC_WEYL_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exotic/errors.hpp"
#include "exotic/multipoly.hpp"
#include "exotic/partitions.hpp"
#include "exotic/weight.hpp"

namespace exotic {

/* Element of the hyperoctahedral group W(C_n): e_i -> sign_i * e_{pi(i)}. */
class SignedPermutation {
public:
    struct Image {
        int target;
        int sign;
        friend bool operator==(const Image&, const Image&) = default;
        friend auto operator<=>(const Image&, const Image&) = default;
    };

    SignedPermutation() = default;

    /// Throws unless pi is a bijection of [1,n] and every sign is +-1.
    explicit SignedPermutation(std::vector<Image> image) : image_(std::move(image))
    {
        std::vector<bool> hit(image_.size() + 1, false);
        for (const auto& im : image_) {
            if (im.target < 1 || im.target > rank() || hit[static_cast<std::size_t>(im.target)])
                throw std::invalid_argument("SignedPermutation: targets are not a bijection");
            if (im.sign != 1 && im.sign != -1)
                throw std::invalid_argument("SignedPermutation: sign must be +1 or -1");
            hit[static_cast<std::size_t>(im.target)] = true;
        }
    }

    static SignedPermutation identity(int n)
    {
        std::vector<Image> im;
        for (int i = 1; i <= n; ++i)
            im.push_back({i, 1});
        return SignedPermutation(std::move(im));
    }

    /// The element acting as -1 on every e_i (longest element).
    static SignedPermutation negation(int n)
    {
        std::vector<Image> im;
        for (int i = 1; i <= n; ++i)
            im.push_back({i, -1});
        return SignedPermutation(std::move(im));
    }

    int rank() const { return static_cast<int>(image_.size()); }
    const std::vector<Image>& image() const { return image_; }
    const Image& operator()(int i) const { return image_.at(static_cast<std::size_t>(i - 1)); }

    /// (a * b)(e_i) = a(b(e_i)).
    friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b)
    {
        if (a.rank() != b.rank())
            throw std::invalid_argument("SignedPermutation: rank mismatch");
        std::vector<Image> im;
        im.reserve(b.image_.size());
        for (const auto& ib : b.image_) {
            const Image& ia = a(ib.target);
            im.push_back({ia.target, ia.sign * ib.sign});
        }
        return SignedPermutation(std::move(im));
    }

    SignedPermutation inverse() const
    {
        std::vector<Image> im(image_.size());
        for (int i = 1; i <= rank(); ++i) {
            const Image& x = (*this)(i);
            im[static_cast<std::size_t>(x.target - 1)] = {i, x.sign};
        }
        return SignedPermutation(std::move(im));
    }

    Weight act(const Weight& w) const
    {
        if (w.rank() != rank())
            throw std::invalid_argument("SignedPermutation::act: rank mismatch");
        Weight out = Weight::zero(rank());
        for (int i = 1; i <= rank(); ++i) {
            const Image& x = (*this)(i);
            out.coords[static_cast<std::size_t>(x.target - 1)] += x.sign * w[i];
        }
        return out;
    }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<Image> image_;
};

/// "[e1->e2, e2->-e1]"
inline std::string to_string(const SignedPermutation& w)
{
    std::ostringstream os;
    os << '[';
    for (int i = 1; i <= w.rank(); ++i)
        os << (i > 1 ? ", " : "") << 'e' << i << "->" << (w(i).sign < 0 ? "-" : "") << 'e' << w(i).target;
    os << ']';
    return os.str();
}

/// s_i swaps e_i, e_{i+1} for i < n; s_n negates e_n.
inline SignedPermutation simple_reflection(int i, int n)
{
    if (n < 1 || i < 1 || i > n)
        throw std::out_of_range("simple_reflection: index out of range");
    auto im = SignedPermutation::identity(n).image();
    if (i < n)
        std::swap(im[static_cast<std::size_t>(i - 1)], im[static_cast<std::size_t>(i)]);
    else
        im[static_cast<std::size_t>(n - 1)].sign = -1;
    return SignedPermutation(std::move(im));
}

/// Substitution e_i -> sign_i * e_{pi(i)}.
inline MultiPoly act_on_poly(const SignedPermutation& w, const MultiPoly& f)
{
    if (f.nvars() != w.rank())
        throw std::invalid_argument("act_on_poly: rank mismatch");
    std::vector<MultiPoly> images;
    images.reserve(static_cast<std::size_t>(w.rank()));
    for (int i = 1; i <= w.rank(); ++i)
        images.push_back(MultiPoly::variable(w.rank(), w(i).target) * Rational(w(i).sign));
    return f.substitute(images);
}

/// All 2^n n! elements, ordered by permutation (lexicographic) then sign mask.
inline std::vector<SignedPermutation> all_signed_permutations(int n)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<SignedPermutation> out;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<SignedPermutation::Image> im;
            for (int i = 0; i < n; ++i)
                im.push_back({perm[static_cast<std::size_t>(i)], (mask >> i) & 1u ? -1 : 1});
            out.emplace_back(std::move(im));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// ---------------------------------------------------------------------------

/// Sorted, duplicate-free set of weights of a fixed rank.
class WeightSet {
public:
    WeightSet() = default;
    explicit WeightSet(std::vector<Weight> ws) : items_(std::move(ws)) { normalize(); }

    const std::vector<Weight>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    bool contains(const Weight& w) const
    {
        return std::binary_search(items_.begin(), items_.end(), w, WeightDisplayOrder{});
    }

    void insert(const Weight& w)
    {
        items_.push_back(w);
        normalize();
    }

    bool is_subset_of(const WeightSet& o) const
    {
        return std::includes(o.items_.begin(), o.items_.end(), items_.begin(), items_.end(),
                             WeightDisplayOrder{});
    }

    friend WeightSet intersection(const WeightSet& a, const WeightSet& b)
    {
        WeightSet out;
        std::set_intersection(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                              std::back_inserter(out.items_), WeightDisplayOrder{});
        return out;
    }

    friend WeightSet set_union(const WeightSet& a, const WeightSet& b)
    {
        WeightSet out;
        std::set_union(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                       std::back_inserter(out.items_), WeightDisplayOrder{});
        return out;
    }

    /// ambient \ *this
    WeightSet complement_in(const WeightSet& ambient) const
    {
        WeightSet out;
        std::set_difference(ambient.items_.begin(), ambient.items_.end(), items_.begin(), items_.end(),
                            std::back_inserter(out.items_), WeightDisplayOrder{});
        return out;
    }

    friend bool operator==(const WeightSet&, const WeightSet&) = default;

private:
    void normalize()
    {
        std::sort(items_.begin(), items_.end(), WeightDisplayOrder{});
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    std::vector<Weight> items_;
};

inline std::string to_string(const WeightSet& s)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& w : s) {
        os << (first ? "" : ", ") << to_string(w);
        first = false;
    }
    os << '}';
    return os.str();
}

/// Weights of V+: e_i, e_i + e_j, e_i - e_j (i < j).
inline WeightSet weight_set_V_plus(int n)
{
    if (n < 1)
        throw std::invalid_argument("weight_set_V_plus: n must be positive");
    std::vector<Weight> ws;
    for (int i = 1; i <= n; ++i) {
        ws.push_back(Weight::epsilon(n, i));
        for (int j = i + 1; j <= n; ++j) {
            ws.push_back(Weight::epsilon(n, i) + Weight::epsilon(n, j));
            ws.push_back(Weight::epsilon(n, i) - Weight::epsilon(n, j));
        }
    }
    return WeightSet(std::move(ws));
}

/// Positive roots R+: e_i +- e_j (i < j), 2e_i.
inline WeightSet weight_set_n_plus(int n)
{
    if (n < 1)
        throw std::invalid_argument("weight_set_n_plus: n must be positive");
    std::vector<Weight> ws;
    for (int i = 1; i <= n; ++i) {
        ws.push_back(Weight::epsilon(n, i) * 2);
        for (int j = i + 1; j <= n; ++j) {
            ws.push_back(Weight::epsilon(n, i) + Weight::epsilon(n, j));
            ws.push_back(Weight::epsilon(n, i) - Weight::epsilon(n, j));
        }
    }
    return WeightSet(std::move(ws));
}

/// Inversion count: #{alpha in R+ : w(alpha) is negative}.
inline int length(const SignedPermutation& w)
{
    if (w.rank() == 0)
        return 0;
    int count = 0;
    for (const auto& alpha : weight_set_n_plus(w.rank()))
        if (!w.act(alpha).is_positive())
            ++count;
    return count;
}

// ---------------------------------------------------------------------------

/// The element w_lambda. Each index must fall into exactly one of the
/// three cases, with the resulting map a signed bijection.
inline SignedPermutation special_element(const MarkedPartition& mp)
{
    const int n = mp.n();
    const BiPartition bp = to_bipartition(mp);
    const Partition tmu = transpose(bp.mu);
    const Partition tnu = transpose(bp.nu);
    const int abs_mu = bp.mu.weight();
    const int abs_nu = bp.nu.weight();

    std::vector<SignedPermutation::Image> im;
    for (int i = 1; i <= n; ++i) {
        std::vector<SignedPermutation::Image> hits;
        for (int m = 1; m <= tmu.length(); ++m) {
            if (i == tmu.sum_from(m))
                hits.push_back({n - m + 1, 1});
            if (tmu.sum_after(m) < i && i < tmu.sum_from(m))
                hits.push_back({abs_nu + tmu.sum_before(m) + i - tmu.sum_after(m) - m + 1, -1});
        }
        for (int m = 1; m <= tnu.length(); ++m)
            if (abs_mu + tnu.sum_before(m) < i && i <= abs_mu + tnu.sum_through(m))
                hits.push_back({tnu.sum_after(m) + i - tnu.sum_before(m) - abs_mu, -1});
        if (hits.size() != 1)
            throw consistency_error("special element case analysis incomplete for " + to_string(mp) +
                                    " at index " + std::to_string(i));
        im.push_back(hits.front());
    }
    try {
        return SignedPermutation(std::move(im));
    } catch (const std::invalid_argument&) {
        throw consistency_error("special element of " + to_string(mp) + " is not bijective");
    }
}

/// d_0 = 0, d_k = (t mu)^>=_{mu_1 - k + 1} for k <= mu_1,
/// d_{mu_1 + k} = |mu| + (t nu)^<=_k for k <= nu_1.
inline std::vector<int> d_sequence(const MarkedPartition& mp)
{
    const BiPartition bp = to_bipartition(mp);
    const Partition tmu = transpose(bp.mu);
    const Partition tnu = transpose(bp.nu);
    const int mu1 = bp.mu.part(1);
    const int nu1 = bp.nu.part(1);
    std::vector<int> d{0};
    for (int k = 1; k <= mu1; ++k)
        d.push_back(tmu.sum_from(mu1 - k + 1));
    for (int k = 1; k <= nu1; ++k)
        d.push_back(bp.mu.weight() + tnu.sum_through(k));
    return d;
}

/// {w in Psi(V+) : w_lambda . w in Psi(V+)}.
inline WeightSet weight_set_V_lambda(const MarkedPartition& mp)
{
    const int n = mp.n();
    if (n == 0)
        return {};
    const WeightSet ambient = weight_set_V_plus(n);
    const SignedPermutation w = special_element(mp);
    std::vector<Weight> out;
    for (const auto& x : ambient)
        if (ambient.contains(w.act(x)))
            out.push_back(x);
    return WeightSet(std::move(out));
}

/// Closed-form membership in Psi(V^lambda) for a weight of Psi(V+).
inline bool wdlambda_predicate(const MarkedPartition& mp, const Weight& weight)
{
    const int n = mp.n();
    if (n == 0 || weight.rank() != n || !weight_set_V_plus(n).contains(weight))
        throw std::invalid_argument("wdlambda_predicate: weight " + to_string(weight) +
                                    " is not a weight of V+");
    const BiPartition bp = to_bipartition(mp);
    const Partition tmu = transpose(bp.mu);
    const Partition tnu = transpose(bp.nu);
    const int abs_mu = bp.mu.weight();

    std::set<int> tops;
    for (int m = 1; m <= tmu.length(); ++m)
        tops.insert(tmu.sum_from(m));

    std::vector<int> support;
    for (int k = 1; k <= n; ++k)
        if (weight[k] != 0)
            support.push_back(k);

    if (support.size() == 1)
        return tops.contains(support[0]);

    const int i = support[0];
    const int j = support[1];
    if (weight[j] > 0)
        return tops.contains(i) && tops.contains(j);

    // e_i - e_j with i < j: excluded iff one of conditions (a), (b), (c).
    for (int m = 1; m <= tmu.length(); ++m) {
        const int lo = tmu.sum_after(m);
        const int hi = tmu.sum_from(m);
        if (lo < i && i < hi && lo < j && j < hi)
            return false;
        if (j == hi && 1 <= i && i <= abs_mu) {
            bool later_top = false;
            for (int l = m + 1; l <= tmu.length(); ++l)
                later_top = later_top || i == tmu.sum_from(l);
            if (!later_top)
                return false;
        }
    }
    for (int m = 1; m <= tnu.length(); ++m) {
        const int lo = abs_mu + tnu.sum_before(m);
        const int hi = abs_mu + tnu.sum_through(m);
        if (lo < i && i <= hi && lo < j && j <= hi)
            return false;
    }
    return true;
}

struct V01Weights {
    WeightSet v1; ///< e_i, i <= d_{mu_1}
    WeightSet v0; ///< e_i - e_j across distinct d-blocks
};

inline V01Weights weight_set_V01(const MarkedPartition& mp)
{
    const int n = mp.n();
    const BiPartition bp = to_bipartition(mp);
    const auto d = d_sequence(mp);
    const int mu1 = bp.mu.part(1);
    if (d[static_cast<std::size_t>(mu1)] != bp.mu.weight())
        throw consistency_error("d_{mu_1} != |mu| for " + to_string(mp));
    V01Weights out;
    std::vector<Weight> v1;
    for (int i = 1; i <= d[static_cast<std::size_t>(mu1)]; ++i)
        v1.push_back(Weight::epsilon(n, i));
    std::vector<Weight> v0;
    const std::size_t blocks = d.size() - 1;
    for (std::size_t l = 0; l < blocks; ++l)
        for (std::size_t m = l + 1; m < blocks; ++m)
            for (int i = d[l] + 1; i <= d[l + 1]; ++i)
                for (int j = d[m] + 1; j <= d[m + 1]; ++j)
                    v0.push_back(Weight::epsilon(n, i) - Weight::epsilon(n, j));
    out.v1 = WeightSet(std::move(v1));
    out.v0 = WeightSet(std::move(v0));
    return out;
}

/// Generators s_i s_{i+1} ... s_n ... s_{i+1} s_i of W_l; the i-th negates
/// e_i alone.
inline std::vector<SignedPermutation> wl_generators(int n)
{
    if (n < 1)
        throw std::invalid_argument("wl_generators: n must be positive");
    std::vector<SignedPermutation> gens;
    for (int i = 1; i <= n; ++i) {
        SignedPermutation g = SignedPermutation::identity(n);
        for (int k = i; k <= n; ++k)
            g = g * simple_reflection(k, n);
        for (int k = n - 1; k >= i; --k)
            g = g * simple_reflection(k, n);
        gens.push_back(std::move(g));
    }
    return gens;
}

} // namespace exotic

#endif
