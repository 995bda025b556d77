#ifndef EXOTIC_WEIGHT_HPP
#define EXOTIC_WEIGHT_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exotic/multipoly.hpp"

namespace exotic {

/// A weight sum_i coords[i-1] * e_i of the rank-n torus.
struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
    Weight(std::initializer_list<int> c) : coords(c) {}

    static Weight zero(int n) { return Weight(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    /// e_i, 1-based.
    static Weight epsilon(int n, int i)
    {
        if (i < 1 || i > n)
            throw std::out_of_range("Weight::epsilon: index out of range");
        Weight w = zero(n);
        w.coords[static_cast<std::size_t>(i - 1)] = 1;
        return w;
    }

    int rank() const { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords[static_cast<std::size_t>(i - 1)]; }

    bool is_zero() const
    {
        return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
    }

    /// Positive root convention: first non-zero coordinate is positive.
    bool is_positive() const
    {
        for (int c : coords)
            if (c != 0)
                return c > 0;
        return false;
    }

    Weight operator+(const Weight& o) const { return combine(o, 1); }
    Weight operator-(const Weight& o) const { return combine(o, -1); }
    Weight operator-() const { return Weight::zero(rank()) - *this; }
    Weight operator*(int s) const
    {
        Weight w = *this;
        for (int& c : w.coords)
            c *= s;
        return w;
    }

    /// The linear form sum coords[i] e_i as a polynomial.
    MultiPoly as_linear_form() const { return MultiPoly::linear(coords); }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

private:
    Weight combine(const Weight& o, int s) const
    {
        if (o.rank() != rank())
            throw std::invalid_argument("Weight: rank mismatch");
        Weight w = *this;
        for (std::size_t i = 0; i < coords.size(); ++i)
            w.coords[i] += s * o.coords[i];
        return w;
    }
};

/// "e1-e2", "2e1", "e1+e2", "-e3", "0".
inline std::string to_string(const Weight& w)
{
    std::ostringstream os;
    bool first = true;
    for (int i = 1; i <= w.rank(); ++i) {
        const int c = w[i];
        if (c == 0)
            continue;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (std::abs(c) != 1)
            os << std::abs(c);
        os << 'e' << i;
        first = false;
    }
    return first ? "0" : os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << to_string(w); }

/// Canonical display order: descending lexicographic on coordinates.
struct WeightDisplayOrder {
    bool operator()(const Weight& a, const Weight& b) const { return a > b; }
};

} // namespace exotic

#endif
