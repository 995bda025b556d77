#ifndef EXOTIC_SERIALIZATION_HPP
#define EXOTIC_SERIALIZATION_HPP

#include "json.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exotic/joseph.hpp"
#include "exotic/multipoly.hpp"
#include "exotic/nilcone.hpp"
#include "exotic/partitions.hpp"
#include "exotic/weight.hpp"
#include "exotic/weyl.hpp"

namespace exotic {

using json = nlohmann::json;

namespace detail {
inline std::vector<int> int_array(const json& j, const char* what)
{
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + ": expected an array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw std::invalid_argument(std::string(what) + ": expected an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

inline const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return j.at(key);
}
} // namespace detail

/// "num/den", denominator always present.
inline std::string rational_to_json_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Accepts "num/den" or a bare integer.
inline Rational rational_from_string(const std::string& s)
{
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational number: \"" + s + "\"");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: \"" + s + "\"");
    q.canonicalize();
    return q;
}

inline Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return rational_from_string(j.get<std::string>());
    throw std::invalid_argument("expected a rational as \"num/den\"");
}

// --- Partitions --------------------------------------------------------------

inline json to_json_value(const Partition& p) { return json(std::vector<int>(p.parts().begin(), p.parts().end())); }

inline Partition partition_from_json(const json& j) { return Partition(detail::int_array(j, "partition")); }

inline json to_json_value(const MarkedPartition& mp)
{
    return {{"lambda", to_json_value(mp.lambda())}, {"a", mp.stripped_marks()}};
}

inline MarkedPartition marked_partition_from_json(const json& j)
{
    return MarkedPartition(partition_from_json(detail::field(j, "lambda")),
                           detail::int_array(detail::field(j, "a"), "a"));
}

inline json to_json_value(const BiPartition& bp) { return {{"mu", to_json_value(bp.mu)}, {"nu", to_json_value(bp.nu)}}; }

inline BiPartition bipartition_from_json(const json& j)
{
    return {partition_from_json(detail::field(j, "mu")), partition_from_json(detail::field(j, "nu"))};
}

// --- Weyl group ----------------------------------------------------------------

inline json to_json_value(const Weight& w) { return json(w.coords); }

inline Weight weight_from_json(const json& j) { return Weight(detail::int_array(j, "weight")); }

inline json to_json_value(const WeightSet& s)
{
    json arr = json::array();
    for (const auto& w : s)
        arr.push_back(to_json_value(w));
    return arr;
}

inline json to_json_value(const SignedPermutation& w)
{
    json image = json::array();
    for (const auto& im : w.image())
        image.push_back({im.target, im.sign});
    return {{"image", image}};
}

inline SignedPermutation signed_permutation_from_json(const json& j)
{
    const json& image = detail::field(j, "image");
    if (!image.is_array())
        throw std::invalid_argument("image: expected an array of [target, sign] pairs");
    std::vector<SignedPermutation::Image> im;
    for (const auto& pair : image) {
        const auto v = detail::int_array(pair, "image entry");
        if (v.size() != 2)
            throw std::invalid_argument("image entry: expected [target, sign]");
        im.push_back({v[0], v[1]});
    }
    return SignedPermutation(std::move(im));
}

// --- Polynomials -------------------------------------------------------------

inline json to_json_value(const MultiPoly& p)
{
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"c", rational_to_json_string(c)}, {"e", e}});
    return {{"vars", p.nvars()}, {"terms", terms}};
}

inline MultiPoly multipoly_from_json(const json& j)
{
    const json& vars = detail::field(j, "vars");
    if (!vars.is_number_integer() || vars.get<int>() < 0)
        throw std::invalid_argument("vars: expected a non-negative integer");
    MultiPoly p(vars.get<int>());
    const json& terms = detail::field(j, "terms");
    if (!terms.is_array())
        throw std::invalid_argument("terms: expected an array");
    for (const auto& t : terms) {
        auto e = detail::int_array(detail::field(t, "e"), "e");
        for (int x : e)
            if (x < 0)
                throw std::invalid_argument("e: negative exponent");
        p.add_term(std::move(e), rational_from_json(detail::field(t, "c")));
    }
    return p;
}

// --- Exotic vectors ----------------------------------------------------------

inline json to_json_value(const RationalVector& v)
{
    json x1 = json::array();
    for (const auto& c : v.x1)
        x1.push_back(rational_to_json_string(c));
    json upper = json::array();
    for (const auto& [i, j] : alt_coordinates(v.n)) {
        const Rational& c = v.x2(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
        if (c != 0)
            upper.push_back({i, j, rational_to_json_string(c)});
    }
    return {{"n", v.n}, {"x1", x1}, {"x2_upper", upper}};
}

inline RationalVector exotic_vector_from_json(const json& j)
{
    const json& nj = detail::field(j, "n");
    if (!nj.is_number_integer() || nj.get<int>() < 1)
        throw std::invalid_argument("n: expected a positive integer");
    const int n = nj.get<int>();
    RationalVector v(n);
    const json& x1 = detail::field(j, "x1");
    if (!x1.is_array() || x1.size() != static_cast<std::size_t>(2 * n))
        throw std::invalid_argument("x1: expected an array of 2n rationals");
    for (std::size_t k = 0; k < x1.size(); ++k)
        v.x1[k] = rational_from_json(x1[k]);
    const json& upper = detail::field(j, "x2_upper");
    if (!upper.is_array())
        throw std::invalid_argument("x2_upper: expected an array of [i, j, c]");
    for (const auto& entry : upper) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() || !entry[1].is_number_integer())
            throw std::invalid_argument("x2_upper: expected entries [i, j, \"c\"]");
        const int a = entry[0].get<int>();
        const int b = entry[1].get<int>();
        if (a < 1 || b <= a || b > 2 * n)
            throw std::invalid_argument("x2_upper: need 1 <= i < j <= 2n");
        v.set_x2(a, b, rational_from_json(entry[2]));
    }
    return v;
}

// --- Presentations -----------------------------------------------------------

/// {"ambient": "exotic" | "ordinary" | [weights], "span": [...], "eqs": [...]}.
/// A named ambient uses the rank `n`, or the rank of the listed weights.
inline SubvarietyPresentation presentation_from_json(const json& j, int n = 0)
{
    auto weights = [](const json& arr, const char* what) {
        if (!arr.is_array())
            throw std::invalid_argument(std::string(what) + ": expected an array of weights");
        std::vector<Weight> out;
        for (const auto& w : arr)
            out.push_back(weight_from_json(w));
        return out;
    };
    const auto span = weights(detail::field(j, "span"), "span");
    const auto eqs = j.contains("eqs") ? weights(j.at("eqs"), "eqs") : std::vector<Weight>{};
    const json& amb = detail::field(j, "ambient");
    if (amb.is_string()) {
        int rank = n;
        if (rank <= 0 && !span.empty())
            rank = span.front().rank();
        if (rank <= 0 && !eqs.empty())
            rank = eqs.front().rank();
        if (rank <= 0)
            throw std::invalid_argument("presentation: rank unknown; pass n or a non-empty span");
        const std::string name = amb.get<std::string>();
        if (name == "exotic")
            return exotic_presentation(rank, span, eqs);
        if (name == "ordinary")
            return ordinary_presentation(rank, span, eqs);
        throw std::invalid_argument("ambient: expected \"exotic\", \"ordinary\" or a weight list");
    }
    return {WeightSet(weights(amb, "ambient")), WeightSet(span), eqs};
}

inline json to_json_value(const SubvarietyPresentation& p)
{
    json eqs = json::array();
    for (const auto& e : p.equations)
        eqs.push_back(to_json_value(e));
    return {{"ambient", to_json_value(p.ambient)}, {"span", to_json_value(p.span)}, {"eqs", eqs}};
}

} // namespace exotic

#endif
