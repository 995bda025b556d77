// Command-line front end for the exotic nilcone library.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "exotic/exotic.hpp"

namespace {

using namespace exotic;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct Args {
    std::string format = "text";
    int n = 0;
    int q = 0;
    std::optional<std::string> lambda, a, mu, nu;
    std::string span, eqs, ambient = "exotic";
    std::string suite = "all";
    std::string kind = "marked";
    std::string vector;
    std::uint64_t seed = 0;
    bool long_run = false;
    bool intro = false;
    bool base = false;
};

// --- parsing -----------------------------------------------------------------

std::vector<int> parse_ints(const std::string& text, const char* what)
{
    std::vector<int> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw std::invalid_argument(std::string(what) + ": not an integer list: \"" + text + "\"");
        out.push_back(v);
    }
    if (text.back() == ',')
        throw std::invalid_argument(std::string(what) + ": trailing comma in \"" + text + "\"");
    return out;
}

Partition parse_partition(const std::optional<std::string>& text, const char* what)
{
    return Partition(parse_ints(text.value_or(""), what));
}

/// "1,-1;0,2" -> {(1,-1), (0,2)}; empty string -> {}.
std::vector<Weight> parse_weights(const std::string& text, const char* what)
{
    std::vector<Weight> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto coords = parse_ints(item, what);
        if (coords.empty())
            throw std::invalid_argument(std::string(what) + ": empty weight in \"" + text + "\"");
        if (!out.empty() && coords.size() != out.front().coords.size())
            throw std::invalid_argument(std::string(what) + ": weights of different rank");
        out.push_back(Weight(std::move(coords)));
    }
    return out;
}

MarkedPartition marked_from_args(const Args& args)
{
    if (!args.lambda)
        throw std::invalid_argument("--lambda is required");
    return MarkedPartition(parse_partition(args.lambda, "--lambda"), parse_ints(args.a.value_or(""), "--a"));
}

BiPartition bipartition_from_args(const Args& args)
{
    if (!args.mu && !args.nu)
        throw std::invalid_argument("--mu and --nu are required");
    return {parse_partition(args.mu, "--mu"), parse_partition(args.nu, "--nu")};
}

json read_json_argument(const std::string& text)
{
    std::string body = text;
    if (!text.empty() && text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in)
            throw std::invalid_argument("cannot read " + text.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    }
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

// --- output ------------------------------------------------------------------

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

bool as_json(const Args& args) { return args.format == "json"; }

std::string vector_text(const RationalVector& v)
{
    std::ostringstream os;
    os << "x1:";
    for (const auto& c : v.x1)
        os << ' ' << rational_to_string(c);
    os << "\nx2:";
    bool any = false;
    for (const auto& [i, j] : alt_coordinates(v.n)) {
        const Rational& c = v.x2(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
        if (c == 0)
            continue;
        os << ' ' << '(' << i << ',' << j << ")=" << rational_to_string(c);
        any = true;
    }
    if (!any)
        os << " 0";
    return os.str();
}

// --- subcommands -------------------------------------------------------------

int cmd_enumerate(const Args& args)
{
    if (args.n < 0)
        throw std::invalid_argument("--n must be non-negative");
    if (args.kind == "bi") {
        const auto bis = enumerate_bipartitions(args.n);
        if (as_json(args)) {
            json arr = json::array();
            for (const auto& bp : bis)
                arr.push_back(to_json_value(bp));
            emit_json(arr);
        } else {
            for (const auto& bp : bis)
                std::cout << to_string(bp) << '\n';
        }
        return kOk;
    }
    const auto marked = enumerate_marked_partitions(args.n);
    if (as_json(args)) {
        json arr = json::array();
        for (const auto& mp : marked)
            arr.push_back({{"marked", to_json_value(mp)}, {"bipartition", to_json_value(to_bipartition(mp))}});
        emit_json(arr);
    } else {
        for (const auto& mp : marked)
            std::cout << to_string(mp) << "  " << to_string(to_bipartition(mp)) << '\n';
    }
    return kOk;
}

int cmd_convert(const Args& args)
{
    if (args.lambda) {
        const MarkedPartition mp = marked_from_args(args);
        const BiPartition bp = to_bipartition(mp);
        if (as_json(args))
            emit_json(to_json_value(bp));
        else
            std::cout << to_string(bp) << '\n';
        return kOk;
    }
    const BiPartition bp = bipartition_from_args(args);
    const MarkedPartition mp = from_bipartition(bp);
    if (as_json(args))
        emit_json(to_json_value(mp));
    else
        std::cout << to_string(mp) << '\n';
    return kOk;
}

int cmd_dpoly(const Args& args)
{
    const BiPartition bp = bipartition_from_args(args);
    const MultiPoly d = args.intro ? d_poly_intro(bp.mu, bp.nu) : d_poly(bp);
    if (as_json(args))
        emit_json(to_json_value(d));
    else
        std::cout << to_string(d) << '\n';
    return kOk;
}

int cmd_joseph(const Args& args)
{
    json pj;
    pj["span"] = json::array();
    for (const auto& w : parse_weights(args.span, "--span"))
        pj["span"].push_back(to_json_value(w));
    pj["eqs"] = json::array();
    for (const auto& w : parse_weights(args.eqs, "--eqs"))
        pj["eqs"].push_back(to_json_value(w));
    if (args.ambient == "exotic" || args.ambient == "ordinary") {
        pj["ambient"] = args.ambient;
    } else {
        pj["ambient"] = json::array();
        for (const auto& w : parse_weights(args.ambient, "--ambient"))
            pj["ambient"].push_back(to_json_value(w));
    }
    const SubvarietyPresentation p = presentation_from_json(pj, args.n);
    const MultiPoly j = joseph_poly(p);
    if (as_json(args))
        emit_json({{"presentation", to_json_value(p)}, {"joseph", to_json_value(j)}});
    else
        std::cout << to_string(j) << '\n';
    return kOk;
}

int cmd_invariant(const Args& args)
{
    if (args.vector.empty())
        throw std::invalid_argument("--vector is required");
    const RationalVector v = exotic_vector_from_json(read_json_argument(args.vector));
    if (!is_in_nilcone(v))
        throw std::invalid_argument("the vector does not lie in the exotic nilcone");
    const MarkedPartition mp = k_invariant(v);
    const BiPartition bp = to_bipartition(mp);
    if (as_json(args))
        emit_json({{"marked", to_json_value(mp)}, {"bipartition", to_json_value(bp)}});
    else
        std::cout << to_string(mp) << "  " << to_string(bp) << '\n';
    return kOk;
}

int cmd_rep(const Args& args)
{
    const MarkedPartition mp = marked_from_args(args);
    const RationalVector v = args.base ? base_set_point(mp, args.seed) : representative(mp);
    if (as_json(args))
        emit_json(to_json_value(v));
    else
        std::cout << vector_text(v) << '\n';
    return kOk;
}

int cmd_dim(const Args& args)
{
    const MarkedPartition mp = marked_from_args(args);
    const int dim = orbit_dim(mp);
    if (as_json(args))
        emit_json({{"marked", to_json_value(mp)}, {"orbit_dim", dim}, {"nilcone_dim", nilcone_dim(mp.n())}});
    else
        std::cout << dim << '\n';
    return kOk;
}

int cmd_special(const Args& args)
{
    const MarkedPartition mp = marked_from_args(args);
    const SignedPermutation w = special_element(mp);
    const WeightSet v_lambda = weight_set_V_lambda(mp);
    if (as_json(args)) {
        emit_json({{"marked", to_json_value(mp)},
                   {"element", to_json_value(w)},
                   {"length", length(w)},
                   {"d_sequence", d_sequence(mp)},
                   {"v_lambda", to_json_value(v_lambda)}});
    } else {
        std::cout << to_string(w) << '\n'
                  << "length " << length(w) << '\n'
                  << "V_lambda " << to_string(v_lambda) << '\n';
    }
    return kOk;
}

int cmd_count(const Args& args)
{
    if (args.n == 2 && args.q == 4 && !args.long_run)
        throw std::invalid_argument("n=2, q=4 enumerates 4^10 points per side; pass --long");
    detail::check_count_size(args.n, args.q);
    std::cerr << "count: enumerating n=" << args.n << " q=" << args.q << '\n';
    const TransportReport rep = ml_transport_report(args.n, args.q);
    const std::uint64_t nilpotent = count_nilpotent_points(args.n, args.q);
    const bool ok = rep.ok() && rep.exotic == nilpotent;
    if (as_json(args)) {
        emit_json({{"n", args.n},
                   {"q", args.q},
                   {"points", rep.points},
                   {"exotic", rep.exotic},
                   {"nilpotent", nilpotent},
                   {"ml_bijective", rep.ml_bijective},
                   {"restricts", rep.restricts}});
    } else {
        std::cout << "points " << rep.points << '\n'
                  << "exotic " << rep.exotic << '\n'
                  << "nilpotent " << nilpotent << '\n'
                  << "ml_bijective " << (rep.ml_bijective ? "true" : "false") << '\n'
                  << "restricts " << (rep.restricts ? "true" : "false") << '\n';
    }
    return ok ? kOk : kVerifyFailed;
}

int cmd_verify(const Args& args)
{
    VerifyOptions opt;
    opt.long_run = args.long_run;
    opt.progress = &std::cerr;
    const auto results = run_suite(args.suite, opt);
    bool all = true;
    if (as_json(args)) {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back({{"suite", r.name}, {"passed", r.passed}, {"details", r.lines}, {"failures", r.failures}});
            all = all && r.passed;
        }
        emit_json(arr);
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
            for (const auto& l : r.lines)
                std::cout << "  " << l << '\n';
            for (const auto& f : r.failures)
                std::cout << "  counterexample: " << f << '\n';
            all = all && r.passed;
        }
    }
    return all ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exotic nilpotent cone of Sp(2n): orbits, Joseph polynomials, point counts"};
    app.require_subcommand(1);
    app.fallthrough();
    Args args;
    app.add_option("--format", args.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto marked_opts = [&](CLI::App* sub) {
        sub->add_option("--lambda", args.lambda, "Partition, comma-separated")->required();
        sub->add_option("--a", args.a, "Marking, comma-separated");
    };
    auto bi_opts = [&](CLI::App* sub) {
        sub->add_option("--mu", args.mu, "Partition mu, comma-separated (\"\" for empty)");
        sub->add_option("--nu", args.nu, "Partition nu, comma-separated (\"\" for empty)");
    };

    auto* enumerate = app.add_subcommand("enumerate", "List marked partitions or bi-partitions of n");
    enumerate->add_option("--n", args.n, "Rank")->required();
    enumerate->add_option("--kind", args.kind, "marked or bi")->check(CLI::IsMember({"marked", "bi"}));

    auto* convert = app.add_subcommand("convert", "Marked partition <-> bi-partition");
    convert->add_option("--lambda", args.lambda, "Partition, comma-separated");
    convert->add_option("--a", args.a, "Marking, comma-separated");
    bi_opts(convert);

    auto* dpoly = app.add_subcommand("dpoly", "Macdonald polynomial D(mu, nu)");
    bi_opts(dpoly);
    dpoly->add_flag("--intro", args.intro, "Use the per-part product form");

    auto* joseph = app.add_subcommand("joseph", "Joseph polynomial of a coordinate presentation");
    joseph->add_option("--span", args.span, "Span weights, e.g. \"1,0;0,1\"");
    joseph->add_option("--eqs", args.eqs, "Equation degrees, same syntax");
    joseph->add_option("--ambient", args.ambient, "exotic, ordinary, or a weight list");
    joseph->add_option("--n", args.n, "Rank when span and equations are empty");

    auto* invariant = app.add_subcommand("invariant", "K-invariant of a nilcone point");
    invariant->add_option("--vector", args.vector, "Vector as JSON, or @file")->required();

    auto* rep = app.add_subcommand("rep", "Orbit representative");
    marked_opts(rep);
    rep->add_flag("--base", args.base, "Pseudo-random point of the base set instead");
    rep->add_option("--seed", args.seed, "Seed for --base");

    auto* dim = app.add_subcommand("dim", "Orbit dimension");
    marked_opts(dim);

    auto* special = app.add_subcommand("special", "Special Weyl group element w_lambda");
    marked_opts(special);

    auto* count = app.add_subcommand("count", "Characteristic-2 point counts");
    count->add_option("--n", args.n, "Rank (1 or 2)")->required();
    count->add_option("--q", args.q, "Field size (2 or 4)")->required();
    count->add_flag("--long", args.long_run, "Allow n=2, q=4");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", args.suite, "Suite name or all");
    verify->add_flag("--long", args.long_run, "Include the n=2, q=4 count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*enumerate)
            return cmd_enumerate(args);
        if (*convert)
            return cmd_convert(args);
        if (*dpoly)
            return cmd_dpoly(args);
        if (*joseph)
            return cmd_joseph(args);
        if (*invariant)
            return cmd_invariant(args);
        if (*rep)
            return cmd_rep(args);
        if (*dim)
            return cmd_dim(args);
        if (*special)
            return cmd_special(args);
        if (*count)
            return cmd_count(args);
        if (*verify)
            return cmd_verify(args);
    } catch (const consistency_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
