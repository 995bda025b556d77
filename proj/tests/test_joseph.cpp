#include <gtest/gtest.h>

#include <map>

#include "exotic/joseph.hpp"
#include "exotic/verify.hpp"
#include "oracles.hpp"

using namespace exotic;

namespace {

MultiPoly x(int i) { return MultiPoly::variable(2, i); }
Weight e(int i) { return Weight::epsilon(2, i); }

BiPartition bp(std::initializer_list<int> mu, std::initializer_list<int> nu) { return {Partition(mu), Partition(nu)}; }

} // namespace

TEST(Presentation, Validation)
{
    EXPECT_THROW(SubvarietyPresentation(WeightSet({e(1)}), WeightSet({e(2)})), std::invalid_argument);
    EXPECT_THROW(SubvarietyPresentation(WeightSet({e(1), e(2)}), WeightSet({e(1)}), {e(1), e(2)}),
                 std::invalid_argument);
    EXPECT_NO_THROW(exotic_presentation(2, {e(1)}, {e(1) * 2}));
}

TEST(KPolynomial, Examples)
{
    const Weight e1 = Weight::epsilon(1, 1);
    EXPECT_EQ(k_polynomial({WeightSet({e1}), WeightSet()}), LaurentChar::one_minus_exp_neg(e1));
    EXPECT_EQ(k_polynomial(exotic_presentation(2, weight_set_V_plus(2).items())), LaurentChar::constant(2, 1));
    const auto quadric = ordinary_presentation(2, {e(1) * 2, e(2) * 2, e(1) + e(2)}, {e(1) * 2 + e(2) * 2});
    EXPECT_EQ(k_polynomial(quadric),
              LaurentChar::one_minus_exp_neg(e(1) - e(2)) * LaurentChar::one_minus_exp_neg(e(1) * 2 + e(2) * 2));
}

TEST(JosephPoly, Examples)
{
    EXPECT_EQ(joseph_poly(exotic_presentation(2, {e(1) + e(2), e(1) - e(2)})), x(1) * x(2));
    EXPECT_EQ(joseph_poly(ordinary_presentation(2, {})),
              Rational(4) * x(1) * x(2) * (x(1) * x(1) - x(2) * x(2)));
    EXPECT_EQ(joseph_poly(ordinary_presentation(2, {e(1) * 2, e(2) * 2, e(1) + e(2)}, {e(1) * 2 + e(2) * 2})),
              Rational(2) * (x(1) * x(1) - x(2) * x(2)));
}

TEST(JosephPoly, IsProductOfForms)
{
    for (int n = 1; n <= 3; ++n) {
        const auto amb = weight_set_V_plus(n).items();
        // every span that drops a prefix of the ambient list
        for (std::size_t k = 0; k <= amb.size(); ++k) {
            const std::vector<Weight> span(amb.begin() + static_cast<std::ptrdiff_t>(k), amb.end());
            const std::vector<Weight> dropped(amb.begin(), amb.begin() + static_cast<std::ptrdiff_t>(k));
            const MultiPoly j = joseph_poly(exotic_presentation(n, span));
            EXPECT_EQ(j, oracle::product_of_forms(n, dropped));
            EXPECT_EQ(j.degree(), static_cast<int>(k));
            EXPECT_TRUE(j.is_homogeneous());
        }
    }
}

TEST(Table, ExoticColumn)
{
    const auto r = verify_exotic_column_n2();
    EXPECT_TRUE(r.passed) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(Table, OrdinaryColumn)
{
    const auto r = verify_ordinary_column_n2();
    EXPECT_TRUE(r.passed) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(Table, OrdinaryCharacteristicTwoLsign)
{
    // Lsign in characteristic 2: span {e1 - e2, e1 + e2} inside R+.
    EXPECT_EQ(joseph_poly(ordinary_presentation(2, {e(1) - e(2), e(1) + e(2)})), Rational(4) * x(1) * x(2));
}

TEST(DPoly, Examples)
{
    EXPECT_EQ(d_poly(bp({1, 1}, {})), x(1) * x(1) - x(2) * x(2));
    EXPECT_EQ(d_poly(bp({}, {1, 1})), x(1) * x(2) * (x(1) * x(1) - x(2) * x(2)));
    EXPECT_EQ(d_poly(bp({1}, {1})), x(2));
    EXPECT_EQ(d_poly(bp({2}, {})), MultiPoly::constant(2, 1));
    EXPECT_EQ(d_poly(bp({}, {2})), x(1) * x(2));
}

TEST(DPoly, IntroFormExamples)
{
    EXPECT_EQ(d_poly_intro(Partition{2}, Partition{}), x(1) * x(1) - x(2) * x(2));
    EXPECT_EQ(d_poly_intro(Partition{}, Partition{2}), x(1) * x(2) * (x(1) * x(1) - x(2) * x(2)));
    EXPECT_EQ(d_poly_intro(Partition{}, Partition{}), MultiPoly::constant(0, 1));
}

TEST(DPoly, DegreeLawUpToEight)
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& m : enumerate_marked_partitions(n))
            EXPECT_EQ(2 * d_poly(to_bipartition(m)).degree(), 2 * n * n - orbit_dim(m)) << to_string(m);
}

TEST(DPoly, WlStructureOfOneSidedBipartitions)
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto& p : partitions_of(n)) {
            EXPECT_EQ(wl_structure(d_poly({p, Partition{}}), n), WlStructure::invariant) << to_string(p);
            EXPECT_EQ(wl_structure(d_poly({Partition{}, p}), n), WlStructure::anti_invariant) << to_string(p);
        }
    }
}

TEST(DPoly, IntroFormUnderTransposeIsAVariableRelabelling)
{
    // The two forms agree up to the action of W for n <= 5.
    for (int n = 1; n <= 5; ++n) {
        const auto group = all_signed_permutations(n);
        for (const auto& b : enumerate_bipartitions(n)) {
            const MultiPoly d = d_poly(b);
            const MultiPoly intro = d_poly_intro(transpose(b.mu), transpose(b.nu));
            const bool found = std::any_of(group.begin(), group.end(), [&](const SignedPermutation& w) {
                const MultiPoly g = act_on_poly(w, intro);
                return g == d || g == MultiPoly(n) - d;
            });
            EXPECT_TRUE(found) << to_string(b);
        }
    }
}

TEST(DPoly, IntroFormDiffersLiterallyAtThree)
{
    const auto cx = convention_counterexample(DConvention::transpose_both, 3);
    ASSERT_TRUE(cx.has_value());
    EXPECT_EQ(*cx, bp({2, 1}, {}));
    EXPECT_EQ(convention_counterexample(DConvention::transpose_both, 2), std::nullopt);
    EXPECT_EQ(*convention_counterexample(DConvention::identity, 2), bp({2}, {}));
}

TEST(Macdonald, Examples)
{
    EXPECT_EQ(macdonald_span(x(2), 2).dimension, 2u);
    EXPECT_EQ(macdonald_span(x(1) * x(1) - x(2) * x(2), 2).dimension, 1u);
    EXPECT_EQ(macdonald_span(MultiPoly::constant(2, 1), 2).dimension, 1u);
    EXPECT_EQ(macdonald_span(MultiPoly(2), 2).dimension, 0u);
    EXPECT_THROW(macdonald_span(MultiPoly::constant(6, 1), 6), std::invalid_argument);
}

TEST(Macdonald, BasisSpansTheOrbit)
{
    // rank(basis) = rank(basis + every image) = dimension
    auto rank_of = [](const std::vector<MultiPoly>& ps) {
        std::map<Exponent, std::size_t> cols;
        for (const auto& p : ps)
            for (const auto& [e, c] : p.terms())
                cols.emplace(e, cols.size());
        Matrix<Rational> m(ps.size(), cols.size(), Rational(0));
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (const auto& [e, c] : ps[i].terms())
                m(i, cols.at(e)) = c;
        return m.rank();
    };
    for (int n = 2; n <= 3; ++n) {
        for (const auto& b : enumerate_bipartitions(n)) {
            const MultiPoly seed = d_poly(b);
            const auto span = macdonald_span(seed, n);
            EXPECT_EQ(rank_of(span.basis), span.dimension);
            std::vector<MultiPoly> all = span.basis;
            for (const auto& w : all_signed_permutations(n))
                all.push_back(act_on_poly(w, seed));
            EXPECT_EQ(rank_of(all), span.dimension) << to_string(b);
        }
    }
}

TEST(Macdonald, DimensionsEqualIrreducibleUpToThree)
{
    for (int n = 1; n <= 3; ++n)
        for (const auto& b : enumerate_bipartitions(n))
            EXPECT_EQ(Integer(static_cast<unsigned long>(macdonald_span(d_poly(b), n).dimension)), irrep_dim(b))
                << to_string(b);
}

TEST(IrrepDim, Examples)
{
    EXPECT_EQ(irrep_dim(bp({1}, {1})), 2);
    EXPECT_EQ(irrep_dim(bp({2}, {})), 1);
    EXPECT_EQ(irrep_dim(bp({2, 1}, {1})), 8);
}

TEST(IrrepDim, HookFormulaMatchesCornerRecursion)
{
    for (int n = 0; n <= 8; ++n) {
        Integer total = 0;
        for (const auto& b : enumerate_bipartitions(n)) {
            const std::vector<int> mu(b.mu.parts().begin(), b.mu.parts().end());
            const std::vector<int> nu(b.nu.parts().begin(), b.nu.parts().end());
            const long long expected =
                oracle::binomial(n, b.mu.weight()) * oracle::standard_tableaux(mu) * oracle::standard_tableaux(nu);
            EXPECT_EQ(irrep_dim(b), Integer(static_cast<long>(expected))) << to_string(b);
            total += irrep_dim(b) * irrep_dim(b);
        }
        // sum of squared dimensions is |W(C_n)| = 2^n n!
        Integer order = 1;
        for (int k = 1; k <= n; ++k)
            order *= 2 * k;
        EXPECT_EQ(total, order) << n;
    }
}

TEST(WlStructure, Examples)
{
    EXPECT_EQ(wl_structure(x(1) * x(1) - x(2) * x(2), 2), WlStructure::invariant);
    EXPECT_EQ(wl_structure(x(1) * x(2) * (x(1) * x(1) - x(2) * x(2)), 2), WlStructure::anti_invariant);
    EXPECT_EQ(wl_structure(x(2), 2), WlStructure::neither);
    EXPECT_EQ(wl_structure(MultiPoly(2), 2), WlStructure::invariant);
}

TEST(WlStructure, AgreesWithGeneratorAction)
{
    for (int n = 1; n <= 3; ++n) {
        const auto gens = wl_generators(n);
        for (const auto& b : enumerate_bipartitions(n)) {
            const MultiPoly d = d_poly(b);
            bool fixed = true, signed_ = true;
            for (const auto& g : gens) {
                const MultiPoly img = act_on_poly(g, d);
                fixed = fixed && img == d;
                signed_ = signed_ && img == MultiPoly(n) - d;
            }
            const auto s = wl_structure(d, n);
            if (s == WlStructure::invariant) {
                EXPECT_TRUE(fixed) << to_string(b);
            }
            if (s == WlStructure::anti_invariant) {
                EXPECT_TRUE(signed_) << to_string(b);
            }
        }
    }
}
