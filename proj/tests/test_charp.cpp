#include <gtest/gtest.h>

#include <set>

#include "exotic/charp.hpp"
#include "oracles.hpp"

using namespace exotic;

TEST(Gf4, FieldAxiomsExhaustively)
{
    const auto f = field_elements(4);
    const Gf4 zero(0), one(1);
    for (auto a : f) {
        EXPECT_EQ(a + zero, a);
        EXPECT_EQ(a * one, a);
        EXPECT_EQ(a + a, zero);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), one);
        }
        for (auto b : f) {
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            for (auto c : f) {
                EXPECT_EQ((a * b) * c, a * (b * c));
                EXPECT_EQ(a * (b + c), a * b + a * c);
            }
        }
    }
    const Gf4 g = Gf4::generator();
    EXPECT_EQ(g * g, g + one); // x^2 = x + 1
    EXPECT_EQ(g * g * g, one);
    EXPECT_THROW(zero.inverse(), std::domain_error);
}

TEST(Gf4, FrobeniusIsABijection)
{
    std::set<unsigned> images;
    for (auto a : field_elements(4))
        images.insert(a.frobenius().bits());
    EXPECT_EQ(images.size(), 4u);
    for (auto a : field_elements(2))
        EXPECT_EQ(a.frobenius(), a);
}

TEST(Gf4, ReductionOfRationals)
{
    using T = field_traits<Gf4>;
    EXPECT_EQ(T::embed(Rational(3)), Gf4(1));
    EXPECT_EQ(T::embed(Rational(-4)), Gf4(0));
    EXPECT_EQ(T::embed(Rational(1, 3)), Gf4(1));
    EXPECT_THROW(T::embed(Rational(1, 2)), std::domain_error);
}

TEST(Ml, Examples)
{
    const Matrix<Gf4> zero2(2, 2, Gf4(0));
    EXPECT_TRUE(ml({Gf4(0), Gf4(0)}, zero2).is_zero());
    const auto s = ml({Gf4(1), Gf4(0)}, zero2);
    EXPECT_EQ(s(0, 0), Gf4(1));
    EXPECT_EQ(s(0, 1), Gf4(0));
    EXPECT_EQ(s(1, 1), Gf4(0));
    Matrix<Gf4> diag(2, 2, Gf4(0));
    diag(0, 0) = Gf4(1);
    EXPECT_THROW(ml({Gf4(0), Gf4(0)}, diag), std::invalid_argument);
}

TEST(Ml, SymmetricWithSquaredDiagonal)
{
    const auto f = field_elements(4);
    for (auto a : f) {
        for (auto b : f) {
            for (auto c : f) {
                Matrix<Gf4> x2(2, 2, Gf4(0));
                x2(0, 1) = c;
                x2(1, 0) = c;
                const auto s = ml({a, b}, x2);
                EXPECT_EQ(s, s.transpose());
                EXPECT_EQ(s(0, 0), a * a);
                EXPECT_EQ(s(1, 1), b * b);
            }
        }
    }
}

TEST(NilpotentG, Examples)
{
    EXPECT_TRUE(is_nilpotent_g(Matrix<Gf4>(2, 2, Gf4(0))));
    EXPECT_FALSE(is_nilpotent_g(Matrix<Gf4>::identity(2, Gf4(0), Gf4(1))));
    EXPECT_THROW(is_nilpotent_g(Matrix<Gf4>(3, 3, Gf4(0))), std::invalid_argument);
}

TEST(NilpotentG, AgreesWithCharacteristicPolynomialOracle)
{
    for (int n = 1; n <= 2; ++n) {
        const auto d = static_cast<std::size_t>(2 * n);
        const int coords = n * (2 * n + 1);
        const auto field = field_elements(2);
        std::vector<Gf4> digits(static_cast<std::size_t>(coords));
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << coords); ++idx) {
            detail::decode_digits(idx, field, digits);
            Matrix<Gf4> s(d, d, Gf4(0));
            std::size_t k = 0;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i; j < d; ++j)
                    s(i, j) = s(j, i) = digits[k++];
            EXPECT_EQ(is_nilpotent_g(s), oracle::charpoly_is_monomial(s * symplectic_form<Gf4>(n)));
        }
    }
}

TEST(Counts, SmallCases)
{
    EXPECT_EQ(count_exotic_points(1, 2), 4u);
    EXPECT_EQ(count_exotic_points(1, 4), 16u);
    EXPECT_EQ(count_nilpotent_points(1, 2), 4u);
    EXPECT_EQ(count_nilpotent_points(1, 4), 16u);
    EXPECT_EQ(count_exotic_points(2, 2), count_nilpotent_points(2, 2));
    EXPECT_EQ(count_exotic_points(2, 2), 256u); // q^{2n^2}
}

TEST(Counts, SizeGuard)
{
    EXPECT_THROW(count_exotic_points(3, 2), std::invalid_argument);
    EXPECT_THROW(count_nilpotent_points(1, 3), std::invalid_argument);
    EXPECT_THROW(verify_ml_transport(0, 2), std::invalid_argument);
}

TEST(Transport, SmallCases)
{
    for (auto [n, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {2, 2}}) {
        const auto r = ml_transport_report(n, q);
        EXPECT_TRUE(r.ml_bijective) << n << "," << q;
        EXPECT_TRUE(r.restricts) << n << "," << q;
        EXPECT_EQ(r.exotic, r.images_nilpotent);
        EXPECT_EQ(r.points, detail::power(static_cast<std::uint64_t>(q), n * (2 * n + 1)));
        EXPECT_TRUE(verify_ml_transport(n, q));
    }
}

TEST(Transport, NilconeMembershipModTwoAgreesWithOracle)
{
    // P_i(x2) = 0 mod 2 iff the characteristic polynomial of ml(x1, x2) J is t^{2n}.
    const int n = 2;
    const auto field = field_elements(2);
    std::vector<Gf4> digits(10);
    for (std::uint64_t idx = 0; idx < 1024; ++idx) {
        detail::decode_digits(idx, field, digits);
        const auto v = detail::exotic_point(n, digits);
        EXPECT_EQ(is_in_nilcone(v), oracle::charpoly_is_monomial(ml(v.x1, v.x2) * symplectic_form<Gf4>(n)));
    }
}
