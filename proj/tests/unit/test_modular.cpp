#include <random>

#include <gtest/gtest.h>

#include "gseries/combinatorics.hpp"
#include "gseries/errors.hpp"
#include "gseries/modular.hpp"
#include "gseries/qseries.hpp"

using namespace gseries;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

} // namespace

TEST(Decompose, G6)
{
    const FThetaDecomposition d = decompose(goswami_series(3, 60), 3, 60);
    EXPECT_EQ(d.c, rationals({0, 1, -16, 256}));
}

TEST(Decompose, ThetaPowerIsBasisElement)
{
    for (int k = 1; k <= 4; ++k) {
        const QSeries t = series_pow(theta_series(40), 4 * k);
        const FThetaDecomposition d = decompose(t, k, 40);
        std::vector<Rational> expected(static_cast<std::size_t>(k + 1), 0);
        expected[0] = 1;
        EXPECT_EQ(d.c, expected);
        EXPECT_FALSE(cusp_certificate(d).constant_term_zero);
    }
}

TEST(Decompose, OutsideTheSpanThrows)
{
    // theta^2 has weight 1, not in the weight-4 span.
    EXPECT_THROW(decompose(series_pow(theta_series(30), 2), 1, 30), NotInSpan);
}

TEST(Decompose, ReconstructRoundTripRandom)
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 9);
    for (int k = 1; k <= 6; ++k) {
        const std::int64_t N = 4 * k + 20;
        FThetaDecomposition d{k, {}};
        for (int j = 0; j <= k; ++j) {
            d.c.push_back(make_rational(num(rng), den(rng)));
        }
        const FThetaDecomposition back = decompose(reconstruct(d, N), k, N);
        EXPECT_EQ(back.c, d.c) << k;
    }
}

TEST(Alphas, KnownSmallWeights)
{
    EXPECT_TRUE(alphas(1, 20).empty());
    EXPECT_EQ(alphas(3, 60), rationals({1, -16}));
    EXPECT_EQ(alphas(4, 60), rationals({0, 128, -2048}));
}

TEST(Alphas, PochhammerRouteAgrees)
{
    for (int k = 1; k <= 8; ++k) {
        EXPECT_EQ(alphas(k, 60), alphas_from_pochhammer(k, 60)) << k;
    }
}

TEST(Alphas, IntegralForSmallK)
{
    for (int k = 1; k <= 8; ++k) {
        for (const auto& a : alphas(k, 60)) {
            EXPECT_TRUE(is_integer(a)) << "alpha for k=" << k << " is " << to_string(a)
                                       << "; integrality is observed, not guaranteed";
        }
    }
}

TEST(Cusp, TSixCertificate)
{
    const CuspReport r = cusp_certificate(decompose(T_series(3, 60), 3, 60));
    EXPECT_TRUE(r.is_cusp_form());
    EXPECT_EQ(r.weighted_sum, 0);
}

TEST(Cusp, ZeroSeriesIsVacuouslyCusp)
{
    EXPECT_TRUE(cusp_certificate(decompose(T_series(1, 40), 1, 40)).is_cusp_form());
}

TEST(Cusp, SeriesDecompositionConditions)
{
    for (int k = 1; k <= 8; ++k) {
        const FThetaDecomposition d = decompose(goswami_series(k, 60), k, 60);
        EXPECT_EQ(d.c.front(), 0) << k;
        Rational s = 0;
        Rational w = 1;
        for (int j = 0; j < k; ++j) {
            s += d.c[static_cast<std::size_t>(j)] * w;
            w /= 16;
        }
        EXPECT_EQ(s, 0) << k;
        EXPECT_TRUE(cusp_certificate(decompose(T_series(k, 60), k, 60)).is_cusp_form()) << k;
    }
}

TEST(EtaIdentity, HoldsForKOneToEight)
{
    for (int k = 1; k <= 8; ++k) {
        const ExactCheckReport r = eta_identity_check(k, 60);
        EXPECT_TRUE(r.equal) << k << ": " << r.detail;
    }
}

TEST(EtaIdentity, WrongAlphasAreDetected)
{
    const QSeries wrong = goswami_eta_form(3, rationals({1, -15}), 40);
    const SeriesComparison c = compare(goswami_series(3, 40), wrong);
    EXPECT_FALSE(c.equal);
    ASSERT_TRUE(c.first_mismatch.has_value());
}

TEST(ZetaFromDecomposition, MatchesBernoulliForm)
{
    EXPECT_EQ(zeta_from_decomposition(1, 30), 1);
    EXPECT_EQ(zeta_from_decomposition(2, 30), 8);
    EXPECT_EQ(zeta_from_decomposition(3, 30), 256);
    for (int k = 1; k <= 8; ++k) {
        EXPECT_EQ(zeta_from_decomposition(k, 60), zeta_constant(k)) << k;
    }
}
