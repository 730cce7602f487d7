#include <gtest/gtest.h>

#include "gseries/combinatorics.hpp"
#include "gseries/qseries.hpp"
#include "support/oracles.hpp"

using namespace gseries;

namespace {

EtaQuotient eta(std::initializer_list<EtaFactor> f) { return EtaQuotient{std::vector<EtaFactor>(f)}; }

// Summand-by-summand expansion of G_{2k} with the geometric-series oracle
// standing in for 1/(1 - x)^{2k}.
QSeries brute_goswami(int k, std::size_t N)
{
    const GoswamiPolynomials polys = build_polynomials(k);
    const bool odd = k % 2 == 1;
    const Poly& P = odd ? polys.odd : polys.even;
    std::vector<Rational> total(N + 1, 0);
    for (std::size_t e = odd ? 1 : 2; e <= N; e += odd ? 2 : 4) {
        // x P(x) with x = q^e
        oracle::Coeffs num(N + 1, 0);
        for (std::size_t i = 0; i < P.coefficients().size(); ++i) {
            const std::size_t pos = e * (i + 1);
            if (pos <= N) {
                num[pos] = P.coefficients()[i].get_num();
            }
        }
        const oracle::Coeffs den = oracle::reciprocal_power(odd ? 2 * e : e, 2 * k, N);
        const oracle::Coeffs term = oracle::multiply(num, den, N);
        for (std::size_t i = 0; i <= N; ++i) {
            total[i] += Rational(term[i]);
        }
    }
    if (!odd) {
        Integer s;
        mpz_ui_pow_ui(s.get_mpz_t(), 2, static_cast<unsigned long>(2 * k - 1));
        for (auto& c : total) {
            c *= s;
        }
    }
    return QSeries(QExponent::whole(0), total, static_cast<std::int64_t>(N));
}

} // namespace

TEST(Psi, TriangularSupport)
{
    EXPECT_TRUE(compare(psi_series(7), QSeries::from_integers({1, 1, 0, 1, 0, 0, 1, 0}, 7)).equal);
    EXPECT_TRUE(compare(psi_series(0), QSeries::one(0)).equal);
}

TEST(Psi, SumEqualsProductTo200)
{
    EXPECT_TRUE(compare(psi_series(200), psi_product_series(200)).equal);
}

TEST(Theta, Definition)
{
    EXPECT_TRUE(compare(theta_series(9), QSeries::from_integers({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}, 9)).equal);
}

TEST(Theta, EtaQuotientTo100)
{
    const QSeries eq = eta_quotient_series(eta({{2, 5}, {1, -2}, {4, -2}}), 100);
    EXPECT_EQ(eq.leading_exponent(), QExponent::whole(0));
    const SeriesComparison c = compare(theta_series(100), eq);
    EXPECT_TRUE(c.equal);
    EXPECT_EQ(c.known_through, QExponent::whole(100));
}

TEST(F, DivisorSumOracle)
{
    const QSeries f = F_series(99);
    for (std::int64_t n = 0; n <= 99; ++n) {
        EXPECT_EQ(f.coefficient_at(n), n % 2 == 1 ? oracle::sigma1(n) : 0) << n;
    }
}

TEST(F, EtaQuotientTo100)
{
    const QSeries eq = eta_quotient_series(eta({{4, 8}, {2, -4}}), 100);
    EXPECT_EQ(eq.leading_exponent(), QExponent::whole(1));
    EXPECT_TRUE(compare(F_series(100), eq).equal);
}

TEST(EtaQuotient, TrivialQuotientIsOne)
{
    EXPECT_TRUE(compare(eta_quotient_series(eta({{1, 1}, {1, -1}}), 30), QSeries::one(30)).equal);
}

TEST(EtaQuotient, FractionalLeadingExponent)
{
    const QSeries e = eta_quotient_series(eta({{1, 1}}), 12);
    EXPECT_EQ(e.leading_exponent(), QExponent::twentyfourths(1));
    EXPECT_TRUE(compare(series_shift(e, QExponent::twentyfourths(-1)), pochhammer_series(1, 1, 12)).equal);
}

TEST(EtaQuotient, PsiPowerTermsTo80)
{
    for (int k = 1; k <= 4; ++k) {
        const QSeries lhs = psi_power_term(k, 80);
        const QSeries rhs = eta_quotient_series(eta({{4, 8 * k}, {2, -4 * k}}), 80);
        EXPECT_TRUE(compare(lhs, rhs).equal) << k;
    }
}

TEST(GSeries, G2IsF)
{
    EXPECT_TRUE(compare(goswami_series(1, 9), QSeries::from_integers({0, 1, 0, 4, 0, 6, 0, 8, 0, 13}, 9)).equal);
    EXPECT_TRUE(compare(goswami_series(1, 200), F_series(200)).equal);
}

TEST(GSeries, MatchesSummandBruteForce)
{
    for (int k = 1; k <= 4; ++k) {
        EXPECT_TRUE(compare(goswami_series(k, 60), brute_goswami(k, 60)).equal) << k;
    }
}

TEST(GSeries, ConstantTermAndOrderZero)
{
    const QSeries g = goswami_series(2, 0);
    EXPECT_EQ(g.order(), 0);
    EXPECT_EQ(g[0], 0);
    EXPECT_EQ(goswami_series(2, 30)[0], 0);
}

TEST(GSeries, IntegerCoefficients)
{
    for (int k = 1; k <= 8; ++k) {
        EXPECT_TRUE(goswami_series(k, 80).has_integer_coefficients()) << k;
    }
}

TEST(SSeries, ConstantTermsAndSubstitution)
{
    EXPECT_EQ(sun_series(1, 10)[0], 1);
    EXPECT_EQ(sun_series(2, 10)[0], 1);
    const QSeries lhs = series_shift(substitute_qpower(sun_series(1, 30), 2), QExponent::whole(1));
    EXPECT_TRUE(compare(lhs, goswami_series(1, 60)).equal);
}

TEST(T, VanishesForKOne)
{
    EXPECT_TRUE(T_series(1, 60).is_zero());
}

TEST(T, LeadingCoefficientForKThree)
{
    const QSeries t = T_series(3, 20);
    EXPECT_EQ(t.coefficient_at(0), 0);
    EXPECT_EQ(t.coefficient_at(1), 1);
}
