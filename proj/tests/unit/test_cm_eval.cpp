#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "gseries/cm_eval.hpp"
#include "gseries/combinatorics.hpp"
#include "gseries/errors.hpp"
#include "gseries/modular.hpp"
#include "gseries/special_functions.hpp"
#include "support/oracles.hpp"

using namespace gseries;

namespace {

const Precision P50{50, 10};

} // namespace

TEST(Discriminant, FundamentalTest)
{
    for (std::int64_t D : {-3, -4, -7, -8, -11, -15, -19, -20, -23, -24}) {
        EXPECT_TRUE(is_fundamental(D)) << D;
    }
    for (std::int64_t D : {-1, -2, -12, -16, -27, 5}) {
        EXPECT_FALSE(is_fundamental(D)) << D;
    }
}

TEST(Discriminant, DataForMinusFour)
{
    const DiscriminantData d = discriminant_data(-4);
    EXPECT_EQ(d.h, 1);
    EXPECT_EQ(d.h_prime, make_rational(1, 2));
    EXPECT_EQ(d.chi, (std::vector<int>{1, 0, -1}));
    EXPECT_EQ(discriminant_data(-3).h_prime, make_rational(1, 3));
    EXPECT_EQ(discriminant_data(-23).h, 3);
    EXPECT_EQ(discriminant_data(-23).h_prime, 3);
    EXPECT_THROW(discriminant_data(-12), NotFundamental);
}

TEST(Discriminant, ClassNumbersMatchDirichletFormula)
{
    for (std::int64_t D = -3; D >= -400; --D) {
        if (is_fundamental(D)) {
            EXPECT_EQ(class_number(D), oracle::class_number_dirichlet(D)) << D;
        }
    }
}

TEST(Discriminant, KroneckerMatchesEulerCriterion)
{
    for (std::int64_t D : {-3, -4, -7, -8, -15, -20, -23, -84}) {
        for (std::int64_t n = 1; n < 200; ++n) {
            EXPECT_EQ(kronecker(D, n), oracle::character(D, n)) << D << " " << n;
        }
    }
}

TEST(Omega, MinusFourClosedForm)
{
    const OmegaConstants c = omega_constants(discriminant_data(-4), P50);
    const HPReal expect = pow(gamma_rational(1, 4, P50), 2) / (sqrt(HPReal(2, P50)) * pow(pi(P50), Rational(3, 2)));
    EXPECT_TRUE(agree_to_digits(c.omega, expect, 40));
    const HPComplex i(HPReal(P50), HPReal(1, P50));
    EXPECT_TRUE(agree_to_digits(sqrt(c.Omega), eta_numeric(i, P50).real(), 50 - 8));
}

TEST(Omega, RatioToCapitalOmega)
{
    for (std::int64_t D = -3; D >= -20; --D) {
        if (!is_fundamental(D)) {
            continue;
        }
        const OmegaConstants c = omega_constants(discriminant_data(D), P50);
        for (long k = 1; k <= 3; ++k) {
            const HPReal lhs = pow(c.omega, 2 * k) / pow(c.Omega, 2 * k);
            const HPReal rhs = pow(HPReal(2 * (-D), P50), k);
            EXPECT_TRUE(agree_to_digits(lhs, rhs, 35)) << D << " k=" << k;
        }
    }
}

TEST(EtaTable, AllFourValues)
{
    for (const auto& row : eta_value_table(P50)) {
        EXPECT_LT(row.error, pow10(-40, P50)) << row.label;
    }
}

TEST(QuadSqrt2, Arithmetic)
{
    const QuadSqrt2 a{-1, 1};
    EXPECT_EQ(a * a, (QuadSqrt2{3, -2}));
    EXPECT_EQ(a * a.inverse(), (QuadSqrt2{1, 0}));
    EXPECT_EQ(a.pow(-1), (QuadSqrt2{1, 1}));
    EXPECT_EQ(a.pow(4), (QuadSqrt2{17, -12}));
    EXPECT_EQ((QuadSqrt2{3, -2}).to_string(), "3 - 2*sqrt(2)");
}

// The corollary coefficients expanded by hand from the alphas.
TEST(Corollary, CoefficientsExactForKThreeAndFour)
{
    EXPECT_EQ(corollary_coefficient(1, CorollaryPoint::ExpMinusPi), (QuadSqrt2{make_rational(1, 128), 0}));
    EXPECT_EQ(corollary_coefficient(3, CorollaryPoint::ExpMinusPi), (QuadSqrt2{make_rational(3, 8192), 0}));
    // k=3 at e^{-2pi}: 256 a^6/2^27 + 2^{-15} a^{-6} (a^4/16 - 16 a^8/256), a = sqrt2 - 1.
    EXPECT_EQ(corollary_coefficient(3, CorollaryPoint::ExpMinus2Pi),
              (QuadSqrt2{make_rational(99, 524288), make_rational(-33, 262144)}));
    EXPECT_EQ(omega_coefficient(4, CorollaryPoint::ExpMinus2Pi),
              (QuadSqrt2{make_rational(9297, 4194304), make_rational(-819, 524288)}));
}

TEST(Corollary, TenDigitValues)
{
    const Precision p{64, 10};
    const HPReal tol = pow10(-10, p);
    EXPECT_LT(abs(corollary_closed_form(3, CorollaryPoint::ExpMinusPi, p) - HPReal::parse("0.0633804556", p)), tol);
    EXPECT_LT(abs(corollary_closed_form(3, CorollaryPoint::ExpMinus2Pi, p) - HPReal::parse("0.0018690318", p)), tol);
    EXPECT_LT(abs(corollary_closed_form(4, CorollaryPoint::ExpMinusPi, p) - HPReal::parse("0.2980189122", p)), tol);
    EXPECT_LT(abs(corollary_closed_form(4, CorollaryPoint::ExpMinus2Pi, p) - HPReal::parse("0.0004465790", p)), tol);
}

TEST(EvaluateAtCM, MatchesClosedFormAndRecognizes)
{
    const DiscriminantData d = discriminant_data(-4);
    for (int k = 1; k <= 4; ++k) {
        for (const char* label : {"i/2", "i"}) {
            const CMPoint tau = CMPoint::from_label(label);
            const CMEvaluationReport r = evaluate_at_cm(k, tau, d, P50);
            ASSERT_TRUE(r.closed_form_match.has_value());
            EXPECT_TRUE(*r.closed_form_match) << k << " " << label;
            ASSERT_TRUE(r.recognized.has_value()) << k << " " << label;
            EXPECT_EQ(r.recognized->value, omega_coefficient(k, *tau.corollary_point()));
            // Re-evaluating the recognized number times omega^{2k} reproduces the value.
            EXPECT_TRUE(agree_to_digits(r.recognized->value.value(P50) * r.omega_power, r.value.real(), 38));
        }
    }
}

TEST(EvaluateAtCM, KOneAtHalfI)
{
    const CMEvaluationReport r = evaluate_at_cm(1, CMPoint::from_label("i/2"), discriminant_data(-4), P50);
    const HPReal expect = pow(gamma_rational(1, 4, P50), 4) / pow(pi(P50), 3) / 128;
    EXPECT_TRUE(agree_to_digits(r.value.real(), expect, 38));
}

TEST(EvaluateAtCM, OtherPointsHaveNoClosedForm)
{
    const CMEvaluationReport r = evaluate_at_cm(2, CMPoint::from_label("2i"), discriminant_data(-4), P50);
    EXPECT_FALSE(r.closed_form_match.has_value());
    EXPECT_TRUE(r.recognition_attempted);
}

TEST(EvaluateAtCM, DomainErrors)
{
    const DiscriminantData d = discriminant_data(-4);
    EXPECT_THROW(evaluate_at_cm(1, CMPoint{0, -1, -1}, d, P50), NotInUpperHalfPlane);
    EXPECT_THROW(evaluate_at_cm(1, CMPoint{0, 1, -3}, d, P50), NotInField);
    // 2i = sqrt(-4) lies in the same field as i.
    EXPECT_NO_THROW(evaluate_at_cm(1, CMPoint{0, 1, -4}, d, Precision{30, 10}));
    EXPECT_THROW(CMPoint::from_label("3i"), InvalidArgument);
}

TEST(EvaluateAtCM, JsonReport)
{
    const CMEvaluationReport r = evaluate_at_cm(3, CMPoint::from_label("i/2"), discriminant_data(-4), P50);
    const nlohmann::json j = r;
    EXPECT_EQ(j["schema"], "gseries.cm_report/1");
    EXPECT_EQ(j["tau"]["y"], "1/2");
    EXPECT_EQ(j["recognized"]["relation"], (nlohmann::json{"-3", "0", "1024"}));
    EXPECT_EQ(j["closed_form_match"], true);
    EXPECT_EQ(j["value"]["re"].get<std::string>().substr(0, 12), "0.0633804556");
}
