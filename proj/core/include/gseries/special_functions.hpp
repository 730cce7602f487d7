#pragma once

// Numeric kernels used at CM points: pi, the AGM, Gamma at rationals, the
// Dedekind eta function, direct summation of G_{2k}, and the q -> 1 probes of
// the two series S_1 and S_2.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gseries/exact_core.hpp"
#include "gseries/highprec.hpp"

namespace gseries {

// Gauss-Legendre (Brent-Salamin) iteration.
HPReal pi(Precision p);

// Arithmetic-geometric mean. Throws NonPositiveInput unless a, b > 0.
HPReal agm(const HPReal& a, const HPReal& b, Precision p);

// Relative truncation error bound of Spouge's formula with parameter a:
// a^{-1/2} (2 pi)^{-(a + 1/2)}.
double spouge_error_bound(int a);
// Smallest Spouge parameter whose bound is below 10^{-digits}.
int spouge_parameter(int digits);

// Gamma(x) for real x not a non-positive integer.
HPReal gamma(const HPReal& x, Precision p);

// Gamma(j/n). Throws PoleAtNonPositiveInteger when j/n is an integer <= 0.
HPReal gamma_rational(std::int64_t j, std::int64_t n, Precision p);

// q^{1/24} prod_{n >= 1} (1 - q^n) with q = e^{2 pi i tau}; the product is
// cut once the dropped tail is below 10^{-(working digits + 5)}.
HPComplex eta_numeric(const HPComplex& tau, Precision p);

// e^{2 pi i tau}.
HPComplex q_from_tau(const HPComplex& tau, Precision p);

// Direct summation of the defining series of G_{2k} at |q| < 1.
HPComplex goswami_numeric(int k, const HPComplex& q, Precision p);

// Upper bound on sum_{m > N} |c_m| r^m for the coefficients c_m of G_{2k},
// using |c_m| <= ceil(m/2) * ||P||_1 * C(m+2k-1, 2k-1) (times 2^{2k-1} for
// even k), where P is the numerator polynomial of the active branch.
HPReal goswami_tail_bound(int k, std::int64_t N, const HPReal& r);

// Evaluates an exact series with integral leading exponent at numeric q.
HPComplex evaluate_series(const QSeries& s, const HPComplex& q, Precision p);
// Evaluates an exact series at tau (fractional leading exponents allowed).
HPComplex evaluate_series_at_tau(const QSeries& s, const HPComplex& tau, Precision p);

// Direct summation of S_1 or S_2 (which = 1 or 2) at real q in (0, 1).
HPReal sun_numeric(int which, const HPReal& q, Precision p);

struct LimitRow {
    Rational q;
    HPReal scaled;  // (1-q)^2 S_1(q) or (1-q)^4 S_2(q)
};

struct LimitReport {
    int which = 1;
    std::vector<LimitRow> rows;
    HPReal extrapolated;
    HPReal target;  // pi^2/4 or pi^4/16
    HPReal relative_error;
    double tolerance = 0;  // documented relative tolerance for this probe
    std::string method;

    bool within_tolerance() const { return relative_error.to_double() <= tolerance; }
};

// Documented relative tolerances of the two probes.
inline constexpr double kSunLimitTolerance1 = 1e-3;
inline constexpr double kSunLimitTolerance2 = 1e-2;

// qs strictly increasing in (0, 1). With two or more points the estimate is
// a linear Richardson extrapolation in h = 1 - q through the last two; with a
// single point it is the scaled value itself.
LimitReport sun_limit_probe(int which, const std::vector<Rational>& qs, Precision p);

void to_json(nlohmann::json& j, const LimitReport& r);

} // namespace gseries
