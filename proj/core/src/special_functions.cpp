#include "gseries/special_functions.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "gseries/combinatorics.hpp"
#include "gseries/errors.hpp"

namespace gseries {

namespace {

constexpr double kLog10TwoPi = 0.79817986835811505;
constexpr double kLog10E = 0.43429448190325183;

Precision with_guard(Precision p, int extra) { return {p.digits, p.guard_digits + extra}; }

// log10(1 - 10^x) for x < 0.
double log10_one_minus_pow10(double x) { return std::log1p(-std::pow(10.0, x)) * kLog10E; }

// Gamma(w + 1) for w > 0 by Spouge's formula.
HPReal spouge_gamma_plus_one(const HPReal& w, Precision p)
{
    const int target = p.working_digits() + 2;
    const int a = spouge_parameter(target);
    // The partial-fraction coefficients reach roughly 10^{0.55 a}; doubling
    // the working precision absorbs the cancellation in their sum.
    const Precision inner{2 * target + 10, 0};
    const HPReal x = w.to_precision(inner);

    HPReal sum = sqrt(pi(inner) * 2);
    HPReal factorial(1, inner);  // (k-1)!
    for (int k = 1; k < a; ++k) {
        if (k > 1) {
            factorial = factorial * static_cast<long>(k - 1);
        }
        const HPReal base(static_cast<long>(a - k), inner);
        HPReal ck = pow(base, Rational(2 * k - 1, 2)) * exp(base) / factorial;
        if (k % 2 == 0) {
            ck = -ck;
        }
        sum += ck / (x + static_cast<long>(k));
    }
    const HPReal shifted = x + static_cast<long>(a);
    const HPReal half(Rational(1, 2), inner);
    return (pow(shifted, x + half) * exp(-shifted) * sum).to_precision(p);
}

} // namespace

HPReal pi(Precision p)
{
    const Precision inner = with_guard(p, 10);
    HPReal a(1, inner);
    HPReal b = sqrt(HPReal(Rational(1, 2), inner));
    HPReal t(Rational(1, 4), inner);
    HPReal power(1, inner);
    const HPReal eps = pow10(-inner.working_digits(), inner);
    for (int iter = 0; iter < 64 && abs(a - b) > eps; ++iter) {
        HPReal next_a = (a + b) / 2;
        b = sqrt(a * b);
        const HPReal d = a - next_a;
        t -= power * d * d;
        power = power * 2;
        a = std::move(next_a);
    }
    const HPReal s = a + b;
    return (s * s / (t * 4)).to_precision(p);
}

HPReal agm(const HPReal& a0, const HPReal& b0, Precision p)
{
    if (a0.sign() <= 0 || b0.sign() <= 0) {
        throw NonPositiveInput("agm requires positive arguments");
    }
    const Precision inner = with_guard(p, 5);
    HPReal a = a0.to_precision(inner);
    HPReal b = b0.to_precision(inner);
    const HPReal eps = pow10(-inner.working_digits(), inner);
    for (int iter = 0; iter < 200 && abs(a - b) > eps * a; ++iter) {
        HPReal next_a = (a + b) / 2;
        b = sqrt(a * b);
        a = std::move(next_a);
    }
    return a.to_precision(p);
}

double spouge_error_bound(int a)
{
    return std::pow(10.0, -0.5 * std::log10(static_cast<double>(a)) - (a + 0.5) * kLog10TwoPi);
}

int spouge_parameter(int digits)
{
    int a = std::max(2, static_cast<int>(std::ceil(digits / kLog10TwoPi)) - 2);
    while (-0.5 * std::log10(static_cast<double>(a)) - (a + 0.5) * kLog10TwoPi >= -digits) {
        ++a;
    }
    return a;
}

HPReal gamma(const HPReal& x, Precision p)
{
    if (x.sign() <= 0 && mpfr_integer_p(x.get())) {
        throw PoleAtNonPositiveInteger("Gamma has a pole at non-positive integers");
    }
    const Precision inner = with_guard(p, 3);
    HPReal z = x.to_precision(inner);
    if (z.sign() < 0) {
        // Gamma(z) = Gamma(z + m) / (z (z+1) ... (z+m-1)) with z + m in (0, 1].
        HPReal denom(1, inner);
        while (z.sign() < 0) {
            denom *= z;
            z = z + 1;
        }
        if (z.is_zero()) {
            throw PoleAtNonPositiveInteger("Gamma has a pole at non-positive integers");
        }
        return (gamma(z, inner) / denom).to_precision(p);
    }
    if (z <= HPReal(1, inner)) {
        return (spouge_gamma_plus_one(z, inner) / z).to_precision(p);
    }
    return spouge_gamma_plus_one(z - 1, inner).to_precision(p);
}

HPReal gamma_rational(std::int64_t j, std::int64_t n, Precision p)
{
    if (n < 1) {
        throw InvalidArgument("gamma_rational requires n >= 1");
    }
    if (j <= 0 && j % n == 0) {
        throw PoleAtNonPositiveInteger("Gamma(" + std::to_string(j) + "/" + std::to_string(n) +
                                       ") is a pole");
    }
    const Rational x = make_rational(Integer(static_cast<long>(j)), Integer(static_cast<long>(n)));
    return gamma(HPReal(x, with_guard(p, 3)), p);
}

HPComplex q_from_tau(const HPComplex& tau, Precision p)
{
    const HPReal two_pi = pi(p) * 2;
    return exp(HPComplex(-two_pi * tau.imag(), two_pi * tau.real()));
}

HPComplex eta_numeric(const HPComplex& tau, Precision p)
{
    if (tau.imag().sign() <= 0) {
        throw NotInUpperHalfPlane("eta requires Im(tau) > 0");
    }
    const Precision inner = with_guard(p, 5);
    const HPComplex q = q_from_tau(HPComplex(tau.real().to_precision(inner), tau.imag().to_precision(inner)), inner);
    const double log10r = -2 * M_PI * tau.imag().to_double() * kLog10E;
    const double goal = -(inner.working_digits() + 5);
    // |prod_{n > M}(1 - q^n) - 1| <= 2 r^{M+1} / (1 - r)^2 once that is small.
    const double fixed = std::log10(2.0) - 2 * log10_one_minus_pow10(log10r);
    std::int64_t M = 1;
    while ((M + 1) * log10r + fixed >= goal) {
        ++M;
    }

    const HPComplex one(HPReal(1, inner));
    HPComplex product = one;
    HPComplex qn = q;
    for (std::int64_t n = 1; n <= M; ++n) {
        product *= one - qn;
        qn *= q;
    }
    const HPReal two_pi_24 = pi(inner) / 12;
    const HPComplex q24 = exp(HPComplex(-two_pi_24 * tau.imag(), two_pi_24 * tau.real()));
    const HPComplex out = q24 * product;
    return {out.real().to_precision(p), out.imag().to_precision(p)};
}

namespace {

HPComplex complex_from(const HPReal& re) { return HPComplex(re, HPReal(re.precision())); }

} // namespace

HPComplex goswami_numeric(int k, const HPComplex& q, Precision p)
{
    if (k < 1) {
        throw InvalidArgument("k must be a positive integer");
    }
    const Precision inner = with_guard(p, 5);
    const HPReal r = q.abs().to_precision(inner);
    if (r >= HPReal(1, inner)) {
        throw NotInUnitDisk("G_{2k} requires |q| < 1");
    }
    if (r.is_zero()) {
        return HPComplex(p);
    }

    const GoswamiPolynomials polys = build_polynomials(k);
    const bool odd = k % 2 == 1;
    const Poly& poly = odd ? polys.odd : polys.even;
    std::vector<HPReal> coeffs;
    Rational l1 = 0;
    for (const auto& c : poly.coefficients()) {
        coeffs.emplace_back(c, inner);
        l1 += abs(c);
    }
    const double log10_l1 = HPReal(l1, Precision{20, 0}).log10_abs();
    const double log10r = r.log10_abs();
    const double scale_log = odd ? 0.0 : (2 * k - 1) * std::log10(2.0);
    const std::int64_t stride = odd ? 2 : 4;
    const double tail_factor = -log10_one_minus_pow10(stride * log10r);
    const double goal = -(inner.working_digits() + 5);

    const HPComplex qc(q.real().to_precision(inner), q.imag().to_precision(inner));
    const HPComplex one = complex_from(HPReal(1, inner));
    const HPComplex step = pow(qc, stride);
    HPComplex x = odd ? qc : qc * qc;  // q^{2n+1} or q^{4n+2}
    HPComplex sum(inner);

    for (std::int64_t n = 0;; ++n) {
        const std::int64_t e = odd ? 2 * n + 1 : 4 * n + 2;
        const double denom_log = odd ? log10_one_minus_pow10(2 * e * log10r) : log10_one_minus_pow10(e * log10r);
        const double bound = e * log10r + log10_l1 - 2 * k * denom_log + tail_factor + scale_log;
        if (bound < goal) {
            break;
        }
        HPComplex value = complex_from(coeffs.back());
        for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
            value = value * x + complex_from(*it);
        }
        const HPComplex base = odd ? one - x * x : one - x;
        sum += x * value / pow(base, 2 * k);
        x *= step;
    }
    if (!odd) {
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(2 * k - 1));
        sum = sum * HPReal(Rational(scale), inner);
    }
    return {sum.real().to_precision(p), sum.imag().to_precision(p)};
}

HPReal goswami_tail_bound(int k, std::int64_t N, const HPReal& r)
{
    if (k < 1 || N < 0) {
        throw InvalidArgument("goswami_tail_bound requires k >= 1 and N >= 0");
    }
    const Precision lo{30, 0};
    const GoswamiPolynomials polys = build_polynomials(k);
    const Poly& poly = k % 2 == 1 ? polys.odd : polys.even;
    Rational l1 = 0;
    for (const auto& c : poly.coefficients()) {
        l1 += abs(c);
    }
    if (k % 2 == 0) {
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(2 * k - 1));
        l1 *= scale;
    }
    const HPReal rr = r.to_precision(lo);
    auto term = [&](std::int64_t m) {
        return HPReal(Rational((m + 1) / 2) * l1 * Rational(binomial(m + 2 * k - 1, 2 * k - 1)), lo) * pow(rr, m);
    };

    HPReal sum(lo);
    HPReal current = term(N + 1);
    for (std::int64_t m = N + 1;; ++m) {
        sum += current;
        HPReal next = term(m + 1);
        const HPReal ratio = next / current;
        if (ratio < HPReal(1, lo)) {
            // Ratios decrease in m, so the remainder is at most next / (1 - ratio).
            const HPReal remainder = next / (HPReal(1, lo) - ratio);
            if (remainder <= sum * pow10(-25, lo)) {
                return sum + remainder;
            }
        }
        current = std::move(next);
    }
}

HPComplex evaluate_series(const QSeries& s, const HPComplex& q, Precision p)
{
    const QExponent lead = s.leading_exponent();
    if (!lead.is_integral()) {
        throw ExponentError("evaluate_series needs an integral leading exponent; use evaluate_series_at_tau");
    }
    const Precision inner = with_guard(p, 3);
    const HPComplex qc(q.real().to_precision(inner), q.imag().to_precision(inner));
    HPComplex acc(inner);
    const auto cs = s.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = acc * qc + complex_from(HPReal(*it, inner));
    }
    acc *= pow(qc, lead.whole_part());
    return {acc.real().to_precision(p), acc.imag().to_precision(p)};
}

HPComplex evaluate_series_at_tau(const QSeries& s, const HPComplex& tau, Precision p)
{
    const Precision inner = with_guard(p, 3);
    const QSeries body = series_shift(s, -s.leading_exponent());
    const HPComplex value = evaluate_series(body, q_from_tau(tau, inner), inner);
    const HPReal angle = pi(inner) * 2 * HPReal(s.leading_exponent().to_rational(), inner);
    const HPComplex prefactor = exp(HPComplex(-angle * tau.imag(), angle * tau.real()));
    const HPComplex out = prefactor * value;
    return {out.real().to_precision(p), out.imag().to_precision(p)};
}

HPReal sun_numeric(int which, const HPReal& q, Precision p)
{
    if (which != 1 && which != 2) {
        throw InvalidArgument("series index must be 1 (S_1) or 2 (S_2)");
    }
    const Precision inner = with_guard(p, 5);
    const HPReal one(1, inner);
    const HPReal qq = q.to_precision(inner);
    if (qq.sign() <= 0 || qq >= one) {
        throw InvalidArgument("sun_numeric requires 0 < q < 1");
    }
    const double log10q = qq.log10_abs();
    const double log10_h = log10_one_minus_pow10(log10q);
    const double goal = -(inner.working_digits() + 5);

    HPReal sum(inner);
    HPReal qn = one;          // q^n
    HPReal x = qq;            // q^{2n+1}
    const HPReal q2 = qq * qq;
    for (std::int64_t n = 0;; ++n) {
        // Tail bounds: 2 q^n / (1-q)^3 and 6 q^{2n} / ((1-q)^4 (1-q^2)).
        const double bound = which == 1 ? n * log10q + std::log10(2.0) - 3 * log10_h
                                        : 2 * n * log10q + std::log10(6.0) - 4 * log10_h -
                                              log10_one_minus_pow10(2 * log10q);
        if (bound < goal) {
            break;
        }
        const HPReal d = one - x;
        if (which == 1) {
            const HPReal d2 = d * d;
            sum += qn * (one + x) / d2;
            qn *= qq;
        } else {
            const HPReal d2 = d * d;
            sum += qn * (one + x * 4 + x * x) / (d2 * d2);
            qn *= q2;
        }
        x *= q2;
    }
    return sum.to_precision(p);
}

LimitReport sun_limit_probe(int which, const std::vector<Rational>& qs, Precision p)
{
    if (which != 1 && which != 2) {
        throw InvalidArgument("series index must be 1 (S_1) or 2 (S_2)");
    }
    if (qs.empty()) {
        throw InvalidArgument("sun_limit_probe needs at least one q");
    }
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (sgn(qs[i]) <= 0 || qs[i] >= 1 || (i > 0 && qs[i] <= qs[i - 1])) {
            throw InvalidArgument("q values must be strictly increasing in (0, 1)");
        }
    }
    const int power = which == 1 ? 2 : 4;
    LimitReport report;
    report.which = which;
    for (const auto& q : qs) {
        const HPReal h(Rational(1 - q), p);
        report.rows.push_back({q, pow(h, power) * sun_numeric(which, HPReal(q, p), p)});
    }
    if (report.rows.size() == 1) {
        report.extrapolated = report.rows.front().scaled;
        report.method = "single point, no extrapolation";
    } else {
        const auto& a = report.rows[report.rows.size() - 2];
        const auto& b = report.rows.back();
        const HPReal ha(Rational(1 - a.q), p);
        const HPReal hb(Rational(1 - b.q), p);
        report.extrapolated = (ha * b.scaled - hb * a.scaled) / (ha - hb);
        report.method = "linear Richardson extrapolation in h = 1 - q through the two largest q";
    }
    const HPReal pi_value = pi(p);
    report.target = which == 1 ? pow(pi_value, 2) / 4 : pow(pi_value, 4) / 16;
    report.relative_error = abs(report.extrapolated - report.target) / report.target;
    report.tolerance = which == 1 ? kSunLimitTolerance1 : kSunLimitTolerance2;
    return report;
}

void to_json(nlohmann::json& j, const LimitReport& r)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"q", to_fraction_string(row.q)}, {"scaled", row.scaled.to_decimal(20)}});
    }
    j = nlohmann::json{{"schema", "gseries.limit_report/1"},
                       {"which", r.which},
                       {"rows", std::move(rows)},
                       {"extrapolated", r.extrapolated.to_decimal(20)},
                       {"target", r.target.to_decimal(20)},
                       {"relative_error", r.relative_error.to_scientific(3)},
                       {"tolerance", r.tolerance},
                       {"digits", 20},
                       {"method", r.method},
                       {"within_tolerance", r.within_tolerance()}};
}

} // namespace gseries
