#include "gseries/cm_eval.hpp"

#include <utility>

#include <nlohmann/json.hpp>

#include "gseries/combinatorics.hpp"
#include "gseries/errors.hpp"
#include "gseries/modular.hpp"
#include "gseries/special_functions.hpp"

namespace gseries {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

bool is_squarefree(std::int64_t n)
{
    n = n < 0 ? -n : n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) {
            return false;
        }
        if (n % p == 0) {
            n /= p;
        }
    }
    return true;
}

// Signed squarefree kernel: -12 -> -3, -4 -> -1.
std::int64_t squarefree_part(std::int64_t n)
{
    const std::int64_t sign = n < 0 ? -1 : 1;
    n *= sign;
    std::int64_t out = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2 == 1) {
            out *= p;
        }
    }
    return sign * out * n;
}

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        a = std::exchange(b, a % b);
    }
    return a;
}

int jacobi(std::int64_t a, std::int64_t m)
{
    // m odd, positive
    a = mod(a, m);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = m % 8;
            if (r == 3 || r == 5) {
                result = -result;
            }
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) {
            result = -result;
        }
        a %= m;
    }
    return m == 1 ? result : 0;
}

Integer power_of_two(std::int64_t e)
{
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return out;
}

} // namespace

bool is_fundamental(std::int64_t D)
{
    if (D >= 0) {
        return false;
    }
    if (mod(D, 4) == 1) {
        return is_squarefree(D);
    }
    if (mod(D, 4) == 0) {
        const std::int64_t m = D / 4;
        return (mod(m, 4) == 2 || mod(m, 4) == 3) && is_squarefree(m);
    }
    return false;
}

std::int64_t class_number(std::int64_t D)
{
    if (D >= 0 || (mod(D, 4) != 0 && mod(D, 4) != 1)) {
        throw InvalidArgument("class_number needs a negative discriminant D = 0, 1 mod 4");
    }
    std::int64_t count = 0;
    for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b - D;
            if (num % (4 * a) != 0) {
                continue;
            }
            const std::int64_t c = num / (4 * a);
            if (c < a || (a == c && b < 0)) {
                continue;
            }
            if (gcd(gcd(a, b), c) == 1) {
                ++count;
            }
        }
    }
    return count;
}

int kronecker(std::int64_t D, std::int64_t n)
{
    if (n < 1) {
        throw InvalidArgument("kronecker symbol needs n >= 1");
    }
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        const std::int64_t r = mod(D, 8);
        if (r % 2 == 0) {
            return 0;
        }
        if (r == 3 || r == 5) {
            result = -result;
        }
    }
    return n == 1 ? result : result * jacobi(D, n);
}

int DiscriminantData::chi_at(std::int64_t j) const
{
    const std::int64_t n = -D;
    const std::int64_t r = mod(j, n);
    return r == 0 ? 0 : chi[static_cast<std::size_t>(r - 1)];
}

DiscriminantData discriminant_data(std::int64_t D)
{
    if (D >= 0) {
        throw InvalidArgument("discriminant must be negative");
    }
    if (!is_fundamental(D)) {
        throw NotFundamental(std::to_string(D) + " is not a fundamental discriminant");
    }
    DiscriminantData d;
    d.D = D;
    d.is_fundamental = true;
    d.h = class_number(D);
    d.h_prime = D == -3 ? Rational(1, 3) : D == -4 ? Rational(1, 2) : Rational(d.h);
    for (std::int64_t j = 1; j < -D; ++j) {
        d.chi.push_back(kronecker(D, j));
    }
    return d;
}

OmegaConstants omega_constants(const DiscriminantData& d, Precision p)
{
    if (!d.is_fundamental) {
        throw NotFundamental(std::to_string(d.D) + " is not a fundamental discriminant");
    }
    const Precision inner{p.digits, p.guard_digits + 10};
    const std::int64_t n = -d.D;
    HPReal product(1, inner);
    for (std::int64_t j = 1; j < n; ++j) {
        const int c = d.chi_at(j);
        if (c == 1) {
            product *= gamma_rational(j, n, inner);
        } else if (c == -1) {
            product /= gamma_rational(j, n, inner);
        }
    }
    Rational exponent = 1 / (2 * d.h_prime);
    exponent.canonicalize();
    const HPReal root = pow(product, exponent);
    const HPReal pi_value = pi(inner);
    const Rational minus_half(-1, 2);
    const HPReal omega = pow(pi_value, minus_half) * root;
    const HPReal Omega = pow(pi_value * 2 * static_cast<long>(n), minus_half) * root;
    return {omega.to_precision(p), Omega.to_precision(p)};
}

// -------------------------------------------------------------- Q(sqrt 2)

QuadSqrt2 QuadSqrt2::inverse() const
{
    const Rational norm = a * a - 2 * b * b;
    if (norm == 0) {
        throw InvalidArgument("zero has no inverse in Q(sqrt 2)");
    }
    return {a / norm, -b / norm};
}

QuadSqrt2 QuadSqrt2::pow(std::int64_t n) const
{
    if (n < 0) {
        return inverse().pow(-n);
    }
    QuadSqrt2 result{1, 0};
    QuadSqrt2 base = *this;
    while (n > 0) {
        if (n & 1) {
            result = result * base;
        }
        base = base * base;
        n >>= 1;
    }
    return result;
}

HPReal QuadSqrt2::value(Precision p) const
{
    return HPReal(a, p) + HPReal(b, p) * sqrt(HPReal(2, p));
}

std::string QuadSqrt2::to_string() const
{
    if (b == 0) {
        return gseries::to_string(a);
    }
    const std::string root = (abs(b) == 1 ? std::string() : gseries::to_string(Rational(abs(b))) + "*") + "sqrt(2)";
    if (a == 0) {
        return (sgn(b) < 0 ? "-" : "") + root;
    }
    return gseries::to_string(a) + (sgn(b) < 0 ? " - " : " + ") + root;
}

std::string to_string(CorollaryPoint point)
{
    return point == CorollaryPoint::ExpMinusPi ? "e^{-pi}" : "e^{-2pi}";
}

QuadSqrt2 corollary_coefficient(int k, CorollaryPoint point)
{
    if (k < 1) {
        throw InvalidArgument("k must be a positive integer");
    }
    const Rational Z = zeta_constant(k);
    const std::vector<Rational> alpha = k >= 2 ? alphas(k, 2 * k + 10) : std::vector<Rational>{};
    const QuadSqrt2 a{-1, 1};  // sqrt 2 - 1

    if (point == CorollaryPoint::ExpMinusPi) {
        Rational sum = 0;
        for (std::size_t j = 1; j <= alpha.size(); ++j) {
            sum += alpha[j - 1] / Rational(power_of_two(5 * static_cast<std::int64_t>(j)));
        }
        const Rational c = Z / Rational(power_of_two(7 * k)) + sum / Rational(power_of_two(2 * k));
        return {c, 0};
    }
    QuadSqrt2 sum{0, 0};
    for (std::size_t j = 1; j <= alpha.size(); ++j) {
        const auto jj = static_cast<std::int64_t>(j);
        sum = sum + a.pow(4 * jj) * (alpha[j - 1] / Rational(power_of_two(4 * jj)));
    }
    return a.pow(2 * k) * (Z / Rational(power_of_two(9 * k))) +
           a.pow(-2 * k) * sum * (Rational(1) / Rational(power_of_two(5 * k)));
}

QuadSqrt2 omega_coefficient(int k, CorollaryPoint point)
{
    return corollary_coefficient(k, point) * Rational(power_of_two(k));
}

HPReal corollary_closed_form(int k, CorollaryPoint point, Precision p)
{
    const Precision inner{p.digits, p.guard_digits + 5};
    const HPReal g = gamma_rational(1, 4, inner);
    const HPReal base = pow(g, 4) / pow(pi(inner), 3);
    return (corollary_coefficient(k, point).value(inner) * pow(base, static_cast<long>(k))).to_precision(p);
}

// -------------------------------------------------------------- CM points

CMPoint CMPoint::from_label(std::string_view label)
{
    if (label == "i/2") {
        return {0, Rational(1, 2), -1};
    }
    if (label == "i") {
        return {0, 1, -1};
    }
    if (label == "2i") {
        return {0, 2, -1};
    }
    if (label == "4i") {
        return {0, 4, -1};
    }
    throw InvalidArgument("unknown CM point label '" + std::string(label) + "' (expected i/2, i, 2i or 4i)");
}

HPComplex CMPoint::to_complex(Precision p) const
{
    if (radicand >= 0) {
        throw NotInUpperHalfPlane("radicand must be negative");
    }
    return {HPReal(x, p), HPReal(y, p) * sqrt(HPReal(static_cast<long>(-radicand), p))};
}

std::optional<CorollaryPoint> CMPoint::corollary_point() const
{
    if (x != 0 || radicand >= 0) {
        return std::nullopt;
    }
    // Im(tau)^2 = y^2 |radicand|.
    const Rational im2 = y * y * Rational(-radicand);
    if (y <= 0) {
        return std::nullopt;
    }
    if (im2 == Rational(1, 4)) {
        return CorollaryPoint::ExpMinusPi;
    }
    if (im2 == 1) {
        return CorollaryPoint::ExpMinus2Pi;
    }
    return std::nullopt;
}

std::string CMPoint::to_string() const
{
    std::string out = gseries::to_string(x) + " + " + gseries::to_string(y) + "*sqrt(" + std::to_string(radicand) + ")";
    return out;
}

Integer default_height_bound() { return power_of_two(40); }

CMEvaluationReport evaluate_at_cm(int k, const CMPoint& tau, const DiscriminantData& d, Precision p)
{
    if (k < 1) {
        throw InvalidArgument("k must be a positive integer");
    }
    if (tau.radicand >= 0 || sgn(tau.y) <= 0) {
        throw NotInUpperHalfPlane("tau = " + tau.to_string() + " is not in the upper half-plane");
    }
    if (squarefree_part(tau.radicand) != squarefree_part(d.D)) {
        throw NotInField("tau = " + tau.to_string() + " is not in Q(sqrt(" + std::to_string(d.D) + "))");
    }

    CMEvaluationReport report;
    report.k = k;
    report.tau = tau;
    report.D = d.D;
    report.precision = p;

    const Precision inner{p.digits, p.guard_digits + 5};
    const HPComplex z = tau.to_complex(inner);
    const HPComplex value = goswami_numeric(k, q_from_tau(z, inner), inner);
    const HPReal omega = omega_constants(d, inner).omega;
    const HPReal omega_power = pow(omega, static_cast<long>(2 * k));
    const HPComplex ratio = value * (HPReal(1, inner) / omega_power);

    report.value = {value.real().to_precision(p), value.imag().to_precision(p)};
    report.omega_power = omega_power.to_precision(p);
    report.ratio = {ratio.real().to_precision(p), ratio.imag().to_precision(p)};

    const HPReal scale = std::max(HPReal(1, inner), abs(ratio.real()));
    const bool real_ratio = abs(ratio.imag()) <= pow10(20 - p.digits, inner) * scale;
    if (d.D == -4 && real_ratio && p.digits >= 40) {
        report.recognition_attempted = true;
        if (auto rel = recognize_quadratic(ratio.real(), 2, default_height_bound(), p)) {
            const auto [ra, rb] = rel->solved_for_x();
            report.recognized = RecognizedValue{"Q(sqrt 2)", *rel, QuadSqrt2{ra, rb}};
        }
    }

    if (const auto point = tau.corollary_point()) {
        const HPReal closed = corollary_closed_form(k, *point, inner);
        report.closed_form = closed.to_precision(p);
        report.closed_form_match = agree_to_digits(value.real(), closed, p.digits - 12) &&
                                   abs(value.imag()) <= pow10(12 - p.digits, inner);
    }
    return report;
}

std::vector<EtaTableRow> eta_value_table(Precision p)
{
    const Precision inner{p.digits, p.guard_digits + 5};
    const OmegaConstants omegas = omega_constants(discriminant_data(-4), inner);
    const HPReal root = sqrt(omegas.Omega);
    const HPReal pi_value = pi(inner);
    const HPReal g34 = gamma_rational(3, 4, inner);
    const HPReal two(2, inner);
    const HPReal a = sqrt(two) - 1;
    const HPReal pi_quarter = pow(pi_value, Rational(1, 4));

    struct Spec {
        const char* label;
        Rational y;
        HPReal omega_multiple;
        HPReal ramanujan;
    };
    // eta(tau) = q^{1/24} f(-q); the e^{pi/24}-type factors cancel q^{1/24}.
    const std::vector<Spec> specs{
        {"i/2", Rational(1, 2), pow(two, Rational(1, 8)), pi_quarter / (pow(two, Rational(3, 8)) * g34)},
        {"i", 1, HPReal(1, inner), pi_quarter / (pow(two, Rational(1, 2)) * g34)},
        {"2i", 2, pow(two, Rational(-3, 8)), pi_quarter / (pow(two, Rational(7, 8)) * g34)},
        {"4i", 4, pow(a, Rational(1, 4)) / pow(two, Rational(13, 16)),
         pi_quarter * pow(a, Rational(1, 4)) / (pow(two, Rational(21, 16)) * g34)},
    };

    std::vector<EtaTableRow> rows;
    for (const auto& s : specs) {
        const HPComplex tau(HPReal(inner), HPReal(s.y, inner));
        const HPReal eta = eta_numeric(tau, inner).real();
        const HPReal predicted = s.omega_multiple * root;
        HPReal error = abs(eta - predicted);
        const HPReal other = abs(eta - s.ramanujan);
        if (other > error) {
            error = other;
        }
        rows.push_back({s.label, eta.to_precision(p), predicted.to_precision(p), s.ramanujan.to_precision(p),
                        error.to_precision(p)});
    }
    return rows;
}

// ------------------------------------------------------------------- JSON

void to_json(nlohmann::json& j, const DiscriminantData& d)
{
    j = nlohmann::json{{"schema", "gseries.discriminant/1"},
                       {"D", d.D},
                       {"is_fundamental", d.is_fundamental},
                       {"h", d.h},
                       {"h_prime", to_fraction_string(d.h_prime)},
                       {"chi", d.chi}};
}

namespace {

nlohmann::json complex_json(const HPComplex& z, int digits)
{
    return {{"re", z.real().to_decimal(digits)}, {"im", z.imag().to_decimal(digits)}};
}

} // namespace

void to_json(nlohmann::json& j, const CMEvaluationReport& r)
{
    const int digits = r.precision.digits;
    j = nlohmann::json{{"schema", "gseries.cm_report/1"},
                       {"k", r.k},
                       {"tau",
                        {{"x", to_fraction_string(r.tau.x)},
                         {"y", to_fraction_string(r.tau.y)},
                         {"radicand", r.tau.radicand}}},
                       {"D", r.D},
                       {"digits", digits},
                       {"value", complex_json(r.value, digits)},
                       {"omega_power", r.omega_power.to_decimal(digits)},
                       {"ratio", complex_json(r.ratio, digits)},
                       {"recognition_attempted", r.recognition_attempted}};
    if (r.recognized) {
        const auto& rel = r.recognized->relation;
        j["recognized"] = {{"field", r.recognized->field},
                           {"relation", {rel.p.get_str(), rel.q.get_str(), rel.r.get_str()}},
                           {"relation_form", "p + q*sqrt(2) + r*ratio = 0"},
                           {"value", {{"a", to_fraction_string(r.recognized->value.a)},
                                      {"b", to_fraction_string(r.recognized->value.b)}}},
                           {"residual", rel.residual.to_scientific(3)}};
    } else {
        j["recognized"] = nullptr;
    }
    j["closed_form"] = r.closed_form ? nlohmann::json(r.closed_form->to_decimal(digits)) : nlohmann::json(nullptr);
    j["closed_form_match"] = r.closed_form_match ? nlohmann::json(*r.closed_form_match) : nlohmann::json(nullptr);
}

} // namespace gseries
