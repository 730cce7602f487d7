#include "gseries/modular.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gseries/combinatorics.hpp"
#include "gseries/errors.hpp"
#include "gseries/qseries.hpp"

namespace gseries {

namespace {

void require_k(int k)
{
    if (k < 1) {
        throw InvalidArgument("k must be a positive integer");
    }
}

// f re-expressed at leading exponent 0 and truncated to q^N.
QSeries at_integral_window(const QSeries& f, std::int64_t N)
{
    const QExponent lead = f.leading_exponent();
    if (!lead.is_integral() || lead < QExponent{}) {
        throw InvalidArgument("expected a series with non-negative integral leading exponent");
    }
    if (f.known_through() < QExponent::whole(N)) {
        throw InvalidArgument("series is not known through the requested order");
    }
    return f.aligned_to(QExponent{}).truncated(N);
}

std::string join(const std::vector<Rational>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? ", " : "") + to_string(xs[i]);
    }
    return out;
}

} // namespace

FThetaBasis::FThetaBasis(int k, std::int64_t N) : k_(k), order_(N)
{
    require_k(k);
    if (N < k) {
        throw InvalidArgument("basis order must be at least k");
    }
    const QSeries theta4 = series_pow(theta_series(N), 4);
    const QSeries F = F_series(N);

    std::vector<QSeries> theta_powers(static_cast<std::size_t>(k) + 1);
    theta_powers[0] = QSeries::one(N);
    for (int i = 1; i <= k; ++i) {
        theta_powers[static_cast<std::size_t>(i)] = theta_powers[static_cast<std::size_t>(i - 1)] * theta4;
    }
    QSeries F_power = QSeries::one(N);
    elements_.reserve(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        if (j > 0) {
            F_power = F_power * F;
        }
        elements_.push_back(F_power * theta_powers[static_cast<std::size_t>(k - j)]);
    }
}

FThetaDecomposition decompose(const QSeries& f, int k, std::int64_t N)
{
    return decompose(f, FThetaBasis(k, N));
}

FThetaDecomposition decompose(const QSeries& f, const FThetaBasis& basis)
{
    const int k = basis.weight_half();
    const std::int64_t N = basis.order();
    const QSeries g = at_integral_window(f, N);

    FThetaDecomposition d;
    d.k = k;
    d.c.resize(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        Rational acc = g[static_cast<std::size_t>(j)];
        for (int i = 0; i < j; ++i) {
            acc -= d.c[static_cast<std::size_t>(i)] * basis.element(i)[static_cast<std::size_t>(j)];
        }
        // element(j) starts with q^j, coefficient 1
        d.c[static_cast<std::size_t>(j)] = acc;
    }

    QSeries residual = g;
    for (int j = 0; j <= k; ++j) {
        residual = residual - d.c[static_cast<std::size_t>(j)] * basis.element(j);
    }
    if (!residual.is_zero()) {
        const QSeries r = residual.normalized();
        throw NotInSpan("residual after decomposition is nonzero starting at q^" +
                        to_string(r.leading_exponent().to_rational()));
    }
    return d;
}

QSeries reconstruct(const FThetaDecomposition& d, std::int64_t N)
{
    const FThetaBasis basis(d.k, N);
    QSeries out = QSeries::zero(N);
    for (int j = 0; j <= d.k; ++j) {
        out = out + d.c[static_cast<std::size_t>(j)] * basis.element(j);
    }
    return out;
}

std::vector<Rational> alphas(int k, std::int64_t N)
{
    require_k(k);
    const FThetaDecomposition d = decompose(goswami_series(k, N), k, N);
    return {d.c.begin() + 1, d.c.end() - 1};
}

std::vector<Rational> alphas_from_pochhammer(int k, std::int64_t N)
{
    require_k(k);
    if (N < k) {
        throw InvalidArgument("order must be at least k");
    }
    const QSeries p1 = pochhammer_series(1, 1, N);
    const QSeries p2 = pochhammer_series(2, 2, N);
    const QSeries p4 = pochhammer_series(4, 4, N);

    // (G - Z q^k (q^4;q^4)^{8k}/(q^2;q^2)^{4k}) (q;q)^{8k}(q^4;q^4)^{8k}/(q^2;q^2)^{20k}
    const QSeries main_term =
        series_shift(series_pow(p4, 8 * k) / series_pow(p2, 4 * k), QExponent::whole(k));
    const QSeries bracket = goswami_series(k, N) - zeta_constant(k) * main_term;
    const QSeries weight = series_pow(p1, 8 * k) * series_pow(p4, 8 * k) / series_pow(p2, 20 * k);
    const QSeries rhs = at_integral_window(bracket * weight, N);

    // q^j (q^4;q^4)^{16j} (q;q)^{8j} / (q^2;q^2)^{24j}
    const QSeries step = series_pow(p4, 16) * series_pow(p1, 8) / series_pow(p2, 24);
    std::vector<QSeries> lhs;
    QSeries power = QSeries::one(N);
    for (int j = 1; j < k; ++j) {
        power = power * step;
        lhs.push_back(at_integral_window(series_shift(power, QExponent::whole(j)), N));
    }

    std::vector<Rational> alpha(static_cast<std::size_t>(std::max(k - 1, 0)));
    for (int j = 1; j < k; ++j) {
        Rational acc = rhs[static_cast<std::size_t>(j)];
        for (int i = 1; i < j; ++i) {
            acc -= alpha[static_cast<std::size_t>(i - 1)] * lhs[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
        alpha[static_cast<std::size_t>(j - 1)] = acc;
    }

    QSeries residual = rhs;
    for (int j = 1; j < k; ++j) {
        residual = residual - alpha[static_cast<std::size_t>(j - 1)] * lhs[static_cast<std::size_t>(j - 1)];
    }
    if (!residual.is_zero()) {
        throw NotInSpan("Pochhammer identity residual is nonzero for k = " + std::to_string(k));
    }
    return alpha;
}

CuspReport cusp_certificate(const FThetaDecomposition& d)
{
    CuspReport r;
    if (d.c.empty()) {
        r.constant_term_zero = r.top_coefficient_zero = r.weighted_sum_zero = true;
        return r;
    }
    r.constant_term_zero = sgn(d.c.front()) == 0;
    r.top_coefficient_zero = sgn(d.c.back()) == 0;
    Rational scale = 1;
    r.weighted_sum = 0;
    for (const auto& c : d.c) {
        r.weighted_sum += c * scale;
        scale /= 16;
    }
    r.weighted_sum_zero = sgn(r.weighted_sum) == 0;
    return r;
}

QSeries goswami_eta_form(int k, const std::vector<Rational>& alpha, std::int64_t N)
{
    require_k(k);
    const EtaQuotient main{{{4, 8 * k}, {2, -4 * k}}};
    QSeries out = at_integral_window(zeta_constant(k) * eta_quotient_series(main, N), N);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (sgn(alpha[i]) == 0) {
            continue;
        }
        const auto j = static_cast<std::int64_t>(i) + 1;
        const EtaQuotient term{{{1, 8 * j - 8 * k}, {2, 20 * k - 24 * j}, {4, 16 * j - 8 * k}}};
        out = out + at_integral_window(alpha[i] * eta_quotient_series(term, N), N);
    }
    return out;
}

ExactCheckReport eta_identity_check(int k, std::int64_t N)
{
    ExactCheckReport report;
    report.name = "eta_identity";
    report.k = k;
    report.order = N;

    const std::vector<Rational> alpha = alphas(k, N);
    const std::vector<Rational> alpha_poch = alphas_from_pochhammer(k, N);
    const SeriesComparison cmp = compare(goswami_series(k, N), goswami_eta_form(k, alpha, N));
    report.equal = cmp.equal && alpha == alpha_poch;
    report.first_mismatch = cmp.first_mismatch;
    report.detail = "alphas = [" + join(alpha) + "]";
    if (alpha != alpha_poch) {
        report.detail += "; Pochhammer route gave [" + join(alpha_poch) + "]";
    }
    return report;
}

Rational zeta_from_decomposition(int k, std::int64_t N)
{
    require_k(k);
    return decompose(goswami_series(k, N), k, N).c.back();
}

void to_json(nlohmann::json& j, const FThetaDecomposition& d)
{
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : d.c) {
        cs.push_back(to_fraction_string(c));
    }
    j = nlohmann::json{{"k", d.k}, {"coefficients", std::move(cs)}};
}

void to_json(nlohmann::json& j, const CuspReport& r)
{
    j = nlohmann::json{{"schema", kCuspReportSchema},
                       {"constant_term_zero", r.constant_term_zero},
                       {"top_coefficient_zero", r.top_coefficient_zero},
                       {"weighted_sum_zero", r.weighted_sum_zero},
                       {"weighted_sum", to_fraction_string(r.weighted_sum)},
                       {"is_cusp_form", r.is_cusp_form()}};
}

void to_json(nlohmann::json& j, const ExactCheckReport& r)
{
    j = nlohmann::json{{"schema", kExactCheckSchema}, {"name", r.name},   {"k", r.k},
                       {"order", r.order},            {"equal", r.equal}, {"detail", r.detail}};
    j["first_mismatch"] = r.first_mismatch ? nlohmann::json(r.first_mismatch->to_string()) : nlohmann::json(nullptr);
}

} // namespace gseries
