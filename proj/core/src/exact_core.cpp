#include "gseries/exact_core.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gseries/errors.hpp"

namespace gseries {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw InvalidArgument("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto trim = [](std::string& t) {
        t.erase(0, t.find_first_not_of(" \t"));
        t.erase(t.find_last_not_of(" \t") + 1);
    };
    trim(s);
    if (s.empty()) {
        throw InvalidArgument("empty rational literal");
    }
    Integer num;
    Integer den = 1;
    const auto slash = s.find('/');
    const std::string num_text = s.substr(0, slash);
    if (num.set_str(num_text.front() == '+' ? num_text.substr(1) : num_text, 10) != 0) {
        throw InvalidArgument("malformed rational literal: " + s);
    }
    if (slash != std::string::npos) {
        if (den.set_str(s.substr(slash + 1), 10) != 0) {
            throw InvalidArgument("malformed rational literal: " + s);
        }
    }
    return make_rational(num, den);
}

std::string to_fraction_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

// ---------------------------------------------------------------- QExponent

QExponent QExponent::from_rational(const Rational& r)
{
    Rational scaled = r * 24;
    if (!is_integer(scaled)) {
        throw ExponentError("exponent " + gseries::to_string(r) + " is not a multiple of 1/24");
    }
    if (!scaled.get_num().fits_slong_p()) {
        throw ExponentError("exponent out of range");
    }
    return QExponent(scaled.get_num().get_si());
}

QExponent QExponent::parse(std::string_view text) { return from_rational(parse_rational(text)); }

std::int64_t QExponent::whole_part() const
{
    if (!is_integral()) {
        throw ExponentError("exponent " + to_string() + " is not an integer");
    }
    return units_ / 24;
}

Rational QExponent::to_rational() const { return make_rational(Integer(static_cast<long>(units_)), 24); }

std::string QExponent::to_string() const { return std::to_string(units_) + "/24"; }

// ------------------------------------------------------------------ QSeries

namespace {

void require_order(std::int64_t order)
{
    if (order < 0) {
        throw InvalidArgument("truncation order must be non-negative");
    }
}

std::int64_t integer_distance(QExponent from, QExponent to)
{
    const QExponent d = to - from;
    if (!d.is_integral()) {
        throw ExponentError("leading exponents " + from.to_string() + " and " + to.to_string() +
                            " do not differ by an integer");
    }
    return d.whole_part();
}

bool all_integral(std::span<const Rational> cs)
{
    return std::all_of(cs.begin(), cs.end(), [](const Rational& c) { return c.get_den() == 1; });
}

} // namespace

QSeries::QSeries() : coeffs_(1) {}

QSeries::QSeries(QExponent lead, std::vector<Rational> coefficients, std::int64_t order)
    : lead_(lead), coeffs_(std::move(coefficients))
{
    require_order(order);
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries QSeries::zero(std::int64_t order, QExponent lead) { return QSeries(lead, {}, order); }

QSeries QSeries::one(std::int64_t order) { return QSeries({}, {Rational(1)}, order); }

QSeries QSeries::monomial(QExponent exponent, const Rational& c, std::int64_t order)
{
    return QSeries(exponent, {c}, order);
}

QSeries QSeries::from_integers(std::initializer_list<long> coefficients, std::int64_t order)
{
    std::vector<Rational> cs;
    cs.reserve(coefficients.size());
    for (long c : coefficients) {
        cs.emplace_back(c);
    }
    return QSeries({}, std::move(cs), order);
}

Rational QSeries::coefficient_at(QExponent e) const
{
    const QExponent d = e - lead_;
    if (!d.is_integral() || d < QExponent{}) {
        return 0;
    }
    const std::int64_t offset = d.whole_part();
    if (offset > order()) {
        throw InvalidArgument("coefficient of q^" + e.to_string() + " is beyond the truncation order");
    }
    return coeffs_[static_cast<std::size_t>(offset)];
}

bool QSeries::has_integer_coefficients() const { return all_integral(coeffs_); }

bool QSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

QSeries QSeries::normalized() const
{
    std::size_t skip = 0;
    while (skip + 1 < coeffs_.size() && sgn(coeffs_[skip]) == 0) {
        ++skip;
    }
    if (skip == 0) {
        return *this;
    }
    std::vector<Rational> cs(coeffs_.begin() + static_cast<std::ptrdiff_t>(skip), coeffs_.end());
    return QSeries(lead_ + QExponent::whole(static_cast<std::int64_t>(skip)), std::move(cs),
                   order() - static_cast<std::int64_t>(skip));
}

QSeries QSeries::truncated(std::int64_t order) const
{
    if (order > this->order()) {
        throw InvalidArgument("cannot extend a truncated series");
    }
    return QSeries(lead_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

QSeries QSeries::aligned_to(QExponent lead) const
{
    const std::int64_t pad = integer_distance(lead, lead_);
    if (pad < 0) {
        throw ExponentError("cannot align to a higher leading exponent");
    }
    std::vector<Rational> cs(static_cast<std::size_t>(pad));
    cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
    return QSeries(lead, std::move(cs), order() + pad);
}

bool QSeries::identical(const QSeries& other) const
{
    return lead_ == other.lead_ && coeffs_ == other.coeffs_;
}

// --------------------------------------------------------------- operations

namespace {

struct Aligned {
    QSeries a;
    QSeries b;
};

Aligned align(const QSeries& a, const QSeries& b)
{
    const QExponent lead = std::min(a.leading_exponent(), b.leading_exponent());
    const QExponent top = std::min(a.known_through(), b.known_through());
    const std::int64_t order = integer_distance(lead, top);
    return {a.aligned_to(lead).truncated(order), b.aligned_to(lead).truncated(order)};
}

std::vector<Integer> to_integers(std::span<const Rational> cs, std::size_t n)
{
    std::vector<Integer> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = cs[i].get_num();
    }
    return out;
}

std::vector<Rational> from_integers(std::vector<Integer>&& zs)
{
    std::vector<Rational> out(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) {
        out[i] = Rational(std::move(zs[i]));
    }
    return out;
}

} // namespace

QSeries series_add(const QSeries& a, const QSeries& b)
{
    auto [x, y] = align(a, b);
    std::vector<Rational> cs(x.coefficients().begin(), x.coefficients().end());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        cs[i] += y[i];
    }
    return QSeries(x.leading_exponent(), std::move(cs), x.order());
}

QSeries series_sub(const QSeries& a, const QSeries& b) { return series_add(a, series_negate(b)); }

QSeries series_negate(const QSeries& a) { return series_scale(a, -1); }

QSeries series_scale(const QSeries& a, const Rational& c)
{
    std::vector<Rational> cs(a.coefficients().begin(), a.coefficients().end());
    for (auto& x : cs) {
        x *= c;
    }
    return QSeries(a.leading_exponent(), std::move(cs), a.order());
}

QSeries series_mul(const QSeries& a, const QSeries& b)
{
    const std::int64_t order = std::min(a.order(), b.order());
    const auto n = static_cast<std::size_t>(order) + 1;
    const QExponent lead = a.leading_exponent() + b.leading_exponent();

    if (all_integral(a.coefficients().first(n)) && all_integral(b.coefficients().first(n))) {
        const auto x = to_integers(a.coefficients(), n);
        const auto y = to_integers(b.coefficients(), n);
        std::vector<Integer> r(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(x[i]) == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j < n; ++j) {
                if (sgn(y[j]) != 0) {
                    mpz_addmul(r[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
                }
            }
        }
        return QSeries(lead, from_integers(std::move(r)), order);
    }

    std::vector<Rational> r(n);
    Rational t;
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            if (sgn(b[j]) != 0) {
                t = a[i] * b[j];
                r[i + j] += t;
            }
        }
    }
    return QSeries(lead, std::move(r), order);
}

QSeries series_div(const QSeries& a, const QSeries& b)
{
    if (sgn(b[0]) == 0) {
        throw DivisorNotUnit("divisor's first stored coefficient is zero");
    }
    const std::int64_t order = std::min(a.order(), b.order());
    const auto n = static_cast<std::size_t>(order) + 1;
    const QExponent lead = a.leading_exponent() - b.leading_exponent();

    const bool unit_integral = all_integral(a.coefficients().first(n)) &&
                               all_integral(b.coefficients().first(n)) &&
                               (b[0] == 1 || b[0] == -1);
    if (unit_integral) {
        const auto x = to_integers(a.coefficients(), n);
        const auto y = to_integers(b.coefficients(), n);
        std::vector<Integer> r(n);
        for (std::size_t k = 0; k < n; ++k) {
            Integer acc = x[k];
            for (std::size_t i = 1; i <= k; ++i) {
                if (sgn(y[i]) != 0) {
                    mpz_submul(acc.get_mpz_t(), y[i].get_mpz_t(), r[k - i].get_mpz_t());
                }
            }
            r[k] = y[0] == 1 ? acc : Integer(-acc);
        }
        return QSeries(lead, from_integers(std::move(r)), order);
    }

    std::vector<Rational> r(n);
    const Rational inv = 1 / b[0];
    Rational t;
    for (std::size_t k = 0; k < n; ++k) {
        Rational acc = a[k];
        for (std::size_t i = 1; i <= k; ++i) {
            if (sgn(b[i]) != 0) {
                t = b[i] * r[k - i];
                acc -= t;
            }
        }
        r[k] = acc * inv;
    }
    return QSeries(lead, std::move(r), order);
}

QSeries series_pow(const QSeries& a, std::int64_t e)
{
    if (e < 0) {
        return series_pow(series_div(QSeries::one(a.order()), a), -e);
    }
    QSeries result = QSeries::one(a.order());
    QSeries base = a;
    while (e > 0) {
        if (e & 1) {
            result = series_mul(result, base);
        }
        e >>= 1;
        if (e > 0) {
            base = series_mul(base, base);
        }
    }
    return result;
}

QSeries series_shift(const QSeries& a, QExponent e)
{
    return QSeries(a.leading_exponent() + e,
                   std::vector<Rational>(a.coefficients().begin(), a.coefficients().end()), a.order());
}

QSeries substitute_qpower(const QSeries& a, std::int64_t m)
{
    if (m < 1) {
        throw InvalidArgument("substitute_qpower requires m >= 1");
    }
    // The first unknown term q^{N+1} maps to q^{m(N+1)}; everything below it is known.
    const std::int64_t order = m * (a.order() + 1) - 1;
    std::vector<Rational> cs(static_cast<std::size_t>(order) + 1);
    for (std::int64_t i = 0; i <= a.order(); ++i) {
        cs[static_cast<std::size_t>(i * m)] = a[static_cast<std::size_t>(i)];
    }
    return QSeries(a.leading_exponent() * m, std::move(cs), order);
}

SeriesComparison compare(const QSeries& a, const QSeries& b)
{
    auto [x, y] = align(a, b);
    SeriesComparison out;
    out.lead = x.leading_exponent();
    out.known_through = x.known_through();
    for (std::int64_t i = 0; i <= x.order(); ++i) {
        const auto k = static_cast<std::size_t>(i);
        if (x[k] != y[k]) {
            out.first_mismatch = x.leading_exponent() + QExponent::whole(i);
            return out;
        }
    }
    out.equal = true;
    return out;
}

QSeries reciprocal_binomial_series(std::int64_t a, std::int64_t m, std::int64_t N)
{
    if (a < 1 || m < 1) {
        throw InvalidArgument("reciprocal_binomial_series requires a >= 1 and m >= 1");
    }
    require_order(N);
    std::vector<Rational> cs(static_cast<std::size_t>(N) + 1);
    // C(t+m-1, m-1) built incrementally in t.
    Integer binom = 1;
    for (std::int64_t t = 0; a * t <= N; ++t) {
        if (t > 0) {
            binom *= static_cast<unsigned long>(t + m - 1);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(t));
        }
        cs[static_cast<std::size_t>(a * t)] = binom;
    }
    return QSeries({}, std::move(cs), N);
}

QSeries pochhammer_series(std::int64_t a, std::int64_t step, std::int64_t N)
{
    if (a < 1 || step < 1) {
        throw InvalidArgument("pochhammer_series requires a >= 1 and step >= 1");
    }
    require_order(N);
    const auto n = static_cast<std::size_t>(N) + 1;
    std::vector<Integer> c(n);
    c[0] = 1;
    for (std::int64_t e = a; e <= N; e += step) {
        const auto shift = static_cast<std::size_t>(e);
        for (std::size_t i = n - 1; i >= shift; --i) {
            c[i] -= c[i - shift];
        }
    }
    return QSeries({}, from_integers(std::move(c)), N);
}

// --------------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::monomial(std::size_t degree, const Rational& c)
{
    std::vector<Rational> cs(degree + 1);
    cs[degree] = c;
    return Poly(std::move(cs));
}

void Poly::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

Rational Poly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Poly::operator()(const Rational& z) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

Poly Poly::compose_power(unsigned m) const
{
    if (m == 0) {
        throw InvalidArgument("compose_power requires m >= 1");
    }
    if (is_zero()) {
        return {};
    }
    std::vector<Rational> cs((coeffs_.size() - 1) * m + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        cs[i * m] = coeffs_[i];
    }
    return Poly(std::move(cs));
}

Poly operator+(const Poly& a, const Poly& b)
{
    std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < cs.size(); ++i) {
        cs[i] = a.coefficient(i) + b.coefficient(i);
    }
    return Poly(std::move(cs));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(cs));
}

Poly operator*(const Rational& c, const Poly& a)
{
    std::vector<Rational> cs = a.coeffs_;
    for (auto& x : cs) {
        x *= c;
    }
    return Poly(std::move(cs));
}

Poly Poly::pow(unsigned e) const
{
    Poly result({Rational(1)});
    for (unsigned i = 0; i < e; ++i) {
        result = result * *this;
    }
    return result;
}

std::string Poly::to_string(std::string_view var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) {
            continue;
        }
        const Rational mag = abs(c);
        os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
        if (i == 0 || mag != 1) {
            os << gseries::to_string(mag);
        }
        if (i > 0) {
            os << var;
            if (i > 1) {
                os << '^' << i;
            }
        }
        first = false;
    }
    return os.str();
}

// --------------------------------------------------------------------- JSON

void to_json(nlohmann::json& j, const QSeries& s)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coefficients()) {
        coeffs.push_back(to_fraction_string(c));
    }
    j = nlohmann::json{{"schema", kQSeriesSchema},
                       {"leading_exponent", s.leading_exponent().to_string()},
                       {"order", s.order()},
                       {"coefficients", std::move(coeffs)}};
}

void from_json(const nlohmann::json& j, QSeries& s)
{
    if (j.at("schema").get<std::string>() != kQSeriesSchema) {
        throw InvalidArgument("unsupported q-series schema");
    }
    const auto lead = QExponent::parse(j.at("leading_exponent").get<std::string>());
    const auto order = j.at("order").get<std::int64_t>();
    const auto& raw = j.at("coefficients");
    if (static_cast<std::int64_t>(raw.size()) != order + 1) {
        throw InvalidArgument("coefficient count does not match order");
    }
    std::vector<Rational> cs;
    cs.reserve(raw.size());
    for (const auto& c : raw) {
        cs.push_back(parse_rational(c.get<std::string>()));
    }
    s = QSeries(lead, std::move(cs), order);
}

} // namespace gseries
