#pragma once

// Exact arithmetic: GMP-backed integers and rationals, dense univariate
// polynomials, and truncated q-series whose leading exponent is a multiple
// of 1/24.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json_fwd.hpp>

namespace gseries {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical rational num/den; throws InvalidArgument when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

// Accepts "n", "-n", "n/d"; the result is canonicalized.
Rational parse_rational(std::string_view text);

// "num/den" with den printed even when it is 1 (the serialized form).
std::string to_fraction_string(const Rational& r);

// Shortest form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

// An exponent of q, stored as an integer count of 1/24.
class QExponent {
public:
    constexpr QExponent() = default;

    static constexpr QExponent whole(std::int64_t n) { return QExponent(24 * n); }
    static constexpr QExponent twentyfourths(std::int64_t p) { return QExponent(p); }
    // Throws ExponentError unless 24*r is an integer.
    static QExponent from_rational(const Rational& r);
    // Parses "p/24" (or any rational string whose value is a multiple of 1/24).
    static QExponent parse(std::string_view text);

    constexpr std::int64_t in_twentyfourths() const { return units_; }
    constexpr bool is_integral() const { return units_ % 24 == 0; }
    // Requires is_integral().
    std::int64_t whole_part() const;
    Rational to_rational() const;
    // Unreduced "p/24".
    std::string to_string() const;

    constexpr QExponent operator+(QExponent o) const { return QExponent(units_ + o.units_); }
    constexpr QExponent operator-(QExponent o) const { return QExponent(units_ - o.units_); }
    constexpr QExponent operator-() const { return QExponent(-units_); }
    constexpr QExponent operator*(std::int64_t m) const { return QExponent(units_ * m); }
    constexpr auto operator<=>(const QExponent&) const = default;

private:
    constexpr explicit QExponent(std::int64_t units) : units_(units) {}
    std::int64_t units_ = 0;
};

// Truncated series q^lead * (c_0 + c_1 q + ... + c_N q^N + O(q^{N+1})).
// Terms at exponents beyond lead + N are unknown, never assumed zero.
class QSeries {
public:
    // The zero series known through order 0.
    QSeries();
    // coefficients shorter than order+1 are zero-padded; longer are truncated.
    QSeries(QExponent lead, std::vector<Rational> coefficients, std::int64_t order);

    static QSeries zero(std::int64_t order, QExponent lead = {});
    static QSeries one(std::int64_t order);
    static QSeries monomial(QExponent exponent, const Rational& c, std::int64_t order);
    // Convenience for tests and examples: integer coefficients at lead 0.
    static QSeries from_integers(std::initializer_list<long> coefficients, std::int64_t order);

    QExponent leading_exponent() const { return lead_; }
    std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    // Last exponent whose coefficient is known.
    QExponent known_through() const { return lead_ + QExponent::whole(order()); }

    std::span<const Rational> coefficients() const { return coeffs_; }
    const Rational& operator[](std::size_t offset) const { return coeffs_[offset]; }

    // Coefficient of q^e. Zero below the leading exponent or off the integer
    // lattice lead + Z; throws InvalidArgument beyond known_through().
    Rational coefficient_at(QExponent e) const;
    Rational coefficient_at(std::int64_t whole_exponent) const
    {
        return coefficient_at(QExponent::whole(whole_exponent));
    }

    bool has_integer_coefficients() const;
    bool is_zero() const;

    // Drops leading zero coefficients, raising the leading exponent.
    QSeries normalized() const;
    QSeries truncated(std::int64_t order) const;
    // Re-expresses the series at a lower leading exponent (integer distance).
    QSeries aligned_to(QExponent lead) const;

    // Same lead, same order and identical coefficients.
    bool identical(const QSeries& other) const;

private:
    QExponent lead_;
    std::vector<Rational> coeffs_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_sub(const QSeries& a, const QSeries& b);
QSeries series_negate(const QSeries& a);
QSeries series_scale(const QSeries& a, const Rational& c);
QSeries series_mul(const QSeries& a, const QSeries& b);
// Throws DivisorNotUnit when b's first stored coefficient is zero.
QSeries series_div(const QSeries& a, const QSeries& b);
// Negative exponents go through series_div.
QSeries series_pow(const QSeries& a, std::int64_t e);
// Multiplies by q^e.
QSeries series_shift(const QSeries& a, QExponent e);
// q -> q^m.
QSeries substitute_qpower(const QSeries& a, std::int64_t m);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return series_add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return series_sub(a, b); }
inline QSeries operator-(const QSeries& a) { return series_negate(a); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }
inline QSeries operator*(const Rational& c, const QSeries& a) { return series_scale(a, c); }
inline QSeries operator/(const QSeries& a, const QSeries& b) { return series_div(a, b); }

struct SeriesComparison {
    bool equal = false;
    QExponent lead;           // common leading exponent after alignment
    QExponent known_through;  // last exponent compared
    std::optional<QExponent> first_mismatch;
};

// Aligns both series to a common lead and common truncation, then compares.
SeriesComparison compare(const QSeries& a, const QSeries& b);

// 1/(1 - q^a)^m through order N.
QSeries reciprocal_binomial_series(std::int64_t a, std::int64_t m, std::int64_t N);

// (q^a; q^step)_inf through order N.
QSeries pochhammer_series(std::int64_t a, std::int64_t step, std::int64_t N);

// Dense polynomial over Q; index is degree, trailing zeros trimmed.
class Poly {
public:
    static constexpr std::ptrdiff_t kZeroDegree = -1;

    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);
    static Poly monomial(std::size_t degree, const Rational& c = 1);

    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const Rational> coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t i) const;

    Rational operator()(const Rational& z) const;
    // P(z^m).
    Poly compose_power(unsigned m) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    Poly pow(unsigned e) const;
    std::string to_string(std::string_view var = "z") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// JSON form: {"schema": "gseries.qseries/1", "leading_exponent": "p/24",
// "order": N, "coefficients": ["num/den", ...]}.
inline constexpr std::string_view kQSeriesSchema = "gseries.qseries/1";
void to_json(nlohmann::json& j, const QSeries& s);
void from_json(const nlohmann::json& j, QSeries& s);

} // namespace gseries
