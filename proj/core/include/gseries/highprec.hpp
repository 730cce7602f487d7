#pragma once

// Arbitrary-precision real and complex values on top of MPFR. Every value
// carries its own precision; there is no global precision state.

#include <cstdint>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "gseries/exact_core.hpp"

namespace gseries {

// Target accuracy in decimal digits plus guard digits carried internally.
// Results of the numeric kernels are accurate to `digits` digits; the guard
// digits absorb the losses each kernel declares.
struct Precision {
    int digits = 64;
    int guard_digits = 10;

    int working_digits() const { return digits + guard_digits; }
    mpfr_prec_t bits() const;
    // Same guard, digits multiplied (used by precision-doubling checks).
    Precision doubled() const { return {2 * digits, guard_digits}; }
    Precision with_extra(int extra_digits) const { return {digits + extra_digits, guard_digits}; }

    friend bool operator==(const Precision&, const Precision&) = default;
};

inline constexpr Precision kDefaultPrecision{64, 10};

class HPReal {
public:
    explicit HPReal(Precision p = kDefaultPrecision);
    HPReal(long value, Precision p);
    HPReal(const Rational& value, Precision p);
    // Decimal literal such as "3.14159" or "-2.5e-3".
    static HPReal parse(std::string_view text, Precision p);

    HPReal(const HPReal& other);
    HPReal(HPReal&& other) noexcept;
    HPReal& operator=(const HPReal& other);
    HPReal& operator=(HPReal&& other) noexcept;
    ~HPReal();

    Precision precision() const { return precision_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    // Re-rounds to another precision.
    HPReal to_precision(Precision p) const;

    int sign() const { return mpfr_sgn(value_); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    // log10|x| as a double; -inf for zero.
    double log10_abs() const;

    // Fixed-point decimal with exactly `significant` significant digits.
    std::string to_decimal(int significant) const;
    std::string to_decimal() const { return to_decimal(precision_.digits); }
    // d.ddd...e[+-]xx with `significant` digits; used for errors and residuals.
    std::string to_scientific(int significant) const;

    HPReal& operator+=(const HPReal& o);
    HPReal& operator-=(const HPReal& o);
    HPReal& operator*=(const HPReal& o);
    HPReal& operator/=(const HPReal& o);

    friend HPReal operator+(HPReal a, const HPReal& b) { return a += b; }
    friend HPReal operator-(HPReal a, const HPReal& b) { return a -= b; }
    friend HPReal operator*(HPReal a, const HPReal& b) { return a *= b; }
    friend HPReal operator/(HPReal a, const HPReal& b) { return a /= b; }
    friend HPReal operator-(const HPReal& a);
    friend HPReal operator*(HPReal a, long b);
    friend HPReal operator/(HPReal a, long b);
    friend HPReal operator+(HPReal a, long b);
    friend HPReal operator-(HPReal a, long b);

    friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
    friend bool operator>=(const HPReal& a, const HPReal& b)
    {
        return mpfr_greaterequal_p(a.value_, b.value_) != 0;
    }

private:
    void adopt_precision(const HPReal& o);

    Precision precision_;
    mpfr_t value_;
};

HPReal abs(const HPReal& x);
HPReal sqrt(const HPReal& x);
HPReal exp(const HPReal& x);
HPReal log(const HPReal& x);
HPReal sin(const HPReal& x);
HPReal cos(const HPReal& x);
HPReal pow(const HPReal& x, const HPReal& y);
HPReal pow(const HPReal& x, long n);
// x^(num/den) for x > 0.
HPReal pow(const HPReal& x, const Rational& e);
// 10^e at precision p.
HPReal pow10(long e, Precision p);

// |a - b| <= tol.
bool within(const HPReal& a, const HPReal& b, const HPReal& tol);
// |a - b| <= 10^{-digits} * max(1, |b|).
bool agree_to_digits(const HPReal& a, const HPReal& b, int digits);

class HPComplex {
public:
    explicit HPComplex(Precision p = kDefaultPrecision) : re_(p), im_(p) {}
    HPComplex(HPReal re, HPReal im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit HPComplex(HPReal re) : re_(std::move(re)), im_(re_.precision()) {}

    const HPReal& real() const { return re_; }
    const HPReal& imag() const { return im_; }
    Precision precision() const;

    HPComplex& operator+=(const HPComplex& o);
    HPComplex& operator-=(const HPComplex& o);
    HPComplex& operator*=(const HPComplex& o);
    HPComplex& operator/=(const HPComplex& o);

    friend HPComplex operator+(HPComplex a, const HPComplex& b) { return a += b; }
    friend HPComplex operator-(HPComplex a, const HPComplex& b) { return a -= b; }
    friend HPComplex operator*(HPComplex a, const HPComplex& b) { return a *= b; }
    friend HPComplex operator/(HPComplex a, const HPComplex& b) { return a /= b; }
    friend HPComplex operator*(const HPComplex& a, const HPReal& s) { return {a.re_ * s, a.im_ * s}; }
    friend HPComplex operator-(const HPComplex& a) { return {-a.re_, -a.im_}; }

    HPReal norm() const;  // re^2 + im^2
    HPReal abs() const;
    HPComplex conj() const { return {re_, -im_}; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

private:
    HPReal re_;
    HPReal im_;
};

HPComplex exp(const HPComplex& z);
HPComplex pow(const HPComplex& z, long n);

} // namespace gseries
