#include "gseries/highprec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "gseries/errors.hpp"

namespace gseries {

mpfr_prec_t Precision::bits() const
{
    // log2(10) = 3.3219...; eight extra bits cover the final rounding.
    return static_cast<mpfr_prec_t>(std::ceil(working_digits() * 3.3219280948873623)) + 8;
}

// ------------------------------------------------------------------- HPReal

HPReal::HPReal(Precision p) : precision_(p)
{
    mpfr_init2(value_, p.bits());
    mpfr_set_zero(value_, 1);
}

HPReal::HPReal(long value, Precision p) : precision_(p)
{
    mpfr_init2(value_, p.bits());
    mpfr_set_si(value_, value, MPFR_RNDN);
}

HPReal::HPReal(const Rational& value, Precision p) : precision_(p)
{
    mpfr_init2(value_, p.bits());
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

HPReal HPReal::parse(std::string_view text, Precision p)
{
    HPReal out(p);
    const std::string s(text);
    if (mpfr_set_str(out.value_, s.c_str(), 10, MPFR_RNDN) != 0) {
        throw InvalidArgument("malformed decimal literal: " + s);
    }
    return out;
}

HPReal::HPReal(const HPReal& other) : precision_(other.precision_)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& other) noexcept : precision_(other.precision_)
{
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

HPReal& HPReal::operator=(const HPReal& other)
{
    if (this != &other) {
        precision_ = other.precision_;
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

HPReal& HPReal::operator=(HPReal&& other) noexcept
{
    precision_ = other.precision_;
    mpfr_swap(value_, other.value_);
    return *this;
}

HPReal::~HPReal() { mpfr_clear(value_); }

HPReal HPReal::to_precision(Precision p) const
{
    HPReal out(p);
    mpfr_set(out.value_, value_, MPFR_RNDN);
    return out;
}

double HPReal::log10_abs() const
{
    if (is_zero()) {
        return -std::numeric_limits<double>::infinity();
    }
    long exp2 = 0;
    const double mant = mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
    return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * 0.30102999566398120;
}

std::string HPReal::to_decimal(int significant) const
{
    if (significant < 1) {
        throw InvalidArgument("to_decimal needs at least one digit");
    }
    if (is_zero()) {
        return "0." + std::string(static_cast<std::size_t>(significant - 1), '0');
    }
    mpfr_exp_t e10 = 0;
    char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<std::size_t>(significant), value_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (digits.front() == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // value = 0.d1 d2 ... * 10^e10
    std::string out;
    if (e10 <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-e10), '0') + digits;
    } else if (static_cast<std::size_t>(e10) >= digits.size()) {
        out = digits + std::string(static_cast<std::size_t>(e10) - digits.size(), '0');
    } else {
        out = digits.substr(0, static_cast<std::size_t>(e10)) + "." + digits.substr(static_cast<std::size_t>(e10));
    }
    return sign + out;
}

std::string HPReal::to_scientific(int significant) const
{
    if (significant < 1) {
        throw InvalidArgument("to_scientific needs at least one digit");
    }
    if (is_zero()) {
        return "0e+00";
    }
    mpfr_exp_t e10 = 0;
    char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<std::size_t>(significant), value_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (digits.front() == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    std::string mantissa = digits.substr(0, 1);
    if (digits.size() > 1) {
        mantissa += "." + digits.substr(1);
    }
    const long exponent = static_cast<long>(e10) - 1;
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%c%02ld", exponent < 0 ? '-' : '+', exponent < 0 ? -exponent : exponent);
    return sign + mantissa + buf;
}

void HPReal::adopt_precision(const HPReal& o)
{
    if (mpfr_get_prec(o.value_) > mpfr_get_prec(value_)) {
        mpfr_prec_round(value_, mpfr_get_prec(o.value_), MPFR_RNDN);
        precision_ = o.precision_;
    }
}

HPReal& HPReal::operator+=(const HPReal& o)
{
    adopt_precision(o);
    mpfr_add(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator-=(const HPReal& o)
{
    adopt_precision(o);
    mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator*=(const HPReal& o)
{
    adopt_precision(o);
    mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator/=(const HPReal& o)
{
    adopt_precision(o);
    mpfr_div(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

HPReal operator-(const HPReal& a)
{
    HPReal out(a);
    mpfr_neg(out.value_, out.value_, MPFR_RNDN);
    return out;
}

HPReal operator*(HPReal a, long b)
{
    mpfr_mul_si(a.value_, a.value_, b, MPFR_RNDN);
    return a;
}

HPReal operator/(HPReal a, long b)
{
    mpfr_div_si(a.value_, a.value_, b, MPFR_RNDN);
    return a;
}

HPReal operator+(HPReal a, long b)
{
    mpfr_add_si(a.value_, a.value_, b, MPFR_RNDN);
    return a;
}

HPReal operator-(HPReal a, long b)
{
    mpfr_sub_si(a.value_, a.value_, b, MPFR_RNDN);
    return a;
}

namespace {

template <typename Fn>
HPReal unary(const HPReal& x, Fn fn)
{
    HPReal out(x.precision());
    fn(out.get(), x.get(), MPFR_RNDN);
    return out;
}

} // namespace

HPReal abs(const HPReal& x) { return unary(x, mpfr_abs); }
HPReal sqrt(const HPReal& x) { return unary(x, mpfr_sqrt); }
HPReal exp(const HPReal& x) { return unary(x, mpfr_exp); }
HPReal log(const HPReal& x) { return unary(x, mpfr_log); }
HPReal sin(const HPReal& x) { return unary(x, mpfr_sin); }
HPReal cos(const HPReal& x) { return unary(x, mpfr_cos); }

HPReal pow(const HPReal& x, const HPReal& y)
{
    HPReal out(mpfr_get_prec(x.get()) >= mpfr_get_prec(y.get()) ? x.precision() : y.precision());
    mpfr_pow(out.get(), x.get(), y.get(), MPFR_RNDN);
    return out;
}

HPReal pow(const HPReal& x, long n)
{
    HPReal out(x.precision());
    mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
    return out;
}

HPReal pow(const HPReal& x, const Rational& e)
{
    if (is_integer(e) && e.get_num().fits_slong_p()) {
        return pow(x, e.get_num().get_si());
    }
    return pow(x, HPReal(e, x.precision()));
}

HPReal pow10(long e, Precision p)
{
    HPReal out(p);
    mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) {
        mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
    }
    return out;
}

bool within(const HPReal& a, const HPReal& b, const HPReal& tol) { return abs(a - b) <= tol; }

bool agree_to_digits(const HPReal& a, const HPReal& b, int digits)
{
    const Precision p = mpfr_get_prec(a.get()) >= mpfr_get_prec(b.get()) ? a.precision() : b.precision();
    HPReal scale = abs(b);
    if (scale < HPReal(1, p)) {
        scale = HPReal(1, p);
    }
    return abs(a - b) <= pow10(-digits, p) * scale;
}

// ---------------------------------------------------------------- HPComplex

Precision HPComplex::precision() const
{
    return mpfr_get_prec(re_.get()) >= mpfr_get_prec(im_.get()) ? re_.precision() : im_.precision();
}

HPComplex& HPComplex::operator+=(const HPComplex& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

HPComplex& HPComplex::operator-=(const HPComplex& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

HPComplex& HPComplex::operator*=(const HPComplex& o)
{
    HPReal re = re_ * o.re_ - im_ * o.im_;
    HPReal im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

HPComplex& HPComplex::operator/=(const HPComplex& o)
{
    const HPReal den = o.norm();
    HPReal re = (re_ * o.re_ + im_ * o.im_) / den;
    HPReal im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

HPReal HPComplex::norm() const { return re_ * re_ + im_ * im_; }

HPReal HPComplex::abs() const { return sqrt(norm()); }

HPComplex exp(const HPComplex& z)
{
    const Precision p = z.precision();
    const HPReal modulus = exp(z.real().to_precision(p));
    HPReal s(p);
    HPReal c(p);
    mpfr_sin_cos(s.get(), c.get(), z.imag().to_precision(p).get(), MPFR_RNDN);
    return {modulus * c, modulus * s};
}

HPComplex pow(const HPComplex& z, long n)
{
    if (n < 0) {
        return HPComplex(HPReal(1, z.precision())) / pow(z, -n);
    }
    HPComplex result(HPReal(1, z.precision()));
    HPComplex base = z;
    while (n > 0) {
        if (n & 1) {
            result *= base;
        }
        n >>= 1;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

} // namespace gseries
