#include "gseries/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "gseries/combinatorics.hpp"
#include "gseries/errors.hpp"

namespace gseries {

namespace {

void require_order(std::int64_t N)
{
    if (N < 0) {
        throw InvalidArgument("order must be non-negative");
    }
}

void require_k(int k)
{
    if (k < 1) {
        throw InvalidArgument("k must be a positive integer");
    }
}

// Adds c * q^shift * s into acc (both at lead 0), skipping zero entries of s.
void accumulate_shifted(std::vector<Integer>& acc, const Integer& c, std::int64_t shift, const QSeries& s)
{
    const auto n = static_cast<std::int64_t>(acc.size());
    for (std::int64_t i = 0; i + shift < n && i <= s.order(); ++i) {
        const Rational& x = s[static_cast<std::size_t>(i)];
        if (sgn(x) != 0) {
            mpz_addmul(acc[static_cast<std::size_t>(i + shift)].get_mpz_t(), c.get_mpz_t(),
                       x.get_num_mpz_t());
        }
    }
}

// Sum over the polynomial's terms of coeff * q^{(start + i) * base}, times s.
void accumulate_poly_times(std::vector<Integer>& acc, const Poly& p, std::int64_t base, std::int64_t start,
                           const QSeries& s)
{
    const auto cs = p.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (sgn(cs[i]) == 0) {
            continue;
        }
        const std::int64_t shift = (start + static_cast<std::int64_t>(i)) * base;
        if (shift >= static_cast<std::int64_t>(acc.size())) {
            break;
        }
        accumulate_shifted(acc, cs[i].get_num(), shift, s);
    }
}

QSeries from_accumulator(std::vector<Integer>&& acc)
{
    std::vector<Rational> cs(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        cs[i] = Rational(std::move(acc[i]));
    }
    const auto order = static_cast<std::int64_t>(cs.size()) - 1;
    return QSeries({}, std::move(cs), order);
}

} // namespace

QSeries psi_series(std::int64_t N)
{
    require_order(N);
    std::vector<Rational> cs(static_cast<std::size_t>(N) + 1);
    for (std::int64_t n = 0; n * (n + 1) / 2 <= N; ++n) {
        cs[static_cast<std::size_t>(n * (n + 1) / 2)] = 1;
    }
    return QSeries({}, std::move(cs), N);
}

QSeries psi_product_series(std::int64_t N)
{
    require_order(N);
    return pochhammer_series(2, 2, N) / pochhammer_series(1, 2, N);
}

QSeries theta_series(std::int64_t N)
{
    require_order(N);
    std::vector<Rational> cs(static_cast<std::size_t>(N) + 1);
    cs[0] = 1;
    for (std::int64_t n = 1; n * n <= N; ++n) {
        cs[static_cast<std::size_t>(n * n)] = 2;
    }
    return QSeries({}, std::move(cs), N);
}

QSeries F_series(std::int64_t N)
{
    require_order(N);
    std::vector<Integer> sigma(static_cast<std::size_t>(N) + 1);
    // Sieve sigma_1 over odd arguments; odd numbers have only odd divisors.
    for (std::int64_t d = 1; d <= N; d += 2) {
        for (std::int64_t m = d; m <= N; m += 2 * d) {
            sigma[static_cast<std::size_t>(m)] += static_cast<unsigned long>(d);
        }
    }
    return from_accumulator(std::move(sigma));
}

QExponent EtaQuotient::leading_exponent() const
{
    std::int64_t units = 0;
    for (const auto& f : factors) {
        units += f.multiplier * f.exponent;
    }
    return QExponent::twentyfourths(units);
}

std::string EtaQuotient::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors) {
        os << (first ? "" : " ") << "eta(" << (f.multiplier == 1 ? "" : std::to_string(f.multiplier)) << "tau)^"
           << f.exponent;
        first = false;
    }
    return os.str();
}

QSeries eta_quotient_series(const EtaQuotient& eq, std::int64_t N)
{
    require_order(N);
    QSeries numerator = QSeries::one(N);
    QSeries denominator = QSeries::one(N);
    for (const auto& f : eq.factors) {
        if (f.multiplier != 1 && f.multiplier != 2 && f.multiplier != 4) {
            throw InvalidArgument("eta multipliers must lie in {1, 2, 4}");
        }
        if (f.exponent == 0) {
            continue;
        }
        const QSeries base = pochhammer_series(f.multiplier, f.multiplier, N);
        if (f.exponent > 0) {
            numerator = numerator * series_pow(base, f.exponent);
        } else {
            denominator = denominator * series_pow(base, -f.exponent);
        }
    }
    return series_shift(numerator / denominator, eq.leading_exponent());
}

QSeries goswami_series(int k, std::int64_t N)
{
    require_k(k);
    require_order(N);
    const GoswamiPolynomials polys = build_polynomials(k);
    std::vector<Integer> acc(static_cast<std::size_t>(N) + 1);

    if (k % 2 == 1) {
        // sum_n q^{2n+1} P^o(q^{2n+1}) / (1 - q^{4n+2})^{2k}
        for (std::int64_t n = 0; 2 * n + 1 <= N; ++n) {
            const std::int64_t base = 2 * n + 1;
            const QSeries denom = reciprocal_binomial_series(2 * base, 2 * k, N);
            accumulate_poly_times(acc, polys.odd, base, 1, denom);
        }
    } else {
        // 2^{2k-1} sum_n q^{4n+2} P^e(q^{4n+2}) / (1 - q^{4n+2})^{2k}
        for (std::int64_t n = 0; 4 * n + 2 <= N; ++n) {
            const std::int64_t base = 4 * n + 2;
            const QSeries denom = reciprocal_binomial_series(base, 2 * k, N);
            accumulate_poly_times(acc, polys.even, base, 1, denom);
        }
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(2 * k - 1));
        for (auto& c : acc) {
            c *= scale;
        }
    }
    return from_accumulator(std::move(acc));
}

QSeries sun_series(int which, std::int64_t N)
{
    require_order(N);
    std::vector<Integer> acc(static_cast<std::size_t>(N) + 1);
    if (which == 1) {
        for (std::int64_t n = 0; n <= N; ++n) {
            const std::int64_t base = 2 * n + 1;
            const QSeries denom = reciprocal_binomial_series(base, 2, N);
            accumulate_shifted(acc, 1, n, denom);
            if (n + base <= N) {
                accumulate_shifted(acc, 1, n + base, denom);
            }
        }
    } else if (which == 2) {
        for (std::int64_t n = 0; 2 * n <= N; ++n) {
            const std::int64_t base = 2 * n + 1;
            const QSeries denom = reciprocal_binomial_series(base, 4, N);
            accumulate_shifted(acc, 1, 2 * n, denom);
            if (2 * n + base <= N) {
                accumulate_shifted(acc, 4, 2 * n + base, denom);
            }
            if (2 * n + 2 * base <= N) {
                accumulate_shifted(acc, 1, 2 * n + 2 * base, denom);
            }
        }
    } else {
        throw InvalidArgument("sun_series: which must be 1 or 2");
    }
    return from_accumulator(std::move(acc));
}

QSeries psi_power_term(int k, std::int64_t N)
{
    require_k(k);
    require_order(N);
    // psi(q^2)^{4k} needs only (N - k)/2 terms of psi before substitution.
    const std::int64_t inner = std::max<std::int64_t>((N - k) / 2, 0);
    const QSeries p = series_pow(substitute_qpower(psi_series(inner), 2), 4 * k);
    return series_shift(p, QExponent::whole(k)).aligned_to(QExponent{}).truncated(N);
}

QSeries T_series(int k, std::int64_t N)
{
    return goswami_series(k, N) - zeta_constant(k) * psi_power_term(k, N);
}

} // namespace gseries
