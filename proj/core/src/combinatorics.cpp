#include "gseries/combinatorics.hpp"

#include <algorithm>

#include "gseries/errors.hpp"

namespace gseries {

namespace {

void require_positive_k(int k)
{
    if (k < 1) {
        throw InvalidArgument("k must be a positive integer");
    }
}

Integer pow2(unsigned long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

} // namespace

Integer binomial(std::int64_t n, std::int64_t m)
{
    if (n < 0 || m < 0 || m > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    return r;
}

Integer factorial(std::int64_t n)
{
    if (n < 0) {
        throw InvalidArgument("factorial of a negative integer");
    }
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer stirling2(std::int64_t n, std::int64_t j)
{
    if (n < 0 || j < 0) {
        throw InvalidArgument("stirling2 requires non-negative arguments");
    }
    if (j > n) {
        return 0;
    }
    // row[i] holds {r i} for the current row r.
    std::vector<Integer> row(static_cast<std::size_t>(j) + 1);
    row[0] = 1;
    for (std::int64_t r = 1; r <= n; ++r) {
        const auto top = static_cast<std::size_t>(std::min(r, j));
        for (std::size_t i = top; i >= 1; --i) {
            row[i] = Integer(static_cast<unsigned long>(i)) * row[i] + row[i - 1];
        }
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(j)];
}

Rational bernoulli(std::int64_t n)
{
    if (n < 0) {
        throw InvalidArgument("bernoulli index must be non-negative");
    }
    if (n == 1) {
        return Rational(-1, 2);
    }
    if (n % 2 == 1) {
        return 0;
    }
    std::vector<Rational> B(static_cast<std::size_t>(n) + 1);
    B[0] = 1;
    for (std::int64_t m = 1; m <= n; ++m) {
        if (m > 1 && m % 2 == 1) {
            continue;
        }
        Rational acc = 0;
        for (std::int64_t j = 0; j < m; ++j) {
            if (sgn(B[static_cast<std::size_t>(j)]) != 0) {
                acc += Rational(binomial(m + 1, j)) * B[static_cast<std::size_t>(j)];
            }
        }
        B[static_cast<std::size_t>(m)] = -acc / (m + 1);
    }
    return B[static_cast<std::size_t>(n)];
}

GoswamiPolynomials build_polynomials(int k)
{
    require_positive_k(k);
    GoswamiPolynomials g;
    g.k = k;
    const std::int64_t top = 2 * k - 1;

    g.a.resize(static_cast<std::size_t>(top) + 1);
    for (std::int64_t m = 0; m <= top; ++m) {
        Integer acc = 0;
        for (std::int64_t j = 0; j <= top; ++j) {
            Integer term = factorial(j) * stirling2(top, j) * binomial(j, m);
            acc += (j % 2 == 0) ? term : Integer(-term);
        }
        g.a[static_cast<std::size_t>(m)] = acc;
    }

    g.b.resize(static_cast<std::size_t>(top));
    for (std::int64_t l = 1; l <= top; ++l) {
        Integer acc = 0;
        for (std::int64_t m = 0; m <= top; ++m) {
            Integer term = g.a[static_cast<std::size_t>(m)] * binomial(2 * k - m - 1, l);
            acc += (m % 2 == 0) ? term : Integer(-term);
        }
        g.b[static_cast<std::size_t>(l - 1)] = acc;
    }

    std::vector<Rational> even(static_cast<std::size_t>(top));
    for (std::int64_t l = 1; l <= top; ++l) {
        const Integer& b = g.b[static_cast<std::size_t>(l - 1)];
        even[static_cast<std::size_t>(l - 1)] = (l % 2 == 0) ? Rational(b) : Rational(-b);
    }
    g.even = Poly(std::move(even));

    const Poly one_plus_z({Rational(1), Rational(1)});
    const Poly z = Poly::monomial(1);
    g.odd = one_plus_z.pow(static_cast<unsigned>(2 * k)) * g.even -
            Rational(pow2(static_cast<unsigned long>(2 * k - 1))) * (z * g.even.compose_power(2));
    return g;
}

Rational zeta_constant(int k)
{
    require_positive_k(k);
    const auto uk = static_cast<unsigned long>(k);
    Integer sixteen_k;
    mpz_ui_pow_ui(sixteen_k.get_mpz_t(), 16, uk);
    const Integer minus_sixteen_k = (k % 2 == 0) ? sixteen_k : Integer(-sixteen_k);
    const Integer four_k_minus_one = pow2(2 * uk) - 1;
    Rational z = -Rational(minus_sixteen_k) * bernoulli(2 * k) * Rational(four_k_minus_one) / (8 * k);
    z.canonicalize();
    return z;
}

Rational zeta_constant_zeta_form(int k)
{
    require_positive_k(k);
    const auto uk = static_cast<unsigned long>(k);
    const Rational B = bernoulli(2 * k);
    // zeta(2k)/pi^{2k}
    Rational zeta_ratio = B * Rational(pow2(2 * uk - 1)) / Rational(factorial(2 * k));
    if (k % 2 == 0) {
        zeta_ratio = -zeta_ratio;
    }
    Rational z = Rational(pow2(2 * uk - 2)) * Rational(pow2(2 * uk) - 1) * Rational(factorial(2 * k)) *
                 zeta_ratio;
    z.canonicalize();
    return z;
}

} // namespace gseries
