#include "gseries/relation.hpp"

#include <algorithm>
#include <cmath>

#include "gseries/errors.hpp"

namespace gseries {

Integer IntegerRelation::height() const
{
    Integer h = abs(p);
    h = std::max<Integer>(h, abs(q));
    return std::max<Integer>(h, abs(r));
}

std::pair<Rational, Rational> IntegerRelation::solved_for_x() const
{
    Rational a(-p, r);
    Rational b(-q, r);
    a.canonicalize();
    b.canonicalize();
    return {a, b};
}

namespace {

using Row = std::vector<Integer>;

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

// Gram-Schmidt of the rows: returns (b*, mu, |b*|^2).
void gram_schmidt(const std::vector<Row>& basis, std::vector<std::vector<Rational>>& star,
                  std::vector<std::vector<Rational>>& mu, std::vector<Rational>& norms)
{
    const std::size_t n = basis.size();
    star.assign(n, {});
    mu.assign(n, std::vector<Rational>(n, 0));
    norms.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        star[i].assign(basis[i].begin(), basis[i].end());
        for (std::size_t j = 0; j < i; ++j) {
            std::vector<Rational> bi(basis[i].begin(), basis[i].end());
            mu[i][j] = norms[j] == 0 ? Rational(0) : dot(bi, star[j]) / norms[j];
            for (std::size_t t = 0; t < star[i].size(); ++t) {
                star[i][t] -= mu[i][j] * star[j][t];
            }
        }
        norms[i] = dot(star[i], star[i]);
    }
}

Integer round_nearest(const Rational& x)
{
    // floor(x + 1/2)
    Rational shifted = x + Rational(1, 2);
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return out;
}

Integer round_to_integer(const HPReal& x)
{
    Integer out;
    mpfr_get_z(out.get_mpz_t(), x.get(), MPFR_RNDN);
    return out;
}

} // namespace

void lll_reduce(std::vector<Row>& basis)
{
    const std::size_t n = basis.size();
    if (n < 2) {
        return;
    }
    const Rational delta(3, 4);
    std::vector<std::vector<Rational>> star;
    std::vector<std::vector<Rational>> mu;
    std::vector<Rational> norms;
    gram_schmidt(basis, star, mu, norms);

    std::size_t k = 1;
    while (k < n) {
        for (std::size_t j = k; j-- > 0;) {
            const Integer c = round_nearest(mu[k][j]);
            if (c != 0) {
                for (std::size_t t = 0; t < basis[k].size(); ++t) {
                    basis[k][t] -= c * basis[j][t];
                }
                gram_schmidt(basis, star, mu, norms);
            }
        }
        if (norms[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1]) {
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            gram_schmidt(basis, star, mu, norms);
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
}

std::optional<IntegerRelation> recognize_quadratic(const HPReal& x, std::int64_t field_disc,
                                                   const Integer& height_bound, Precision p)
{
    if (p.digits < 40) {
        throw InvalidArgument("recognize_quadratic needs at least 40 digits");
    }
    if (field_disc < 2) {
        throw InvalidArgument("field discriminant must be a positive non-square");
    }
    const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(field_disc))));
    if (root * root == field_disc) {
        throw InvalidArgument("field discriminant must be a positive non-square");
    }

    const HPReal xv = x.to_precision(p);
    const HPReal sqrt_d = sqrt(HPReal(static_cast<long>(field_disc), p));
    const HPReal scale = pow10(p.digits - 10, p);
    const std::vector<HPReal> values{HPReal(1, p), sqrt_d, xv};

    std::vector<Row> basis(3, Row(4, 0));
    for (std::size_t i = 0; i < 3; ++i) {
        basis[i][i] = 1;
        basis[i][3] = round_to_integer(values[i] * scale);
    }
    lll_reduce(basis);

    const HPReal threshold = pow10(20 - p.digits, p);
    std::optional<IntegerRelation> best;
    for (const auto& row : basis) {
        Integer a = row[0];
        Integer b = row[1];
        Integer c = row[2];
        if (c == 0) {
            continue;
        }
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        a /= g;
        b /= g;
        c /= g;
        if (b < 0 || (b == 0 && c < 0)) {
            a = -a;
            b = -b;
            c = -c;
        }
        IntegerRelation rel{a, b, c, HPReal(p)};
        if (rel.height() > height_bound) {
            continue;
        }
        rel.residual = abs(HPReal(Rational(a), p) + sqrt_d * HPReal(Rational(b), p) + xv * HPReal(Rational(c), p));
        if (!(rel.residual < threshold)) {
            continue;
        }
        if (!best || rel.height() < best->height()) {
            best = std::move(rel);
        }
    }
    return best;
}

} // namespace gseries
