#pragma once

#include <cstdint>
#include <vector>

#include "gseries/exact_core.hpp"

namespace gseries {

// C(n, m); zero when m < 0 or m > n.
Integer binomial(std::int64_t n, std::int64_t m);

Integer factorial(std::int64_t n);

// Stirling partition number {n j}, from the triangle recurrence.
Integer stirling2(std::int64_t n, std::int64_t j);

// B_n with B_1 = -1/2, from sum_{j=0}^{m} C(m+1, j) B_j = 0.
Rational bernoulli(std::int64_t n);

// The integer arrays a_k(m), b_k(l) and the two numerator polynomials used by
// the odd-k and even-k branches of the series G_{2k}.
struct GoswamiPolynomials {
    int k = 0;
    std::vector<Integer> a;  // a_k(0..2k-1)
    std::vector<Integer> b;  // b_k(1..2k-1), stored at index l-1
    Poly even;               // degree 2k-2
    Poly odd;                // degree 4k-2
};

GoswamiPolynomials build_polynomials(int k);

// Z(2k) = -(-16)^k B_{2k} (4^k - 1) / (8k); always positive.
Rational zeta_constant(int k);

// The alternative expression 4^{k-1}(4^k - 1)(2k)! zeta(2k)/pi^{2k}, evaluated
// exactly through zeta(2k)/pi^{2k} = (-1)^{k+1} B_{2k} 2^{2k-1} / (2k)!.
// It equals k * zeta_constant(k), so the two disagree for k >= 2.
Rational zeta_constant_zeta_form(int k);

} // namespace gseries
