#pragma once

// Integer relation search for p + q*sqrt(d) + r*x = 0 by exact LLL reduction.

#include <cstdint>
#include <optional>

#include "gseries/exact_core.hpp"
#include "gseries/highprec.hpp"

namespace gseries {

struct IntegerRelation {
    Integer p;
    Integer q;
    Integer r;
    HPReal residual;  // |p + q sqrt(d) + r x| at the working precision

    Integer height() const;
    // -(p + q sqrt(d)) / r as the pair (a, b) meaning a + b sqrt(d).
    std::pair<Rational, Rational> solved_for_x() const;
};

// LLL-reduces the rows of an integer basis in place (delta = 3/4, exact
// rational Gram-Schmidt).
void lll_reduce(std::vector<std::vector<Integer>>& basis);

// Looks for the smallest relation p + q sqrt(field_disc) + r x = 0 with
// max(|p|, |q|, |r|) <= height_bound, r != 0, and residual below 10^{20-P}.
// The sign is normalized so that q > 0, or r > 0 when q = 0.
// Throws InvalidArgument when P < 40 or field_disc is not a positive
// non-square.
std::optional<IntegerRelation> recognize_quadratic(const HPReal& x, std::int64_t field_disc,
                                                   const Integer& height_bound, Precision p);

} // namespace gseries
