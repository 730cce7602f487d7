#pragma once

// Named q-expansions. Unless stated otherwise every builder returns a series
// with leading exponent 0 known through q^N.

#include <cstdint>
#include <string>
#include <vector>

#include "gseries/exact_core.hpp"

namespace gseries {

// psi(q) = sum_{n >= 0} q^{n(n+1)/2}.
QSeries psi_series(std::int64_t N);
// (q^2; q^2)_inf / (q; q^2)_inf, the product form of psi.
QSeries psi_product_series(std::int64_t N);
// theta(q) = sum_{n in Z} q^{n^2}.
QSeries theta_series(std::int64_t N);
// F(q) = sum_{n >= 0} sigma_1(2n+1) q^{2n+1}.
QSeries F_series(std::int64_t N);

// prod eta(m tau)^e over the factors, with m in {1, 2, 4}.
struct EtaFactor {
    int multiplier = 1;
    std::int64_t exponent = 0;
};

struct EtaQuotient {
    std::vector<EtaFactor> factors;

    // sum m*e/24.
    QExponent leading_exponent() const;
    std::string to_string() const;
};

// Exact expansion; the result carries leading exponent sum m*e/24 and is
// known through relative order N (offsets 0..N past that exponent).
QSeries eta_quotient_series(const EtaQuotient& eq, std::int64_t N);

// G_{2k}(q) through q^N.
QSeries goswami_series(int k, std::int64_t N);

// which = 1: sum q^n (1 + q^{2n+1}) / (1 - q^{2n+1})^2
// which = 2: sum q^{2n} (1 + 4q^{2n+1} + q^{4n+2}) / (1 - q^{2n+1})^4
QSeries sun_series(int which, std::int64_t N);

// q^k psi(q^2)^{4k}.
QSeries psi_power_term(int k, std::int64_t N);

// T_{2k} = G_{2k} - Z(2k) q^k psi(q^2)^{4k}.
QSeries T_series(int k, std::int64_t N);

} // namespace gseries
