#pragma once

// Weight-2k forms on Gamma_0(4) in the basis F^j theta^{4k-4j}, j = 0..k.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gseries/exact_core.hpp"

namespace gseries {

struct FThetaDecomposition {
    int k = 0;
    std::vector<Rational> c;  // c_0..c_k, coefficient of F^j theta^{4k-4j}
};

// The k+1 basis elements through q^N. Element j begins q^j + O(q^{j+1}).
class FThetaBasis {
public:
    FThetaBasis(int k, std::int64_t N);

    int weight_half() const { return k_; }
    std::int64_t order() const { return order_; }
    const QSeries& element(int j) const { return elements_.at(static_cast<std::size_t>(j)); }

private:
    int k_;
    std::int64_t order_;
    std::vector<QSeries> elements_;
};

// Forward substitution on the unit upper-triangular system from q^0..q^k,
// followed by a residual check on q^{k+1}..q^N. Throws NotInSpan when the
// residual does not vanish, InvalidArgument when f is not known through q^N
// or has a negative or fractional leading exponent.
FThetaDecomposition decompose(const QSeries& f, int k, std::int64_t N);
FThetaDecomposition decompose(const QSeries& f, const FThetaBasis& basis);

// sum_j c_j F^j theta^{4k-4j} through q^N.
QSeries reconstruct(const FThetaDecomposition& d, std::int64_t N);

// alpha_{2k}(1..k-1), read off decompose(G_{2k}); empty for k = 1.
std::vector<Rational> alphas(int k, std::int64_t N);

// The same numbers, obtained by solving the Pochhammer-product identity for
// the alphas directly (no theta/F expansions involved).
std::vector<Rational> alphas_from_pochhammer(int k, std::int64_t N);

struct CuspReport {
    bool constant_term_zero = false;   // c_0 = 0
    bool top_coefficient_zero = false; // c_k = 0 (integer weight 2k is even)
    bool weighted_sum_zero = false;    // sum_j c_j / 16^j = 0
    Rational weighted_sum;

    bool is_cusp_form() const { return constant_term_zero && top_coefficient_zero && weighted_sum_zero; }
};

CuspReport cusp_certificate(const FThetaDecomposition& d);

struct ExactCheckReport {
    std::string name;
    int k = 0;
    std::int64_t order = 0;
    bool equal = false;
    std::optional<QExponent> first_mismatch;
    std::string detail;
};

// Z(2k) eta(4t)^{8k}/eta(2t)^{4k}
//   + eta(2t)^{20k}/(eta(t)^{8k} eta(4t)^{8k}) sum_j alpha(j) eta(4t)^{16j} eta(t)^{8j}/eta(2t)^{24j}
// through q^N.
QSeries goswami_eta_form(int k, const std::vector<Rational>& alpha, std::int64_t N);

// Checks G_{2k} against its eta-quotient form through q^N and that both
// routes to the alphas agree. Failure is reported, not thrown.
ExactCheckReport eta_identity_check(int k, std::int64_t N);

// c_k of decompose(G_{2k}).
Rational zeta_from_decomposition(int k, std::int64_t N);

inline constexpr const char* kCuspReportSchema = "gseries.cusp_report/1";
inline constexpr const char* kExactCheckSchema = "gseries.exact_check/1";

void to_json(nlohmann::json& j, const FThetaDecomposition& d);
void to_json(nlohmann::json& j, const CuspReport& r);
void to_json(nlohmann::json& j, const ExactCheckReport& r);

} // namespace gseries
