#pragma once

// Imaginary quadratic discriminants, the Chowla-Selberg periods omega_D and
// Omega_D, closed forms of G_{2k} at e^{-pi} and e^{-2pi}, and evaluation of
// G_{2k} at CM points.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gseries/exact_core.hpp"
#include "gseries/highprec.hpp"
#include "gseries/relation.hpp"

namespace gseries {

// D < 0 with D = 1 mod 4 squarefree, or D = 4m with m = 2, 3 mod 4 squarefree.
bool is_fundamental(std::int64_t D);

// Number of primitive reduced forms (a, b, c) with b^2 - 4ac = D,
// |b| <= a <= c and b >= 0 when |b| = a or a = c. Requires D < 0, D = 0, 1 mod 4.
std::int64_t class_number(std::int64_t D);

// Kronecker symbol (D / n) for n >= 1.
int kronecker(std::int64_t D, std::int64_t n);

struct DiscriminantData {
    std::int64_t D = 0;
    bool is_fundamental = false;
    std::int64_t h = 0;
    Rational h_prime;
    std::vector<int> chi;  // chi[j-1] = chi_D(j), 1 <= j <= |D|-1

    int chi_at(std::int64_t j) const;
};

// Throws InvalidArgument for D >= 0 and NotFundamental otherwise.
DiscriminantData discriminant_data(std::int64_t D);

struct OmegaConstants {
    HPReal omega;
    HPReal Omega;
};

OmegaConstants omega_constants(const DiscriminantData& d, Precision p);

// a + b sqrt(2), exact.
struct QuadSqrt2 {
    Rational a;
    Rational b;

    static QuadSqrt2 sqrt2() { return {0, 1}; }

    QuadSqrt2 operator+(const QuadSqrt2& o) const { return {a + o.a, b + o.b}; }
    QuadSqrt2 operator-(const QuadSqrt2& o) const { return {a - o.a, b - o.b}; }
    QuadSqrt2 operator*(const QuadSqrt2& o) const { return {a * o.a + 2 * b * o.b, a * o.b + b * o.a}; }
    QuadSqrt2 operator*(const Rational& s) const { return {a * s, b * s}; }
    QuadSqrt2 inverse() const;
    QuadSqrt2 pow(std::int64_t n) const;
    bool operator==(const QuadSqrt2& o) const { return a == o.a && b == o.b; }

    HPReal value(Precision p) const;
    std::string to_string() const;
};

enum class CorollaryPoint { ExpMinusPi, ExpMinus2Pi };

std::string to_string(CorollaryPoint point);

// The exact C(k) with G_{2k}(point) = C(k) * (Gamma(1/4)^4 / pi^3)^k.
QuadSqrt2 corollary_coefficient(int k, CorollaryPoint point);

// The same value divided by omega_{-4}^{2k}; equals 2^k C(k) since
// Gamma(1/4)^4 / pi^3 = 2 omega_{-4}^2.
QuadSqrt2 omega_coefficient(int k, CorollaryPoint point);

HPReal corollary_closed_form(int k, CorollaryPoint point, Precision p);

// tau = x + y sqrt(radicand) with radicand < 0 and y > 0.
struct CMPoint {
    Rational x;
    Rational y;
    std::int64_t radicand = -1;

    // "i/2", "i", "2i", "4i".
    static CMPoint from_label(std::string_view label);

    HPComplex to_complex(Precision p) const;
    // Set when tau equals i/2 (q = e^{-pi}) or i (q = e^{-2pi}), in any representation.
    std::optional<CorollaryPoint> corollary_point() const;
    std::string to_string() const;
};

struct RecognizedValue {
    std::string field = "Q(sqrt 2)";
    IntegerRelation relation;
    QuadSqrt2 value;  // the ratio as a + b sqrt 2
};

struct CMEvaluationReport {
    int k = 0;
    CMPoint tau;
    std::int64_t D = 0;
    Precision precision;
    HPComplex value;
    HPReal omega_power;  // omega_D^{2k}
    HPComplex ratio;     // value / omega_D^{2k}
    std::optional<RecognizedValue> recognized;
    bool recognition_attempted = false;
    std::optional<HPReal> closed_form;
    std::optional<bool> closed_form_match;
};

// Recognition height bound used by evaluate_at_cm.
Integer default_height_bound();

// Throws NotInUpperHalfPlane when y <= 0 and NotInField when the squarefree
// parts of the radicand and D differ. Recognition is attempted only for
// D = -4 with basis {1, sqrt 2}.
CMEvaluationReport evaluate_at_cm(int k, const CMPoint& tau, const DiscriminantData& d, Precision p);

// One line of the eta-value table at tau in {i/2, i, 2i, 4i}.
struct EtaTableRow {
    std::string label;
    HPReal eta;          // numeric eta(tau)
    HPReal predicted;    // multiple of Omega_{-4}^{1/2}
    HPReal ramanujan;    // q^{1/24} f(-q) from the Gamma(3/4) formulas
    HPReal error;        // max of both absolute differences
};

std::vector<EtaTableRow> eta_value_table(Precision p);

void to_json(nlohmann::json& j, const DiscriminantData& d);
void to_json(nlohmann::json& j, const CMEvaluationReport& r);

} // namespace gseries
