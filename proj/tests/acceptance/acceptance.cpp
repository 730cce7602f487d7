// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Tolerances and time limits are pinned here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gseries/cli.hpp"
#include "gseries/cm_eval.hpp"
#include "gseries/combinatorics.hpp"
#include "gseries/errors.hpp"
#include "gseries/qseries.hpp"
#include "gseries/relation.hpp"
#include "gseries/special_functions.hpp"
#include "gseries/verify.hpp"

using namespace gseries;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        pass = false;
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += why;
    }
};

// Runs `body`, appends the elapsed time, and fails when it exceeds limit_s.
bool criterion(const std::string& id, const std::string& title, double limit_s, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs > limit_s) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "took %.2fs > %.0fs", secs, limit_s);
        o.fail(buf);
    }
    char t[32];
    std::snprintf(t, sizeof t, "%.2fs", secs);
    std::cout << (o.pass ? "PASS " : "FAIL ") << id << " " << title << " [" << t << "]"
              << (o.detail.empty() ? "" : " -- " + o.detail) << std::endl;
    return o.pass;
}

bool is_z_check(const cli::CheckResult& r) { return r.name.rfind("Z(", 0) == 0; }

Outcome suite_outcome(const std::string& suite, const std::function<bool(const cli::CheckResult&)>& keep)
{
    Outcome o;
    cli::VerifyOptions opts;
    opts.suite = suite;
    int n = 0;
    for (const auto& r : cli::run_verify(opts)) {
        if (!keep(r)) {
            continue;
        }
        ++n;
        if (!r.pass) {
            o.fail(r.name + ": " + r.detail);
        }
    }
    if (o.pass) {
        o.detail = std::to_string(n) + " checks";
    }
    return o;
}

Outcome ac1()
{
    Outcome o;
    const std::vector<std::pair<int, nlohmann::json>> cases{
        {3, nlohmann::json{"1/1", "-16/1"}},
        {4, nlohmann::json{"0/1", "128/1", "-2048/1"}},
    };
    for (const auto& [k, expect] : cases) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run({"alphas", "--k", std::to_string(k), "--format", "json", "--no-timestamp", "--no-cache"},
                                  out, err);
        const auto j = nlohmann::json::parse(out.str());
        if (code != 0 || j["alphas"] != expect) {
            o.fail("k=" + std::to_string(k) + " gave " + j["alphas"].dump());
        }
    }
    return o;
}

Outcome ac2()
{
    Outcome o;
    const Precision p{64, 10};
    const HPReal tol = pow10(-10, p);
    struct Case {
        int k;
        const char* label;
        CorollaryPoint point;
        const char* printed;
    };
    const std::vector<Case> cases{{3, "i/2", CorollaryPoint::ExpMinusPi, "0.0633804556"},
                                  {3, "i", CorollaryPoint::ExpMinus2Pi, "0.0018690318"},
                                  {4, "i/2", CorollaryPoint::ExpMinusPi, "0.2980189122"},
                                  {4, "i", CorollaryPoint::ExpMinus2Pi, "0.0004465790"}};
    for (const auto& c : cases) {
        const HPReal printed = HPReal::parse(c.printed, p);
        const HPReal summed = goswami_numeric(c.k, q_from_tau(CMPoint::from_label(c.label).to_complex(p), p), p).real();
        const HPReal closed = corollary_closed_form(c.k, c.point, p);
        const std::string name = "G_" + std::to_string(2 * c.k) + "(" + to_string(c.point) + ")";
        if (abs(summed - printed) > tol) {
            o.fail(name + " summation " + summed.to_decimal(15));
        }
        if (abs(closed - printed) > tol) {
            o.fail(name + " closed form " + closed.to_decimal(15));
        }
    }
    if (o.pass) {
        o.detail = "4 values x 2 routes within 1e-10";
    }
    return o;
}

Outcome ac5()
{
    Outcome o;
    const Precision p{50, 10};
    const HPReal tol35 = pow10(-35, p);
    const OmegaConstants c4 = omega_constants(discriminant_data(-4), p);
    const HPReal expect = pow(gamma_rational(1, 4, p), 2) / (sqrt(HPReal(2, p)) * pow(pi(p), Rational(3, 2)));
    if (abs(c4.omega - expect) > tol35) {
        o.fail("omega_{-4} off by " + abs(c4.omega - expect).to_scientific(3));
    }
    int tested = 0;
    for (std::int64_t D = -3; D >= -20; --D) {
        if (!is_fundamental(D)) {
            continue;
        }
        ++tested;
        const OmegaConstants c = omega_constants(discriminant_data(D), p);
        const HPReal diff = abs(c.omega * c.omega - c.Omega * c.Omega * (2 * (-D)));
        if (diff > tol35) {
            o.fail("D=" + std::to_string(D) + " off by " + diff.to_scientific(3));
        }
    }
    const HPReal tol40 = pow10(-40, p);
    const HPComplex i(HPReal(p), HPReal(1, p));
    const HPReal eta_i = eta_numeric(i, p).real();
    if (abs(sqrt(c4.Omega) - eta_i) > tol40) {
        o.fail("Omega_{-4}^{1/2} != eta(i)");
    }
    for (const auto& row : eta_value_table(p)) {
        if (row.error > tol40) {
            o.fail("eta(" + row.label + ") error " + row.error.to_scientific(3));
        }
    }
    if (o.pass) {
        o.detail = std::to_string(tested) + " discriminants, eta table within 1e-40";
    }
    return o;
}

Outcome ac6()
{
    Outcome o;
    const Precision p{30, 10};
    const std::vector<Rational> qs{make_rational(99, 100), make_rational(999, 1000)};
    for (int which : {1, 2}) {
        const LimitReport r = sun_limit_probe(which, qs, p);
        const double tol = which == 1 ? 1e-3 : 1e-2;
        if (r.relative_error.to_double() > tol) {
            o.fail("S_" + std::to_string(which) + " relative error " + r.relative_error.to_scientific(3));
        } else {
            o.detail += (o.detail.empty() ? "" : ", ") + std::string("S_") + std::to_string(which) + " rel err " +
                        r.relative_error.to_scientific(3);
        }
    }
    return o;
}

Outcome ac7()
{
    Outcome o;
    const Precision p{50, 10};
    const CMPoint half_i = CMPoint::from_label("i/2");
    const HPComplex q = q_from_tau(half_i.to_complex(p), p);
    const HPReal r = q.abs();
    const std::int64_t N = 120;
    for (int k = 1; k <= 4; ++k) {
        const HPComplex direct = goswami_numeric(k, q, p);
        const HPComplex truncated = evaluate_series(goswami_series(k, N), q, p);
        const HPReal bound = goswami_tail_bound(k, N, r) + pow10(-(p.digits - 5), p);
        const HPReal diff = (direct - truncated).abs();
        if (diff > bound) {
            o.fail("k=" + std::to_string(k) + " difference " + diff.to_scientific(3) + " exceeds " +
                   bound.to_scientific(3));
        }
    }

    // Every operation at P and 2P must agree to P - 10 digits.
    const Precision p2 = p.doubled();
    const int digits = p.digits - 10;
    const auto at = [](Precision pr) {
        return std::pair{HPReal(make_rational(7, 3), pr), HPReal(make_rational(-5, 11), pr)};
    };
    const auto [a1, b1] = at(p);
    const auto [a2, b2] = at(p2);
    const std::vector<std::pair<std::string, std::function<HPReal(const HPReal&, const HPReal&, Precision)>>> ops{
        {"add", [](const HPReal& a, const HPReal& b, Precision) { return a + b; }},
        {"sub", [](const HPReal& a, const HPReal& b, Precision) { return a - b; }},
        {"mul", [](const HPReal& a, const HPReal& b, Precision) { return a * b; }},
        {"div", [](const HPReal& a, const HPReal& b, Precision) { return a / b; }},
        {"sqrt", [](const HPReal& a, const HPReal&, Precision) { return sqrt(a); }},
        {"exp", [](const HPReal&, const HPReal& b, Precision) { return exp(b); }},
        {"log", [](const HPReal& a, const HPReal&, Precision) { return log(a); }},
        {"sin", [](const HPReal& a, const HPReal&, Precision) { return sin(a); }},
        {"cos", [](const HPReal& a, const HPReal&, Precision) { return cos(a); }},
        {"pow", [](const HPReal& a, const HPReal& b, Precision) { return pow(a, b); }},
        {"pi", [](const HPReal&, const HPReal&, Precision pr) { return pi(pr); }},
        {"agm", [](const HPReal& a, const HPReal& b, Precision pr) { return agm(a, -b, pr); }},
        {"gamma", [](const HPReal& a, const HPReal&, Precision pr) { return gamma(a, pr); }},
        {"gamma(1/4)", [](const HPReal&, const HPReal&, Precision pr) { return gamma_rational(1, 4, pr); }},
        {"eta(i)", [](const HPReal&, const HPReal&, Precision pr) {
             return eta_numeric(HPComplex(HPReal(pr), HPReal(1, pr)), pr).real();
         }},
        {"G_6(e^-pi)", [](const HPReal&, const HPReal&, Precision pr) {
             return goswami_numeric(3, q_from_tau(HPComplex(HPReal(pr), HPReal(make_rational(1, 2), pr)), pr), pr)
                 .real();
         }},
        {"omega_{-7}", [](const HPReal&, const HPReal&, Precision pr) {
             return omega_constants(discriminant_data(-7), pr).omega;
         }},
    };
    for (const auto& [name, fn] : ops) {
        if (!agree_to_digits(fn(a1, b1, p), fn(a2, b2, p2), digits)) {
            o.fail("precision doubling: " + name);
        }
    }
    if (o.pass) {
        o.detail = "tail bound k=1..4 at N=120; " + std::to_string(ops.size()) + " operations agree to " +
                   std::to_string(digits) + " digits";
    }
    return o;
}

Outcome ac8()
{
    Outcome o;
    const Precision p{80, 10};
    const HPReal tol = pow10(-40, p);
    // Coefficients of omega_{-4}^{2k}, expanded by hand from the closed forms.
    const std::vector<std::pair<QuadSqrt2, QuadSqrt2>> table{
        {{make_rational(1, 64), 0}, {make_rational(3, 256), make_rational(-1, 128)}},
        {{make_rational(1, 512), 0}, {make_rational(17, 8192), make_rational(-3, 2048)}},
        {{make_rational(3, 1024), 0}, {make_rational(99, 65536), make_rational(-33, 32768)}},
        {{make_rational(81, 16384), 0}, {make_rational(9297, 4194304), make_rational(-819, 524288)}},
    };
    const OmegaConstants c = omega_constants(discriminant_data(-4), p);
    for (int k = 1; k <= 4; ++k) {
        for (const auto point : {CorollaryPoint::ExpMinusPi, CorollaryPoint::ExpMinus2Pi}) {
            const QuadSqrt2 expected = omega_coefficient(k, point);
            const QuadSqrt2& by_hand = point == CorollaryPoint::ExpMinusPi ? table[k - 1].first : table[k - 1].second;
            const std::string name = "k=" + std::to_string(k) + " at " + to_string(point);
            if (!(expected == by_hand)) {
                o.fail(name + ": exact expansion " + expected.to_string());
                continue;
            }
            const CMPoint tau = CMPoint::from_label(point == CorollaryPoint::ExpMinusPi ? "i/2" : "i");
            const HPReal value = goswami_numeric(k, q_from_tau(tau.to_complex(p), p), p).real();
            const HPReal ratio = value / pow(c.omega, 2 * k);
            const auto rel = recognize_quadratic(ratio, 2, Integer(1) << 40, p);
            if (!rel) {
                o.fail(name + ": no relation found");
                continue;
            }
            const auto [a, b] = rel->solved_for_x();
            if (!(QuadSqrt2{a, b} == expected)) {
                o.fail(name + ": recognized " + QuadSqrt2{a, b}.to_string());
            }
            if (rel->residual >= tol) {
                o.fail(name + ": residual " + rel->residual.to_scientific(3));
            }
        }
    }
    if (o.pass) {
        o.detail = "8 coefficients recovered at 80 digits";
    }
    return o;
}

} // namespace

int main()
{
    bool ok = true;
    ok &= criterion("AC1", "exact alphas for k=3,4", 5, ac1);
    ok &= criterion("AC2", "ten-digit CM values by summation and closed form", 30, ac2);
    ok &= criterion("AC3", "exact identity suite", 60, [] {
        Outcome o = suite_outcome("series", [](const cli::CheckResult&) { return true; });
        const Outcome m = suite_outcome("modular", [](const cli::CheckResult& r) { return !is_z_check(r); });
        if (!m.pass) {
            o.fail(m.detail);
        } else if (o.pass) {
            o.detail += " + " + m.detail;
        }
        return o;
    });
    ok &= criterion("AC4", "Z from decomposition equals the Bernoulli form", 0, [] {
        Outcome o = suite_outcome("modular", is_z_check);
        // The zeta-value form must be reported as off by exactly k for k >= 2.
        for (int k = 2; k <= 8; ++k) {
            if (zeta_constant_zeta_form(k) != zeta_constant(k) * k) {
                o.fail("zeta-value form ratio for k=" + std::to_string(k) + " is not k");
            }
        }
        if (o.pass) {
            o.detail += "; zeta-value form differs by factor k for k >= 2 (reported, not a failure)";
        }
        return o;
    });
    ok &= criterion("AC5", "periods and eta table at 50 digits", 0, ac5);
    ok &= criterion("AC6", "q -> 1 limits of S_1 and S_2 by Richardson extrapolation", 0, ac6);
    ok &= criterion("AC7", "tail bound and precision doubling", 0, ac7);
    ok &= criterion("AC8", "recognition in Q(sqrt 2) at 80 digits", 0, ac8);
    return ok ? 0 : 1;
}
