#include "gseries/cli.hpp"

#include <algorithm>
#include <ctime>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gseries/cache.hpp"
#include "gseries/cm_eval.hpp"
#include "gseries/combinatorics.hpp"
#include "gseries/errors.hpp"
#include "gseries/modular.hpp"
#include "gseries/qseries.hpp"
#include "gseries/verify.hpp"

namespace gseries::cli {

namespace {

constexpr int kCacheFormatVersion = 1;

struct Common {
    std::string format = "pretty";
    bool no_cache = false;
    std::string cache_dir;
    bool no_timestamp = false;
};

std::string utc_timestamp()
{
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void stamp(nlohmann::json& j, const Common& c)
{
    if (!c.no_timestamp) {
        j["generated_at"] = utc_timestamp();
    }
}

Cache open_cache(const Common& c)
{
    if (c.no_cache) {
        return Cache();
    }
    return Cache(c.cache_dir.empty() ? Cache::default_directory() : std::filesystem::path(c.cache_dir));
}

// ------------------------------------------------------------------ expand

QSeries cached_goswami(int k, std::int64_t order, const Cache& cache)
{
    const CacheKey key{"goswami", k, order, kCacheFormatVersion};
    if (auto hit = cache.load(key)) {
        try {
            return nlohmann::json::parse(*hit).get<QSeries>();
        } catch (const std::exception&) {
            // unreadable payload with a valid checksum: fall through and rebuild
        }
    }
    QSeries s = goswami_series(k, order);
    cache.store(key, nlohmann::json(s).dump());
    return s;
}

int cmd_expand(int k, std::int64_t order, const Common& c, std::ostream& out)
{
    const QSeries s = cached_goswami(k, order, open_cache(c));
    if (c.format == "json") {
        nlohmann::json j{{"schema", "gseries.expand/1"}, {"k", k}, {"order", order}, {"series", s}};
        stamp(j, c);
        out << j.dump(2) << '\n';
    } else if (c.format == "csv") {
        out << "exponent,numerator,denominator\n";
        const auto cs = s.coefficients();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            out << i << ',' << cs[i].get_num().get_str() << ',' << cs[i].get_den().get_str() << '\n';
        }
    } else {
        out << "G_" << 2 * k << "(q) = " << format_series(s) << '\n';
    }
    return kOk;
}

// ------------------------------------------------------------------ alphas

int cmd_alphas(int k, std::int64_t order, const Common& c, std::ostream& out)
{
    const std::vector<Rational> a = alphas(k, order);
    const std::vector<Rational> b = alphas_from_pochhammer(k, order);
    const Rational z_bernoulli = zeta_constant(k);
    const Rational z_zeta = zeta_constant_zeta_form(k);
    const Rational z_decomp = zeta_from_decomposition(k, order);
    const bool consistent = a == b && z_decomp == z_bernoulli;

    if (c.format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& x : a) {
            list.push_back(to_fraction_string(x));
        }
        nlohmann::json j{{"schema", "gseries.alphas/1"},
                         {"k", k},
                         {"order", order},
                         {"alphas", list},
                         {"zeta_bernoulli_form", to_fraction_string(z_bernoulli)},
                         {"zeta_decomposition", to_fraction_string(z_decomp)},
                         {"zeta_value_form", to_fraction_string(z_zeta)},
                         {"zeta_value_form_ratio", to_fraction_string(z_zeta / z_bernoulli)},
                         {"routes_agree", a == b},
                         {"consistent", consistent}};
        stamp(j, c);
        out << j.dump(2) << '\n';
    } else {
        std::string joined;
        for (std::size_t i = 0; i < a.size(); ++i) {
            joined += (i ? ", " : "") + to_string(a[i]);
        }
        const std::string w = std::to_string(2 * k);
        out << "alpha_" << w << "(1.." << k - 1 << ") = " << (a.empty() ? "(none)" : joined) << '\n';
        out << "Z(" << w << ") Bernoulli form     = " << to_string(z_bernoulli) << '\n';
        out << "Z(" << w << ") from decomposition = " << to_string(z_decomp)
            << (z_decomp == z_bernoulli ? "" : "  MISMATCH") << '\n';
        out << "Z(" << w << ") zeta-value form    = " << to_string(z_zeta);
        if (z_zeta != z_bernoulli) {
            out << "  (factor " << to_string(Rational(z_zeta / z_bernoulli)) << "; known discrepancy in that form)";
        }
        out << '\n';
        if (a != b) {
            out << "alpha routes disagree: Pochhammer identity gives a different list\n";
        }
    }
    return consistent ? kOk : kVerificationFailed;
}

// -------------------------------------------------------------------- eval

std::string label_of(const CMPoint& tau)
{
    for (const char* l : {"i/2", "i", "2i", "4i"}) {
        const CMPoint p = CMPoint::from_label(l);
        // Same point when x agrees and y^2 |radicand| agrees.
        if (p.x == tau.x && tau.y > 0 && Rational(p.y * p.y * -p.radicand) == Rational(tau.y * tau.y * -tau.radicand)) {
            return l;
        }
    }
    return tau.to_string();
}

int cmd_eval(int k, const CMPoint& tau, std::int64_t D, int prec, const Common& c, std::ostream& out)
{
    const DiscriminantData d = discriminant_data(D);
    const Precision p{prec, 10};
    const CMEvaluationReport rep = evaluate_at_cm(k, tau, d, p);
    const int digits = p.digits;

    if (c.format == "json") {
        nlohmann::json j = rep;
        j["tau"]["label"] = label_of(tau);
        if (const auto point = tau.corollary_point()) {
            const QuadSqrt2 coeff = corollary_coefficient(k, *point);
            j["closed_form_coefficient"] = {{"a", to_fraction_string(coeff.a)}, {"b", to_fraction_string(coeff.b)},
                                            {"of", "(Gamma(1/4)^4/pi^3)^k"}};
        }
        stamp(j, c);
        out << j.dump(2) << '\n';
    } else {
        const std::string w = std::to_string(2 * k);
        out << "G_" << w << " at tau = " << label_of(tau) << ", D = " << D << " (" << digits << " digits)\n";
        out << "value          = " << rep.value.real().to_decimal(digits);
        if (!rep.value.imag().is_zero()) {
            out << " + " << rep.value.imag().to_decimal(digits) << "*i";
        }
        out << '\n';
        out << "omega^" << w << (w.size() < 2 ? " " : "") << "       = " << rep.omega_power.to_decimal(digits) << '\n';
        out << "ratio          = " << rep.ratio.real().to_decimal(digits);
        if (!rep.ratio.imag().is_zero()) {
            out << " + " << rep.ratio.imag().to_decimal(digits) << "*i";
        }
        out << '\n';
        if (rep.recognized) {
            const auto& rel = rep.recognized->relation;
            out << "recognized     = " << rep.recognized->value.to_string() << " in " << rep.recognized->field
                << "  (relation " << rel.p << ", " << rel.q << ", " << rel.r << "; residual "
                << rel.residual.to_scientific(3) << ")\n";
        } else if (rep.recognition_attempted) {
            out << "recognized     = none within height 2^40\n";
        }
        if (const auto point = tau.corollary_point()) {
            const QuadSqrt2 coeff = corollary_coefficient(k, *point);
            out << "closed form    = (" << coeff.to_string() << ") * (Gamma(1/4)^4/pi^3)^" << k << '\n';
            out << "               = " << rep.closed_form->to_decimal(digits) << '\n';
            out << "comparison     : " << (*rep.closed_form_match ? "MATCH" : "MISMATCH") << " (tolerance 1e-"
                << digits - 12 << ")\n";
        }
    }
    if (rep.closed_form_match && !*rep.closed_form_match) {
        return kVerificationFailed;
    }
    return kOk;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const VerifyOptions& o, bool jsonl, const Common& c, std::ostream& out)
{
    const std::vector<CheckResult> results = run_verify(o);
    const auto passed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
    const bool ok = static_cast<std::size_t>(passed) == results.size();

    if (jsonl) {
        for (const auto& r : results) {
            out << nlohmann::json(r).dump() << '\n';
        }
    } else if (c.format == "json") {
        nlohmann::json j{{"schema", "gseries.verify/1"}, {"suite", o.suite}, {"checks", results},
                         {"passed", passed}, {"total", results.size()}, {"ok", ok}};
        stamp(j, c);
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : results) {
            out << (r.pass ? "PASS  " : "FAIL  ") << r.suite << ": " << r.name << " -- " << r.detail << '\n';
        }
        out << passed << "/" << results.size() << " checks passed\n";
    }
    return ok ? kOk : kVerificationFailed;
}

Rational parse_or_throw(const std::string& text, const char* what)
{
    try {
        return parse_rational(text);
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(what), "malformed rational '" + text + "'");
    }
}

} // namespace

std::string format_series(const QSeries& s)
{
    std::ostringstream os;
    const auto cs = s.coefficients();
    const QExponent lead = s.leading_exponent();
    bool first = true;
    auto power = [](const QExponent& e) -> std::string {
        if (e == QExponent::whole(0)) {
            return "";
        }
        if (e == QExponent::whole(1)) {
            return "q";
        }
        const std::string text = e.is_integral() ? std::to_string(e.whole_part()) : "(" + to_string(e.to_rational()) + ")";
        return "q^" + text;
    };
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) {
            continue;
        }
        const QExponent e = lead + QExponent::whole(static_cast<std::int64_t>(i));
        const std::string pw = power(e);
        Rational mag = abs(cs[i]);
        os << (first ? (sgn(cs[i]) < 0 ? "-" : "") : (sgn(cs[i]) < 0 ? " - " : " + "));
        if (mag != 1 || pw.empty()) {
            os << to_string(mag) << (pw.empty() ? "" : "*");
        }
        os << pw;
        first = false;
    }
    const QExponent top = lead + QExponent::whole(static_cast<std::int64_t>(cs.size()));
    os << (first ? "" : " + ") << "O(" << (power(top).empty() ? "1" : power(top)) << ")";
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact q-series and CM evaluation toolkit for the series G_{2k}", "gseries"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&common](CLI::App* sub, bool csv) {
        std::vector<std::string> formats{"pretty", "json"};
        if (csv) {
            formats.emplace_back("csv");
        }
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_flag("--no-cache", common.no_cache, "Do not read or write the on-disk cache");
        sub->add_option("--cache-dir", common.cache_dir, "Cache directory (overrides GSERIES_CACHE_DIR)");
        sub->add_flag("--no-timestamp", common.no_timestamp, "Omit the generated_at field from JSON output");
    };

    int k = 1;
    std::int64_t order = -1;
    int prec = 64;

    auto* expand = app.add_subcommand("expand", "Print the q-expansion of G_{2k}");
    expand->add_option("--k", k, "Series index, 1..16")->required()->check(CLI::Range(1, 16));
    expand->add_option("--order", order, "Truncation order N, 0..2000")->check(CLI::Range(0, 2000));
    add_common(expand, true);

    auto* alphas_cmd = app.add_subcommand("alphas", "Print alpha_{2k}(1..k-1) and the constant Z(2k)");
    alphas_cmd->add_option("--k", k, "Series index, 1..16")->required()->check(CLI::Range(1, 16));
    alphas_cmd->add_option("--order", order, "Residual-check order (default 4k+8)")->check(CLI::Range(1, 2000));
    add_common(alphas_cmd, false);

    std::string tau_label;
    std::string x_text = "0";
    std::string y_text;
    std::int64_t radicand = -1;
    std::int64_t D = -4;
    auto* eval = app.add_subcommand("eval", "Evaluate G_{2k} at a CM point");
    eval->add_option("--k", k, "Series index, 1..16")->required()->check(CLI::Range(1, 16));
    auto* tau_opt = eval->add_option("--tau", tau_label, "CM point label: i/2, i, 2i or 4i");
    auto* y_opt = eval->add_option("--y", y_text, "tau = x + y*sqrt(radicand): rational y > 0");
    eval->add_option("--x", x_text, "tau = x + y*sqrt(radicand): rational x")->needs(y_opt);
    eval->add_option("--radicand", radicand, "Negative integer under the square root")->needs(y_opt);
    tau_opt->excludes(y_opt);
    eval->add_option("--D", D, "Fundamental discriminant");
    eval->add_option("--prec", prec, "Decimal digits, 10..2000")->check(CLI::Range(10, 2000));
    add_common(eval, false);

    VerifyOptions vopts;
    std::int64_t vorder = -1;
    int vprec = -1;
    bool jsonl = false;
    auto* verify = app.add_subcommand("verify", "Run the invariant suites");
    verify->add_option("--suite", vopts.suite, "series, modular, cm, sun or all")
        ->check(CLI::IsMember({"series", "modular", "cm", "sun", "all"}));
    verify->add_option("--order", vorder, "Override every check's order")->check(CLI::Range(1, 2000));
    verify->add_option("--prec", vprec, "Override the suite precision")->check(CLI::Range(20, 2000));
    verify->add_flag("--jsonl", jsonl, "One JSON object per check");
    add_common(verify, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    }

    try {
        if (expand->parsed()) {
            return cmd_expand(k, order < 0 ? 20 : order, common, out);
        }
        if (alphas_cmd->parsed()) {
            const std::int64_t n = order < 0 ? 4 * k + 8 : order;
            if (n < k + 1) {
                err << "error: --order must be at least k+1\n";
                return kBadArguments;
            }
            return cmd_alphas(k, n, common, out);
        }
        if (eval->parsed()) {
            CMPoint tau;
            if (!tau_label.empty()) {
                try {
                    tau = CMPoint::from_label(tau_label);
                } catch (const InvalidArgument& e) {
                    err << "error: " << e.what() << '\n';
                    return kBadCMPoint;
                }
            } else if (!y_text.empty()) {
                tau = CMPoint{parse_or_throw(x_text, "--x"), parse_or_throw(y_text, "--y"), radicand};
            } else {
                err << "error: eval needs --tau or --y\n";
                return kBadArguments;
            }
            return cmd_eval(k, tau, D, prec, common, out);
        }
        if (verify->parsed()) {
            if (vorder > 0) {
                vopts.order = vorder;
            }
            if (vprec > 0) {
                vopts.prec = vprec;
            }
            return cmd_verify(vopts, jsonl, common, out);
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    } catch (const NotFundamental& e) {
        err << "error: " << e.what() << '\n';
        return kBadDiscriminant;
    } catch (const NotInUpperHalfPlane& e) {
        err << "error: " << e.what() << '\n';
        return kBadCMPoint;
    } catch (const NotInField& e) {
        err << "error: " << e.what() << '\n';
        return kBadCMPoint;
    } catch (const InvalidArgument& e) {
        // discriminant_data rejects D >= 0 this way
        err << "error: " << e.what() << '\n';
        return eval->parsed() ? kBadDiscriminant : kBadArguments;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kBadArguments;
}

} // namespace gseries::cli
