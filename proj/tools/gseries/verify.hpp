#pragma once

// The invariant suites behind `gseries verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gseries::cli {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
    nlohmann::json data;
};

struct VerifyOptions {
    std::string suite = "all";        // series, modular, cm, sun, all
    std::optional<std::int64_t> order;  // overrides every per-check default order
    std::optional<int> prec;            // overrides the per-suite default precision
};

bool is_known_suite(const std::string& suite);

// Runs the checks concurrently; results come back in a fixed order.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

void to_json(nlohmann::json& j, const CheckResult& r);

} // namespace gseries::cli
