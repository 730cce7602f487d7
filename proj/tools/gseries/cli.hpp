#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gseries/exact_core.hpp"

namespace gseries::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kBadArguments = 2,
    kBadDiscriminant = 3,
    kBadCMPoint = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "q + 4*q^3 + ... + O(q^10)".
std::string format_series(const QSeries& s);

} // namespace gseries::cli
