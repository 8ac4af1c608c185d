#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace tcirc {

enum class VerifyLevel { Quick, Full };

struct SuiteResult {
    std::string name;
    long samples = 0;
    /// Worst observed deviation in the suite's own metric (relative or
    /// absolute per the suite description).
    double worst = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Injection point for mutation smoke tests: the closed-vs-direct suites
/// evaluate these instead of the library closed forms when set.
struct VerifyOverrides {
    std::function<double(double rho, int order)> closed_nearest;
    std::function<double(double rho, int order)> closed_gs;
};

/// Runs every oracle-equivalence and property suite. Quick and Full differ
/// only in the large-M asymptotic suites, which Full adds.
std::vector<SuiteResult> run_verification(std::uint64_t seed, VerifyLevel level,
                                          const VerifyOverrides& overrides = {});

/// Prints one line per suite plus a summary; returns 0 iff every suite passed.
int run_verification_report(std::uint64_t seed, VerifyLevel level, std::ostream& out,
                            const VerifyOverrides& overrides = {});

}  // namespace tcirc
