#pragma once

#include <string>
#include <string_view>
#include <vector>

// Self-checks of the library's invariants against its own brute-force
// oracles. Backs the `verify` command.

namespace fixsing {

struct Check {
    std::string suite;
    std::string name;
    double value = 0.0;      // measured residual or deviation
    double tolerance = 0.0;  // pass iff value <= tolerance
    [[nodiscard]] bool pass() const { return value <= tolerance; }
};

// Suites: specfun, regimes, spectral, complete, kernels, cauchy, or "all".
// nodes is the PV rule size handed to the oracle. Throws ConfigError on an
// unknown suite.
std::vector<Check> run_checks(std::string_view suite, int nodes = 512);

const std::vector<std::string>& check_suites();

}  // namespace fixsing
