#pragma once

#include "besselbound/special_functions.hpp"

#include <map>
#include <string>
#include <vector>

namespace besselbound::cli {

struct Check {
    std::string name;
    double observed;
    double tolerance;
    bool pass;
    std::string detail;
};

struct SuiteResult {
    std::vector<Check> checks;
    std::map<std::string, double> values;  ///< headline numbers, e.g. closed_form and oracle

    bool pass() const;
};

struct VerifyParams {
    int n = 3;
    double h0 = 1.0;
    double tau = 1.0;
    int grid = 4096;
    int nmax = 50;
    EvalOptions eval{};
};

/// Known suites: bessel-identities, zeros, ode, robin-ball, bounds-consistency, freitas.
const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown suite.
SuiteResult run_suite(const std::string& name, const VerifyParams& params);

} // namespace besselbound::cli
