#pragma once

#include <cstdint>
#include <string>

#include "ljb/io/report.hpp"
#include "ljb/io/scenario.hpp"

namespace ljb::io {

struct VerifyOptions {
    int samples = 200;
    std::uint64_t seed = 1;
    double tol = 1e-9;
};

struct ReduceOptions {
    std::string mode;     // "symmetry" or "constraints"
    std::string out_path; // empty: no reduced scenario written
};

struct StatesOptions {
    int samples = 100;
    std::uint64_t seed = 1;
    std::string reduced_path; // optional cross-check against a written file
};

// Axiom suite, product reconstruction, resolvent identity sweep, positivity
// grid, and Cauchy-Schwarz sweep on the scenario's algebra. Fails (report
// passed = false) iff a residual exceeds its gate.
ReductionReport cmd_verify(const ScenarioFile& sc, const VerifyOptions& opt);

// Runs one of the two reduction pipelines and reports stage dimensions,
// rank decisions, and consistency residuals. With out_path set, writes the
// reduced algebra as a scenario file in the same format.
ReductionReport cmd_reduce(const ScenarioFile& sc, const ReduceOptions& opt);

// State-correspondence checks on the constraint pipeline: Dirac-state
// characterization sampling and reduce/lift round trips.
ReductionReport cmd_states(const ScenarioFile& sc, const StatesOptions& opt);

// Bundled worked example: canonical basis on the sector tower with the
// single Casimir constraint selecting sector l.
ScenarioFile make_angular_momentum_scenario(int l, int l_max);

// CLI exit contract: 3 for input errors (parse/shape/validation), 2 for
// domain, precondition, consistency, and numerical errors. Check failures
// are not exceptions; the caller maps report.passed to 0 or 1.
int exit_code_for(const std::exception& e);

} // namespace ljb::io
