#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ljb/reduction.hpp"

namespace ljb::io {

// One named numeric check with its gate. `value` is the measured quantity
// (residual, deviation, or 1/0 for booleans), `threshold` what it was held
// against.
struct CheckResult {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool passed = false;

    bool operator==(const CheckResult&) const = default;
};

// Everything a CLI command reports: input identity, echoed options, stage
// dimensions, residuals, rank decisions, checks, warnings, and the overall
// verdict. Deterministic for fixed (scenario bytes, options): there are no
// timestamps or paths in here. Serialization round-trips losslessly.
struct ReductionReport {
    std::string command;
    std::string input_digest;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, int>> stage_dims;
    std::vector<std::pair<std::string, double>> axiom_residuals;
    std::vector<RankDecision> rank_decisions;
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;
    bool passed = true;

    void add_check(const std::string& name, double value, double threshold);
    // For pass/fail facts without a numeric residual.
    void add_flag(const std::string& name, bool ok);

    std::string to_json() const;
    std::string to_text() const;
    static ReductionReport from_json(const std::string& bytes);

    bool operator==(const ReductionReport&) const = default;
};

} // namespace ljb::io
