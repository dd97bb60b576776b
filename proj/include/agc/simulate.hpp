#pragma once

#include <optional>
#include <string>

#include "agc/channel.hpp"
#include "agc/config.hpp"

namespace agc {

/// One experiment: decode trials at each scheduled error weight, either
/// exhaustively over all errors of that weight or sampled through the
/// channel. The seed is mandatory in sampled mode; exhaustive mode
/// refuses weight classes larger than the budget.
struct ExperimentSpec {
    CodeConfig config;
    std::vector<int> weights;
    long long trials = 1000;  // per weight, sampled mode
    std::optional<std::uint64_t> seed;
    bool exhaustive = false;
    std::string decoder = "geometric";  // geometric | toeplitz | both
    long long budget = 1'000'000;
};

/// Per-weight success rates, height statistics and decoder agreement.
/// The report is a deterministic function of (spec, seed).
json simulate(const ExperimentSpec& spec);

}  // namespace agc
