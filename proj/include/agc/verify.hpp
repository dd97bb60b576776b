#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agc/agcode.hpp"

namespace agc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 12345;    // messages for the round-trip checks
    long long budget = 1'000'000;  // exhaustion refusal threshold
};

/// Full invariant suite on one configuration: dimension bookkeeping,
/// one-point space dimensions, duality, spannedness, syndrome
/// injectivity on the t-ball, height exactness and uniqueness for
/// weights <= t, stability labels, decode round-trips, and (genus 0)
/// agreement of the two decoders.
std::vector<CheckResult> verify_code(const CodeConfig& config, const VerifyOptions& options = {});

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace agc
