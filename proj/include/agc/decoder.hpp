#pragma once

#include <span>

#include "agc/secantgeom.hpp"

namespace agc {

enum class DecodeStatus { corrected, detected_beyond_capacity, ambiguous, fail };

const char* to_string(DecodeStatus s);

struct DecodeResult {
    DecodeStatus status = DecodeStatus::fail;
    std::vector<int> support;            // located error positions, ascending
    Vector values;                       // error values per support position
    std::optional<Vector> codeword;      // corrected word when status == corrected
    std::optional<int> height;           // the h found
};

/// Geometric decoder: locate the error support as the unique minimal
/// column subset whose span contains the syndrome (searched up to t),
/// then recover the values by a linear solve against those columns.
/// Syndromes with no witness within t are detected, never guessed.
DecodeResult decode_geometric(const GoppaCode& code, const Vector& y);

/// Classical genus-0 decoder: for trial weights w = t down to 1, solve
/// the w x w symmetric system in the power-sum syndromes for the
/// elementary symmetric functions of the error locators, read the
/// locator roots off the evaluation points, and recover values by the
/// same linear solve the geometric decoder uses. A trial is accepted
/// only if the full syndrome is reproduced.
DecodeResult decode_toeplitz_g0(const GoppaCode& code, const Vector& y);

bool results_agree(const DecodeResult& a, const DecodeResult& b);

struct CrossDefect {
    long long trial;
    DecodeResult geometric;
    DecodeResult toeplitz;
};

struct CrossReport {
    long long trials = 0;
    long long disagreements = 0;
    long long both_corrected = 0;
    long long both_rejected = 0;
    std::vector<CrossDefect> defects;  // capped at 32
};

/// Runs both decoders on every received word and reports any
/// disagreement on status, support, values or corrected word.
CrossReport cross_validate(const GoppaCode& code, std::span<const Vector> received);

}  // namespace agc
