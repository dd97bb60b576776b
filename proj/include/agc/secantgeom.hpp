#pragma once

#include <map>
#include <optional>
#include <span>

#include "agc/agcode.hpp"

namespace agc {

/// A syndrome, i.e. a vector of F_q^(k*). Nonzero syndromes are read
/// projectively as points of P^(d+g-2); the zero vector is the
/// distinguished split point.
struct SyndromePoint {
    Vector v;
};

enum class Stability { unstable, semistable, stable };

const char* to_string(Stability s);

/// Stratum data of a syndrome point: its secant height h (the smallest
/// number of parity columns whose span contains it), the invariant
/// s = 2h - d, the stability class, and every support set witnessing the
/// minimal height. h is empty when no witness exists within the search
/// bound. Heights are computed over reduced divisors supported on D, so
/// above t they are upper bounds for the height over all divisors.
struct StratumLabel {
    std::optional<int> h;
    std::optional<int> s;
    std::optional<Stability> stability;
    std::vector<std::vector<int>> witnesses;
};

/// parity * y; zero exactly on codewords. Throws LengthMismatch.
SyndromePoint syndrome(const GoppaCode& code, const Vector& y);

/// True iff the point lies in the linear span of the parity columns
/// indexed by support. The empty span contains only the zero point.
bool span_contains(const GoppaCode& code, std::span<const int> support, const SyndromePoint& p);

/// Smallest h <= bound such that some h-subset of columns spans the
/// point, with all witnesses of that minimal size. h = 0 iff the point is
/// zero (with the single empty witness).
StratumLabel secant_height(const GoppaCode& code, const SyndromePoint& p, int bound);

/// 2h - d; throws HeightUnknown when the label has no height.
int s_invariant(const StratumLabel& label, int d);

/// Sign rule: s < 0 unstable, s = 0 semistable, s > 0 stable.
Stability classify_stability(int s);

struct SpannednessReport {
    bool pass = true;
    long long subsets_checked = 0;
    std::optional<std::vector<int>> counterexample;
};

/// Verifies that every subset_size columns of the matrix are linearly
/// independent; stops at the first counterexample.
SpannednessReport subsets_full_rank(const Matrix& columns, int subset_size, long long budget);

/// Every (d-1)-subset of parity columns must have rank d-1.
SpannednessReport spannedness_check(const GoppaCode& code, long long budget = 1'000'000);

/// True iff the point has exactly one witness at its minimal height
/// (guaranteed whenever h <= t). Heights are searched up to n.
bool uniqueness_check(const GoppaCode& code, const SyndromePoint& p);

struct CensusRow {
    long long syndrome_index;  // base-q encoding of the vector, position 0 least significant
    int h;
    int s;
    Stability stability;
    long long witness_count;
};

struct StratumCensus {
    std::vector<CensusRow> rows;
    std::map<int, long long> stratum_sizes;  // h -> count
    long long total = 0;
    double fraction_h_le_t = 0.0;
};

/// Full stratification of F_q^(k*): height, s, stability and witness
/// count for every vector. Refuses when q^(k*) exceeds the budget.
StratumCensus stratify_all(const GoppaCode& code, long long budget = 1'000'000);

}  // namespace agc
