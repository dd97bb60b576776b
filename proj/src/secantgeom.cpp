#include "agc/secantgeom.hpp"

#include <algorithm>

#include "agc/combinat.hpp"

namespace agc {

const char* to_string(Stability s) {
    switch (s) {
        case Stability::unstable: return "unstable";
        case Stability::semistable: return "semistable";
        case Stability::stable: return "stable";
    }
    return "?";
}

SyndromePoint syndrome(const GoppaCode& code, const Vector& y) {
    if (static_cast<int>(y.size()) != code.n())
        fail(errc::length_mismatch, "word length " + std::to_string(y.size()) +
                                        " != n = " + std::to_string(code.n()));
    return {matvec(code.parity(), y)};
}

namespace {

void check_point(const GoppaCode& code, const SyndromePoint& p) {
    if (static_cast<int>(p.v.size()) != code.kstar())
        fail(errc::length_mismatch, "syndrome length != k*");
}

// The point goes in as the last column of the augmented matrix; it lies
// in the span of the others iff its column is not a pivot.
bool in_span(const GoppaCode& code, std::span<const int> support, const Vector& point) {
    const int s = static_cast<int>(support.size());
    if (s == 0) return vec_is_zero(point);
    Matrix aug(code.field(), code.kstar(), s + 1);
    for (int j = 0; j < s; ++j)
        for (int r = 0; r < code.kstar(); ++r) aug.set(r, j, code.parity().at(r, support[j]));
    for (int r = 0; r < code.kstar(); ++r) aug.set(r, s, point[r]);
    const RrefResult rr = rref(aug);
    return rr.pivots.empty() || rr.pivots.back() != s;
}

}  // namespace

bool span_contains(const GoppaCode& code, std::span<const int> support, const SyndromePoint& p) {
    check_point(code, p);
    std::vector<int> sorted(support.begin(), support.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int i : sorted)
        if (i < 0 || i >= code.n()) fail(errc::index_out_of_range, "column " + std::to_string(i));
    return in_span(code, sorted, p.v);
}

StratumLabel secant_height(const GoppaCode& code, const SyndromePoint& p, int bound) {
    check_point(code, p);
    bound = std::min(bound, code.n());

    StratumLabel label;
    if (vec_is_zero(p.v)) {
        label.h = 0;
        label.witnesses.push_back({});
    } else {
        for (int h = 1; h <= bound && label.witnesses.empty(); ++h) {
            for_each_combination(code.n(), h, [&](const std::vector<int>& subset) {
                if (in_span(code, subset, p.v)) label.witnesses.push_back(subset);
            });
            if (!label.witnesses.empty()) label.h = h;
        }
    }
    if (label.h) {
        label.s = 2 * *label.h - code.d();
        label.stability = classify_stability(*label.s);
    }
    return label;
}

int s_invariant(const StratumLabel& label, int d) {
    if (!label.h) fail(errc::height_unknown, "no height within the search bound");
    return 2 * *label.h - d;
}

Stability classify_stability(int s) {
    if (s < 0) return Stability::unstable;
    if (s == 0) return Stability::semistable;
    return Stability::stable;
}

SpannednessReport subsets_full_rank(const Matrix& columns, int subset_size, long long budget) {
    const unsigned long long count = binomial(columns.cols(), subset_size);
    if (count > static_cast<unsigned long long>(budget))
        fail(errc::too_large_to_exhaust,
             "C(" + std::to_string(columns.cols()) + "," + std::to_string(subset_size) +
                 ") exceeds budget " + std::to_string(budget));

    SpannednessReport report;
    std::vector<int> c(subset_size);
    for (int i = 0; i < subset_size; ++i) c[i] = i;
    if (subset_size > columns.cols()) {
        report.pass = false;
        return report;
    }
    do {
        ++report.subsets_checked;
        if (rank(column_submatrix(columns, c)) != subset_size) {
            report.pass = false;
            report.counterexample = c;
            return report;
        }
    } while (next_combination(c, columns.cols()));
    return report;
}

SpannednessReport spannedness_check(const GoppaCode& code, long long budget) {
    return subsets_full_rank(code.parity(), code.d() - 1, budget);
}

bool uniqueness_check(const GoppaCode& code, const SyndromePoint& p) {
    const StratumLabel label = secant_height(code, p, code.n());
    if (!label.h) fail(errc::height_unknown, "point not spanned by any column subset");
    return label.witnesses.size() == 1;
}

StratumCensus stratify_all(const GoppaCode& code, long long budget) {
    const int q = code.field()->q();
    long long total = 1;
    for (int i = 0; i < code.kstar(); ++i) {
        total *= q;
        if (total > budget)
            fail(errc::too_large_to_exhaust, "q^k* = " + std::to_string(q) + "^" +
                                                 std::to_string(code.kstar()) +
                                                 " exceeds budget " + std::to_string(budget));
    }

    StratumCensus census;
    census.total = total;
    census.rows.reserve(total);
    long long within_capacity = 0;
    for (long long idx = 0; idx < total; ++idx) {
        SyndromePoint p{Vector()};
        p.v.reserve(code.kstar());
        long long c = idx;
        for (int i = 0; i < code.kstar(); ++i) {
            p.v.push_back(code.field()->element(static_cast<int>(c % q)));
            c /= q;
        }
        const StratumLabel label = secant_height(code, p, code.n());
        if (!label.h) throw std::logic_error("full-rank parity must span every syndrome");
        census.rows.push_back({idx, *label.h, *label.s, *label.stability,
                               static_cast<long long>(label.witnesses.size())});
        ++census.stratum_sizes[*label.h];
        if (*label.h <= code.t()) ++within_capacity;
    }
    census.fraction_h_le_t = static_cast<double>(within_capacity) / static_cast<double>(total);
    return census;
}

}  // namespace agc
