#include "agc/verify.hpp"

#include <algorithm>
#include <unordered_set>

#include "agc/channel.hpp"
#include "agc/decoder.hpp"
#include "agc/secantgeom.hpp"

namespace agc {

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

std::vector<CheckResult> verify_code(const CodeConfig& config, const VerifyOptions& options) {
    std::vector<CheckResult> out;
    const GoppaCode code = GoppaCode::build(config);
    const FieldPtr& field = code.field();
    const int q = field->q();

    {
        const bool ok = code.k() == code.m() + 1 - code.genus() &&
                        code.kstar() == code.n() - code.m() + code.genus() - 1 &&
                        code.k() + code.kstar() == code.n() &&
                        rank(code.generator()) == code.k() &&
                        rank(code.parity()) == code.kstar() && code.d() == code.n() - code.m() &&
                        code.t() == (code.d() - 1) / 2;
        out.push_back({"parameters", ok,
                       "n=" + std::to_string(code.n()) + " k=" + std::to_string(code.k()) +
                           " k*=" + std::to_string(code.kstar()) + " d=" + std::to_string(code.d()) +
                           " t=" + std::to_string(code.t())});
    }

    {
        const int g = code.genus();
        const int top = std::max({code.m(), code.mstar(), 2 * g + 20});
        bool ok = true;
        for (int mm = std::max(0, 2 * g - 1); mm <= top && ok; ++mm) {
            const auto basis = code.curve().rr_basis(mm);
            if (static_cast<int>(basis.size()) != mm + 1 - g) ok = false;
            if (mm < top) {
                const auto next = code.curve().rr_basis(mm + 1);
                for (const RRFunction& f : basis)
                    if (std::find(next.begin(), next.end(), f) == next.end()) ok = false;
            }
        }
        out.push_back({"riemann-roch dimensions", ok,
                       "pole orders up to " + std::to_string(top) + ", sizes m+1-g, bases nested"});
    }

    out.push_back({"duality", matmul(code.generator(), code.parity().transposed()).is_zero(),
                   "generator * parity^T = 0"});

    {
        const SpannednessReport report = spannedness_check(code, options.budget);
        out.push_back({"spannedness", report.pass,
                       std::to_string(report.subsets_checked) + " subsets of size " +
                           std::to_string(code.d() - 1) + " checked"});
    }

    // One pass over every error of weight <= t drives the remaining
    // checks: injectivity, height exactness + uniqueness, stability
    // labels, round-trips, and decoder agreement.
    {
        unsigned long long ball = 0;
        for (int w = 0; w <= code.t(); ++w) ball += weight_class_size(q, code.n(), w);
        if (ball > static_cast<unsigned long long>(options.budget))
            fail(errc::too_large_to_exhaust,
                 "t-ball has " + std::to_string(ball) + " errors, budget " +
                     std::to_string(options.budget));

        Rng rng(options.seed);
        std::unordered_set<long long> seen_syndromes;
        long long cases = 0, collisions = 0, height_failures = 0, stability_failures = 0;
        long long roundtrip_failures = 0, agreement_failures = 0, compared = 0;
        const bool genus_zero = code.curve().family() == CurveFamily::rational;

        for (int w = 0; w <= code.t(); ++w) {
            for_each_error(field, code.n(), w,
                           [&](const Vector& e, const std::vector<int>& support, const Vector&) {
                ++cases;
                const SyndromePoint p = syndrome(code, e);

                long long key = 0;
                for (int i = code.kstar() - 1; i >= 0; --i) key = key * q + p.v[i].index();
                if (!seen_syndromes.insert(key).second) ++collisions;

                const StratumLabel label = secant_height(code, p, code.t());
                if (!label.h || *label.h != w || label.witnesses.size() != 1 ||
                    label.witnesses.front() != support)
                    ++height_failures;
                if (label.h) {
                    const bool split_ok = w > 0 || *label.s == -code.d();
                    if (*label.s != 2 * *label.h - code.d() ||
                        *label.stability != Stability::unstable || !split_ok)
                        ++stability_failures;
                } else {
                    ++stability_failures;
                }

                if (code.t() >= 1) {
                    const Vector message = random_message(field, code.k(), rng);
                    const Vector sent = code.encode(message);
                    const Vector received = vec_add(sent, e);
                    const DecodeResult res = decode_geometric(code, received);
                    if (res.status != DecodeStatus::corrected || !res.codeword ||
                        *res.codeword != sent || res.support != support)
                        ++roundtrip_failures;
                    if (genus_zero) {
                        ++compared;
                        if (!results_agree(res, decode_toeplitz_g0(code, received)))
                            ++agreement_failures;
                    }
                }
            });
        }

        const std::string scope = std::to_string(cases) + " errors of weight <= t";
        out.push_back({"t-ball injectivity", collisions == 0,
                       scope + ", " + std::to_string(collisions) + " syndrome collisions"});
        out.push_back({"height exactness and uniqueness", height_failures == 0,
                       scope + ", " + std::to_string(height_failures) + " failures"});
        out.push_back({"stability labels", stability_failures == 0,
                       scope + ", " + std::to_string(stability_failures) + " failures"});
        if (code.t() >= 1) {
            out.push_back({"round-trip decoding", roundtrip_failures == 0,
                           scope + ", " + std::to_string(roundtrip_failures) + " failures"});
            if (genus_zero)
                out.push_back({"decoder agreement", agreement_failures == 0,
                               std::to_string(compared) + " compared, " +
                                   std::to_string(agreement_failures) + " disagreements"});
        }
    }

    return out;
}

}  // namespace agc
