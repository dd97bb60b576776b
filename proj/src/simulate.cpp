#include "agc/simulate.hpp"

#include <map>

#include "agc/decoder.hpp"

namespace agc {

namespace {

struct WeightTally {
    long long trials = 0;
    long long corrected_to_sent = 0;
    std::map<std::string, long long> status_counts;
    std::map<int, long long> height_histogram;
    long long height_unknown = 0;
    long long compared = 0;
    long long disagreements = 0;
};

}  // namespace

json simulate(const ExperimentSpec& spec) {
    if (!spec.exhaustive && !spec.seed)
        fail(errc::bad_config, "sampled mode requires a seed");
    if (spec.decoder != "geometric" && spec.decoder != "toeplitz" && spec.decoder != "both")
        fail(errc::bad_config, "decoder must be geometric, toeplitz or both");

    const GoppaCode code = GoppaCode::build(spec.config);
    const FieldPtr& field = code.field();
    const bool run_geometric = spec.decoder != "toeplitz";
    const bool run_toeplitz = spec.decoder != "geometric";
    if (run_toeplitz && code.curve().family() != CurveFamily::rational)
        fail(errc::unsupported_family, "toeplitz decoding needs the rational family");

    Rng rng(spec.seed.value_or(0));

    json per_weight = json::array();
    for (int w : spec.weights) {
        if (w < 0 || w > code.n()) fail(errc::bad_config, "weight out of range");
        if (spec.exhaustive) {
            const unsigned long long size = weight_class_size(field->q(), code.n(), w);
            if (size > static_cast<unsigned long long>(spec.budget))
                fail(errc::budget_exceeded, "weight " + std::to_string(w) + " class has " +
                                                std::to_string(size) + " errors, budget " +
                                                std::to_string(spec.budget));
        }

        WeightTally tally;
        const auto run_trial = [&](const Vector& error) {
            const Vector message = random_message(field, code.k(), rng);
            const Vector sent = code.encode(message);
            const Vector received = vec_add(sent, error);

            std::optional<DecodeResult> geo, toe;
            if (run_geometric) geo = decode_geometric(code, received);
            if (run_toeplitz) toe = decode_toeplitz_g0(code, received);
            const DecodeResult& primary = run_geometric ? *geo : *toe;

            ++tally.trials;
            ++tally.status_counts[to_string(primary.status)];
            if (primary.height)
                ++tally.height_histogram[*primary.height];
            else
                ++tally.height_unknown;
            if (primary.status == DecodeStatus::corrected && *primary.codeword == sent)
                ++tally.corrected_to_sent;
            if (geo && toe) {
                ++tally.compared;
                if (!results_agree(*geo, *toe)) ++tally.disagreements;
            }
        };

        if (spec.exhaustive) {
            for_each_error(field, code.n(), w,
                           [&](const Vector& e, const std::vector<int>&, const Vector&) {
                               run_trial(e);
                           });
        } else {
            const ChannelModel channel(field, code.n(), w);
            for (long long i = 0; i < spec.trials; ++i)
                run_trial(channel.error_vector(channel.draw(rng)));
        }

        json heights;
        for (const auto& [h, count] : tally.height_histogram)
            heights[std::to_string(h)] = count;
        if (tally.height_unknown > 0) heights["none"] = tally.height_unknown;

        per_weight.push_back(
            json{{"weight", w},
                 {"trials", tally.trials},
                 {"corrected_to_sent", tally.corrected_to_sent},
                 {"success_rate",
                  tally.trials ? static_cast<double>(tally.corrected_to_sent) / tally.trials : 0.0},
                 {"status_counts", tally.status_counts},
                 {"height_histogram", heights},
                 {"agreement",
                  {{"compared", tally.compared}, {"disagreements", tally.disagreements}}}});
    }

    return json{{"rng", {{"algorithm", Rng::algorithm}, {"seed", spec.seed.value_or(0)}}},
                {"mode", spec.exhaustive ? "exhaustive" : "sampled"},
                {"decoder", spec.decoder},
                {"config", config_to_json(spec.config)},
                {"parameters",
                 {{"n", code.n()},
                  {"k", code.k()},
                  {"kstar", code.kstar()},
                  {"g", code.genus()},
                  {"d", code.d()},
                  {"t", code.t()}}},
                {"per_weight", per_weight}};
}

}  // namespace agc
