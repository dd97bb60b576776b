#include "agc/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "agc/config.hpp"
#include "agc/decoder.hpp"
#include "agc/simulate.hpp"
#include "agc/verify.hpp"

namespace agc {

namespace {

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) fail(errc::bad_config, "cannot open output file " + path);
    return file;
}

Vector parse_symbols(const FieldPtr& field, const std::string& csv) {
    std::string s = csv;
    for (char& ch : s)
        if (ch == ',') ch = ' ';
    std::istringstream ss(s);
    Vector out;
    int idx;
    while (ss >> idx) out.push_back(field->element(idx));
    return out;
}

void print_code_info(const GoppaCode& code) {
    const Field& f = *code.field();
    std::cout << std::left;
    std::cout << std::setw(22) << "family" << to_string(code.curve().family()) << "\n";
    std::cout << std::setw(22) << "field" << "GF(" << f.q() << ") = GF(" << f.p() << "^" << f.e()
              << ")\n";
    if (code.curve().family() == CurveFamily::hermitian)
        std::cout << std::setw(22) << "q0" << code.curve().q0() << "\n";
    std::cout << std::setw(22) << "genus g" << code.genus() << "\n";
    std::cout << std::setw(22) << "length n" << code.n() << "\n";
    std::cout << std::setw(22) << "dimension k" << code.k() << "\n";
    std::cout << std::setw(22) << "dual dimension k*" << code.kstar() << "\n";
    std::cout << std::setw(22) << "pole order m" << code.m() << "\n";
    std::cout << std::setw(22) << "dual pole order m*" << code.mstar() << "\n";
    std::cout << std::setw(22) << "designed distance d" << code.d() << "\n";
    std::cout << std::setw(22) << "capacity t" << code.t() << "\n";
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"one-point evaluation codes with secant-stratum syndrome decoding"};
    app.require_subcommand(1);

    std::string config_path, out_path, in_path, summary_path, errors_out_path;
    std::string message_csv, decoder_name = "geometric";
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::vector<int> weights;
    long long budget = -1, trials = 1000;
    bool exhaustive = false;

    const auto add_config = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "code description file (JSON)")->required();
    };

    CLI::App* code_cmd = app.add_subcommand("code", "build or inspect a code");
    code_cmd->require_subcommand(1);
    CLI::App* code_build = code_cmd->add_subcommand("build", "build and export a code");
    add_config(code_build);
    code_build->add_option("--out", out_path, "export file (JSON), stdout when omitted");
    CLI::App* code_info = code_cmd->add_subcommand("info", "print code parameters");
    add_config(code_info);

    CLI::App* encode_cmd = app.add_subcommand("encode", "encode message(s)");
    add_config(encode_cmd);
    encode_cmd->add_option("--message", message_csv, "single message, element indices");
    encode_cmd->add_option("--in", in_path, "file of messages, one per line");
    encode_cmd->add_option("--out", out_path, "output file, stdout when omitted");

    CLI::App* corrupt_cmd = app.add_subcommand("corrupt", "inject channel errors");
    add_config(corrupt_cmd);
    corrupt_cmd->add_option("--in", in_path, "file of codewords")->required();
    corrupt_cmd->add_option("--weight", weights, "error weight")->expected(1);
    corrupt_cmd->add_option("--seed", seed, "channel seed")
        ->required()
        ->each([&](const std::string&) { seed_given = true; });
    corrupt_cmd->add_option("--out", out_path, "received words file, stdout when omitted");
    corrupt_cmd->add_option("--errors-out", errors_out_path, "injected errors (JSON lines)");

    CLI::App* decode_cmd = app.add_subcommand("decode", "decode received words");
    add_config(decode_cmd);
    decode_cmd->add_option("--in", in_path, "file of received words")->required();
    decode_cmd->add_option("--decoder", decoder_name, "geometric | toeplitz | both")
        ->check(CLI::IsMember({"geometric", "toeplitz", "both"}));
    decode_cmd->add_option("--out", out_path, "JSON lines output, stdout when omitted");

    CLI::App* strata_cmd = app.add_subcommand("strata", "stratify the whole syndrome space");
    add_config(strata_cmd);
    strata_cmd->add_option("--budget", budget, "max number of syndromes");
    strata_cmd->add_option("--out", out_path, "census CSV path");
    strata_cmd->add_option("--summary", summary_path, "stratum size summary (JSON)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the full invariant suite");
    add_config(verify_cmd);
    verify_cmd->add_option("--seed", seed, "seed for round-trip messages");
    verify_cmd->add_option("--budget", budget, "exhaustion refusal threshold");

    CLI::App* distance_cmd = app.add_subcommand("distance", "exhaustive true minimum distance");
    add_config(distance_cmd);
    distance_cmd->add_option("--budget", budget, "max number of codewords");

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "decode trials per error weight");
    add_config(simulate_cmd);
    simulate_cmd->add_option("--weight", weights, "error weight schedule (repeatable)")
        ->required();
    simulate_cmd->add_option("--trials", trials, "trials per weight (sampled mode)");
    simulate_cmd->add_option("--seed", seed, "experiment seed")->each([&](const std::string&) {
        seed_given = true;
    });
    simulate_cmd->add_flag("--exhaustive", exhaustive, "enumerate every error of each weight");
    simulate_cmd->add_option("--decoder", decoder_name, "geometric | toeplitz | both")
        ->check(CLI::IsMember({"geometric", "toeplitz", "both"}));
    simulate_cmd->add_option("--budget", budget, "exhaustive-mode refusal threshold");
    simulate_cmd->add_option("--out", out_path, "report file (JSON), stdout when omitted");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (code_cmd->parsed()) {
        const GoppaCode code = GoppaCode::build(load_code_config(config_path));
        if (code_build->parsed()) {
            std::ofstream file;
            open_out(file, out_path) << code_to_json(code).dump(2) << "\n";
        } else {
            print_code_info(code);
        }
        return 0;
    }

    if (encode_cmd->parsed()) {
        const GoppaCode code = GoppaCode::build(load_code_config(config_path));
        std::vector<Vector> messages;
        if (!message_csv.empty()) messages.push_back(parse_symbols(code.field(), message_csv));
        if (!in_path.empty()) {
            auto more = read_words_file(code.field(), in_path, code.k());
            messages.insert(messages.end(), more.begin(), more.end());
        }
        if (messages.empty()) fail(errc::bad_config, "need --message or --in");
        std::vector<Vector> words;
        words.reserve(messages.size());
        for (const Vector& msg : messages) words.push_back(code.encode(msg));
        std::ofstream file;
        write_words(open_out(file, out_path), words);
        return 0;
    }

    if (corrupt_cmd->parsed()) {
        const GoppaCode code = GoppaCode::build(load_code_config(config_path));
        const int w = weights.empty() ? 1 : weights.front();
        const ChannelModel channel(code.field(), code.n(), w);
        Rng rng(seed);
        const std::vector<Vector> words = read_words_file(code.field(), in_path, code.n());
        std::vector<Vector> received;
        json errors = json::array();
        for (const Vector& word : words) {
            const ErrorPattern e = channel.draw(rng);
            received.push_back(channel.apply(word, e));
            json values = json::array();
            for (const FieldElement& v : e.values) values.push_back(v.index());
            errors.push_back(json{{"support", e.support}, {"values", values}});
        }
        std::ofstream file;
        write_words(open_out(file, out_path), received);
        if (!errors_out_path.empty()) {
            std::ofstream ef(errors_out_path);
            if (!ef) fail(errc::bad_config, "cannot open " + errors_out_path);
            for (const json& e : errors) ef << e.dump() << "\n";
        }
        return 0;
    }

    if (decode_cmd->parsed()) {
        const GoppaCode code = GoppaCode::build(load_code_config(config_path));
        const std::vector<Vector> words = read_words_file(code.field(), in_path, code.n());
        std::ofstream file;
        std::ostream& out = open_out(file, out_path);
        for (size_t i = 0; i < words.size(); ++i) {
            json line{{"word", i}};
            if (decoder_name == "both") {
                const DecodeResult g = decode_geometric(code, words[i]);
                const DecodeResult t = decode_toeplitz_g0(code, words[i]);
                line["geometric"] = decode_result_to_json(g);
                line["toeplitz"] = decode_result_to_json(t);
                line["agree"] = results_agree(g, t);
            } else if (decoder_name == "geometric") {
                line["geometric"] = decode_result_to_json(decode_geometric(code, words[i]));
            } else {
                line["toeplitz"] = decode_result_to_json(decode_toeplitz_g0(code, words[i]));
            }
            out << line.dump() << "\n";
        }
        return 0;
    }

    if (strata_cmd->parsed()) {
        const GoppaCode code = GoppaCode::build(load_code_config(config_path));
        const StratumCensus census = stratify_all(code, budget < 0 ? 1'000'000 : budget);
        if (!out_path.empty()) {
            std::ofstream csv(out_path);
            if (!csv) fail(errc::bad_config, "cannot open " + out_path);
            write_census_csv(csv, census);
        }
        const json summary = census_summary(code, census);
        if (!summary_path.empty()) {
            std::ofstream sf(summary_path);
            if (!sf) fail(errc::bad_config, "cannot open " + summary_path);
            sf << summary.dump(2) << "\n";
        }
        std::cout << summary.dump(2) << "\n";
        return 0;
    }

    if (verify_cmd->parsed()) {
        VerifyOptions options;
        options.seed = seed_given ? seed : options.seed;
        if (budget >= 0) options.budget = budget;
        const std::vector<CheckResult> results =
            verify_code(load_code_config(config_path), options);
        for (const CheckResult& r : results)
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(34) << r.name
                      << r.detail << "\n";
        if (all_pass(results)) {
            std::cout << "all checks passed\n";
            return 0;
        }
        std::cout << "verification failed\n";
        return 2;
    }

    if (distance_cmd->parsed()) {
        const GoppaCode code = GoppaCode::build(load_code_config(config_path));
        const int dist = code.true_min_distance(budget < 0 ? 10'000'000 : budget);
        std::cout << "designed distance d = " << code.d() << "\n";
        std::cout << "true minimum distance = " << dist << "\n";
        return 0;
    }

    if (simulate_cmd->parsed()) {
        const ExperimentSpec spec{load_code_config(config_path),
                                  weights,
                                  trials,
                                  seed_given ? std::optional<std::uint64_t>(seed) : std::nullopt,
                                  exhaustive,
                                  decoder_name,
                                  budget >= 0 ? budget : 1'000'000};
        const json report = simulate(spec);
        std::ofstream file;
        open_out(file, out_path) << report.dump(2) << "\n";
        return 0;
    }

    return 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args) {
    try {
        return run(args);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == errc::too_large_to_exhaust || e.code() == errc::budget_exceeded) return 3;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int cli_run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_run(args);
}

}  // namespace agc
