#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "agc/channel.hpp"
#include "agc/cli.hpp"
#include "agc/config.hpp"
#include "agc/simulate.hpp"
#include "agc/verify.hpp"
#include "helpers.hpp"

using namespace agc;
using test::error_code_of;

namespace {

json rs7_json() {
    return json{{"field", {{"p", 7}, {"e", 1}, {"modulus", {0, 1}}}},
                {"curve", {{"family", "rational"}}},
                {"points", "all"},
                {"m", 3}};
}

json hermitian_json() {
    return json{{"field", {{"p", 2}, {"e", 2}, {"modulus", {1, 1, 1}}}},
                {"curve", {{"family", "hermitian"}, {"q0", 2}}},
                {"points", "all"},
                {"m", 4}};
}

std::filesystem::path work_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "agc_harness_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    const auto path = work_dir() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExperimentSpec base_spec(const CodeConfig& config) {
    return ExperimentSpec{config, {}, 1000, std::nullopt, false, "geometric", 1'000'000};
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("config parsing round trip") {
    const CodeConfig config = parse_code_config(rs7_json());
    CHECK(config.m == 3);
    CHECK(config.points.size() == 7);
    CHECK(config.curve.family() == CurveFamily::rational);

    const GoppaCode from_all = GoppaCode::build(config);

    // the same code via an explicit point list
    json with_points = rs7_json();
    json pts = json::array();
    for (int x = 0; x < 7; ++x) pts.push_back(json::array({x, 0}));
    with_points["points"] = pts;
    const GoppaCode from_list = GoppaCode::build(parse_code_config(with_points));
    CHECK(from_list.generator() == from_all.generator());
    CHECK(from_list.parity() == from_all.parity());

    // export and re-parse keeps the description stable
    const json exported = config_to_json(config);
    const GoppaCode again = GoppaCode::build(parse_code_config(exported));
    CHECK(again.parity() == from_all.parity());
}

TEST_CASE("config parsing rejects malformed descriptions") {
    json no_m = rs7_json();
    no_m.erase("m");
    CHECK(error_code_of([&] { parse_code_config(no_m); }) == errc::bad_config);

    json bad_family = rs7_json();
    bad_family["curve"]["family"] = "elliptic";
    CHECK(error_code_of([&] { parse_code_config(bad_family); }) == errc::unsupported_family);

    json no_modulus = hermitian_json();
    no_modulus["field"].erase("modulus");
    CHECK(error_code_of([&] { parse_code_config(no_modulus); }) == errc::bad_config);

    json bad_q0 = hermitian_json();
    bad_q0["curve"]["q0"] = 3;
    CHECK(error_code_of([&] { parse_code_config(bad_q0); }) == errc::bad_config);

    json reducible = hermitian_json();
    reducible["field"]["modulus"] = {1, 0, 1};
    CHECK(error_code_of([&] { parse_code_config(reducible); }) == errc::reducible_modulus);

    json bad_point = rs7_json();
    bad_point["points"] = json::array({json::array({9, 0})});
    CHECK(error_code_of([&] { parse_code_config(bad_point); }) == errc::index_out_of_range);
}

TEST_CASE("rng reproducibility") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.below(97) == b.below(97));
    Rng c(43);
    bool differs = false;
    Rng a2(42);
    for (int i = 0; i < 100; ++i) differs |= a2.next() != c.next();
    CHECK(differs);
    Rng d(0);
    for (int i = 0; i < 10; ++i) CHECK(d.below(1) == 0);
}

TEST_CASE("channel injects exactly the requested weight") {
    const FieldPtr f = Field::prime(7);
    const ChannelModel channel(f, 7, 3);
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const ErrorPattern e = channel.draw(rng);
        REQUIRE(e.support.size() == 3);
        for (size_t i = 1; i < e.support.size(); ++i) CHECK(e.support[i - 1] < e.support[i]);
        for (const FieldElement& v : e.values) CHECK_FALSE(v.is_zero());
        CHECK(vec_weight(channel.error_vector(e)) == 3);
    }

    Rng r1(99), r2(99);
    const ErrorPattern e1 = channel.draw(r1);
    const ErrorPattern e2 = channel.draw(r2);
    CHECK(e1.support == e2.support);
    CHECK(e1.values == e2.values);

    CHECK(error_code_of([&] { ChannelModel(f, 7, 8); }) == errc::bad_config);
}

TEST_CASE("exhaustive error enumeration matches the class size") {
    const FieldPtr f = Field::prime(7);
    CHECK(weight_class_size(7, 7, 1) == 42);
    CHECK(weight_class_size(7, 7, 2) == 756);
    CHECK(weight_class_size(4, 8, 1) == 24);
    CHECK(weight_class_size(7, 7, 0) == 1);

    std::set<std::vector<int>> seen;
    for_each_error(f, 7, 2, [&](const Vector& e, const std::vector<int>& support,
                                const Vector& values) {
        CHECK(vec_weight(e) == 2);
        CHECK(support.size() == 2);
        CHECK(values.size() == 2);
        std::vector<int> key;
        for (const FieldElement& x : e) key.push_back(x.index());
        seen.insert(key);
    });
    CHECK(seen.size() == 756);
}

TEST_CASE("simulate: exhaustive schedule within capacity never fails") {
    ExperimentSpec spec = base_spec(test::rs7_m3_config());
    spec.weights = {0, 1};
    spec.exhaustive = true;
    spec.decoder = "both";
    spec.seed = 5;

    const json report = simulate(spec);
    CHECK(report["mode"] == "exhaustive");
    CHECK(report["rng"]["algorithm"] == "mt19937_64");
    REQUIRE(report["per_weight"].size() == 2);
    for (const json& row : report["per_weight"]) {
        CHECK(row["success_rate"].get<double>() == 1.0);
        CHECK(row["trials"].get<long long>() == row["corrected_to_sent"].get<long long>());
        CHECK(row["agreement"]["disagreements"].get<long long>() == 0);
    }
    CHECK(report["per_weight"][1]["trials"].get<long long>() == 42);

    // byte-identical reports for the same spec
    CHECK(simulate(spec).dump() == report.dump());
}

TEST_CASE("simulate: sampled mode") {
    ExperimentSpec spec = base_spec(test::rs7_m3_config());
    spec.weights = {1, 2};
    spec.trials = 25;
    spec.seed = 12;

    const json report = simulate(spec);
    CHECK(report["mode"] == "sampled");
    CHECK(report["per_weight"][0]["success_rate"].get<double>() == 1.0);
    // weight 2 exceeds capacity, nothing should come back corrected-to-sent
    CHECK(report["per_weight"][1]["corrected_to_sent"].get<long long>() == 0);
    CHECK(simulate(spec).dump() == report.dump());

    ExperimentSpec no_seed = base_spec(test::rs7_m3_config());
    no_seed.weights = {1};
    CHECK(error_code_of([&] { simulate(no_seed); }) == errc::bad_config);

    ExperimentSpec tiny_budget = base_spec(test::rs7_m3_config());
    tiny_budget.weights = {1};
    tiny_budget.exhaustive = true;
    tiny_budget.budget = 10;
    CHECK(error_code_of([&] { simulate(tiny_budget); }) == errc::budget_exceeded);

    ExperimentSpec wrong_family = base_spec(test::hermitian4_m4_config());
    wrong_family.weights = {1};
    wrong_family.seed = 3;
    wrong_family.decoder = "toeplitz";
    CHECK(error_code_of([&] { simulate(wrong_family); }) == errc::unsupported_family);
}

TEST_CASE("verify passes on the shipped configurations") {
    for (const CodeConfig& config : {test::rs7_m3_config(), test::hermitian4_m4_config()}) {
        const auto results = verify_code(config);
        CHECK(all_pass(results));
        std::set<std::string> names;
        for (const CheckResult& r : results) names.insert(r.name);
        for (const char* expected :
             {"parameters", "riemann-roch dimensions", "duality", "spannedness",
              "t-ball injectivity", "height exactness and uniqueness", "stability labels",
              "round-trip decoding"})
            CHECK(names.count(expected) == 1);
    }
}

TEST_CASE("words files round trip") {
    const FieldPtr f = Field::prime(7);
    std::stringstream ss("1 2 3 4 5 6 0\n0,1,2,3,4,5,6\n\n");
    const auto words = read_words(f, ss, 7);
    REQUIRE(words.size() == 2);
    CHECK(words[0][0] == f->element(1));
    CHECK(words[1][6] == f->element(6));

    std::stringstream out;
    write_words(out, words);
    std::stringstream back(out.str());
    CHECK(read_words(f, back, 7) == words);

    std::stringstream wrong("1 2 3\n");
    CHECK(error_code_of([&] { read_words(f, wrong, 7); }) == errc::length_mismatch);
}

TEST_CASE("census emitters") {
    const GoppaCode code = test::rs7_m3();
    const StratumCensus census = stratify_all(code);
    std::stringstream csv;
    write_census_csv(csv, census);
    std::string line;
    std::getline(csv, line);
    CHECK(line == "syndrome_index,h_D,s,stability,witness_count");
    long long rows = 0;
    while (std::getline(csv, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 343);

    const json summary = census_summary(code, census);
    CHECK(summary["total"] == 343);
    long long sum = 0;
    for (const json& stratum : summary["strata"]) sum += stratum["size"].get<long long>();
    CHECK(sum == 343);
}

TEST_CASE("cli: info, verify and usage errors") {
    const std::string cfg = write_file("rs7.json", rs7_json().dump());
    CHECK(cli_run({"code", "info", "--config", cfg}) == 0);
    CHECK(cli_run({"verify", "--config", cfg}) == 0);
    CHECK(cli_run({"bogus"}) == 1);
    CHECK(cli_run({}) == 1);
    CHECK(cli_run({"decode", "--config", cfg}) == 1);               // missing --in
    CHECK(cli_run({"code", "info", "--config", "/nonexistent"}) == 1);
    CHECK(cli_run({"corrupt", "--config", cfg, "--in", "x"}) == 1);  // missing --seed
}

TEST_CASE("cli: budget refusals exit with 3") {
    const std::string cfg = write_file("rs7.json", rs7_json().dump());
    CHECK(cli_run({"strata", "--config", cfg, "--budget", "10"}) == 3);
    CHECK(cli_run({"distance", "--config", cfg, "--budget", "10"}) == 3);
    CHECK(cli_run({"simulate", "--config", cfg, "--weight", "1", "--exhaustive", "--budget",
                   "5", "--seed", "1"}) == 3);
}

TEST_CASE("cli: encode, corrupt, decode pipeline") {
    const std::string cfg = write_file("rs7.json", rs7_json().dump());
    const std::string enc = (work_dir() / "enc.txt").string();
    const std::string recv = (work_dir() / "recv.txt").string();
    const std::string res = (work_dir() / "res.jsonl").string();

    REQUIRE(cli_run({"encode", "--config", cfg, "--message", "1,2,3,4", "--out", enc}) == 0);
    REQUIRE(cli_run({"corrupt", "--config", cfg, "--in", enc, "--weight", "1", "--seed", "9",
                     "--out", recv}) == 0);
    REQUIRE(cli_run({"decode", "--config", cfg, "--in", recv, "--decoder", "both", "--out",
                     res}) == 0);

    const GoppaCode code = test::rs7_m3();
    const auto sent = read_words_file(code.field(), enc, code.n());
    const auto received = read_words_file(code.field(), recv, code.n());
    REQUIRE(sent.size() == 1);
    REQUIRE(received.size() == 1);
    CHECK(vec_weight(vec_sub(received[0], sent[0])) == 1);

    std::istringstream lines(read_file(res));
    std::string line;
    REQUIRE(std::getline(lines, line));
    const json row = json::parse(line);
    CHECK(row["agree"] == true);
    CHECK(row["geometric"]["status"] == "corrected");
    CHECK(row["geometric"]["h"] == 1);
    Vector corrected;
    for (const json& idx : row["geometric"]["codeword"])
        corrected.push_back(code.field()->element(idx.get<int>()));
    CHECK(corrected == sent[0]);
}

TEST_CASE("cli: hermitian decode pipeline") {
    const std::string cfg = write_file("herm.json", hermitian_json().dump());
    const std::string enc = (work_dir() / "herm_enc.txt").string();
    const std::string recv = (work_dir() / "herm_recv.txt").string();
    const std::string res = (work_dir() / "herm_res.jsonl").string();

    REQUIRE(cli_run({"encode", "--config", cfg, "--message", "1,2,3,0", "--out", enc}) == 0);
    REQUIRE(cli_run({"corrupt", "--config", cfg, "--in", enc, "--weight", "1", "--seed", "4",
                     "--out", recv}) == 0);
    REQUIRE(cli_run({"decode", "--config", cfg, "--in", recv, "--out", res}) == 0);

    const GoppaCode code = test::hermitian4_m4();
    const auto sent = read_words_file(code.field(), enc, code.n());
    std::istringstream lines(read_file(res));
    std::string line;
    REQUIRE(std::getline(lines, line));
    const json row = json::parse(line);
    CHECK(row["geometric"]["status"] == "corrected");
    Vector corrected;
    for (const json& idx : row["geometric"]["codeword"])
        corrected.push_back(code.field()->element(idx.get<int>()));
    CHECK(corrected == sent[0]);

    // the toeplitz path refuses positive genus
    CHECK(cli_run({"decode", "--config", cfg, "--in", recv, "--decoder", "toeplitz"}) == 1);
}

TEST_CASE("cli: strata and build artifacts") {
    const std::string cfg = write_file("rs7.json", rs7_json().dump());
    const std::string censuscsv = (work_dir() / "census.csv").string();
    const std::string summary = (work_dir() / "summary.json").string();
    const std::string exported = (work_dir() / "code.json").string();

    REQUIRE(cli_run({"strata", "--config", cfg, "--out", censuscsv, "--summary", summary}) == 0);
    const json s = json::parse(read_file(summary));
    CHECK(s["total"] == 343);
    CHECK(s["strata"][0]["size"] == 1);
    CHECK(s["strata"][1]["size"] == 42);

    std::istringstream csv(read_file(censuscsv));
    long long lines = 0;
    std::string line;
    while (std::getline(csv, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 344);  // header + rows

    REQUIRE(cli_run({"code", "build", "--config", cfg, "--out", exported}) == 0);
    const json e = json::parse(read_file(exported));
    CHECK(e["parameters"]["n"] == 7);
    CHECK(e["parameters"]["k"] == 4);
    CHECK(e["parameters"]["kstar"] == 3);
    CHECK(e["generator"]["entries"].size() == 28);
    CHECK(e["multipliers"].size() == 7);
}

TEST_CASE("cli: simulate writes a deterministic report") {
    const std::string cfg = write_file("rs7.json", rs7_json().dump());
    const std::string r1 = (work_dir() / "report1.json").string();
    const std::string r2 = (work_dir() / "report2.json").string();
    const std::vector<std::string> args{"simulate", "--config", cfg,        "--weight", "0",
                                        "--weight", "1",        "--exhaustive", "--decoder",
                                        "both",     "--seed",   "21"};
    auto with_out = [&](const std::string& out) {
        std::vector<std::string> a = args;
        a.push_back("--out");
        a.push_back(out);
        return a;
    };
    REQUIRE(cli_run(with_out(r1)) == 0);
    REQUIRE(cli_run(with_out(r2)) == 0);
    CHECK(read_file(r1) == read_file(r2));
    const json report = json::parse(read_file(r1));
    CHECK(report["per_weight"][1]["success_rate"].get<double>() == 1.0);
}

}  // TEST_SUITE
