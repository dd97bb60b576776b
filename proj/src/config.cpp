#include "agc/config.hpp"

#include <fstream>
#include <sstream>

#include "agc/decoder.hpp"

namespace agc {

namespace {

FieldPtr parse_field(const json& j) {
    if (!j.contains("p") || !j.contains("e")) fail(errc::bad_config, "field needs p and e");
    const int p = j.at("p").get<int>();
    const int e = j.at("e").get<int>();
    std::vector<int> modulus;
    if (j.contains("modulus")) {
        modulus = j.at("modulus").get<std::vector<int>>();
    } else if (e == 1) {
        modulus = {0, 1};
    } else {
        fail(errc::bad_config, "field with e > 1 needs an explicit modulus");
    }
    return Field::make(p, e, std::move(modulus));
}

Curve parse_curve(const json& j, const FieldPtr& field) {
    const std::string family = j.at("family").get<std::string>();
    if (family == "rational") return Curve::rational(field);
    if (family == "hermitian") {
        Curve curve = Curve::hermitian(field);
        if (j.contains("q0") && j.at("q0").get<int>() != curve.q0())
            fail(errc::bad_config, "q0 does not match the field (expected " +
                                       std::to_string(curve.q0()) + ")");
        return curve;
    }
    fail(errc::unsupported_family, "unknown curve family '" + family + "'");
}

}  // namespace

CodeConfig parse_code_config(const json& j) {
    const FieldPtr field = parse_field(j.at("field"));
    const Curve curve = parse_curve(j.at("curve"), field);

    std::vector<Point> points;
    const json& pts = j.at("points");
    if (pts.is_string() && pts.get<std::string>() == "all") {
        points = curve.rational_points();
    } else if (pts.is_array()) {
        for (const json& pair : pts) {
            if (!pair.is_array() || pair.size() != 2)
                fail(errc::bad_config, "points must be [x_index, y_index] pairs");
            const FieldElement x = field->element(pair[0].get<int>());
            FieldElement y = field->element(pair[1].get<int>());
            if (curve.family() == CurveFamily::rational) y = field->zero();
            points.push_back(Point::affine(x, y));
        }
    } else {
        fail(errc::bad_config, "points must be \"all\" or an array of index pairs");
    }
    if (!j.contains("m")) fail(errc::bad_config, "missing m");
    return CodeConfig{curve, std::move(points), j.at("m").get<int>()};
}

CodeConfig load_code_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_config, "cannot open config file " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        fail(errc::bad_config, "invalid JSON in " + path + ": " + ex.what());
    }
    return parse_code_config(j);
}

json field_to_json(const Field& field) {
    return json{{"p", field.p()}, {"e", field.e()}, {"modulus", field.modulus()}};
}

json curve_to_json(const Curve& curve) {
    json j{{"family", to_string(curve.family())}};
    if (curve.family() == CurveFamily::hermitian) j["q0"] = curve.q0();
    return j;
}

json config_to_json(const CodeConfig& config) {
    json pts = json::array();
    for (const Point& p : config.points)
        pts.push_back(json::array({p.x().index(), p.y().index()}));
    return json{{"field", field_to_json(*config.curve.field())},
                {"curve", curve_to_json(config.curve)},
                {"points", pts},
                {"m", config.m}};
}

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) entries.push_back(m.at(r, c).index());
    return json{{"field", field_to_json(*m.field())},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", entries}};
}

json code_to_json(const GoppaCode& code) {
    json multipliers = json::array();
    for (const FieldElement& v : code.multipliers()) multipliers.push_back(v.index());
    json points = json::array();
    for (const Point& p : code.points())
        points.push_back(json::array({p.x().index(), p.y().index()}));
    return json{{"field", field_to_json(*code.field())},
                {"curve", curve_to_json(code.curve())},
                {"parameters",
                 {{"n", code.n()},
                  {"k", code.k()},
                  {"kstar", code.kstar()},
                  {"m", code.m()},
                  {"mstar", code.mstar()},
                  {"g", code.genus()},
                  {"d", code.d()},
                  {"t", code.t()}}},
                {"points", points},
                {"generator", matrix_to_json(code.generator())},
                {"parity", matrix_to_json(code.parity())},
                {"multipliers", multipliers}};
}

json decode_result_to_json(const DecodeResult& result) {
    json j;
    j["status"] = to_string(result.status);
    j["support"] = result.support;
    json values = json::array();
    for (const FieldElement& v : result.values) values.push_back(v.index());
    j["values"] = values;
    if (result.height)
        j["h"] = *result.height;
    else
        j["h"] = nullptr;
    if (result.codeword) {
        json cw = json::array();
        for (const FieldElement& c : *result.codeword) cw.push_back(c.index());
        j["codeword"] = cw;
    } else {
        j["codeword"] = nullptr;
    }
    return j;
}

std::vector<Vector> read_words(const FieldPtr& field, std::istream& in, int expected_length) {
    std::vector<Vector> words;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        for (char& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream ss(line);
        Vector word;
        int idx;
        while (ss >> idx) word.push_back(field->element(idx));
        if (word.empty()) continue;  // blank line
        if (expected_length >= 0 && static_cast<int>(word.size()) != expected_length)
            fail(errc::length_mismatch, "line " + std::to_string(lineno) + " has " +
                                            std::to_string(word.size()) + " symbols, expected " +
                                            std::to_string(expected_length));
        words.push_back(std::move(word));
    }
    return words;
}

std::vector<Vector> read_words_file(const FieldPtr& field, const std::string& path,
                                    int expected_length) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_config, "cannot open words file " + path);
    return read_words(field, in, expected_length);
}

void write_words(std::ostream& out, const std::vector<Vector>& words) {
    for (const Vector& w : words) {
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) out << ' ';
            out << w[i].index();
        }
        out << '\n';
    }
}

void write_census_csv(std::ostream& out, const StratumCensus& census) {
    out << "syndrome_index,h_D,s,stability,witness_count\n";
    for (const CensusRow& row : census.rows)
        out << row.syndrome_index << ',' << row.h << ',' << row.s << ','
            << to_string(row.stability) << ',' << row.witness_count << '\n';
}

json census_summary(const GoppaCode& code, const StratumCensus& census) {
    json strata = json::array();
    for (const auto& [h, size] : census.stratum_sizes)
        strata.push_back(json{{"h", h}, {"size", size}});
    return json{{"total", census.total},
                {"kstar", code.kstar()},
                {"t", code.t()},
                {"strata", strata},
                {"fraction_h_le_t", census.fraction_h_le_t}};
}

}  // namespace agc
