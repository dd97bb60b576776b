#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "agc/agcode.hpp"
#include "agc/secantgeom.hpp"

namespace agc {

using json = nlohmann::ordered_json;

/// Code description file:
/// {
///   "field": {"p": 2, "e": 2, "modulus": [1, 1, 1]},   // modulus optional for e = 1
///   "curve": {"family": "rational" | "hermitian", "q0": 2},
///   "points": "all" | [[x_index, y_index], ...],
///   "m": 4
/// }
CodeConfig parse_code_config(const json& j);
CodeConfig load_code_config(const std::string& path);

json field_to_json(const Field& field);
json curve_to_json(const Curve& curve);
json config_to_json(const CodeConfig& config);

/// Row-major element indices with a field descriptor header.
json matrix_to_json(const Matrix& m);

/// Full export of a built code: parameters, points, generator, parity,
/// multipliers.
json code_to_json(const GoppaCode& code);

json decode_result_to_json(const struct DecodeResult& result);

/// Words files: one word per line, element indices separated by spaces
/// or commas.
std::vector<Vector> read_words(const FieldPtr& field, std::istream& in, int expected_length);
std::vector<Vector> read_words_file(const FieldPtr& field, const std::string& path,
                                    int expected_length);
void write_words(std::ostream& out, const std::vector<Vector>& words);

/// Census emitters: CSV rows plus a JSON summary of stratum sizes.
void write_census_csv(std::ostream& out, const StratumCensus& census);
json census_summary(const GoppaCode& code, const StratumCensus& census);

}  // namespace agc
