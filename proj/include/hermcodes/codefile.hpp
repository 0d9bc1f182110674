#pragma once

// JSON forms of towers, codes and analysis results.
//
//   tower: {"p", "e", "n", "modulus": [little-endian coefficients]}
//   code:  {"tower", "model": "poly"|"matrix", "label", "generators", "declared_d"}
//
// A field element is written as its array of 2ne power-basis digits. A poly
// generator is the list of its n coefficients; a matrix generator is its
// Gram matrix, n^2 entries row-major.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "hermcodes/hermitian.hpp"

namespace hermcodes {

using Json = nlohmann::json;

Json element_to_json(const FieldTower& t, FFElement x);
FFElement element_from_json(const FieldTower& t, const Json& j);

Json tower_to_json(const FieldTower& t);
TowerPtr tower_from_json(const Json& j);

Json code_to_json(const HermCode& c);
/// Throws std::invalid_argument on malformed input.
HermCode code_from_json(const Json& j);

HermCode read_code_file(const std::filesystem::path& path);
void write_code_file(const std::filesystem::path& path, const HermCode& c);

/// Big integers go out as decimal strings.
Json big_to_json(const BigInt& v);
Json big_vector_to_json(const std::vector<BigInt>& v);

Json matrix_to_json(const FieldTower& t, const FieldMatrix& m);

}  // namespace hermcodes
