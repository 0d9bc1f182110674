#include "hermcodes/codefile.hpp"

#include <fstream>
#include <stdexcept>

namespace hermcodes {

Json element_to_json(const FieldTower& t, FFElement x) { return t.coeffs(x); }

FFElement element_from_json(const FieldTower& t, const Json& j) {
  if (!j.is_array() || j.size() != t.degree())
    throw std::invalid_argument("field element must be an array of " + std::to_string(t.degree()) + " digits");
  std::vector<std::uint32_t> digits;
  for (const auto& d : j) {
    if (!d.is_number_integer() || d.get<std::int64_t>() < 0 || d.get<std::int64_t>() >= t.p())
      throw std::invalid_argument("field element digits must be integers in [0, p)");
    digits.push_back(d.get<std::uint32_t>());
  }
  return t.from_coeffs(digits);
}

Json tower_to_json(const FieldTower& t) {
  return {{"p", t.p()}, {"e", t.e()}, {"n", t.n()}, {"modulus", t.modulus()}};
}

TowerPtr tower_from_json(const Json& j) {
  try {
    return FieldTower::make(j.at("p").get<std::uint32_t>(), j.at("e").get<std::uint32_t>(),
                            j.at("n").get<std::uint32_t>(), j.at("modulus").get<std::vector<std::uint32_t>>());
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed tower: ") + e.what());
  }
}

Json code_to_json(const HermCode& c) {
  const FieldTower& t = c.field();
  Json gens = Json::array();
  for (const auto& g : c.generators()) {
    Json entries = Json::array();
    if (c.model() == CodeModel::Matrix) {
      const HermMatrix gram = gram_matrix(g);
      for (FFElement x : gram.entries()) entries.push_back(element_to_json(t, x));
    } else {
      for (FFElement x : g.coeffs()) entries.push_back(element_to_json(t, x));
    }
    gens.push_back(std::move(entries));
  }
  Json out;
  out["tower"] = tower_to_json(t);
  out["model"] = c.model() == CodeModel::Matrix ? "matrix" : "poly";
  out["label"] = c.label();
  out["generators"] = std::move(gens);
  out["declared_d"] = c.declared_d() ? Json(*c.declared_d()) : Json(nullptr);
  return out;
}

HermCode code_from_json(const Json& j) {
  try {
    const TowerPtr tower = tower_from_json(j.at("tower"));
    const FieldTower& t = *tower;
    const std::string model = j.at("model").get<std::string>();
    if (model != "poly" && model != "matrix") throw std::invalid_argument("model must be \"poly\" or \"matrix\"");
    const bool matrix = model == "matrix";
    const std::size_t n = t.n();
    std::vector<LinPoly> gens;
    for (const auto& g : j.at("generators")) {
      const std::size_t want = matrix ? n * n : n;
      if (!g.is_array() || g.size() != want)
        throw std::invalid_argument("each generator needs " + std::to_string(want) + " entries");
      std::vector<FFElement> entries;
      for (const auto& x : g) entries.push_back(element_from_json(t, x));
      if (matrix) {
        FieldMatrix m(n, n);
        for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = entries[k];
        gens.push_back(matrix_to_poly(tower, m));
      } else {
        gens.emplace_back(tower, std::move(entries));
      }
    }
    std::optional<int> d;
    if (j.contains("declared_d") && !j.at("declared_d").is_null()) d = j.at("declared_d").get<int>();
    const std::string label = j.contains("label") ? j.at("label").get<std::string>() : std::string();
    return HermCode(tower, std::move(gens), matrix ? CodeModel::Matrix : CodeModel::Poly, label, d);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed code file: ") + e.what());
  }
}

HermCode read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return code_from_json(j);
}

void write_code_file(const std::filesystem::path& path, const HermCode& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << code_to_json(c).dump(1) << '\n';
}

Json big_to_json(const BigInt& v) { return v.str(); }

Json big_vector_to_json(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json matrix_to_json(const FieldTower& t, const FieldMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_to_json(t, m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hermcodes
