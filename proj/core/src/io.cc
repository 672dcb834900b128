// Copyright 2026 The xeq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "xeq/io.h"

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace xeq {
namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object()) throw ParseError("top level must be an object");
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

long integer_field(const json& doc, const char* name, long min) {
  const json& v = field(doc, name);
  if (!v.is_number_integer()) throw ParseError(std::string("\"") + name + "\" must be an integer");
  const long out = v.get<long>();
  if (out < min)
    throw ParseError(std::string("\"") + name + "\" must be at least " + std::to_string(min));
  return out;
}

Rational entry(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number_unsigned()) return Rational(v.get<unsigned long>());
    if (v.is_number_float()) return rational_from_decimal_double(v.get<double>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a number or a \"p/q\" string");
}

RationalMatrix square_matrix(const json& doc, const char* name, std::size_t m) {
  const json& rows = field(doc, name);
  if (!rows.is_array() || rows.size() != m)
    throw ParseError(std::string("\"") + name + "\" must have m = " + std::to_string(m) + " rows");
  RationalMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!rows[i].is_array() || rows[i].size() != m)
      throw ParseError(std::string("\"") + name + "\" row " + std::to_string(i) + " must have " +
                       std::to_string(m) + " entries");
    for (std::size_t j = 0; j < m; ++j)
      out(i, j) = entry(rows[i][j], std::string(name) + "[" + std::to_string(i) + "][" +
                                        std::to_string(j) + "]");
  }
  return out;
}

json matrix_json(const RationalMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

SymmetricGame parse_game(std::string_view text) {
  const json doc = parse_json(text);
  const auto m = static_cast<std::size_t>(integer_field(doc, "m", 2));
  RationalMatrix a = square_matrix(doc, "A", m);
  std::vector<std::string> labels;
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array() || it->size() != m)
      throw ParseError("\"labels\" must be an array of m strings");
    for (const auto& l : *it) {
      if (!l.is_string()) throw ParseError("\"labels\" must be an array of m strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return SymmetricGame(std::move(a), std::move(labels));
}

JointDistribution parse_distribution(std::string_view text) {
  const json doc = parse_json(text);
  const auto m = static_cast<std::size_t>(integer_field(doc, "m", 1));
  try {
    return JointDistribution(square_matrix(doc, "P", m));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("\"P\": ") + e.what());
  }
}

OrbitDistribution parse_orbit_distribution(std::string_view text) {
  const json doc = parse_json(text);
  const auto m = static_cast<std::size_t>(integer_field(doc, "m", 1));
  const int n = static_cast<int>(integer_field(doc, "N", 1));
  const json& ws = field(doc, "weights");
  if (!ws.is_array()) throw ParseError("\"weights\" must be an array");
  std::map<CountVector, Rational> weights;
  for (std::size_t e = 0; e < ws.size(); ++e) {
    const std::string where = "weights[" + std::to_string(e) + "]";
    const json& k = field(ws[e], "k");
    if (!k.is_array()) throw ParseError(where + ".k must be an array");
    CountVector counts;
    for (const auto& c : k) {
      if (!c.is_number_integer()) throw ParseError(where + ".k must hold integers");
      counts.push_back(c.get<int>());
    }
    if (weights.count(counts)) throw ParseError(where + ": repeated orbit");
    weights.emplace(std::move(counts), entry(field(ws[e], "w"), where + ".w"));
  }
  try {
    return OrbitDistribution(m, n, std::move(weights));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("orbit distribution: ") + e.what());
  }
}

std::string to_json(const SymmetricGame& game) {
  json doc;
  doc["m"] = game.num_strategies();
  doc["A"] = matrix_json(game.payoff());
  if (!game.labels().empty()) doc["labels"] = game.labels();
  return doc.dump(2);
}

std::string to_json(const JointDistribution& dist) {
  json doc;
  doc["m"] = dist.num_strategies();
  doc["P"] = matrix_json(dist.matrix());
  return doc.dump(2);
}

std::string to_json(const OrbitDistribution& dist) {
  json doc;
  doc["m"] = dist.num_strategies();
  doc["N"] = dist.num_players();
  json ws = json::array();
  for (const auto& [k, w] : dist.weights()) ws.push_back({{"k", k}, {"w", to_string(w)}});
  doc["weights"] = std::move(ws);
  return doc.dump(2);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SymmetricGame load_game(const std::filesystem::path& path) {
  try {
    return parse_game(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

JointDistribution load_distribution(const std::filesystem::path& path) {
  try {
    return parse_distribution(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

OrbitDistribution load_orbit_distribution(const std::filesystem::path& path) {
  try {
    return parse_orbit_distribution(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace xeq
