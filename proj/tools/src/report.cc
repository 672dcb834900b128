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


#include "report.h"

#include <cmath>
#include <sstream>

namespace xeq::cli {
namespace {

bool is_scalar(const json& v) { return !v.is_array() && !v.is_object(); }

bool scalar_array(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (!is_scalar(e)) return false;
  return true;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

std::string inline_array(const json& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
  return s + "]";
}

void render(const json& v, int indent, std::ostringstream& os) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (is_scalar(value)) {
        os << pad << key << ": " << scalar_text(value) << "\n";
      } else if (scalar_array(value)) {
        os << pad << key << ": " << inline_array(value) << "\n";
      } else if (value.is_array() && !value.empty() && scalar_array(value[0])) {
        os << pad << key << ":\n";
        for (const auto& row : value) {
          if (scalar_array(row))
            os << pad << "  " << inline_array(row) << "\n";
          else
            render(row, indent + 2, os);
        }
      } else if (value.is_array()) {
        os << pad << key << ": (" << value.size() << ")\n";
        for (std::size_t i = 0; i < value.size(); ++i) {
          os << pad << "  - #" << i + 1 << "\n";
          render(value[i], indent + 4, os);
        }
      } else {
        os << pad << key << ":\n";
        render(value, indent + 2, os);
      }
    }
  } else if (scalar_array(v)) {
    os << pad << inline_array(v) << "\n";
  } else {
    os << pad << scalar_text(v) << "\n";
  }
}

json strategy_json(const MixedStrategy& x) { return vector_json(x.probabilities()); }

}  // namespace

json rational_json(const Rational& q) { return to_string(q); }

json vector_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

json matrix_json(const RationalMatrix& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(vector_json(a.row(i)));
  return out;
}

json matrix_json(const RealMatrix& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(a.row(i));
  return out;
}

json game_json(const SymmetricGame& game) {
  json g = {{"m", game.num_strategies()}, {"A", matrix_json(game.payoff())}};
  if (!game.labels().empty()) g["labels"] = game.labels();
  return g;
}

json orbit_json(const OrbitDistribution& d) {
  json ws = json::array();
  for (const auto& [k, w] : d.weights()) ws.push_back({{"k", k}, {"w", rational_json(w)}});
  return {{"m", d.num_strategies()}, {"N", d.num_players()}, {"weights", ws}};
}

json farkas_json(const FarkasCertificate& cert) {
  return {{"kind", "farkas"},
          {"inequality_multipliers", vector_json(cert.inequality_multipliers)},
          {"equality_multipliers", vector_json(cert.equality_multipliers)}};
}

json exchangeability_json(const ExchangeabilityVerdict& v) {
  json out = {{"status", to_string(v.status)}, {"kind", to_string(v.kind)}};
  if (v.negative_direction) out["negative_direction"] = vector_json(*v.negative_direction);
  if (v.index_pair) out["index_pair"] = {v.index_pair->first + 1, v.index_pair->second + 1};
  if (v.factorization) {
    const auto& f = *v.factorization;
    json atoms = json::array();
    if (f.exact()) {
      for (const auto& a : f.exact_atoms)
        atoms.push_back({{"weight", rational_json(a.weight)}, {"x", strategy_json(a.x)}});
    } else {
      for (const auto& a : f.atoms) atoms.push_back({{"weight", a.weight}, {"x", a.x}});
    }
    out["factorization"] = {{"exact", f.exact()}, {"residual", f.residual}, {"atoms", atoms}};
  }
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json membership_json(const MembershipVerdict& v) {
  json out = {{"set", to_string(v.set)}, {"answer", to_string(v.answer)}};
  json cert;
  if (v.asymmetry) {
    cert = {{"kind", "asymmetry"}, {"pair", {v.asymmetry->first + 1, v.asymmetry->second + 1}}};
  } else if (v.violated) {
    cert = {{"kind", "incentive"},
            {"recommended", v.violated->recommended + 1},
            {"deviation", v.violated->deviation + 1},
            {"gain", rational_json(v.violated->gain)}};
  } else if (v.exchangeability) {
    cert = exchangeability_json(*v.exchangeability);
  } else if (v.combination) {
    json parts = json::array();
    for (std::size_t k = 0; k < v.combination->strategies.size(); ++k)
      if (v.combination->weights[k] != 0)
        parts.push_back({{"weight", rational_json(v.combination->weights[k])},
                         {"x", strategy_json(v.combination->strategies[k])}});
    cert = {{"kind", "nash_combination"}, {"terms", parts}};
  } else if (v.farkas) {
    cert = farkas_json(*v.farkas);
    json xs = json::array();
    for (const auto& x : v.nash_strategies) xs.push_back(strategy_json(x));
    cert["nash_strategies"] = xs;
  }
  if (!cert.is_null()) out["certificate"] = cert;
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json optimization_json(const OptimizationResult& r) {
  json out = {{"set", to_string(r.set)}, {"method", r.method}};
  out["value"] = std::isfinite(r.value) ? json(r.value) : json(nullptr);
  if (r.exact_value) out["exact"] = rational_json(*r.exact_value);
  out["tolerance"] = std::isfinite(r.tolerance) ? json(r.tolerance) : json(nullptr);
  if (r.certified_lower_bound) out["certified_lower_bound"] = rational_json(*r.certified_lower_bound);
  if (r.upper_bound) out["upper_bound_only"] = true;
  if (r.inconclusive) out["inconclusive"] = true;
  if (r.exact_argmax)
    out["argmax"] = matrix_json(r.exact_argmax->matrix());
  else if (r.argmax.rows() > 0)
    out["argmax"] = matrix_json(r.argmax);
  if (r.sdp) {
    out["sdp"] = {{"status", to_string(r.sdp->status)},
                  {"gap", r.sdp->gap},
                  {"max_violation", r.sdp->max_violation},
                  {"min_eigenvalue", r.sdp->min_eigenvalue},
                  {"relaxation", r.sdp->relaxation},
                  {"newton_steps", r.sdp->newton_steps}};
  }
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

json symmetric_nash_json(const SymmetricNashEnumeration& e) {
  json pts = json::array();
  for (std::size_t i = 0; i < e.strategies.size(); ++i)
    pts.push_back({{"x", strategy_json(e.strategies[i])}, {"tie", static_cast<bool>(e.ties[i])}});
  return {{"degenerate", e.degenerate}, {"strategies", pts}};
}

json nash_json(const NashEnumeration& e) {
  json pts = json::array();
  for (const auto& p : e.points)
    pts.push_back({{"x", strategy_json(p.x)},
                   {"y", strategy_json(p.y)},
                   {"symmetric", p.symmetric},
                   {"tie", p.tie}});
  return {{"degenerate", e.degenerate}, {"points", pts}};
}

std::string render_text(const json& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

}  // namespace xeq::cli
