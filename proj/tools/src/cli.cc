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


#include "xeq_cli/cli.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>

#include "report.h"
#include "xeq/io.h"
#include "xeq/linear_system.h"
#include "xeq/psd.h"
#include "xeq/random.h"
#include "xeq/vertex_enum.h"

#ifndef XEQ_VERSION
#define XEQ_VERSION "unknown"
#endif

namespace xeq::cli {
namespace {

struct Options {
  std::string game_file;
  std::string dist_file;
  std::string set = "xe";
  std::string out_file;
  bool json_output = false;
  bool force = false;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  int n = 0;
  int n_max = 0;
};

json metadata(const Options& o, const char* command) {
  return {{"schema_version", kSchemaVersion},
          {"tool", "xeq"},
          {"version", XEQ_VERSION},
          {"command", command},
          {"seed", o.seed},
          {"rng", kRngAlgorithm},
          {"tol", o.tol}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text << "\n";
}

void emit(const Options& o, const json& report, std::ostream& out) {
  if (o.json_output)
    out << report.dump(2) << "\n";
  else
    out << render_text(report);
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const SymmetricGame game = load_game(o.game_file);
  const std::size_t m = game.num_strategies();
  json r = metadata(o, "analyze");
  r["game"] = game_json(game);

  r["nash_sym"] = symmetric_nash_json(enumerate_symmetric_nash(game));
  r["nash"] = nash_json(enumerate_nash(game));

  if (m <= 4 || o.force) {
    SymIndex idx(m);
    json verts = json::array();
    std::size_t dnn = 0;
    for (const auto& v : enumerate_vertices(ce_system(game, true))) {
      const RationalMatrix w = idx.expand(v);
      const bool psd = m <= kMaxPsdDimension && is_psd_exact(w).psd;
      dnn += psd;
      verts.push_back({{"P", matrix_json(w)}, {"psd", psd}});
    }
    r["ce_vertices"] = {{"count", verts.size()}, {"doubly_nonnegative", dnn}, {"vertices", verts}};
  } else {
    r["ce_vertices"] = {{"skipped", "m > 4; pass --force to enumerate"}};
  }

  OptimizeOptions opt;
  opt.tol = o.tol;
  opt.cp.seed = o.seed;
  const auto ce = max_utility(game, EquilibriumSet::kCeSym, opt);
  const auto xe = max_utility(game, EquilibriumSet::kXeSym, opt);
  const auto cn = max_utility(game, EquilibriumSet::kConvNashSym, opt);
  r["max_utility"] = {{"ce_sym", optimization_json(ce)},
                      {"xe_sym", optimization_json(xe)},
                      {"conv_nash_sym", optimization_json(cn)}};

  auto same = [&](const OptimizationResult& a, const OptimizationResult& b) -> json {
    if (a.inconclusive || b.inconclusive) return nullptr;
    if (a.exact_value && b.exact_value) return *a.exact_value == *b.exact_value;
    return std::abs(a.value - b.value) <= std::max({a.tolerance, b.tolerance, o.tol});
  };
  json h = {{"xe_max_equals_ce_max", same(xe, ce)}, {"conv_nash_max_equals_xe_max", same(cn, xe)}};
  if (xe.method == "lp-collapse") h["note"] = "xe_sym equals ce_sym: every CE vertex is doubly nonnegative";
  if (xe.upper_bound) h["xe_note"] = "m >= 5: xe_sym value is a doubly-nonnegative upper bound";
  r["hierarchy"] = h;
  emit(o, r, out);
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const SymmetricGame game = load_game(o.game_file);
  const JointDistribution w = load_distribution(o.dist_file);
  if (w.num_strategies() != game.num_strategies())
    throw ParseError("distribution has " + std::to_string(w.num_strategies()) +
                     " strategies, game has " + std::to_string(game.num_strategies()));
  const auto set = parse_equilibrium_set(o.set);
  CpOptions cp;
  cp.seed = o.seed;
  const MembershipVerdict v = membership(game, w, *set, cp);
  json r = metadata(o, "check");
  r["game"] = game_json(game);
  r["distribution"] = matrix_json(w.matrix());
  r["verdict"] = membership_json(v);
  r["verdict"]["certificate_verified"] = verify_membership(game, w, v);
  emit(o, r, out);
  switch (v.answer) {
    case MembershipAnswer::kIn: return kExitOk;
    case MembershipAnswer::kOut: return kExitNegative;
    case MembershipAnswer::kInconclusive: return kExitInconclusive;
  }
  return kExitInternal;
}

int cmd_extend(const Options& o, std::ostream& out) {
  const SymmetricGame game = load_game(o.game_file);
  const JointDistribution w = load_distribution(o.dist_file);
  if (w.num_strategies() != game.num_strategies())
    throw ParseError("distribution does not match the game");
  if (!w.is_symmetric()) throw ParseError("distribution must be symmetric");
  const auto res = extendability_lp(game, w, o.n);
  json r = metadata(o, "extend");
  r["game"] = game_json(game);
  r["distribution"] = matrix_json(w.matrix());
  r["N"] = o.n;
  r["distribution_is_ce"] = !find_ce_violation(game, w).has_value();
  r["result"] = res.feasible ? "feasible" : "infeasible";
  if (res.feasible) {
    if (!o.out_file.empty()) {
      write_file(o.out_file, to_json(*res.extension));
      r["orbit_file"] = o.out_file;
    }
    r["extension"] = orbit_json(*res.extension);
  } else {
    r["certificate"] = farkas_json(*res.certificate);
    r["certificate_verified"] = verify_farkas(extendability_system(w, o.n), *res.certificate);
  }
  emit(o, r, out);
  return res.feasible ? kExitOk : kExitNegative;
}

int cmd_minority(const Options& o, std::ostream& out) {
  const auto rows = minority_parity_suite(o.n_max);
  json r = metadata(o, "minority");
  r["game"] = game_json(minority_game());
  json table = json::array();
  for (const auto& row : rows) {
    json e = {{"N", row.n}, {"extends_to", row.n + 1}, {"result", row.feasible ? "feasible" : "infeasible"}};
    if (row.feasible) {
      e["unique"] = row.unique;
      e["extension_is_pi_next"] = row.extension_is_next_pi;
      e["extension"] = orbit_json(*row.extension);
    } else {
      e["certificate_verified"] = verify_farkas(minority_extension_system(row.n), *row.certificate);
    }
    table.push_back(std::move(e));
  }
  r["rows"] = table;
  r["note"] = "extendability is reported through n_max only";
  emit(o, r, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exchangeable and correlated equilibria of symmetric two-player games", "xeq"};
  app.set_version_flag("--version", std::string(XEQ_VERSION));
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json_output, "Machine-readable output");
    sub->add_option("--seed", o.seed, "Seed for randomized steps")->capture_default_str();
    sub->add_option("--tol", o.tol, "Numerical tolerance")->capture_default_str()
        ->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "Nash, CE vertices and the utility table");
  analyze->add_option("game", o.game_file, "Game file")->required();
  analyze->add_flag("--force", o.force, "Enumerate CE vertices even when m > 4");
  common(analyze);

  auto* check = app.add_subcommand("check", "Membership of a distribution in an equilibrium set");
  check->add_option("game", o.game_file, "Game file")->required();
  check->add_option("distribution", o.dist_file, "Distribution file")->required();
  check->add_option("--set", o.set, "ce, xe or conv-nash")
      ->capture_default_str()
      ->check(CLI::IsMember({"ce", "xe", "conv-nash"}));
  common(check);

  auto* extend = app.add_subcommand("extend", "Extend a distribution to N exchangeable players");
  extend->add_option("game", o.game_file, "Game file")->required();
  extend->add_option("distribution", o.dist_file, "Distribution file")->required();
  extend->add_option("--n", o.n, "Number of players")->required()->check(CLI::Range(2, 1 << 20));
  extend->add_option("--out", o.out_file, "Write the orbit distribution here");
  common(extend);

  auto* minority = app.add_subcommand("minority", "Parity of extensions in the Minority Game");
  minority->add_option("--n-max", o.n_max, "Largest N")->required()->check(CLI::PositiveNumber);
  common(minority);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(o, out);
    if (*check) return cmd_check(o, out);
    if (*extend) return cmd_extend(o, out);
    if (*minority) return cmd_minority(o, out);
  } catch (const ParseError& e) {
    err << "xeq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "xeq: budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "xeq: invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "xeq: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace xeq::cli
