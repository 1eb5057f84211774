// Copyright 2026 The pokerlab Authors
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

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "pokerlab/abstraction/holdem_abstraction.hpp"
#include "pokerlab/endgame/endgame.hpp"
#include "pokerlab/match/hand_history.hpp"
#include "pokerlab/match/payouts.hpp"
#include "pokerlab/match/scenarios.hpp"
#include "pokerlab/postprocess/postprocess.hpp"
#include "pokerlab/service/server.hpp"
#include "pokerlab/solver/best_response.hpp"
#include "pokerlab/solver/cfr.hpp"
#include "pokerlab/translation/translation.hpp"
#include "pokerlab/util/config.hpp"

namespace pl = pokerlab;
using pl::Chips;

namespace {

struct Loaded {
  pl::Config config;
  std::shared_ptr<const pl::GameSpec> spec;
  std::shared_ptr<const pl::Abstraction> abstraction;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.config = path.empty() ? pl::Config() : pl::Config::from_file(path);
  if (l.config.get_bool("env.overrides", true)) l.config.apply_env_overrides(pl::ServiceSettings::env_keys());
  auto spec = pl::load_game_spec(l.config);
  spec.validate();
  l.spec = std::make_shared<const pl::GameSpec>(spec);
  l.abstraction = std::make_shared<const pl::Abstraction>(pl::make_abstraction(*l.spec, l.config));
  return l;
}

pl::AgentContext agent_context(const Loaded& l, bool endgame) {
  pl::AgentContext ctx;
  ctx.spec = l.spec;
  ctx.abstraction = l.abstraction;
  ctx.endgame = endgame;
  ctx.endgame_config = pl::ServiceSettings::from_config(l.config).endgame_config;
  if (l.config.has("postprocess.thresholds")) {
    const auto schedule = pl::ThresholdSchedule::from_config(l.config);
    ctx.postprocess = [schedule](const pl::StrategyTable& t) { return pl::apply_schedule(t, schedule); };
  }
  return ctx;
}

void write_json(const std::string& path, const pl::Json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

int cmd_solve(const std::string& config, std::uint64_t iterations, const std::string& variant,
              std::uint64_t seed, const std::string& out, bool exploit) {
  const Loaded l = load(config);
  pl::CfrOptions o;
  o.iterations = iterations;
  o.variant = pl::parse_cfr_variant(variant);
  o.seed = seed;
  std::optional<pl::Efg> efg;
  if (exploit) efg = pl::compile_efg(*l.spec, *l.abstraction);
  o.on_checkpoint = [&](std::uint64_t it, const pl::StrategyTable& avg) {
    std::cout << "iteration " << it;
    if (efg) std::cout << "  exploitability " << std::setprecision(6) << pl::exploitability(*efg, avg);
    std::cout << std::endl;
  };
  const pl::StrategyTable table =
      efg ? pl::run_cfr(*efg, o) : pl::run_cfr(*l.spec, *l.abstraction, o);
  pl::StrategyTable stamped = table;
  stamped.meta.spec_hash = l.spec->hash();
  stamped.meta.abstraction_hash = l.abstraction->hash();
  if (efg) {
    std::cout << "player 0 value " << pl::expected_value(*efg, stamped, stamped) << '\n';
  }
  stamped.save_file(out);
  std::cout << "wrote " << out << " (" << stamped.size() << " infosets)\n";
  return 0;
}

int cmd_endgame(const std::string& instance, Chips clairvoyance, const std::string& out) {
  pl::EndgameInstance inst = instance.empty() ? pl::clairvoyance_instance(clairvoyance)
                                              : pl::instance_from_json(read_file(instance));
  const auto sol = pl::solve_endgame_lp(inst);
  std::cerr << "sequences " << sol.sequences[0] << "/" << sol.sequences[1] << ", value " << sol.value[0]
            << ", gap " << sol.duality_gap << ", " << sol.seconds << " s\n";
  write_json(out, pl::Json::parse(pl::solution_to_json(sol)));
  return 0;
}

int cmd_match(const std::string& config, const std::string& a, const std::string& b, int pairs,
              std::uint64_t seed, bool endgame, const std::string& out) {
  const Loaded l = load(config);
  const auto ctx = agent_context(l, endgame);
  auto agent_a = pl::make_agent(a, ctx);
  auto agent_b = pl::make_agent(b, ctx);
  const auto result = pl::play_duplicate_match(*agent_a, *agent_b, pairs, l.spec, seed);
  if (!out.empty()) pl::write_hand_history_file(out, result.hands);
  std::cout << pl::report_to_text(pl::build_report(result.hands, l.spec->big_blind));
  return 0;
}

int cmd_report(const std::string& in, Chips big_blind, bool json) {
  const auto hands = pl::read_hand_history_file(in);
  const auto report = pl::build_report(hands, big_blind);
  if (json) {
    std::cout << pl::report_to_json(report).dump(2) << '\n';
  } else {
    std::cout << pl::report_to_text(report);
  }
  return 0;
}

std::atomic<pl::Server*> g_server{nullptr};

int cmd_serve(const std::string& config, int port) {
  const Loaded l = load(config);
  auto settings = pl::ServiceSettings::from_config(l.config);
  if (port >= 0) settings.port = port;
  const auto ctx = agent_context(l, settings.endgame);
  pl::make_agent(settings.agent, ctx);  // fail fast on a missing or mismatched artifact
  auto manager = std::make_shared<pl::SessionManager>(l.spec, l.abstraction, settings, ctx);
  pl::Server server(manager);
  const int bound = server.bind(settings.host, settings.port);
  if (bound < 0) throw std::runtime_error("cannot bind " + settings.host + ":" + std::to_string(settings.port));
  std::cout << "listening on " << settings.host << ":" << bound << " (" << l.spec->preset_name << ", agent "
            << settings.agent << ")" << std::endl;
  g_server = &server;
  std::signal(SIGINT, [](int) {
    if (auto* s = g_server.load()) s->stop();
  });
  std::signal(SIGTERM, [](int) {
    if (auto* s = g_server.load()) s->stop();
  });
  server.run();
  g_server = nullptr;
  return 0;
}

int cmd_buckets(const std::string& config, const std::string& out) {
  pl::Config c = config.empty() ? pl::Config() : pl::Config::from_file(config);
  const auto spec = pl::load_game_spec(c);
  const auto abs = pl::HoldemCardAbstraction::build(spec, pl::HoldemAbstractionConfig::from_config(c));
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  abs.save(f);
  std::cout << "wrote " << out << '\n';
  return 0;
}

int cmd_payouts(const std::vector<Chips>& profits) {
  if (profits.size() != 4) throw std::invalid_argument("payouts takes four profits, best first");
  std::cout << pl::compute_payouts({profits[0], profits[1], profits[2], profits[3]}).describe() << '\n';
  return 0;
}

int cmd_purification(std::size_t games, std::uint64_t seed) {
  const auto s = pl::matrix_purification_experiment(games, seed);
  std::cout << std::fixed << std::setprecision(5) << "games " << s.games << "\npurified   " << s.mean_purified
            << "\nunpurified " << s.mean_unpurified << "\ndifference " << s.difference.mean << "  95% CI ["
            << s.difference_ci.low << ", " << s.difference_ci.high << "]\n";
  return 0;
}

int cmd_off_tree() {
  const auto s = pl::run_off_tree_scenario();
  std::cout << "agent seed " << s.agent_seed << " (" << s.seeds_tried << " tried)\n";
  if (s.event) {
    std::cout << "open translated: x=" << s.event->x << " between " << s.event->a << " and " << s.event->b
              << ", f=" << s.event->f << ", u=" << s.event->u << (s.event->mapped_down ? " -> down" : " -> up")
              << '\n';
  }
  for (const auto& p : s.trace) {
    std::cout << "  true pot " << p.true_pot << "  perceived " << p.perceived_pot << "  divergence "
              << p.divergence << '\n';
  }
  std::cout << "river: true pot " << s.river_true_pot << ", perceived " << s.river_perceived_pot
            << ", endgame pot " << (s.endgame_pot ? std::to_string(*s.endgame_pot) : "none") << '\n';
  return 0;
}

int cmd_variance(const std::string& config, const std::string& a, const std::string& b, int n,
                 std::uint64_t seed) {
  const Loaded l = load(config);
  const auto ctx = agent_context(l, false);
  auto agent_a = pl::make_agent(a, ctx);
  auto agent_b = pl::make_agent(b, ctx);
  const auto v = pl::variance_comparison(*agent_a, *agent_b, n, l.spec, seed);
  std::cout << std::setprecision(6) << "samples " << v.n << "\nduplicate   mean " << v.duplicate.mean
            << "  var " << v.duplicate.variance << "\nindependent mean " << v.independent.mean << "  var "
            << v.independent.variance << "\nz " << v.z << (v.duplicate_lower_95 ? "  (duplicate lower)" : "")
            << '\n';
  return 0;
}

int cmd_translate(double a, double b, double x) {
  std::cout << std::setprecision(12) << pl::pseudo_harmonic_probability(a, b, x) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pokerlab: abstraction, equilibrium, translation and endgame solving for heads-up poker"};
  app.require_subcommand(1);

  std::string config, out, in, a = "uniform", b = "uniform", variant = "vanilla", instance;
  std::uint64_t iterations = 1000, seed = 1;
  int pairs = 1000, port = -1;
  bool exploit = false, endgame = false, json = false;
  Chips big_blind = 100, clairvoyance = 2;
  std::size_t games = 10000;
  std::vector<Chips> profits;
  double ta = 0, tb = 0, tx = 0;

  auto* solve = app.add_subcommand("solve", "run CFR and save the average strategy");
  solve->add_option("-c,--config", config, "game and abstraction config")->check(CLI::ExistingFile);
  solve->add_option("-n,--iterations", iterations);
  solve->add_option("--variant", variant, "vanilla or chance-sampled");
  solve->add_option("--seed", seed);
  solve->add_option("-o,--out", out)->required();
  solve->add_flag("--exploitability", exploit, "report exploitability at checkpoints (small games)");

  auto* eg = app.add_subcommand("endgame", "solve an endgame instance by sequence-form LP");
  auto* inst_opt = eg->add_option("--instance", instance, "instance JSON")->check(CLI::ExistingFile);
  eg->add_option("--clairvoyance", clairvoyance, "solve the clairvoyance game with this bet")->excludes(inst_opt);
  eg->add_option("-o,--out", out, "solution JSON (default stdout)");

  auto* match = app.add_subcommand("match", "duplicate match between two agents");
  match->add_option("-c,--config", config)->check(CLI::ExistingFile);
  match->add_option("--a", a, "agent: uniform, call, allin, cfr:<file>");
  match->add_option("--b", b);
  match->add_option("--pairs", pairs)->check(CLI::PositiveNumber);
  match->add_option("--seed", seed);
  match->add_flag("--endgame", endgame);
  match->add_option("-o,--out", out, "hand history (JSON lines)");

  auto* report = app.add_subcommand("report", "summarize a hand history");
  report->add_option("-i,--in", in)->required()->check(CLI::ExistingFile);
  report->add_option("--big-blind", big_blind);
  report->add_flag("--json", json);

  auto* serve = app.add_subcommand("serve", "run the match service");
  serve->add_option("-c,--config", config)->check(CLI::ExistingFile);
  serve->add_option("-p,--port", port, "overrides service.port; 0 picks a free port");

  auto* buckets = app.add_subcommand("buckets", "build hold'em card buckets");
  buckets->add_option("-c,--config", config)->check(CLI::ExistingFile);
  buckets->add_option("-o,--out", out)->required();

  auto* pay = app.add_subcommand("payouts", "split the prize pool for four bankroll profits");
  pay->add_option("profits", profits)->required()->expected(4);

  auto* tr = app.add_subcommand("translate", "probability of mapping bet x down to a (a < x < b)");
  tr->add_option("a", ta)->required();
  tr->add_option("b", tb)->required();
  tr->add_option("x", tx)->required();

  auto* exp = app.add_subcommand("experiment", "reproduce an evaluation");
  exp->require_subcommand(1);
  auto* purif = exp->add_subcommand("purification", "purified vs unpurified abstract equilibria");
  purif->add_option("--games", games);
  purif->add_option("--seed", seed);
  auto* offtree = exp->add_subcommand("off-tree", "scripted off-tree open and its pot divergence");
  auto* variance = exp->add_subcommand("variance", "duplicate vs independent variance");
  variance->add_option("-c,--config", config)->check(CLI::ExistingFile);
  variance->add_option("--a", a);
  variance->add_option("--b", b);
  variance->add_option("-n,--pairs", pairs)->check(CLI::PositiveNumber);
  variance->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*solve) return cmd_solve(config, iterations, variant, seed, out, exploit);
    if (*eg) return cmd_endgame(instance, clairvoyance, out);
    if (*match) return cmd_match(config, a, b, pairs, seed, endgame, out);
    if (*report) return cmd_report(in, big_blind, json);
    if (*serve) return cmd_serve(config, port);
    if (*buckets) return cmd_buckets(config, out);
    if (*pay) return cmd_payouts(profits);
    if (*tr) return cmd_translate(ta, tb, tx);
    if (*purif) return cmd_purification(games, seed);
    if (*offtree) return cmd_off_tree();
    if (*variance) return cmd_variance(config, a, b, pairs, seed);
  } catch (const pl::ServiceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
