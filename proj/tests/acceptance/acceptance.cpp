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

// Runs each acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.
// An optional argument restricts the run to criteria whose name contains it.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "pokerlab/endgame/endgame.hpp"
#include "pokerlab/lp/sequence_form.hpp"
#include "pokerlab/match/harness.hpp"
#include "pokerlab/match/payouts.hpp"
#include "pokerlab/match/scenarios.hpp"
#include "pokerlab/postprocess/postprocess.hpp"
#include "pokerlab/solver/best_response.hpp"
#include "pokerlab/solver/cfr.hpp"
#include "pokerlab/translation/translation.hpp"
#include "support/oracles.hpp"

namespace pokerlab {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v, int precision = 6) {
  std::ostringstream s;
  s << std::setprecision(precision) << v;
  return s.str();
}

Outcome pseudo_harmonic() {
  const double f = pseudo_harmonic_probability(0.0, 0.25, 0.2);
  const double err = std::abs(f - 1.0 / 6.0);
  return {err <= 1e-12, "f=" + fmt(f, 17) + " |f-1/6|=" + fmt(err, 3)};
}

Outcome bb100() {
  const double r = bb_per_100(732713, 80000, 100);
  return {r >= 9.155 && r <= 9.165, "bb/100=" + fmt(r, 8)};
}

Outcome payouts() {
  Rng rng(20150508);
  int bad_sum = 0, bad_floor = 0, bad_oracle = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::array<Chips, 4> x;
    const Chips scale = trial % 2 == 0 ? 1'000'000 : 2'000'000'000LL;
    for (auto& v : x) v = static_cast<Chips>(rng.below(static_cast<std::uint64_t>(2 * scale + 1))) - scale;
    std::sort(x.begin(), x.end(), std::greater<>());
    const auto r = compute_payouts(x);
    const auto o = oracle::payout_oracle(x);
    std::int64_t sum = 0;
    for (int i = 0; i < 4; ++i) {
      sum += r.cents[i];
      bad_floor += r.cents[i] < kMinimumPayoutCents;
      const double diff = std::abs(static_cast<double>(r.cents[i]) - static_cast<double>(o[i] * 100));
      worst = std::max(worst, diff);
      bad_oracle += diff > 1.0;
    }
    bad_sum += sum != kPrizePoolCents;
  }
  const auto eq = compute_payouts({732713, 732713, 732713, 732713});
  bool equal_ok = true;
  for (int i = 0; i < 4; ++i) equal_ok = equal_ok && eq.cents[i] == 25000'00;
  const bool pass = bad_sum == 0 && bad_floor == 0 && bad_oracle == 0 && equal_ok;
  return {pass, "10000 vectors: sum!=$100,000 in " + std::to_string(bad_sum) + ", below $10,000 in " +
                    std::to_string(bad_floor) + ", max |cents-oracle|=" + fmt(worst, 3) +
                    "; equal profits -> " + eq.describe()};
}

Outcome kuhn() {
  const GameSpec spec = kuhn_spec();
  const Abstraction abs = make_abstraction(spec, Config());
  const Efg efg = compile_efg(spec, abs);
  CfrOptions o;
  o.iterations = 100000;
  o.variant = CfrVariant::kVanilla;
  const StrategyTable avg = run_cfr(efg, o);
  const double value = expected_value(efg, avg, avg);
  const double lp = solve_sequence_form(oracle::hand_built_kuhn()).value[0];
  const double eps = exploitability(efg, avg);
  const bool pass = std::abs(value - lp) < 1e-3 && std::abs(lp + 1.0 / 18.0) < 1e-9 && eps < 2e-3;
  return {pass, "CFR value " + fmt(value) + ", LP oracle " + fmt(lp, 10) + " (-1/18=" + fmt(-1.0 / 18.0, 10) +
                    "), exploitability " + fmt(eps)};
}

Outcome leduc() {
  const auto spec = leduc_spec();
  const Abstraction abs = make_abstraction(spec, Config());
  const Efg efg = compile_efg(spec, abs);
  CfrOptions o;
  o.iterations = 1'000'000;
  o.variant = CfrVariant::kChanceSampled;
  o.seed = 1;
  std::map<std::uint64_t, double> eps;
  o.on_checkpoint = [&](std::uint64_t it, const StrategyTable& avg) {
    if (it >= 10000) eps[it] = exploitability(efg, avg);
  };
  run_cfr(spec, abs, o);
  const double e4 = eps.at(10000), e6 = eps.at(1'000'000);
  return {e6 < 0.05 && e6 < e4, "exploitability 1e4: " + fmt(e4) + ", 1e5: " + fmt(eps.at(100000)) +
                                    ", 1e6: " + fmt(e6) + " (bound 0.05)"};
}

Outcome endgame_analytics() {
  const auto sol = solve_endgame_lp(clairvoyance_instance(2));
  const double bluff = sol.strategy.at("0:b1:")[1];
  const double call = sol.strategy.at("1:b0:r3")[1];
  const double value = sol.pot_share_value / 2.0;
  const double expect = oracle::clairvoyance_value(1.0);
  const auto rps = sequential_rps_endgame();
  const bool pass = std::abs(bluff - 0.5) <= 1e-6 && std::abs(call - 0.5) <= 1e-6 &&
                    std::abs(value - expect) <= 1e-6 && std::abs(rps.endgame_value) <= 1e-9;
  return {pass, "bluff " + fmt(bluff, 10) + ", call " + fmt(call, 10) + ", value " + fmt(value, 10) +
                    " (oracle " + fmt(expect) + "); RPS endgame value " + fmt(rps.endgame_value, 3) +
                    ", full-game exploitability " + fmt(rps.full_game_exploitability) + " (reported)"};
}

Outcome bayes_ranges() {
  const oracle::LeducFixture fx;
  Rng rng(31337);
  int checked = 0, skipped = 0;
  double worst = 0.0;
  while (checked < 200) {
    const auto trunk = fx.random_table(rng);
    const auto reached = oracle::random_river(fx, rng);
    if (!reached) continue;
    std::array<RangeDistribution, 2> ranges;
    try {
      ranges = compute_reach_ranges(*fx.spec, *fx.abs.cards, trunk, trunk_steps(*reached, fx.abs.grid),
                                    reached->board());
    } catch (const ZeroReachError&) {
      ++skipped;
      continue;
    }
    const auto o = oracle::brute_force_ranges(fx, trunk, *reached);
    for (int p = 0; p < 2; ++p) {
      for (std::size_t h = 0; h < ranges[p].hands.size(); ++h) {
        worst = std::max(worst, std::abs(ranges[p].prob[h] - o[p].at(ranges[p].hands[h])));
      }
    }
    ++checked;
  }
  return {worst <= 1e-10, "200 endgames, max |linear-quadratic|=" + fmt(worst, 3) + " (" +
                              std::to_string(skipped) + " zero-reach histories redrawn)"};
}

Outcome duplicate_variance() {
  auto spec = std::make_shared<const GameSpec>(leduc_spec());
  AlwaysAllInAgent x, y;
  const auto allin = variance_comparison(x, y, 10000, spec, 1);

  auto abs = std::make_shared<const Abstraction>(make_abstraction(*spec, Config()));
  CfrOptions o;
  o.iterations = 100000;
  o.variant = CfrVariant::kChanceSampled;
  o.seed = 5;
  StrategyAgentOptions so;
  so.name = "cfr-leduc";
  so.abstraction = abs;
  so.trunk = std::make_shared<const StrategyTable>(run_cfr(*spec, *abs, o));
  StrategyAgent a(so);
  UniformAgent b(abs->grid);
  const auto v = variance_comparison(a, b, 10000, spec, 2);
  const bool pass = allin.duplicate.variance == 0.0 && v.duplicate.variance < v.independent.variance &&
                    v.duplicate_lower_95;
  return {pass, "all-in var_dup=" + fmt(allin.duplicate.variance) + " (var_ind " +
                    fmt(allin.independent.variance) + "); CFR vs uniform, 10000 pairs: var_dup " +
                    fmt(v.duplicate.variance) + " < var_ind " + fmt(v.independent.variance) + ", z=" + fmt(v.z, 4) +
                    " (one-sided 95%: z>1.645)"};
}

Outcome purification() {
  const auto s = matrix_purification_experiment(10000, 2015);
  return {s.difference_ci.low > 0.0, "purified " + fmt(s.mean_purified) + ", unpurified " +
                                         fmt(s.mean_unpurified) + ", difference 95% CI [" +
                                         fmt(s.difference_ci.low) + ", " + fmt(s.difference_ci.high) + "]"};
}

Outcome off_tree() {
  const auto s = run_off_tree_scenario();
  Chips max_div = 0;
  for (const auto& p : s.trace) max_div = std::max(max_div, std::abs(p.divergence));
  const bool below_grid = s.event && s.event->mapped_down && s.event->x < s.event->b;
  const bool pass = below_grid && max_div > 0 && s.endgame_pot && *s.endgame_pot == s.river_true_pot &&
                    s.river_true_pot != s.river_perceived_pot;
  return {pass, "open x=" + (s.event ? fmt(s.event->x) : "none") + " mapped down; max divergence " +
                    std::to_string(max_div) + "; river true pot " + std::to_string(s.river_true_pot) +
                    ", perceived " + std::to_string(s.river_perceived_pot) + ", endgame instance pot " +
                    (s.endgame_pot ? std::to_string(*s.endgame_pot) : "none")};
}

}  // namespace
}  // namespace pokerlab

int main(int argc, char** argv) {
  using namespace pokerlab;
  const std::string filter = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"pseudo-harmonic worked example", pseudo_harmonic},
      {"bb/100 reproduction", bb100},
      {"payout suite", payouts},
      {"Kuhn equilibrium", kuhn},
      {"Leduc convergence", leduc},
      {"endgame LP vs analytics", endgame_analytics},
      {"Bayes linear-vs-quadratic equivalence", bayes_ranges},
      {"duplicate variance reduction", duplicate_variance},
      {"purification experiment", purification},
      {"off-tree diagnostics", off_tree},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    if (!filter.empty() && name.find(filter) == std::string::npos) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " [" << std::fixed
              << std::setprecision(1) << secs << " s]" << std::defaultfloat << std::endl;
  }
  if (filter.empty()) {
    std::cout << "INFO 80,000-hand human match outcome: not reproducible (proprietary strategies and human "
                 "play); its metric and interval computations are covered above"
              << std::endl;
  }
  return failures;
}
