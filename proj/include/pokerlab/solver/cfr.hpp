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

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pokerlab/abstraction/abstraction.hpp"
#include "pokerlab/game/betting.hpp"
#include "pokerlab/solver/efg.hpp"
#include "pokerlab/solver/strategy_table.hpp"
#include "pokerlab/util/rng.hpp"

namespace pokerlab {

enum class CfrVariant { kVanilla, kChanceSampled };

CfrVariant parse_cfr_variant(const std::string& name);

// Regret matching: positive regrets normalized, uniform when none is positive.
void regret_matching(const std::vector<double>& regrets, std::vector<double>& out);

// Adapter over an explicit tree.
class EfgGameView {
 public:
  using Node = int;
  explicit EfgGameView(const Efg& efg) : efg_(&efg) {}

  Node root() const { return efg_->root(); }
  EfgNodeKind kind(Node n) const { return efg_->node(n).kind; }
  double payoff(Node n) const { return efg_->node(n).payoff; }

  struct Decision {
    int player;
    int infoset;
    const std::vector<int>* children;
  };
  Decision expand(Node n) const {
    const EfgNode& node = efg_->node(n);
    return {node.player, node.infoset, &node.children};
  }
  int num_actions(int infoset) const {
    return static_cast<int>(efg_->infoset(infoset).actions.size());
  }
  template <class F>
  void for_each_chance(Node n, F&& f) const {
    const EfgNode& node = efg_->node(n);
    for (std::size_t i = 0; i < node.children.size(); ++i) f(node.chance_probs[i], node.children[i]);
  }
  Node sample_chance(Node n, Rng& rng) const {
    const EfgNode& node = efg_->node(n);
    return node.children[rng.sample(node.chance_probs)];
  }
  int num_infosets() const { return efg_->num_infosets(); }
  const std::string& key(int infoset) const { return efg_->infoset(infoset).key; }

 private:
  const Efg* efg_;
};

// Adapter that walks betting states directly, interning infoset keys on
// first visit. Used where the full tree is too large to build, with
// chance sampling.
class PokerWalkGame {
 public:
  using Node = BettingState;
  PokerWalkGame(const GameSpec& spec, const Abstraction& abstraction);

  Node root() const;
  EfgNodeKind kind(const Node& n) const;
  double payoff(const Node& n) const { return static_cast<double>(n.outcome()->payoff); }

  struct Decision {
    int player;
    int infoset;
    std::vector<Node> owned;
    const std::vector<Node>* children;
  };
  Decision expand(const Node& n) const;
  int num_actions(int infoset) const { return num_actions_[infoset]; }
  template <class F>
  void for_each_chance(const Node& n, F&& f) const {
    for (const auto& o : enumerate_chance(n)) f(o.probability, deal_cards(n, o.cards));
  }
  Node sample_chance(const Node& n, Rng& rng) const;
  int num_infosets() const { return static_cast<int>(keys_.size()); }
  const std::string& key(int infoset) const { return keys_[infoset]; }

 private:
  std::shared_ptr<const GameSpec> spec_;
  const Abstraction* abstraction_;
  mutable std::unordered_map<std::string, int> index_;
  mutable std::vector<std::string> keys_;
  mutable std::vector<int> num_actions_;
};

// Counterfactual regret minimization with simultaneous updates: regret
// changes from one iteration are applied together at its end. The average
// strategy weights each iteration's strategy by the player's own reach.
template <class Game>
class CfrSolver {
 public:
  explicit CfrSolver(const Game& game, std::uint64_t seed = 0) : game_(game), rng_(seed) {}

  void iterate(CfrVariant variant);
  std::uint64_t iterations() const { return iterations_; }

  // Average strategy; infosets never reached with positive own reach are
  // uniform.
  StrategyTable average() const;
  StrategyTable current() const;
  const std::vector<double>& regrets(int infoset) const { return regret_[infoset]; }
  const std::vector<double>& strategy_sum(int infoset) const { return strategy_sum_[infoset]; }

 private:
  using Node = typename Game::Node;
  static constexpr int kMaxActions = 64;
  double traverse(const Node& n, double r0, double r1, double chance, CfrVariant variant);
  void ensure(int infoset);

  const Game& game_;
  Rng rng_;
  std::uint64_t iterations_ = 0;
  std::vector<std::vector<double>> regret_;
  std::vector<std::vector<double>> delta_;
  std::vector<std::vector<double>> strategy_sum_;
  std::vector<int> touched_;
  std::vector<char> is_touched_;
};

using CheckpointFn = std::function<void(std::uint64_t iteration, const StrategyTable& average)>;

struct CfrOptions {
  std::uint64_t iterations = 1;
  CfrVariant variant = CfrVariant::kVanilla;
  std::uint64_t seed = 0;
  CheckpointFn on_checkpoint;  // called at every power of ten and at the end
};

// Builds the explicit tree for small games, walks states otherwise (which
// requires the chance-sampled variant).
StrategyTable run_cfr(const GameSpec& spec, const Abstraction& abstraction,
                      const CfrOptions& options);
StrategyTable run_cfr(const Efg& efg, const CfrOptions& options);

// Uniform strategy at every abstract infoset of rounds 0..max_round. Used
// as a stand-in trunk. Throws std::length_error above `max_labels` label
// evaluations.
StrategyTable uniform_strategy_table(const GameSpec& spec, const Abstraction& abstraction,
                                     int max_round, long long max_labels = 200'000);

// -- implementation --

template <class Game>
void CfrSolver<Game>::ensure(int infoset) {
  if (infoset < static_cast<int>(regret_.size())) return;
  const int n = game_.num_infosets();
  const auto old = regret_.size();
  regret_.resize(n);
  delta_.resize(n);
  strategy_sum_.resize(n);
  is_touched_.resize(n, 0);
  for (auto i = old; i < static_cast<std::size_t>(n); ++i) {
    const int a = game_.num_actions(static_cast<int>(i));
    regret_[i].assign(a, 0.0);
    delta_[i].assign(a, 0.0);
    strategy_sum_[i].assign(a, 0.0);
  }
}

template <class Game>
double CfrSolver<Game>::traverse(const Node& n, double r0, double r1, double chance,
                                 CfrVariant variant) {
  switch (game_.kind(n)) {
    case EfgNodeKind::kTerminal:
      return game_.payoff(n);
    case EfgNodeKind::kChance: {
      if (variant == CfrVariant::kChanceSampled) {
        return traverse(game_.sample_chance(n, rng_), r0, r1, chance, variant);
      }
      double v = 0.0;
      game_.for_each_chance(n, [&](double p, const Node& child) {
        v += p * traverse(child, r0, r1, chance * p, variant);
      });
      return v;
    }
    case EfgNodeKind::kDecision:
      break;
  }
  if (r0 == 0.0 && r1 == 0.0) return 0.0;  // no one's counterfactual value depends on it
  const auto d = game_.expand(n);
  ensure(d.infoset);
  const int na = static_cast<int>(d.children->size());
  if (na > kMaxActions) throw std::length_error("infoset has too many actions");
  std::array<double, kMaxActions> sigma;
  std::array<double, kMaxActions> values;
  {
    const auto& r = regret_[d.infoset];
    double pos = 0.0;
    for (int a = 0; a < na; ++a) pos += r[a] > 0.0 ? r[a] : 0.0;
    for (int a = 0; a < na; ++a) sigma[a] = pos > 0.0 ? (r[a] > 0.0 ? r[a] / pos : 0.0) : 1.0 / na;
  }
  double v = 0.0;
  for (int a = 0; a < na; ++a) {
    const double q0 = d.player == 0 ? r0 * sigma[a] : r0;
    const double q1 = d.player == 1 ? r1 * sigma[a] : r1;
    values[a] = traverse((*d.children)[a], q0, q1, chance, variant);
    v += sigma[a] * values[a];
  }
  const double own = d.player == 0 ? r0 : r1;
  const double cf = (d.player == 0 ? r1 : r0) * chance;
  const double sign = d.player == 0 ? 1.0 : -1.0;
  auto& delta = delta_[d.infoset];
  auto& ssum = strategy_sum_[d.infoset];
  for (int a = 0; a < na; ++a) {
    delta[a] += cf * sign * (values[a] - v);
    ssum[a] += own * sigma[a];
  }
  if (!is_touched_[d.infoset]) {
    is_touched_[d.infoset] = 1;
    touched_.push_back(d.infoset);
  }
  return v;
}

template <class Game>
void CfrSolver<Game>::iterate(CfrVariant variant) {
  traverse(game_.root(), 1.0, 1.0, 1.0, variant);
  for (int i : touched_) {
    for (std::size_t a = 0; a < regret_[i].size(); ++a) {
      regret_[i][a] += delta_[i][a];
      delta_[i][a] = 0.0;
    }
    is_touched_[i] = 0;
  }
  touched_.clear();
  ++iterations_;
}

template <class Game>
StrategyTable CfrSolver<Game>::average() const {
  StrategyTable t;
  t.meta.iterations = iterations_;
  for (int i = 0; i < game_.num_infosets(); ++i) {
    const int na = game_.num_actions(i);
    std::vector<double> p(na, 1.0 / na);
    if (i < static_cast<int>(strategy_sum_.size())) {
      double total = 0.0;
      for (double s : strategy_sum_[i]) total += s;
      if (total > 0.0) {
        for (int a = 0; a < na; ++a) p[a] = strategy_sum_[i][a] / total;
      }
    }
    t.set(game_.key(i), std::move(p));
  }
  return t;
}

template <class Game>
StrategyTable CfrSolver<Game>::current() const {
  StrategyTable t;
  t.meta.iterations = iterations_;
  std::vector<double> p;
  for (int i = 0; i < game_.num_infosets(); ++i) {
    if (i < static_cast<int>(regret_.size())) {
      regret_matching(regret_[i], p);
    } else {
      p.assign(game_.num_actions(i), 1.0 / game_.num_actions(i));
    }
    t.set(game_.key(i), p);
  }
  return t;
}

}  // namespace pokerlab
