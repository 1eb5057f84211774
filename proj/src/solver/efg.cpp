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

#include "pokerlab/solver/efg.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "pokerlab/game/betting.hpp"

namespace pokerlab {

int Efg::add_chance(std::vector<double> probs) {
  EfgNode n;
  n.kind = EfgNodeKind::kChance;
  n.chance_probs = std::move(probs);
  nodes_.push_back(std::move(n));
  return num_nodes() - 1;
}

int Efg::add_terminal(double payoff_p0) {
  EfgNode n;
  n.kind = EfgNodeKind::kTerminal;
  n.payoff = payoff_p0;
  nodes_.push_back(std::move(n));
  return num_nodes() - 1;
}

int Efg::add_decision(int player, const std::string& key,
                      const std::vector<std::string>& actions, int round) {
  auto it = index_.find(key);
  int id;
  if (it == index_.end()) {
    id = num_infosets();
    infosets_.push_back({key, player, round, actions, {}});
    index_.emplace(key, id);
  } else {
    id = it->second;
    if (infosets_[id].actions != actions || infosets_[id].player != player) {
      throw std::logic_error("infoset " + key + " reached with different actions");
    }
  }
  EfgNode n;
  n.kind = EfgNodeKind::kDecision;
  n.player = player;
  n.infoset = id;
  nodes_.push_back(std::move(n));
  infosets_[id].nodes.push_back(num_nodes() - 1);
  return num_nodes() - 1;
}

void Efg::set_children(int node, std::vector<int> children) {
  nodes_[node].children = std::move(children);
}

int Efg::find_infoset(const std::string& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

void Efg::validate() const {
  for (int i = 0; i < num_nodes(); ++i) {
    const EfgNode& n = nodes_[i];
    switch (n.kind) {
      case EfgNodeKind::kTerminal:
        if (!n.children.empty()) throw std::logic_error("terminal node with children");
        break;
      case EfgNodeKind::kChance: {
        if (n.children.size() != n.chance_probs.size() || n.children.empty()) {
          throw std::logic_error("chance node child/probability mismatch");
        }
        double total = 0.0;
        for (double p : n.chance_probs) total += p;
        if (std::abs(total - 1.0) > 1e-9) throw std::logic_error("chance probabilities do not sum to 1");
        break;
      }
      case EfgNodeKind::kDecision:
        if (n.children.size() != infosets_[n.infoset].actions.size()) {
          throw std::logic_error("decision node child count differs from its infoset");
        }
        break;
    }
  }
}

Efg compile_efg(const GameSpec& spec, const Abstraction& abstraction, int max_nodes) {
  abstraction.check_matches(spec);
  Efg g;
  const auto spec_ptr = std::make_shared<const GameSpec>(spec);
  std::function<int(const BettingState&)> build = [&](const BettingState& s) -> int {
    if (g.num_nodes() >= max_nodes) {
      throw std::length_error("game tree exceeds " + std::to_string(max_nodes) + " nodes");
    }
    if (s.is_terminal()) return g.add_terminal(static_cast<double>(s.outcome()->payoff));
    if (s.is_chance()) {
      const auto outcomes = enumerate_chance(s);
      std::vector<double> probs;
      for (const auto& o : outcomes) probs.push_back(o.probability);
      const int id = g.add_chance(std::move(probs));
      std::vector<int> kids;
      for (const auto& o : outcomes) kids.push_back(build(deal_cards(s, o.cards)));
      g.set_children(id, std::move(kids));
      return id;
    }
    const auto actions = abstract_actions(s, abstraction.grid);
    std::vector<std::string> labels;
    for (const auto& a : actions) labels.push_back(to_string(a));
    const int p = s.to_act();
    const int id = g.add_decision(p, infoset_key(s, p, *abstraction.cards), labels, s.round());
    std::vector<int> kids;
    for (const auto& a : actions) kids.push_back(build(apply_action(s, a)));
    g.set_children(id, std::move(kids));
    return id;
  };
  build(BettingState::initial(spec_ptr));
  g.validate();
  return g;
}

Efg rock_paper_scissors_efg() {
  Efg g;
  const std::vector<std::string> moves = {"R", "P", "S"};
  const int root = g.add_decision(0, "0::", moves);
  std::vector<int> kids;
  for (int a = 0; a < 3; ++a) {
    const int n = g.add_decision(1, "1::", moves);
    std::vector<int> leaves;
    for (int b = 0; b < 3; ++b) {
      const int diff = (a - b + 3) % 3;  // 1: a beats b
      leaves.push_back(g.add_terminal(diff == 0 ? 0.0 : diff == 1 ? 1.0 : -1.0));
    }
    g.set_children(n, std::move(leaves));
    kids.push_back(n);
  }
  g.set_children(root, std::move(kids));
  g.validate();
  return g;
}

}  // namespace pokerlab
