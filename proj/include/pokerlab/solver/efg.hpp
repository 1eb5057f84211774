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

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "pokerlab/abstraction/abstraction.hpp"
#include "pokerlab/game/game_spec.hpp"

namespace pokerlab {

enum class EfgNodeKind { kChance, kDecision, kTerminal };

struct EfgNode {
  EfgNodeKind kind = EfgNodeKind::kTerminal;
  int player = -1;
  int infoset = -1;
  std::vector<int> children;
  std::vector<double> chance_probs;
  double payoff = 0.0;  // to player 0
};

struct EfgInfoset {
  std::string key;
  int player = 0;
  int round = 0;
  std::vector<std::string> actions;  // labels, e.g. "k", "r300"
  std::vector<int> nodes;
};

// Explicit two-player zero-sum extensive-form game. Node 0 is the root.
class Efg {
 public:
  int add_chance(std::vector<double> probs);
  int add_terminal(double payoff_p0);
  // Creates the infoset on first use; later uses must agree on the actions.
  int add_decision(int player, const std::string& key, const std::vector<std::string>& actions,
                   int round = 0);
  void set_children(int node, std::vector<int> children);

  const std::vector<EfgNode>& nodes() const { return nodes_; }
  const std::vector<EfgInfoset>& infosets() const { return infosets_; }
  const EfgNode& node(int i) const { return nodes_[i]; }
  const EfgInfoset& infoset(int i) const { return infosets_[i]; }
  int find_infoset(const std::string& key) const;  // -1 when absent
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_infosets() const { return static_cast<int>(infosets_.size()); }
  int root() const { return 0; }

  // Checks child counts, probabilities and action counts.
  void validate() const;

 private:
  std::vector<EfgNode> nodes_;
  std::vector<EfgInfoset> infosets_;
  std::unordered_map<std::string, int> index_;
};

// Full abstract game tree: every chance outcome, abstract actions only.
// Meant for small games; throws if the tree exceeds `max_nodes`.
Efg compile_efg(const GameSpec& spec, const Abstraction& abstraction,
                int max_nodes = 5'000'000);

// One-shot rock-paper-scissors with the second mover blind to the first.
Efg rock_paper_scissors_efg();

}  // namespace pokerlab
