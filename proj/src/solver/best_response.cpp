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

#include "pokerlab/solver/best_response.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pokerlab {

Profile profile_from_table(const Efg& efg, const StrategyTable& table, int player) {
  Profile p(efg.num_infosets());
  for (int i = 0; i < efg.num_infosets(); ++i) {
    const EfgInfoset& info = efg.infoset(i);
    if (player >= 0 && info.player != player) continue;
    const auto& v = table.at(info.key);
    if (v.size() != info.actions.size()) {
      throw std::invalid_argument("strategy for '" + info.key + "' has " +
                                  std::to_string(v.size()) + " actions, game has " +
                                  std::to_string(info.actions.size()));
    }
    p[i] = v;
  }
  return p;
}

Profile merge_profiles(const Efg& efg, const Profile& p0, const Profile& p1) {
  Profile p(efg.num_infosets());
  for (int i = 0; i < efg.num_infosets(); ++i) {
    p[i] = efg.infoset(i).player == 0 ? p0[i] : p1[i];
  }
  return p;
}

double expected_value(const Efg& efg, const Profile& profile) {
  std::function<double(int)> ev = [&](int n) -> double {
    const EfgNode& node = efg.node(n);
    switch (node.kind) {
      case EfgNodeKind::kTerminal:
        return node.payoff;
      case EfgNodeKind::kChance: {
        double v = 0.0;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
          v += node.chance_probs[i] * ev(node.children[i]);
        }
        return v;
      }
      case EfgNodeKind::kDecision: {
        const auto& s = profile[node.infoset];
        double v = 0.0;
        for (std::size_t a = 0; a < node.children.size(); ++a) {
          if (s[a] != 0.0) v += s[a] * ev(node.children[a]);
        }
        return v;
      }
    }
    return 0.0;
  };
  return ev(efg.root());
}

double expected_value(const Efg& efg, const StrategyTable& p0, const StrategyTable& p1) {
  return expected_value(efg, merge_profiles(efg, profile_from_table(efg, p0, 0),
                                            profile_from_table(efg, p1, 1)));
}

namespace {

struct BrResult {
  double value = 0.0;
  std::vector<int> choice;  // per infoset of the responder
};

BrResult solve_br(const Efg& efg, const Profile& profile, int player) {
  const int nn = efg.num_nodes();
  // Forward pass: opponent-and-chance reach, and the responder's own
  // sequence length at each node.
  std::vector<double> reach(nn, 0.0);
  std::vector<int> depth(nn, 0);
  std::vector<int> stack = {efg.root()};
  reach[efg.root()] = 1.0;
  while (!stack.empty()) {
    const int n = stack.back();
    stack.pop_back();
    const EfgNode& node = efg.node(n);
    for (std::size_t a = 0; a < node.children.size(); ++a) {
      const int c = node.children[a];
      double w = reach[n];
      int d = depth[n];
      if (node.kind == EfgNodeKind::kChance) {
        w *= node.chance_probs[a];
      } else if (node.player == player) {
        ++d;
      } else {
        w *= profile[node.infoset][a];
      }
      reach[c] = w;
      depth[c] = d;
      stack.push_back(c);
    }
  }

  std::vector<int> info_depth(efg.num_infosets(), -1);
  for (int i = 0; i < efg.num_infosets(); ++i) {
    const EfgInfoset& info = efg.infoset(i);
    if (info.player != player) continue;
    for (int n : info.nodes) {
      if (info_depth[i] >= 0 && info_depth[i] != depth[n]) {
        throw std::logic_error("best response needs perfect recall (infoset " + info.key + ")");
      }
      info_depth[i] = depth[n];
    }
  }
  std::vector<int> order;
  for (int i = 0; i < efg.num_infosets(); ++i) {
    if (info_depth[i] >= 0) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return info_depth[a] > info_depth[b]; });

  BrResult out;
  out.choice.assign(efg.num_infosets(), -1);
  const double sign = player == 0 ? 1.0 : -1.0;
  std::vector<double> memo(nn, 0.0);
  std::vector<char> done(nn, 0);
  // Value to the responder of the subtree, using choices already made for
  // deeper infosets.
  std::function<double(int)> value = [&](int n) -> double {
    if (done[n]) return memo[n];
    const EfgNode& node = efg.node(n);
    double v = 0.0;
    switch (node.kind) {
      case EfgNodeKind::kTerminal:
        v = sign * node.payoff;
        break;
      case EfgNodeKind::kChance:
        for (std::size_t a = 0; a < node.children.size(); ++a) {
          v += node.chance_probs[a] * value(node.children[a]);
        }
        break;
      case EfgNodeKind::kDecision:
        if (node.player == player) {
          const int c = out.choice[node.infoset];
          if (c < 0) throw std::logic_error("best response order violated");
          v = value(node.children[c]);
        } else {
          const auto& s = profile[node.infoset];
          for (std::size_t a = 0; a < node.children.size(); ++a) {
            if (s[a] != 0.0) v += s[a] * value(node.children[a]);
          }
        }
        break;
    }
    done[n] = 1;
    memo[n] = v;
    return v;
  };

  for (int i : order) {
    const EfgInfoset& info = efg.infoset(i);
    const std::size_t na = info.actions.size();
    std::vector<double> score(na, 0.0);
    for (int n : info.nodes) {
      if (reach[n] == 0.0) continue;
      const EfgNode& node = efg.node(n);
      for (std::size_t a = 0; a < na; ++a) score[a] += reach[n] * value(node.children[a]);
    }
    out.choice[i] = static_cast<int>(std::max_element(score.begin(), score.end()) - score.begin());
  }
  out.value = value(efg.root());
  return out;
}

}  // namespace

double best_response_value(const Efg& efg, const Profile& profile, int player) {
  return solve_br(efg, profile, player).value;
}

double best_response_value(const Efg& efg, const StrategyTable& opponent, int player) {
  return best_response_value(efg, profile_from_table(efg, opponent, 1 - player), player);
}

Profile best_response(const Efg& efg, const Profile& profile, int player) {
  const BrResult br = solve_br(efg, profile, player);
  Profile out(efg.num_infosets());
  for (int i = 0; i < efg.num_infosets(); ++i) {
    if (efg.infoset(i).player != player) continue;
    out[i].assign(efg.infoset(i).actions.size(), 0.0);
    out[i][br.choice[i]] = 1.0;
  }
  return out;
}

double exploitability(const Efg& efg, const Profile& profile) {
  return 0.5 * (best_response_value(efg, profile, 0) + best_response_value(efg, profile, 1));
}

double exploitability(const Efg& efg, const StrategyTable& table) {
  return exploitability(efg, profile_from_table(efg, table));
}

}  // namespace pokerlab
