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

#include "pokerlab/solver/cfr.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "pokerlab/abstraction/bucketing.hpp"

namespace pokerlab {

CfrVariant parse_cfr_variant(const std::string& name) {
  if (name == "vanilla") return CfrVariant::kVanilla;
  if (name == "chance-sampled" || name == "chance") return CfrVariant::kChanceSampled;
  throw std::invalid_argument("unknown CFR variant '" + name + "' (vanilla, chance-sampled)");
}

void regret_matching(const std::vector<double>& regrets, std::vector<double>& out) {
  const std::size_t n = regrets.size();
  out.assign(n, 0.0);
  double pos = 0.0;
  for (double r : regrets) pos += r > 0.0 ? r : 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    out[a] = pos > 0.0 ? (regrets[a] > 0.0 ? regrets[a] / pos : 0.0) : 1.0 / static_cast<double>(n);
  }
}

PokerWalkGame::PokerWalkGame(const GameSpec& spec, const Abstraction& abstraction)
    : spec_(std::make_shared<const GameSpec>(spec)), abstraction_(&abstraction) {
  abstraction.check_matches(spec);
}

PokerWalkGame::Node PokerWalkGame::root() const { return BettingState::initial(spec_); }

EfgNodeKind PokerWalkGame::kind(const Node& n) const {
  if (n.is_terminal()) return EfgNodeKind::kTerminal;
  if (n.is_chance()) return EfgNodeKind::kChance;
  return EfgNodeKind::kDecision;
}

PokerWalkGame::Decision PokerWalkGame::expand(const Node& n) const {
  Decision d;
  d.player = n.to_act();
  const auto actions = abstract_actions(n, abstraction_->grid);
  std::string key = infoset_key(n, d.player, *abstraction_->cards);
  auto it = index_.find(key);
  if (it == index_.end()) {
    it = index_.emplace(key, static_cast<int>(keys_.size())).first;
    keys_.push_back(std::move(key));
    num_actions_.push_back(static_cast<int>(actions.size()));
  } else if (num_actions_[it->second] != static_cast<int>(actions.size())) {
    throw std::logic_error("infoset " + it->first + " reached with a different action count");
  }
  d.infoset = it->second;
  d.owned.reserve(actions.size());
  for (const auto& a : actions) d.owned.push_back(apply_action(n, a));
  d.children = &d.owned;
  return d;
}

PokerWalkGame::Node PokerWalkGame::sample_chance(const Node& n, Rng& rng) const {
  CardSet used(n.board());
  used = used | CardSet(n.hole(0)) | CardSet(n.hole(1));
  std::vector<Card> live;
  for (Card c : spec_->deck()) {
    if (!used.contains(c)) live.push_back(c);
  }
  const int need = n.pending_deal_size();
  for (int i = 0; i < need; ++i) {
    std::swap(live[i], live[i + rng.below(live.size() - i)]);
  }
  return deal_cards(n, std::span<const Card>(live.data(), need));
}

namespace {

bool is_power_of_ten(std::uint64_t t) {
  while (t >= 10 && t % 10 == 0) t /= 10;
  return t == 1;
}

template <class Game>
StrategyTable drive(CfrSolver<Game>& solver, const CfrOptions& options) {
  if (options.iterations < 1) throw std::invalid_argument("CFR needs at least one iteration");
  for (std::uint64_t t = 1; t <= options.iterations; ++t) {
    solver.iterate(options.variant);
    if (options.on_checkpoint && (is_power_of_ten(t) || t == options.iterations)) {
      options.on_checkpoint(t, solver.average());
    }
  }
  return solver.average();
}

}  // namespace

StrategyTable run_cfr(const Efg& efg, const CfrOptions& options) {
  EfgGameView view(efg);
  CfrSolver<EfgGameView> solver(view, options.seed);
  return drive(solver, options);
}

StrategyTable run_cfr(const GameSpec& spec, const Abstraction& abstraction,
                      const CfrOptions& options) {
  abstraction.check_matches(spec);
  StrategyTable out;
  const bool small = spec.deck_size() <= 12;
  if (small) {
    const Efg efg = compile_efg(spec, abstraction);
    out = run_cfr(efg, options);
  } else {
    if (options.variant != CfrVariant::kChanceSampled) {
      throw std::invalid_argument("vanilla CFR needs an explicit tree; use chance-sampled for " +
                                  spec.preset_name);
    }
    PokerWalkGame game(spec, abstraction);
    CfrSolver<PokerWalkGame> solver(game, options.seed);
    out = drive(solver, options);
  }
  out.meta.spec_hash = spec.hash();
  out.meta.abstraction_hash = abstraction.hash();
  return out;
}

StrategyTable uniform_strategy_table(const GameSpec& spec, const Abstraction& abstraction,
                                     int max_round, long long max_labels) {
  abstraction.check_matches(spec);
  const auto spec_ptr = std::make_shared<const GameSpec>(spec);
  const auto deck = spec.deck();
  std::vector<std::set<std::string>> labels(static_cast<std::size_t>(max_round + 1));
  long long evaluated = 0;
  for (int r = 0; r <= max_round; ++r) {
    const int nb = spec.board_cards_before(r);
    std::vector<Card> board;
    std::function<void(std::size_t)> boards = [&](std::size_t from) {
      if (static_cast<int>(board.size()) == nb) {
        for (const auto& hand : all_hands(spec, spec.hole_cards, CardSet(board))) {
          if (++evaluated > max_labels) {
            throw std::length_error("uniform_strategy_table: too many card combinations");
          }
          labels[static_cast<std::size_t>(r)].insert(abstraction.cards->label(r, hand, board));
        }
        return;
      }
      for (std::size_t i = from; i < deck.size(); ++i) {
        board.push_back(deck[i]);
        boards(i + 1);
        board.pop_back();
      }
    };
    boards(0);
  }
  StrategyTable out;
  std::function<void(const BettingState&)> walk = [&](const BettingState& s) {
    if (s.is_terminal() || s.round() > max_round) return;
    const auto actions = abstract_actions(s, abstraction.grid);
    const int p = s.to_act();
    const std::vector<double> uniform(actions.size(), 1.0 / static_cast<double>(actions.size()));
    for (const auto& label : labels[static_cast<std::size_t>(s.round())]) {
      out.set(std::to_string(p) + ":" + label + ":" + s.history_string(), uniform);
    }
    for (const auto& a : actions) walk(apply_action(s, a));
  };
  walk(BettingState::betting_root(spec_ptr));
  out.meta.spec_hash = spec.hash();
  out.meta.abstraction_hash = abstraction.hash();
  return out;
}

}  // namespace pokerlab
