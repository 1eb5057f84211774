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

#include "pokerlab/endgame/endgame.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "pokerlab/game/hand_eval.hpp"
#include "pokerlab/solver/best_response.hpp"
#include "pokerlab/util/hashing.hpp"

namespace pokerlab {

int RangeDistribution::index_of(const Hand& hand) const {
  Hand sorted = hand;
  std::sort(sorted.begin(), sorted.end());
  const auto it = std::find(hands.begin(), hands.end(), sorted);
  return it == hands.end() ? -1 : static_cast<int>(it - hands.begin());
}

std::vector<TrunkStep> trunk_steps(const BettingState& abstract_state, const ActionGrid& grid) {
  BettingState s = BettingState::betting_root(abstract_state.spec_ptr());
  std::vector<TrunkStep> out;
  for (const auto& rec : abstract_state.history()) {
    const auto actions = abstract_actions(s, grid);
    const auto it = std::find(actions.begin(), actions.end(), rec.action);
    if (it == actions.end()) {
      throw std::invalid_argument("trunk_steps: '" + to_string(rec.action) + "' after '" +
                                  s.history_string() + "' is not an abstract action");
    }
    out.push_back({rec.player, s.round(), s.history_string(),
                   static_cast<int>(it - actions.begin())});
    s = apply_action(s, rec.action);
  }
  return out;
}

namespace {

// Sum of `w` over hands disjoint from each hand, by inclusion-exclusion on
// per-card sums. Hands hold at most two cards.
std::vector<double> compatible_mass(const std::vector<Hand>& hands, const std::vector<double>& w) {
  std::array<double, 52> per_card{};
  double total = 0.0;
  for (std::size_t i = 0; i < hands.size(); ++i) {
    total += w[i];
    for (Card c : hands[i]) per_card[c.index()] += w[i];
  }
  std::vector<double> out(hands.size());
  for (std::size_t i = 0; i < hands.size(); ++i) {
    double m = total;
    for (Card c : hands[i]) m -= per_card[c.index()];
    if (hands[i].size() == 2) m += w[i];
    out[i] = std::max(0.0, m);
  }
  return out;
}

}  // namespace

std::array<RangeDistribution, 2> compute_reach_ranges(const GameSpec& spec,
                                                       const CardAbstraction& cards,
                                                       const StrategyTable& trunk,
                                                       const std::vector<TrunkStep>& steps,
                                                       const std::vector<Card>& board,
                                                       const std::array<std::vector<double>, 2>& priors) {
  if (spec.hole_cards > 2) throw std::invalid_argument("ranges support at most two hole cards");
  const std::vector<Hand> hands = all_hands(spec, spec.hole_cards, CardSet(board));
  std::array<RangeDistribution, 2> out;
  for (int p = 0; p < 2; ++p) {
    auto& r = out[p];
    r.player = p;
    r.hands = hands;
    if (!priors[p].empty()) {
      if (priors[p].size() != hands.size()) throw std::invalid_argument("prior size mismatch");
      r.reach = priors[p];
    } else {
      r.reach.assign(hands.size(), 1.0);
    }
  }
  // Labels depend only on (round, hand), so compute each once.
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(spec.num_rounds));
  auto label_of = [&](int round, std::size_t h) -> const std::string& {
    auto& row = labels[static_cast<std::size_t>(round)];
    if (row.empty()) {
      const auto n = static_cast<std::size_t>(std::min<int>(spec.board_cards_before(round),
                                                            static_cast<int>(board.size())));
      const std::span<const Card> visible(board.data(), n);
      row.reserve(hands.size());
      for (const auto& hand : hands) row.push_back(cards.label(round, hand, visible));
    }
    return row[h];
  };
  for (const auto& step : steps) {
    auto& r = out[step.player];
    const std::string prefix = std::to_string(step.player) + ":";
    for (std::size_t h = 0; h < hands.size(); ++h) {
      if (r.reach[h] == 0.0) continue;
      const auto& probs = trunk.at(prefix + label_of(step.round, h) + ":" + step.history);
      if (step.action < 0 || step.action >= static_cast<int>(probs.size())) {
        throw std::invalid_argument("trunk entry has too few actions");
      }
      r.reach[h] *= probs[static_cast<std::size_t>(step.action)];
    }
  }
  for (int p = 0; p < 2; ++p) {
    auto& r = out[p];
    const auto other = compatible_mass(hands, out[1 - p].reach);
    r.prob.resize(hands.size());
    double total = 0.0;
    for (std::size_t h = 0; h < hands.size(); ++h) {
      r.prob[h] = r.reach[h] * other[h];
      total += r.prob[h];
    }
    if (!(total > 0.0)) throw ZeroReachError(p, steps.size());
    for (double& v : r.prob) v /= total;
  }
  return out;
}

RangeResult compute_reach_ranges_with_fallback(const GameSpec& spec, const CardAbstraction& cards,
                                               const StrategyTable& trunk,
                                               const std::vector<TrunkStep>& steps,
                                               const std::vector<Card>& board) {
  std::vector<TrunkStep> prefix = steps;
  while (true) {
    try {
      RangeResult r;
      r.ranges = compute_reach_ranges(spec, cards, trunk, prefix, board);
      r.fallback = prefix.size() != steps.size();
      r.steps_used = prefix.size();
      return r;
    } catch (const ZeroReachError&) {
      if (prefix.empty()) throw;
      prefix.pop_back();
    }
  }
}

ConditionalEquities conditional_equities(const std::vector<Card>& board,
                                         const std::vector<Hand>& own,
                                         const RangeDistribution& opponent) {
  const auto sd = showdown_equities(board, opponent.hands, opponent.reach);
  ConditionalEquities out;
  for (const auto& hand : own) {
    const int i = opponent.index_of(hand);
    if (i < 0) throw std::invalid_argument("hand " + to_string(hand) + " is not dealable on this board");
    out.equities.push_back({hand, sd.equity[static_cast<std::size_t>(i)], 1.0});
    out.undefined.push_back(sd.undefined[static_cast<std::size_t>(i)]);
  }
  return out;
}

BettingState EndgameInstance::start_state() const {
  return BettingState::at_round(spec, round, pot, board, true);
}

std::uint64_t EndgameInstance::hash() const {
  std::ostringstream os;
  os.precision(17);
  os << spec->hash() << '|' << round << '|' << to_string(board) << '|' << pot << '|'
     << grid.describe() << '|' << num_buckets[0] << ',' << num_buckets[1];
  for (const auto& row : joint) {
    for (double v : row) os << ',' << v;
  }
  for (const auto& row : showdown) {
    for (double v : row) os << ',' << v;
  }
  return fnv1a(os.str());
}

void fill_bucket_tables(EndgameInstance& inst) {
  const auto& r0 = inst.ranges[0];
  const auto& r1 = inst.ranges[1];
  const auto k0 = static_cast<std::size_t>(inst.num_buckets[0]);
  const auto k1 = static_cast<std::size_t>(inst.num_buckets[1]);
  inst.joint.assign(k0, std::vector<double>(k1, 0.0));
  inst.showdown.assign(k0, std::vector<double>(k1, 0.0));

  auto values = [&](const RangeDistribution& r) {
    std::vector<HandValue> v;
    std::vector<Card> cards = inst.board;
    for (const auto& h : r.hands) {
      cards.resize(inst.board.size());
      cards.insert(cards.end(), h.begin(), h.end());
      v.push_back(evaluate_hand(cards));
    }
    return v;
  };
  const auto v0 = values(r0);
  const auto v1 = values(r1);
  double total = 0.0;
  for (std::size_t i = 0; i < r0.hands.size(); ++i) {
    const int b0 = inst.bucket[0][i];
    if (b0 < 0 || r0.reach[i] == 0.0) continue;
    const CardSet mine(r0.hands[i]);
    for (std::size_t j = 0; j < r1.hands.size(); ++j) {
      const int b1 = inst.bucket[1][j];
      if (b1 < 0 || r1.reach[j] == 0.0) continue;
      if (mine.intersects(CardSet(r1.hands[j]))) continue;
      const double w = r0.reach[i] * r1.reach[j];
      total += w;
      inst.joint[b0][b1] += w;
      const double sign = v0[i] > v1[j] ? 1.0 : v0[i] < v1[j] ? -1.0 : 0.0;
      inst.showdown[b0][b1] += w * sign;
    }
  }
  if (!(total > 0.0)) throw std::runtime_error("endgame ranges share no compatible deal");
  for (std::size_t a = 0; a < k0; ++a) {
    for (std::size_t b = 0; b < k1; ++b) {
      if (inst.joint[a][b] > 0.0) inst.showdown[a][b] /= inst.joint[a][b];
      inst.joint[a][b] /= total;
    }
  }
}

EndgameInstance build_endgame(const StrategyTable& trunk, const CardAbstraction& cards,
                              const std::vector<TrunkStep>& steps, const BettingState& true_state,
                              const ActionGrid& grid, const EndgameConfig& config) {
  const GameSpec& spec = true_state.spec();
  if (true_state.round() != spec.num_rounds - 1) {
    throw std::invalid_argument("endgames start in the final betting round");
  }
  if (static_cast<int>(true_state.board().size()) != spec.total_board_cards()) {
    throw std::invalid_argument("endgame needs the complete board");
  }
  EndgameInstance inst;
  inst.spec = true_state.spec_ptr();
  inst.round = true_state.round();
  inst.board = true_state.board();
  inst.pot = true_state.pot();
  for (int p = 0; p < 2; ++p) {
    const Chips before = true_state.total_committed(p) - true_state.round_committed(p);
    if (2 * before != inst.pot) throw std::logic_error("pot and commitments disagree");
    inst.stacks[p] = spec.starting_stack - before;
  }
  inst.grid = std::isinf(config.max_fraction) ? grid : grid.without_fractions_above(config.max_fraction);
  inst.max_sequences = config.max_sequences;

  const auto ranges = compute_reach_ranges_with_fallback(spec, cards, trunk, steps, inst.board);
  inst.ranges = ranges.ranges;
  inst.zero_reach_fallback = ranges.fallback;

  for (int p = 0; p < 2; ++p) {
    const auto& r = inst.ranges[p];
    const auto eq = conditional_equities(inst.board, r.hands, inst.ranges[1 - p]);
    inst.equity[p].resize(r.hands.size());
    EquityVector support;
    std::vector<std::size_t> support_index;
    for (std::size_t h = 0; h < r.hands.size(); ++h) {
      inst.equity[p][h] = eq.equities[h].equity;
      if (r.prob[h] > 0.0) {
        support.push_back({r.hands[h], inst.equity[p][h], r.prob[h]});
        support_index.push_back(h);
      }
    }
    const auto assign = bucket_by_equity_percentiles(support, config.buckets[p]);
    inst.bucket[p].assign(r.hands.size(), -1);
    for (std::size_t i = 0; i < support.size(); ++i) {
      inst.bucket[p][support_index[i]] = assign.bucket[i];
    }
    inst.num_buckets[p] = assign.num_buckets;
  }
  fill_bucket_tables(inst);
  return inst;
}

std::string endgame_key(int player, int bucket, const std::string& history) {
  return std::to_string(player) + ":b" + std::to_string(bucket) + ":" + history;
}

Efg endgame_efg(const EndgameInstance& inst) {
  const BettingState start = inst.start_state();

  std::array<long long, 2> per_bucket{0, 0};
  std::function<void(const BettingState&)> count = [&](const BettingState& s) {
    if (s.is_terminal()) return;
    const auto actions = abstract_actions(s, inst.grid);
    per_bucket[s.to_act()] += static_cast<long long>(actions.size());
    for (const auto& a : actions) count(apply_action(s, a));
  };
  count(start);
  for (int p = 0; p < 2; ++p) {
    const long long seqs = 1 + per_bucket[p] * inst.num_buckets[p];
    if (seqs > inst.max_sequences) {
      throw std::invalid_argument("endgame has " + std::to_string(seqs) + " sequences for player " +
                                  std::to_string(p) + ", above the limit of " +
                                  std::to_string(inst.max_sequences) +
                                  "; reduce the bucket count or the grid");
    }
  }

  Efg g;
  std::vector<std::pair<int, int>> pairs;
  std::vector<double> probs;
  for (int a = 0; a < inst.num_buckets[0]; ++a) {
    for (int b = 0; b < inst.num_buckets[1]; ++b) {
      if (inst.joint[a][b] > 0.0) {
        pairs.emplace_back(a, b);
        probs.push_back(inst.joint[a][b]);
      }
    }
  }
  const int root = g.add_chance(probs);
  std::function<int(const BettingState&, int, int)> build = [&](const BettingState& s, int b0,
                                                                int b1) -> int {
    if (s.is_terminal()) {
      const auto& out = *s.outcome();
      if (out.reason == TerminalReason::kFold) return g.add_terminal(static_cast<double>(out.payoff));
      const double stake = static_cast<double>(std::min(s.total_committed(0), s.total_committed(1)));
      return g.add_terminal(inst.showdown[b0][b1] * stake);
    }
    const int p = s.to_act();
    const auto actions = abstract_actions(s, inst.grid);
    std::vector<std::string> labels;
    for (const auto& a : actions) labels.push_back(to_string(a));
    const int id = g.add_decision(p, endgame_key(p, p == 0 ? b0 : b1, s.history_string()), labels,
                                  s.round());
    std::vector<int> kids;
    for (const auto& a : actions) kids.push_back(build(apply_action(s, a), b0, b1));
    g.set_children(id, std::move(kids));
    return id;
  };
  std::vector<int> kids;
  for (const auto& [a, b] : pairs) kids.push_back(build(start, a, b));
  g.set_children(root, std::move(kids));
  g.validate();
  return g;
}

EndgameSolution solve_endgame_lp(const EndgameInstance& inst) {
  const auto t0 = std::chrono::steady_clock::now();
  const Efg g = endgame_efg(inst);
  const auto sf = solve_sequence_form(g);
  EndgameSolution out;
  for (int i = 0; i < g.num_infosets(); ++i) out.strategy.set(g.infoset(i).key, sf.profile[i]);
  out.strategy.meta.spec_hash = inst.spec->hash();
  out.value = sf.value;
  out.pot_share_value = sf.value[0] + static_cast<double>(inst.pot) / 2.0;
  out.duality_gap = std::abs(sf.value[0] + sf.value[1]);
  out.max_violation = sf.max_violation;
  for (int p = 0; p < 2; ++p) {
    out.best_response_gain =
        std::max(out.best_response_gain, best_response_value(g, sf.profile, p) - sf.value[p]);
  }
  const auto form = build_sequence_form(g);
  out.sequences = form.num_sequences;
  out.lp_rows = sf.lp[0].rows;
  out.lp_columns = sf.lp[0].columns;
  out.lp_iterations = sf.lp[0].iterations + sf.lp[1].iterations;
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

EndgamePolicy endgame_policy(const EndgameInstance& inst, const EndgameSolution& solution,
                             int player, const Hand& hand, const BettingState& state) {
  if (state.to_act() != player) {
    throw std::invalid_argument("player " + std::to_string(player) + " is not to act");
  }
  EndgamePolicy out;
  out.actions = abstract_actions(state, inst.grid);
  const int idx = inst.ranges[player].index_of(hand);
  const int bucket = idx < 0 ? -1 : inst.bucket[player][static_cast<std::size_t>(idx)];
  const std::string key = endgame_key(player, std::max(bucket, 0), state.history_string());
  if (!solution.strategy.contains(key)) {
    throw std::out_of_range("history '" + state.history_string() + "' is not in the endgame tree");
  }
  if (bucket < 0) {
    out.probs.assign(out.actions.size(), 1.0 / static_cast<double>(out.actions.size()));
    out.flagged = true;
    return out;
  }
  out.probs = solution.strategy.at(key);
  return out;
}

SequentialRpsReport sequential_rps_endgame(const std::vector<double>& p0) {
  if (p0.size() != 3) throw std::invalid_argument("rock-paper-scissors needs three probabilities");
  Efg sub;
  const std::vector<std::string> moves = {"R", "P", "S"};
  const int root = sub.add_chance(p0);
  std::vector<int> kids;
  for (int a = 0; a < 3; ++a) {
    const int n = sub.add_decision(1, "1::", moves);
    std::vector<int> leaves;
    for (int b = 0; b < 3; ++b) {
      const int diff = (a - b + 3) % 3;
      leaves.push_back(sub.add_terminal(diff == 0 ? 0.0 : diff == 1 ? 1.0 : -1.0));
    }
    sub.set_children(n, std::move(leaves));
    kids.push_back(n);
  }
  sub.set_children(root, std::move(kids));
  sub.validate();

  const auto sol = solve_sequence_form(sub);
  SequentialRpsReport out;
  out.p1_strategy = sol.profile[static_cast<std::size_t>(sub.find_infoset("1::"))];
  out.endgame_value = sol.value[1];

  const Efg full = rock_paper_scissors_efg();
  Profile prof(static_cast<std::size_t>(full.num_infosets()));
  prof[static_cast<std::size_t>(full.find_infoset("0::"))] = p0;
  prof[static_cast<std::size_t>(full.find_infoset("1::"))] = out.p1_strategy;
  out.full_game_exploitability = exploitability(full, prof);
  return out;
}

}  // namespace pokerlab

namespace pokerlab {

EndgameInstance clairvoyance_instance(Chips bet) {
  if (bet < 1) throw std::invalid_argument("clairvoyance bet must be positive");
  GameSpec g;
  g.preset_name = "clairvoyance";
  g.ranks = {0, 1, 2};
  g.suits = {0};
  g.num_rounds = 1;
  g.hole_cards = 1;
  g.board_cards = {0};
  g.small_blind = 1;
  g.big_blind = 1;
  g.starting_stack = 1 + bet;
  g.betting = BettingStructure::kNoLimit;
  g.first_to_act = {0};

  EndgameInstance inst;
  inst.spec = std::make_shared<const GameSpec>(g);
  inst.pot = 2;
  inst.stacks = {bet, bet};
  inst.grid = ActionGrid({{std::vector<double>{kAllIn}, std::vector<double>{kAllIn}}}, 1);
  const Card loser = Card::from(0, 0), catcher = Card::from(1, 0), winner = Card::from(2, 0);
  inst.ranges[0] = {0, {{winner}, {loser}}, {1.0, 1.0}, {0.5, 0.5}};
  inst.ranges[1] = {1, {{catcher}}, {1.0}, {1.0}};
  inst.equity = {std::vector<double>{1.0, 0.0}, std::vector<double>{0.5}};
  inst.bucket = {std::vector<int>{0, 1}, std::vector<int>{0}};
  inst.num_buckets = {2, 1};
  inst.joint = {{0.5}, {0.5}};
  inst.showdown = {{1.0}, {-1.0}};
  return inst;
}

}  // namespace pokerlab
