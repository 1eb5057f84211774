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

#include "pokerlab/game/betting.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "pokerlab/game/hand_eval.hpp"

namespace pokerlab {

std::string to_string(const ActionDescriptor& action) {
  switch (action.kind) {
    case ActionKind::kFold:
      return "f";
    case ActionKind::kCheck:
      return "k";
    case ActionKind::kCall:
      return "c";
    case ActionKind::kRaise:
      return "r" + std::to_string(action.amount);
  }
  return "?";
}

ActionDescriptor parse_action(std::string_view token) {
  if (token == "f") return ActionDescriptor::fold();
  if (token == "k") return ActionDescriptor::check();
  if (token == "c") return ActionDescriptor::call();
  if (token.size() > 1 && token[0] == 'r') {
    Chips amount = 0;
    for (char c : token.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("bad action token '" + std::string(token) + "'");
      }
      amount = amount * 10 + (c - '0');
    }
    return ActionDescriptor::raise_to(amount);
  }
  throw std::invalid_argument("bad action token '" + std::string(token) + "'");
}

bool LegalActions::allows(const ActionDescriptor& action) const {
  switch (action.kind) {
    case ActionKind::kFold:
      return fold;
    case ActionKind::kCheck:
      return check;
    case ActionKind::kCall:
      return call;
    case ActionKind::kRaise:
      return raise && action.amount >= raise->min_to && action.amount <= raise->max_to;
  }
  return false;
}

std::vector<ActionDescriptor> LegalActions::descriptors() const {
  std::vector<ActionDescriptor> out;
  if (fold) out.push_back(ActionDescriptor::fold());
  if (check) out.push_back(ActionDescriptor::check());
  if (call) out.push_back(ActionDescriptor::call());
  if (raise) {
    out.push_back(ActionDescriptor::raise_to(raise->min_to));
    if (raise->max_to != raise->min_to) {
      out.push_back(ActionDescriptor::raise_to(raise->max_to));
    }
  }
  return out;
}

BettingState BettingState::initial(std::shared_ptr<const GameSpec> spec) {
  spec->validate();
  BettingState s;
  s.spec_ = std::move(spec);
  s.round_committed_ = {s.spec_->small_blind, s.spec_->big_blind};
  s.total_committed_ = s.round_committed_;
  s.last_raise_size_ = s.spec_->big_blind;
  s.status_ = NodeStatus::kChance;
  return s;
}

BettingState BettingState::deal_hand(std::shared_ptr<const GameSpec> spec,
                                     std::span<const Card> seat0,
                                     std::span<const Card> seat1) {
  std::vector<Card> cards(seat0.begin(), seat0.end());
  cards.insert(cards.end(), seat1.begin(), seat1.end());
  return deal_cards(initial(std::move(spec)), cards);
}

BettingState BettingState::betting_root(std::shared_ptr<const GameSpec> spec) {
  BettingState s = initial(std::move(spec));
  s.card_free_ = true;
  s.hole_dealt_ = true;
  s.status_ = NodeStatus::kDecision;
  s.to_act_ = s.spec_->first_to_act[0];
  return s;
}

BettingState BettingState::at_round(std::shared_ptr<const GameSpec> spec, int round,
                                    Chips pot, std::vector<Card> board, bool card_free) {
  spec->validate();
  if (round < 0 || round >= spec->num_rounds) {
    throw std::invalid_argument("at_round: round out of range");
  }
  if (pot <= 0 || pot % 2 != 0 || pot / 2 > spec->starting_stack) {
    throw std::invalid_argument("at_round: pot must be even, positive and coverable");
  }
  BettingState s;
  s.spec_ = std::move(spec);
  s.round_ = round;
  s.pot_ = pot;
  s.total_committed_ = {pot / 2, pot / 2};
  s.round_committed_ = {0, 0};
  s.last_raise_size_ = s.spec_->big_blind;
  s.board_ = std::move(board);
  s.hole_dealt_ = true;
  s.card_free_ = card_free;
  s.advance_after_deal();
  return s;
}

Chips BettingState::min_raise_increment() const {
  return std::max(spec_->big_blind, last_raise_size_);
}

Chips BettingState::to_call(int seat) const {
  return std::max<Chips>(0, total_committed_[1 - seat] - total_committed_[seat]);
}

int BettingState::pending_deal_size() const {
  if (status_ != NodeStatus::kChance) return 0;
  if (!hole_dealt_) return 2 * spec_->hole_cards;
  return spec_->board_cards[round_];
}

std::string BettingState::history_string() const {
  std::string out;
  int round = 0;
  for (const auto& rec : history_) {
    while (round < rec.round) {
      out.push_back('/');
      ++round;
    }
    out += to_string(rec.action);
  }
  for (; round < round_; ++round) out.push_back('/');
  return out;
}

BettingState BettingState::redacted_for(int viewer) const {
  BettingState copy = *this;
  copy.hole_[1 - viewer].clear();
  return copy;
}

BettingState BettingState::with_hole_cards(std::span<const Card> seat0,
                                           std::span<const Card> seat1) const {
  BettingState copy = *this;
  copy.hole_[0].assign(seat0.begin(), seat0.end());
  copy.hole_[1].assign(seat1.begin(), seat1.end());
  return copy;
}

void BettingState::settle_showdown() {
  status_ = NodeStatus::kTerminal;
  to_act_ = -1;
  TerminalOutcome out;
  out.reason = TerminalReason::kShowdown;
  if (hole_[0].empty() || hole_[1].empty()) {
    // Card-free betting trees stop here; payoff depends on the deal.
    outcome_ = out;
    return;
  }
  switch (evaluate_showdown(board_, hole_[0], hole_[1])) {
    case Showdown::kWin:
      out.payoff = total_committed_[1];
      break;
    case Showdown::kLose:
      out.payoff = -total_committed_[0];
      break;
    case Showdown::kTie:
      out.payoff = (total_committed_[1] - total_committed_[0]) / 2;
      break;
  }
  outcome_ = out;
}

void BettingState::close_round() {
  pot_ += round_committed_[0] + round_committed_[1];
  round_committed_ = {0, 0};
  acted_ = {false, false};
  raises_this_round_ = 0;
  last_raise_size_ = spec_->big_blind;
  to_act_ = -1;
  if (round_ + 1 >= spec_->num_rounds) {
    settle_showdown();
    return;
  }
  ++round_;
  status_ = NodeStatus::kChance;
  if (card_free_ || spec_->board_cards[round_] == 0) advance_after_deal();
}

void BettingState::advance_after_deal() {
  if (stack(0) == 0 || stack(1) == 0) {
    // Someone is all-in: the remaining rounds are dealt without betting.
    status_ = NodeStatus::kDecision;
    close_round();
    return;
  }
  status_ = NodeStatus::kDecision;
  to_act_ = spec_->first_to_act[round_];
}

LegalActions legal_actions(const BettingState& state) {
  LegalActions legal;
  if (state.status() != NodeStatus::kDecision) return legal;
  const GameSpec& spec = state.spec();
  const int p = state.to_act();
  const int o = 1 - p;
  const Chips to_call = state.to_call(p);
  const Chips stack = state.stack(p);
  if (to_call > 0) {
    legal.fold = true;
    legal.call = true;
    legal.call_amount = std::min(to_call, stack);
  } else {
    legal.check = true;
  }
  const bool can_raise = stack > to_call && state.stack(o) > 0 &&
                         (!spec.is_limit() ||
                          state.raises_this_round() < spec.max_raises[state.round()]);
  if (can_raise) {
    const Chips facing = state.total_committed(o);
    const Chips max_to = std::min(state.total_committed(p) + stack,
                                  state.total_committed(o) + state.stack(o));
    Chips min_to;
    if (spec.is_limit()) {
      min_to = std::min(facing + spec.limit_raise[state.round()], max_to);
      legal.raise = RaiseBounds{min_to, min_to};
    } else {
      min_to = std::min(facing + state.min_raise_increment(), max_to);
      legal.raise = RaiseBounds{min_to, max_to};
    }
  }
  return legal;
}

namespace {

[[noreturn]] void reject(const BettingState& state, const ActionDescriptor& action,
                         const std::string& why) {
  throw IllegalActionError("illegal action '" + to_string(action) + "' for seat " +
                           std::to_string(state.to_act()) + " at '" +
                           state.history_string() + "': " + why);
}

}  // namespace

BettingState apply_action(const BettingState& state, const ActionDescriptor& action) {
  if (state.status_ != NodeStatus::kDecision) {
    throw IllegalActionError("no decision pending (status is " +
                             std::string(state.is_terminal() ? "terminal" : "chance") + ")");
  }
  const LegalActions legal = legal_actions(state);
  const int p = state.to_act_;
  const int o = 1 - p;
  switch (action.kind) {
    case ActionKind::kFold:
      if (!legal.fold) reject(state, action, "fold is not allowed when checking is free");
      break;
    case ActionKind::kCheck:
      if (!legal.check) {
        reject(state, action, "facing a bet of " + std::to_string(state.to_call(p)));
      }
      break;
    case ActionKind::kCall:
      if (!legal.call) reject(state, action, "nothing to call");
      break;
    case ActionKind::kRaise:
      if (!legal.raise) reject(state, action, "raising is not allowed here");
      if (action.amount < legal.raise->min_to) {
        reject(state, action, "raise-to below minimum " + std::to_string(legal.raise->min_to) +
                                  " (legal interval [" + std::to_string(legal.raise->min_to) +
                                  ", " + std::to_string(legal.raise->max_to) + "])");
      }
      if (action.amount > legal.raise->max_to) {
        reject(state, action, "raise-to above maximum " + std::to_string(legal.raise->max_to) +
                                  " (legal interval [" + std::to_string(legal.raise->min_to) +
                                  ", " + std::to_string(legal.raise->max_to) + "])");
      }
      break;
  }

  BettingState next = state;
  next.history_.push_back({p, state.round_, action});
  next.acted_[p] = true;
  switch (action.kind) {
    case ActionKind::kFold: {
      next.status_ = NodeStatus::kTerminal;
      next.to_act_ = -1;
      next.outcome_ = TerminalOutcome{
          p == 0 ? -state.total_committed_[0] : state.total_committed_[1],
          TerminalReason::kFold};
      return next;
    }
    case ActionKind::kCheck:
      break;
    case ActionKind::kCall: {
      const Chips add = legal.call_amount;
      next.round_committed_[p] += add;
      next.total_committed_[p] += add;
      break;
    }
    case ActionKind::kRaise: {
      const Chips add = action.amount - state.total_committed_[p];
      const Chips increment = action.amount - state.total_committed_[o];
      next.round_committed_[p] += add;
      next.total_committed_[p] += add;
      next.last_raise_size_ = std::max(next.last_raise_size_, increment);
      ++next.raises_this_round_;
      next.acted_[o] = false;
      break;
    }
  }
  if (next.acted_[0] && next.acted_[1] &&
      next.total_committed_[0] == next.total_committed_[1]) {
    next.close_round();
  } else {
    next.to_act_ = o;
  }
  return next;
}

BettingState deal_cards(const BettingState& state, std::span<const Card> cards) {
  if (state.status_ != NodeStatus::kChance) {
    throw std::invalid_argument("no deal pending");
  }
  const int need = state.pending_deal_size();
  if (static_cast<int>(cards.size()) != need) {
    throw std::invalid_argument("deal needs " + std::to_string(need) + " cards, got " +
                                std::to_string(cards.size()));
  }
  CardSet used(state.board_);
  used = used | CardSet(state.hole_[0]) | CardSet(state.hole_[1]);
  const auto deck = state.spec().deck();
  for (Card c : cards) {
    if (std::find(deck.begin(), deck.end(), c) == deck.end()) {
      throw std::invalid_argument("card " + to_string(c) + " is not in the deck");
    }
    if (used.contains(c)) {
      throw std::invalid_argument("card " + to_string(c) + " already dealt");
    }
    used.insert(c);
  }
  BettingState next = state;
  if (!state.hole_dealt_) {
    const auto h = static_cast<std::size_t>(state.spec().hole_cards);
    next.hole_[0].assign(cards.begin(), cards.begin() + h);
    next.hole_[1].assign(cards.begin() + h, cards.end());
    next.hole_dealt_ = true;
    next.status_ = NodeStatus::kDecision;
    next.to_act_ = state.spec().first_to_act[0];
    return next;
  }
  next.board_.insert(next.board_.end(), cards.begin(), cards.end());
  next.advance_after_deal();
  return next;
}

std::vector<ChanceOutcome> enumerate_chance(const BettingState& state) {
  std::vector<ChanceOutcome> out;
  if (!state.is_chance()) return out;
  CardSet used(state.board());
  used = used | CardSet(state.hole(0)) | CardSet(state.hole(1));
  std::vector<Card> avail;
  for (Card c : state.spec().deck()) {
    if (!used.contains(c)) avail.push_back(c);
  }

  // All k-subsets of avail, lexicographic.
  auto combos = [&](int k, std::span<const Card> pool) {
    std::vector<std::vector<Card>> result;
    std::vector<Card> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (static_cast<int>(cur.size()) == k) {
        result.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
    return result;
  };

  if (!state.hole_dealt()) {
    const int h = state.spec().hole_cards;
    for (const auto& first : combos(h, avail)) {
      std::vector<Card> rest;
      for (Card c : avail) {
        if (std::find(first.begin(), first.end(), c) == first.end()) rest.push_back(c);
      }
      for (const auto& second : combos(h, rest)) {
        ChanceOutcome o;
        o.cards = first;
        o.cards.insert(o.cards.end(), second.begin(), second.end());
        out.push_back(std::move(o));
      }
    }
  } else {
    for (auto& c : combos(state.pending_deal_size(), avail)) {
      out.push_back({std::move(c), 0.0});
    }
  }
  const double p = 1.0 / static_cast<double>(out.size());
  for (auto& o : out) o.probability = p;
  return out;
}

BettingState apply_history(BettingState state, std::string_view tokens) {
  std::size_t i = 0;
  while (i < tokens.size()) {
    const char c = tokens[i];
    if (c == '/' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    if (c == 'r') {
      while (j < tokens.size() && std::isdigit(static_cast<unsigned char>(tokens[j]))) ++j;
    }
    state = apply_action(state, parse_action(tokens.substr(i, j - i)));
    i = j;
  }
  return state;
}

}  // namespace pokerlab
