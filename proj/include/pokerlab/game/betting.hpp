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
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pokerlab/game/cards.hpp"
#include "pokerlab/game/game_spec.hpp"

namespace pokerlab {

enum class ActionKind { kFold, kCheck, kCall, kRaise };

// A bet or raise carries its raise-to amount: the player's total
// commitment for the hand after the action. Other kinds carry no amount.
struct ActionDescriptor {
  ActionKind kind = ActionKind::kCheck;
  Chips amount = 0;

  static ActionDescriptor fold() { return {ActionKind::kFold, 0}; }
  static ActionDescriptor check() { return {ActionKind::kCheck, 0}; }
  static ActionDescriptor call() { return {ActionKind::kCall, 0}; }
  static ActionDescriptor raise_to(Chips to) { return {ActionKind::kRaise, to}; }

  bool passive() const { return kind == ActionKind::kCheck || kind == ActionKind::kCall; }
  friend bool operator==(const ActionDescriptor&, const ActionDescriptor&) = default;
};

// History token: "f", "k", "c" or "r<raise-to>".
std::string to_string(const ActionDescriptor& action);
ActionDescriptor parse_action(std::string_view token);

struct RaiseBounds {
  Chips min_to = 0;
  Chips max_to = 0;
};

struct LegalActions {
  bool fold = false;
  bool check = false;
  bool call = false;
  Chips call_amount = 0;  // additional chips a call puts in
  std::optional<RaiseBounds> raise;

  bool empty() const { return !fold && !check && !call && !raise; }
  bool allows(const ActionDescriptor& action) const;
  // fold, check or call, then raise-to min and max (max is all-in).
  std::vector<ActionDescriptor> descriptors() const;
};

enum class NodeStatus { kChance, kDecision, kTerminal };
enum class TerminalReason { kFold, kShowdown };

struct TerminalOutcome {
  Chips payoff = 0;  // to seat 0; seat 1 receives the negation
  TerminalReason reason = TerminalReason::kShowdown;
};

struct ActionRecord {
  int player = 0;
  int round = 0;
  ActionDescriptor action;
};

class IllegalActionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable snapshot of a hand in progress. Chips live in three places:
// the pot of completed rounds, the current round's commitments, and the
// players' remaining stacks; they always sum to twice the starting stack.
class BettingState {
 public:
  // Blinds posted, hole cards not yet dealt.
  static BettingState initial(std::shared_ptr<const GameSpec> spec);
  // Blinds posted and the given hole cards dealt.
  static BettingState deal_hand(std::shared_ptr<const GameSpec> spec,
                                std::span<const Card> seat0,
                                std::span<const Card> seat1);
  // Card-free betting tree: chance events are skipped and showdowns carry
  // no payoff. Used to enumerate betting sequences independent of the deal.
  static BettingState betting_root(std::shared_ptr<const GameSpec> spec);
  // Start of `round` with `pot` split evenly between the seats (pot must be
  // even). Remaining stacks follow from the spec's starting stack.
  static BettingState at_round(std::shared_ptr<const GameSpec> spec, int round,
                               Chips pot, std::vector<Card> board, bool card_free);

  const GameSpec& spec() const { return *spec_; }
  const std::shared_ptr<const GameSpec>& spec_ptr() const { return spec_; }

  NodeStatus status() const { return status_; }
  bool is_terminal() const { return status_ == NodeStatus::kTerminal; }
  bool is_chance() const { return status_ == NodeStatus::kChance; }
  int round() const { return round_; }
  int to_act() const { return to_act_; }  // -1 unless a decision is pending

  Chips pot() const { return pot_; }  // completed rounds only
  Chips pot_total() const { return pot_ + round_committed_[0] + round_committed_[1]; }
  Chips round_committed(int seat) const { return round_committed_[seat]; }
  Chips total_committed(int seat) const { return total_committed_[seat]; }
  Chips stack(int seat) const { return spec_->starting_stack - total_committed_[seat]; }
  Chips to_call(int seat) const;
  // Smallest legal raise increment in no-limit play.
  Chips min_raise_increment() const;
  bool card_free() const { return card_free_; }

  const std::vector<Card>& board() const { return board_; }
  const std::vector<Card>& hole(int seat) const { return hole_[seat]; }
  bool hole_dealt() const { return hole_dealt_; }
  // Cards the next chance event deals (0 when no deal is pending).
  int pending_deal_size() const;

  const std::vector<ActionRecord>& history() const { return history_; }
  // Tokens joined per round with '/', e.g. "r300c/kr900".
  std::string history_string() const;
  int raises_this_round() const { return raises_this_round_; }

  const std::optional<TerminalOutcome>& outcome() const { return outcome_; }

  // Copy with the other seat's hole cards removed.
  BettingState redacted_for(int viewer) const;
  // Copy with both seats' hole cards replaced; betting is card independent.
  BettingState with_hole_cards(std::span<const Card> seat0,
                               std::span<const Card> seat1) const;

 private:
  friend BettingState apply_action(const BettingState&, const ActionDescriptor&);
  friend BettingState deal_cards(const BettingState&, std::span<const Card>);

  void close_round();
  void settle_showdown();
  void advance_after_deal();

  std::shared_ptr<const GameSpec> spec_;
  NodeStatus status_ = NodeStatus::kChance;
  int round_ = 0;
  int to_act_ = -1;
  Chips pot_ = 0;
  std::array<Chips, 2> round_committed_{};
  std::array<Chips, 2> total_committed_{};
  std::array<bool, 2> acted_{};
  int raises_this_round_ = 0;
  Chips last_raise_size_ = 0;
  bool hole_dealt_ = false;
  bool card_free_ = false;
  std::vector<Card> board_;
  std::array<std::vector<Card>, 2> hole_;
  std::vector<ActionRecord> history_;
  std::optional<TerminalOutcome> outcome_;
};

// Empty for chance and terminal states.
LegalActions legal_actions(const BettingState& state);

// Throws IllegalActionError naming the violated bound.
BettingState apply_action(const BettingState& state, const ActionDescriptor& action);

// Resolves a pending chance event. Hole deals take seat 0's cards followed by
// seat 1's; board deals take the round's public cards.
BettingState deal_cards(const BettingState& state, std::span<const Card> cards);

struct ChanceOutcome {
  std::vector<Card> cards;
  double probability = 0.0;
};

// Uniform distribution over the pending deal, disjoint from dealt cards.
std::vector<ChanceOutcome> enumerate_chance(const BettingState& state);

// Convenience for tests and tools: play a token history from a dealt state.
BettingState apply_history(BettingState state, std::string_view tokens);

}  // namespace pokerlab
