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

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pokerlab/abstraction/abstraction.hpp"
#include "pokerlab/endgame/endgame.hpp"
#include "pokerlab/game/betting.hpp"
#include "pokerlab/solver/strategy_table.hpp"
#include "pokerlab/translation/translation.hpp"
#include "pokerlab/util/rng.hpp"

namespace pokerlab {

// What an agent reports about one of its decisions.
struct DecisionInfo {
  std::string source;  // "trunk", "endgame", "uniform", "scripted", ...
  Chips true_pot = 0;
  // Pot implied by the agent's translated history; equals true_pot for
  // agents that do not abstract.
  Chips perceived_pot = 0;
  // Opponent actions translated since the agent's previous decision.
  std::vector<TranslationEvent> translations;
  std::optional<std::uint64_t> endgame_hash;
  std::optional<Chips> endgame_pot;
  bool flagged = false;
  std::string note;
};

struct Decision {
  ActionDescriptor action;
  DecisionInfo info;
};

// Decision interface used by the match harness and the service. Views are
// redacted for the agent's seat.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual std::string name() const = 0;
  virtual void begin_hand(const BettingState& view, int seat, std::uint64_t seed) = 0;
  // Every action of either seat, with the state it was taken in.
  virtual void observe(const BettingState& before, const ActionDescriptor& action) {
    (void)before;
    (void)action;
  }
  virtual Decision act(const BettingState& view) = 0;
};

// Uniform over the abstract actions of the true state.
class UniformAgent final : public Agent {
 public:
  explicit UniformAgent(ActionGrid grid, std::string name = "uniform")
      : grid_(std::move(grid)), name_(std::move(name)) {}
  std::string name() const override { return name_; }
  void begin_hand(const BettingState& view, int seat, std::uint64_t seed) override;
  Decision act(const BettingState& view) override;

 private:
  ActionGrid grid_;
  std::string name_;
  Rng rng_;
};

// Raises to the maximum whenever possible, otherwise checks or calls.
class AlwaysAllInAgent final : public Agent {
 public:
  std::string name() const override { return "allin"; }
  void begin_hand(const BettingState&, int, std::uint64_t) override {}
  Decision act(const BettingState& view) override;
};

// Checks or calls.
class CallingAgent final : public Agent {
 public:
  std::string name() const override { return "call"; }
  void begin_hand(const BettingState&, int, std::uint64_t) override {}
  Decision act(const BettingState& view) override;
};

class ScriptedAgent final : public Agent {
 public:
  using Script = std::function<ActionDescriptor(const BettingState& view)>;
  ScriptedAgent(std::string name, Script script)
      : name_(std::move(name)), script_(std::move(script)) {}
  std::string name() const override { return name_; }
  void begin_hand(const BettingState&, int, std::uint64_t) override {}
  Decision act(const BettingState& view) override;

 private:
  std::string name_;
  Script script_;
};

struct StrategyAgentOptions {
  std::string name = "strategy";
  std::shared_ptr<const Abstraction> abstraction;
  // Raw averages; the Bayes ranges of the endgame are computed from these.
  std::shared_ptr<const StrategyTable> trunk;
  // What the agent plays before the endgame (e.g. thresholded). Defaults
  // to the trunk.
  std::shared_ptr<const StrategyTable> played;
  bool endgame = false;
  EndgameConfig endgame_config;
  // Replaces the agent's own stream for translation draws.
  std::function<double()> translation_draw;
};

// Plays a precomputed strategy on its perceived (abstract) state. Opponent
// raises are translated on the true state; the agent's own abstract moves
// are realized on both states. In the final round of a no-limit game it can
// solve an endgame built from the true pot and switch to that policy.
class StrategyAgent final : public Agent {
 public:
  explicit StrategyAgent(StrategyAgentOptions options);
  std::string name() const override { return opt_.name; }
  void begin_hand(const BettingState& view, int seat, std::uint64_t seed) override;
  void observe(const BettingState& before, const ActionDescriptor& action) override;
  Decision act(const BettingState& view) override;

  const BettingState& perceived() const { return perceived_; }
  bool desynchronized() const { return desync_; }
  // Last endgame built this hand, if any.
  const EndgameInstance* endgame_instance() const { return endgame_ ? &endgame_->instance : nullptr; }

 private:
  struct Endgame {
    EndgameInstance instance;
    EndgameSolution solution;
    BettingState state;
  };

  void sync_deals(const BettingState& view);
  void advance_perceived(const AbstractMove& move);
  void maybe_start_endgame(const BettingState& view);
  double draw();

  StrategyAgentOptions opt_;
  int seat_ = 0;
  Rng rng_;
  BettingState perceived_;
  bool desync_ = false;
  std::vector<TranslationEvent> pending_events_;
  std::optional<AbstractMove> own_move_;
  std::optional<Endgame> endgame_;
  bool endgame_failed_ = false;
  std::string endgame_error_;
  // Final-round moves seen before the endgame was built.
  std::vector<AbstractMove> final_moves_;
};

// The abstract action of `state` matching `action`, or the nearest abstract
// raise by amount when the realized size is not on the grid.
ActionDescriptor snap_to_abstract(const BettingState& state, const ActionDescriptor& action,
                                  const ActionGrid& grid);

struct AgentContext {
  std::shared_ptr<const GameSpec> spec;
  std::shared_ptr<const Abstraction> abstraction;
  bool endgame = false;
  EndgameConfig endgame_config;
  // Applied to loaded strategies for play; the raw table still drives Bayes.
  std::function<StrategyTable(const StrategyTable&)> postprocess;
  // Loads strategy files; defaults to reading the file each time.
  std::function<std::shared_ptr<const StrategyTable>(const std::string& path)> load_table;
};

// "uniform", "allin", "call" or "cfr:<strategy file>". Strategy files must
// carry the hashes of the context's game and abstraction.
std::unique_ptr<Agent> make_agent(const std::string& descriptor, const AgentContext& context);

}  // namespace pokerlab
