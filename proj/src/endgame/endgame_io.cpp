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
#include "pokerlab/io/json.hpp"

namespace pokerlab {

namespace {

Json range_to_json(const RangeDistribution& r) {
  Json hands = Json::array();
  for (const auto& h : r.hands) hands.push_back(to_string(h));
  return {{"player", r.player}, {"hands", hands}, {"reach", r.reach}, {"prob", r.prob}};
}

RangeDistribution range_from_json(const Json& j) {
  RangeDistribution r;
  r.player = j.at("player").get<int>();
  for (const auto& h : j.at("hands")) r.hands.push_back(parse_cards(h.get<std::string>()));
  r.reach = j.at("reach").get<std::vector<double>>();
  r.prob = j.at("prob").get<std::vector<double>>();
  if (r.reach.size() != r.hands.size() || r.prob.size() != r.hands.size()) {
    throw std::invalid_argument("range arrays differ in length");
  }
  return r;
}

}  // namespace

std::string instance_to_json(const EndgameInstance& inst) {
  Json j{{"schema", "pokerlab.endgame-instance/1"},
         {"spec", spec_to_json(*inst.spec)},
         {"round", inst.round},
         {"board", cards_to_json(inst.board)},
         {"pot", inst.pot},
         {"stacks", inst.stacks},
         {"grid", grid_to_json(inst.grid)},
         {"ranges", {range_to_json(inst.ranges[0]), range_to_json(inst.ranges[1])}},
         {"equity", inst.equity},
         {"bucket", inst.bucket},
         {"num_buckets", inst.num_buckets},
         {"joint", inst.joint},
         {"showdown", inst.showdown},
         {"zero_reach_fallback", inst.zero_reach_fallback},
         {"max_sequences", inst.max_sequences},
         {"hash", inst.hash()}};
  return j.dump(1);
}

EndgameInstance instance_from_json(const std::string& text) {
  const Json j = Json::parse(text);
  EndgameInstance inst;
  inst.spec = std::make_shared<const GameSpec>(spec_from_json(j.at("spec")));
  inst.round = j.at("round").get<int>();
  inst.board = cards_from_json(j.at("board"));
  inst.pot = j.at("pot").get<Chips>();
  inst.stacks = j.at("stacks").get<std::array<Chips, 2>>();
  inst.grid = grid_from_json(j.at("grid"));
  inst.ranges = {range_from_json(j.at("ranges").at(0)), range_from_json(j.at("ranges").at(1))};
  inst.equity = j.at("equity").get<std::array<std::vector<double>, 2>>();
  inst.bucket = j.at("bucket").get<std::array<std::vector<int>, 2>>();
  inst.num_buckets = j.at("num_buckets").get<std::array<int, 2>>();
  inst.joint = j.at("joint").get<std::vector<std::vector<double>>>();
  inst.showdown = j.at("showdown").get<std::vector<std::vector<double>>>();
  inst.zero_reach_fallback = j.value("zero_reach_fallback", false);
  inst.max_sequences = j.value("max_sequences", 10'000);
  if (inst.joint.size() != static_cast<std::size_t>(inst.num_buckets[0]) ||
      inst.showdown.size() != inst.joint.size()) {
    throw std::invalid_argument("bucket tables do not match num_buckets");
  }
  for (std::size_t a = 0; a < inst.joint.size(); ++a) {
    if (inst.joint[a].size() != static_cast<std::size_t>(inst.num_buckets[1]) ||
        inst.showdown[a].size() != inst.joint[a].size()) {
      throw std::invalid_argument("bucket tables do not match num_buckets");
    }
  }
  return inst;
}

std::string solution_to_json(const EndgameSolution& s) {
  Json strategy = Json::object();
  for (const auto& [key, probs] : s.strategy.entries()) strategy[key] = probs;
  Json j{{"schema", "pokerlab.endgame-solution/1"},
         {"value", s.value},
         {"pot_share_value", s.pot_share_value},
         {"duality_gap", s.duality_gap},
         {"max_violation", s.max_violation},
         {"best_response_gain", s.best_response_gain},
         {"sequences", s.sequences},
         {"lp_rows", s.lp_rows},
         {"lp_columns", s.lp_columns},
         {"lp_iterations", s.lp_iterations},
         {"seconds", s.seconds},
         {"strategy", strategy}};
  return j.dump(1);
}

}  // namespace pokerlab
