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

#include "pokerlab/game/game_spec.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pokerlab/util/config.hpp"
#include "pokerlab/util/hashing.hpp"

namespace pokerlab {
namespace {

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ' ';
    out << values[i];
  }
  return out.str();
}

std::vector<long long> parse_ints(const std::vector<std::string>& tokens,
                                  const std::string& key) {
  std::vector<long long> out;
  for (const auto& t : tokens) {
    try {
      out.push_back(std::stoll(t));
    } catch (const std::exception&) {
      throw std::invalid_argument("game." + key + ": not an integer: " + t);
    }
  }
  return out;
}

}  // namespace

std::vector<Card> GameSpec::deck() const {
  std::vector<Card> cards;
  for (int r : ranks) {
    for (int s : suits) cards.push_back(Card::from(r, s));
  }
  std::sort(cards.begin(), cards.end());
  return cards;
}

int GameSpec::total_board_cards() const {
  return std::accumulate(board_cards.begin(), board_cards.end(), 0);
}

int GameSpec::board_cards_before(int round) const {
  int n = 0;
  for (int r = 0; r <= round && r < static_cast<int>(board_cards.size()); ++r) {
    n += board_cards[r];
  }
  return n;
}

void GameSpec::validate() const {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("game spec: " + what);
  };
  if (small_blind <= 0) fail("small_blind must be positive");
  if (big_blind < small_blind) fail("big_blind must be >= small_blind");
  if (starting_stack < big_blind) fail("starting_stack must be >= big_blind");
  if (num_rounds < 1) fail("num_rounds must be >= 1");
  if (hole_cards < 1) fail("hole_cards must be >= 1");
  if (static_cast<int>(board_cards.size()) != num_rounds) {
    fail("board_cards needs one entry per round");
  }
  if (board_cards[0] != 0) fail("no public cards before the first round");
  if (static_cast<int>(first_to_act.size()) != num_rounds) {
    fail("first_to_act needs one entry per round");
  }
  for (int s : first_to_act) {
    if (s != 0 && s != 1) fail("first_to_act entries must be 0 or 1");
  }
  if (ranks.empty() || suits.empty()) fail("empty deck");
  for (int r : ranks) {
    if (r < 0 || r >= kNumRanks) fail("rank out of range");
  }
  for (int s : suits) {
    if (s < 0 || s >= kNumSuits) fail("suit out of range");
  }
  if (2 * hole_cards + total_board_cards() > deck_size()) {
    fail("deck too small for the deal");
  }
  if (is_limit()) {
    if (static_cast<int>(limit_raise.size()) != num_rounds ||
        static_cast<int>(max_raises.size()) != num_rounds) {
      fail("fixed-limit games need limit_raise and max_raises per round");
    }
    for (Chips c : limit_raise) {
      if (c <= 0) fail("limit_raise entries must be positive");
    }
  }
}

std::string GameSpec::describe() const {
  std::ostringstream out;
  out << "preset = " << preset_name << '\n'
      << "ranks = " << join(ranks) << '\n'
      << "suits = " << join(suits) << '\n'
      << "num_rounds = " << num_rounds << '\n'
      << "hole_cards = " << hole_cards << '\n'
      << "board_cards = " << join(board_cards) << '\n'
      << "small_blind = " << small_blind << '\n'
      << "big_blind = " << big_blind << '\n'
      << "starting_stack = " << starting_stack << '\n'
      << "betting = " << (is_limit() ? "limit" : "nolimit") << '\n'
      << "limit_raise = " << join(limit_raise) << '\n'
      << "max_raises = " << join(max_raises) << '\n'
      << "first_to_act = " << join(first_to_act) << '\n';
  return out.str();
}

std::uint64_t GameSpec::hash() const { return fnv1a(describe()); }

GameSpec kuhn_spec() {
  GameSpec g;
  g.preset_name = "kuhn";
  g.ranks = {9, 10, 11};  // J Q K
  g.suits = {3};
  g.num_rounds = 1;
  g.hole_cards = 1;
  g.board_cards = {0};
  g.small_blind = 1;
  g.big_blind = 1;
  g.starting_stack = 2;
  g.betting = BettingStructure::kFixedLimit;
  g.limit_raise = {1};
  g.max_raises = {1};
  g.first_to_act = {0};
  return g;
}

GameSpec leduc_spec() {
  GameSpec g;
  g.preset_name = "leduc";
  g.ranks = {9, 10, 11};
  g.suits = {2, 3};
  g.num_rounds = 2;
  g.hole_cards = 1;
  g.board_cards = {0, 1};
  g.small_blind = 1;
  g.big_blind = 1;
  g.starting_stack = 13;  // ante + two capped rounds: 1 + 2*2 + 2*4
  g.betting = BettingStructure::kFixedLimit;
  g.limit_raise = {2, 4};
  g.max_raises = {2, 2};
  g.first_to_act = {0, 0};
  return g;
}

GameSpec nlhe_spec() {
  GameSpec g;
  g.preset_name = "nlhe";
  g.ranks = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  g.suits = {0, 1, 2, 3};
  g.num_rounds = 4;
  g.hole_cards = 2;
  g.board_cards = {0, 3, 1, 1};
  g.small_blind = 50;
  g.big_blind = 100;
  g.starting_stack = 20000;
  g.betting = BettingStructure::kNoLimit;
  g.first_to_act = {0, 1, 1, 1};
  return g;
}

GameSpec river_nlhe_spec() {
  GameSpec g = nlhe_spec();
  g.preset_name = "river-nlhe";
  g.num_rounds = 2;
  g.board_cards = {0, 5};
  g.first_to_act = {0, 1};
  return g;
}

GameSpec mini_nlhe_spec() {
  GameSpec g = nlhe_spec();
  g.preset_name = "mini-nlhe";
  g.ranks = {7, 8, 9, 10, 11, 12};
  g.num_rounds = 3;
  g.board_cards = {0, 3, 2};
  g.small_blind = 1;
  g.big_blind = 2;
  g.starting_stack = 40;
  g.first_to_act = {0, 1, 1};
  return g;
}

std::vector<std::string> preset_names() {
  return {"kuhn", "leduc", "nlhe", "river-nlhe", "mini-nlhe"};
}

GameSpec preset_spec(const std::string& name) {
  if (name == "kuhn") return kuhn_spec();
  if (name == "leduc") return leduc_spec();
  if (name == "nlhe") return nlhe_spec();
  if (name == "river-nlhe") return river_nlhe_spec();
  if (name == "mini-nlhe") return mini_nlhe_spec();
  throw std::invalid_argument("unknown preset '" + name + "'");
}

GameSpec load_game_spec(const Config& config) {
  GameSpec g = preset_spec(config.get_or("game.preset", "kuhn"));
  auto ints = [&](const std::string& key) {
    return parse_ints(config.get_list("game." + key), key);
  };
  if (config.has("game.name")) g.preset_name = *config.get("game.name");
  g.small_blind = config.get_int("game.small_blind", g.small_blind);
  g.big_blind = config.get_int("game.big_blind", g.big_blind);
  g.starting_stack = config.get_int("game.starting_stack", g.starting_stack);
  g.num_rounds = static_cast<int>(config.get_int("game.num_rounds", g.num_rounds));
  g.hole_cards = static_cast<int>(config.get_int("game.hole_cards", g.hole_cards));
  if (config.has("game.board_cards")) {
    auto v = ints("board_cards");
    g.board_cards.assign(v.begin(), v.end());
  }
  if (config.has("game.ranks")) {
    g.ranks.clear();
    for (const auto& t : config.get_list("game.ranks")) g.ranks.push_back(parse_rank(t.at(0)));
  }
  if (config.has("game.suits")) {
    g.suits.clear();
    for (const auto& t : config.get_list("game.suits")) {
      const auto pos = kSuitChars.find(t.at(0));
      if (pos == std::string_view::npos) throw std::invalid_argument("game.suits: bad suit " + t);
      g.suits.push_back(static_cast<int>(pos));
    }
  }
  if (config.has("game.betting")) {
    const auto b = *config.get("game.betting");
    if (b == "limit") g.betting = BettingStructure::kFixedLimit;
    else if (b == "nolimit") g.betting = BettingStructure::kNoLimit;
    else throw std::invalid_argument("game.betting must be limit or nolimit");
  }
  if (config.has("game.limit_raise")) {
    auto v = ints("limit_raise");
    g.limit_raise.assign(v.begin(), v.end());
  }
  if (config.has("game.max_raises")) {
    auto v = ints("max_raises");
    g.max_raises.assign(v.begin(), v.end());
  }
  if (config.has("game.first_to_act")) {
    auto v = ints("first_to_act");
    g.first_to_act.assign(v.begin(), v.end());
  }
  g.validate();
  return g;
}

}  // namespace pokerlab
