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

#include "pokerlab/game/cards.hpp"

#include <cctype>
#include <stdexcept>

namespace pokerlab {

int parse_rank(char c) {
  const auto pos = kRankChars.find(static_cast<char>(std::toupper(c)));
  if (pos == std::string_view::npos) {
    throw std::invalid_argument(std::string("bad rank '") + c + "'");
  }
  return static_cast<int>(pos);
}

Card parse_card(std::string_view text) {
  if (text.size() != 2) {
    throw std::invalid_argument("bad card '" + std::string(text) + "'");
  }
  const int rank = parse_rank(text[0]);
  const auto suit = kSuitChars.find(static_cast<char>(std::tolower(text[1])));
  if (suit == std::string_view::npos) {
    throw std::invalid_argument("bad suit in '" + std::string(text) + "'");
  }
  return Card::from(rank, static_cast<int>(suit));
}

std::vector<Card> parse_cards(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.size() % 2 != 0) {
    throw std::invalid_argument("odd card string '" + std::string(text) + "'");
  }
  std::vector<Card> cards;
  for (std::size_t i = 0; i < compact.size(); i += 2) {
    cards.push_back(parse_card(std::string_view(compact).substr(i, 2)));
  }
  return cards;
}

std::string to_string(Card card) {
  return {kRankChars[card.rank()], kSuitChars[card.suit()]};
}

std::string to_string(std::span<const Card> cards) {
  std::string out;
  for (Card c : cards) out += to_string(c);
  return out;
}

std::vector<Card> CardSet::cards() const {
  std::vector<Card> out;
  std::uint64_t m = mask_;
  while (m != 0) {
    out.emplace_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

}  // namespace pokerlab
