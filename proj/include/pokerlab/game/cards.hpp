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

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pokerlab {

// Card index 0..51, rank-major: index = rank * 4 + suit, with ranks
// 2..A mapped to 0..12 and suits c, d, h, s mapped to 0..3.
class Card {
 public:
  constexpr Card() = default;
  constexpr explicit Card(int index) : index_(static_cast<std::uint8_t>(index)) {}
  static constexpr Card from(int rank, int suit) { return Card(rank * 4 + suit); }

  constexpr int index() const { return index_; }
  constexpr int rank() const { return index_ / 4; }
  constexpr int suit() const { return index_ % 4; }

  friend constexpr bool operator==(Card, Card) = default;
  friend constexpr auto operator<=>(Card, Card) = default;

 private:
  std::uint8_t index_ = 0;
};

inline constexpr int kNumRanks = 13;
inline constexpr int kNumSuits = 4;
inline constexpr int kDeckSize = 52;
inline constexpr std::string_view kRankChars = "23456789TJQKA";
inline constexpr std::string_view kSuitChars = "cdhs";

// Parses "As", "Td", "2c". Throws std::invalid_argument on bad text.
Card parse_card(std::string_view text);
// Parses a concatenation such as "JsTs4sKcQh" (whitespace ignored).
std::vector<Card> parse_cards(std::string_view text);
int parse_rank(char c);

std::string to_string(Card card);
std::string to_string(std::span<const Card> cards);

// Set of cards as a 64-bit mask.
class CardSet {
 public:
  constexpr CardSet() = default;
  constexpr explicit CardSet(std::uint64_t mask) : mask_(mask) {}
  explicit CardSet(std::span<const Card> cards) {
    for (Card c : cards) insert(c);
  }

  constexpr void insert(Card c) { mask_ |= bit(c); }
  constexpr void erase(Card c) { mask_ &= ~bit(c); }
  constexpr bool contains(Card c) const { return (mask_ & bit(c)) != 0; }
  constexpr bool intersects(CardSet other) const { return (mask_ & other.mask_) != 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::uint64_t mask() const { return mask_; }

  constexpr CardSet operator|(CardSet o) const { return CardSet(mask_ | o.mask_); }
  friend constexpr bool operator==(CardSet, CardSet) = default;

  std::vector<Card> cards() const;

 private:
  static constexpr std::uint64_t bit(Card c) { return std::uint64_t{1} << c.index(); }
  std::uint64_t mask_ = 0;
};

}  // namespace pokerlab
