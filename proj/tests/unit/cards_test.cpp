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

#include <gtest/gtest.h>

#include "pokerlab/game/cards.hpp"
#include "pokerlab/game/hand_eval.hpp"

namespace pokerlab {
namespace {

Showdown sd(const char* board, const char* a, const char* b) {
  return evaluate_showdown(parse_cards(board), parse_cards(a), parse_cards(b));
}

TEST(CardsTest, ParseAndPrintRoundTrip) {
  for (int i = 0; i < kDeckSize; ++i) {
    const Card c(i);
    EXPECT_EQ(parse_card(to_string(c)), c);
  }
  EXPECT_EQ(to_string(parse_card("As")), "As");
  EXPECT_EQ(parse_card("Td").rank(), 8);
  EXPECT_THROW(parse_card("1s"), std::invalid_argument);
  EXPECT_THROW(parse_card("Ax"), std::invalid_argument);
}

TEST(CardsTest, CardSetBasics) {
  CardSet s(parse_cards("AsKd2c"));
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(parse_card("Kd")));
  s.erase(parse_card("Kd"));
  EXPECT_FALSE(s.contains(parse_card("Kd")));
  EXPECT_TRUE(s.intersects(CardSet(parse_cards("2c"))));
}

TEST(HandEvalTest, FlushBeatsHighCardOnExampleBoard) {
  EXPECT_EQ(sd("JsTs4sKcQh", "As3s", "3c2c"), Showdown::kWin);
  EXPECT_EQ(sd("JsTs4sKcQh", "3c2c", "As3s"), Showdown::kLose);
  // Ace-high flush beats king-high flush.
  EXPECT_EQ(sd("JsTs4sKcQh", "As3s", "Ks9s"), Showdown::kWin);
}

TEST(HandEvalTest, TiesAndPlayTheBoard) {
  EXPECT_EQ(sd("AsKsQsJsTs", "2c3d", "4h5h"), Showdown::kTie);
  EXPECT_EQ(sd("2c7d9hJsKs", "3c4d", "3d4c"), Showdown::kTie);
}

TEST(HandEvalTest, CategoryOrdering) {
  const auto v = [](const char* s) { return evaluate_hand(parse_cards(s)); };
  EXPECT_LT(v("AsKdQh9c7d"), v("2s2dQh9c7d"));          // pair
  EXPECT_LT(v("AsAdQh9c7d"), v("2s2d3h3c7d"));          // two pair
  EXPECT_LT(v("AsAdKhKc7d"), v("2s2d2h9c7d"));          // trips
  EXPECT_LT(v("AsAdAhKc7d"), v("As2d3h4c5d"));          // wheel straight
  EXPECT_LT(v("As2d3h4c5d"), v("2d3h4c5d6s"));          // six-high straight
  EXPECT_LT(v("TsJdQhKcAd"), v("2s4s6s8sTs"));          // flush
  EXPECT_LT(v("AsKsQsJs9s"), v("2s2d2h3c3d"));          // full house
  EXPECT_LT(v("AsAdAhKcKd"), v("2s2d2h2c3d"));          // quads
  EXPECT_LT(v("AsAdAhAcKd"), v("As2s3s4s5s"));          // straight flush
  EXPECT_EQ(category_of(v("AsKsQsJsTs")), HandCategory::kStraightFlush);
}

TEST(HandEvalTest, SevenCardsPickBestFive) {
  // Board pair plus a hole pair makes two pair; the kicker decides.
  EXPECT_EQ(sd("2c2d9h8s4c", "AsKd", "AdQs"), Showdown::kWin);
  // Seven-card straight beats a pair.
  EXPECT_EQ(sd("5c6d7h2s2d", "8c9d", "AhAd"), Showdown::kWin);
}

TEST(HandEvalTest, SmallGamesRankOrder) {
  EXPECT_EQ(sd("", "Ks", "Qs"), Showdown::kWin);
  EXPECT_EQ(sd("", "Js", "Qs"), Showdown::kLose);
  // Leduc: pairing the board wins regardless of rank.
  EXPECT_EQ(sd("Jh", "Js", "Kh"), Showdown::kWin);
  EXPECT_EQ(sd("Qh", "Ks", "Kh"), Showdown::kTie);
}

TEST(HandEvalTest, DuplicateCardRejected) {
  EXPECT_THROW(sd("JsTs4sKcQh", "As3s", "As2c"), std::invalid_argument);
  EXPECT_THROW(sd("JsTs4sKcQh", "Js3s", "Ad2c"), std::invalid_argument);
}

}  // namespace
}  // namespace pokerlab
