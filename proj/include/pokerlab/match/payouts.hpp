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
#include <cstdint>
#include <string>

#include "pokerlab/game/game_spec.hpp"

namespace pokerlab {

inline constexpr std::int64_t kPrizePoolCents = 100'000'00;
inline constexpr std::int64_t kMinimumPayoutCents = 10'000'00;

struct PayoutResult {
  std::array<Chips, 4> profits{};      // x1 >= x2 >= x3 >= x4
  std::array<std::int64_t, 4> cents{};  // p1..p4

  double dollars(int i) const { return static_cast<double>(cents[static_cast<std::size_t>(i)]) / 100.0; }
  std::string describe() const;
};

// The lowest profit receives the minimum; the rest of the pool is shared in
// proportion to profit above the lowest. Equal profits split the pool
// evenly. Shares are computed exactly and rounded to cents by largest
// remainder (which equals half-up rounding whenever that sums to the pool).
// Throws std::invalid_argument unless x1 >= x2 >= x3 >= x4.
PayoutResult compute_payouts(const std::array<Chips, 4>& profits);

}  // namespace pokerlab
