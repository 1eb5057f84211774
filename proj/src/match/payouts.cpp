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

#include "pokerlab/match/payouts.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pokerlab {

using boost::multiprecision::cpp_int;

PayoutResult compute_payouts(const std::array<Chips, 4>& x) {
  for (int i = 0; i < 3; ++i) {
    if (x[i] < x[i + 1]) throw std::invalid_argument("profits must be sorted from highest to lowest");
  }
  PayoutResult r;
  r.profits = x;
  if (x[0] == x[3]) {
    r.cents.fill(kPrizePoolCents / 4);
    return r;
  }
  const std::int64_t shared = kPrizePoolCents - 4 * kMinimumPayoutCents;
  const cpp_int den = cpp_int(x[0]) + x[1] + x[2] - 3 * cpp_int(x[3]);
  std::array<cpp_int, 3> rem;
  std::int64_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    const cpp_int num = cpp_int(shared) * (cpp_int(x[i]) - x[3]);
    const cpp_int q = num / den;
    rem[i] = num % den;
    r.cents[i] = kMinimumPayoutCents + q.convert_to<std::int64_t>();
    assigned += q.convert_to<std::int64_t>();
  }
  r.cents[3] = kMinimumPayoutCents;
  // Leftover cents go to the largest remainders. Places with equal profit
  // share a remainder and are served together; once a group no longer fits,
  // the rest go one each to the highest places not yet served.
  std::int64_t left = shared - assigned;
  std::array<bool, 3> served{};
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < 3; ++i) {
    if (i > 0 && x[i] == x[i - 1]) groups.back().push_back(i);
    else groups.push_back({i});
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [&](const auto& a, const auto& b) { return rem[a[0]] > rem[b[0]]; });
  for (const auto& g : groups) {
    if (left < static_cast<std::int64_t>(g.size()) || rem[g[0]] == 0) break;
    for (int i : g) {
      ++r.cents[i];
      served[i] = true;
    }
    left -= static_cast<std::int64_t>(g.size());
  }
  for (int i = 0; i < 3 && left > 0; ++i) {
    if (served[i]) continue;
    ++r.cents[i];
    --left;
  }
  return r;
}

std::string PayoutResult::describe() const {
  std::string out;
  char buf[64];
  for (int i = 0; i < 4; ++i) {
    std::snprintf(buf, sizeof buf, "%sp%d=%lld.%02lld", i ? " " : "", i + 1,
                  static_cast<long long>(cents[i] / 100), static_cast<long long>(cents[i] % 100));
    out += buf;
  }
  return out;
}

}  // namespace pokerlab
