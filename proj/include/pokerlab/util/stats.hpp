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

#include <cmath>
#include <cstddef>
#include <span>

namespace pokerlab {

struct Interval {
  double low = 0.0;
  double high = 0.0;
  bool contains(double v) const { return low <= v && v <= high; }
};

struct SampleSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance
  double fourth_central = 0.0;

  double std_error() const {
    return n > 1 ? std::sqrt(variance / static_cast<double>(n)) : 0.0;
  }
  Interval mean_ci(double z = 1.959963984540054) const {
    return {mean - z * std_error(), mean + z * std_error()};
  }
  // Normal approximation of the sampling distribution of the variance,
  // using the fourth central moment (no normality assumption).
  double variance_std_error() const {
    if (n < 2) return 0.0;
    const double s4 = variance * variance;
    const double v = (fourth_central - s4 * (static_cast<double>(n) - 3.0) /
                                           (static_cast<double>(n) - 1.0)) /
                     static_cast<double>(n);
    return v > 0.0 ? std::sqrt(v) : 0.0;
  }
  Interval variance_ci(double z = 1.959963984540054) const {
    const double se = variance_std_error();
    return {variance - z * se, variance + z * se};
  }
};

inline SampleSummary summarize(std::span<const double> xs) {
  SampleSummary s;
  s.n = xs.size();
  if (s.n == 0) return s;
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(s.n);
  double m2 = 0.0, m4 = 0.0;
  for (double x : xs) {
    const double d = x - s.mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  s.variance = s.n > 1 ? m2 / static_cast<double>(s.n - 1) : 0.0;
  s.fourth_central = m4 / static_cast<double>(s.n);
  return s;
}

}  // namespace pokerlab
