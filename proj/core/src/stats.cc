// Copyright 2026 The PQCWC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pqcwc/stats.h"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "pqcwc/error.h"

namespace pqcwc::stats {

namespace {

double mean_of(std::span<const double> xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) /
         static_cast<double>(xs.size());
}

double sum_sq_dev(std::span<const double> xs, double mean) {
  double acc = 0;
  for (double x : xs) acc += (x - mean) * (x - mean);
  return acc;
}

}  // namespace

Summary summarize(std::span<const double> xs) {
  if (xs.empty()) throw Error(ErrorCode::kInvalidParams, "empty sample");
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  Summary s;
  s.count = xs.size();
  s.mean = mean_of(xs);
  const std::size_t mid = sorted.size() / 2;
  s.median = sorted.size() % 2 == 1 ? sorted[mid]
                                    : (sorted[mid - 1] + sorted[mid]) / 2;
  s.min = sorted.front();
  s.max = sorted.back();
  s.stddev = xs.size() > 1
                 ? std::sqrt(sum_sq_dev(xs, s.mean) /
                             static_cast<double>(xs.size() - 1))
                 : 0.0;
  return s;
}

double critical_t(int df) {
  if (df < 1) throw Error(ErrorCode::kInvalidParams, "df must be positive");
  boost::math::students_t dist(df);
  return boost::math::quantile(boost::math::complement(dist, 0.025));
}

TTestResult ttest_two_sample(std::span<const double> xs,
                             std::span<const double> ys) {
  if (xs.size() < 2 || ys.size() < 2) {
    throw Error(ErrorCode::kInvalidParams,
                "t-test needs at least two values per sample");
  }
  const double nx = static_cast<double>(xs.size());
  const double ny = static_cast<double>(ys.size());
  const double mx = mean_of(xs);
  const double my = mean_of(ys);
  TTestResult r;
  r.df = static_cast<int>(xs.size() + ys.size() - 2);
  r.threshold = critical_t(r.df);
  const double pooled =
      (sum_sq_dev(xs, mx) + sum_sq_dev(ys, my)) / static_cast<double>(r.df);
  const double se = std::sqrt(pooled * (1 / nx + 1 / ny));
  if (se == 0) {
    r.t_value = mx == my ? 0.0
                : mx > my ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
  } else {
    r.t_value = (mx - my) / se;
  }
  r.significant = std::fabs(r.t_value) > r.threshold;
  return r;
}

}  // namespace pqcwc::stats
