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

#ifndef PQCWC_STATS_H_
#define PQCWC_STATS_H_

#include <cstddef>
#include <span>

namespace pqcwc::stats {

struct Summary {
  std::size_t count = 0;
  double mean = 0;
  double median = 0;
  double min = 0;
  double max = 0;
  double stddev = 0;  // sample (n - 1) standard deviation
};

// Throws Error(InvalidParams) for an empty sample.
Summary summarize(std::span<const double> xs);

struct TTestResult {
  double t_value = 0;
  int df = 0;
  double threshold = 0;
  bool significant = false;  // |t_value| > threshold
};

// Two-sided 5% critical value of Student's t with `df` degrees of freedom
// (2.0739 at df = 22).
double critical_t(int df);

// Pooled-variance two-sample t statistic, df = |xs| + |ys| - 2, tested
// against critical_t(df). Zero pooled variance gives +/-infinity when the
// means differ and 0 when they agree. Throws Error(InvalidParams) unless both
// samples have at least two values.
TTestResult ttest_two_sample(std::span<const double> xs,
                             std::span<const double> ys);

}  // namespace pqcwc::stats

#endif  // PQCWC_STATS_H_
