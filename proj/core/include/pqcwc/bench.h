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

#ifndef PQCWC_BENCH_H_
#define PQCWC_BENCH_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pqcwc/bytes.h"
#include "pqcwc/hash_suite.h"
#include "pqcwc/stats.h"

namespace pqcwc::bench {

// ---------------------------------------------------------------------------
// Signature-length tables
// ---------------------------------------------------------------------------

struct LengthRow {
  HashAlg alg;
  std::size_t hash_bits;
  unsigned w1;
  std::size_t m;
  std::size_t signature_bits;  // m x hash_bits
};

// One row per algorithm in table order. Throws Error(InvalidParams) unless
// w1 is 8 or 16.
std::vector<LengthRow> table_lengths(unsigned w1);

// CSV with header "hash_algorithm,hash_bits,w1,m,signature_bits".
std::string format_length_table(const std::vector<LengthRow>& rows);

// ---------------------------------------------------------------------------
// Timing harness
// ---------------------------------------------------------------------------

enum class BenchOp {
  kKeygen,
  kExpandM1,
  kExpandM2,
  kSignOrig,
  kSignM1,
  kSignM2,
  kVerifyOrig,
  kVerifyM1,
  kVerifyM2,
};

inline constexpr std::size_t kNumBenchOps = 9;

const std::vector<BenchOp>& all_bench_ops();
std::string_view bench_op_name(BenchOp op);
// Throws Error(InvalidParams) for an unknown name.
BenchOp parse_bench_op(std::string_view name);

struct BenchConfig {
  std::vector<HashAlg> algorithms;
  unsigned w1 = 8;
  unsigned w2 = 8;
  std::size_t iterations = 1000;
  std::uint64_t seed = 1;
  // Timed operations. Unselected operations still run untimed when a selected
// one consumes their output (sign and expand feed verify).
  std::vector<BenchOp> operations = all_bench_ops();
  std::size_t warmup = 10;
  // Report per chain element (duration / m) rather than per key.
  bool per_element = false;

  // 1000 for w1 = 8, 100 for w1 = 16.
  static std::size_t default_iterations(unsigned w1);
  // Throws Error(InvalidParams): w1 must be 8 or 16, at least two iterations
  // and one algorithm, w2 in [1, 16].
  void validate() const;
};

struct BenchSample {
  BenchOp op;
  HashAlg alg;
  std::size_t iteration;
  double duration_ms;
};

struct CellSummary {
  BenchOp op;
  HashAlg alg;
  stats::Summary summary;
};

// Cross-algorithm comparison of two operations: a pooled t-test over the
// per-algorithm mean times.
struct OpComparison {
  BenchOp a;
  BenchOp b;
  stats::TTestResult result;
};

struct BenchResult {
  BenchConfig config;
  std::vector<BenchSample> samples;
  std::vector<CellSummary> summaries;

  const CellSummary& cell(BenchOp op, HashAlg alg) const;
  // Mean time per algorithm, in config.algorithms order.
  std::vector<double> means(BenchOp op) const;
};

// Deterministic per-iteration inputs derived from config.seed; identical for
// every algorithm in a run.
struct BenchInputs {
  std::vector<Bytes> key_seeds;
  std::vector<Bytes> messages;
  std::vector<Bytes> expansion_seeds;  // never yield an all-zero vector
};

BenchInputs make_bench_inputs(const BenchConfig& config);

using ProgressFn = std::function<void(std::string_view)>;

// Runs every timed cell strictly sequentially: algorithms in config order,
// operations in BenchOp order within each algorithm.
BenchResult run_bench(const BenchConfig& config, const ProgressFn& progress = {});

// The pairs reported by the key-generation, signing and verification
// comparisons: keygen/m1, keygen/m2, m1/m2 and the same for sign and verify.
std::vector<std::pair<BenchOp, BenchOp>> default_comparisons();

// Needs at least two algorithms; pairs whose operations were not timed are
// skipped.
std::vector<OpComparison> compare_operations(
    const BenchResult& result,
    const std::vector<std::pair<BenchOp, BenchOp>>& pairs =
        default_comparisons());

// CSV writers. Numbers always use '.' as the decimal separator.
void write_samples_csv(std::ostream& out, const BenchResult& result);
void write_summary_csv(std::ostream& out, const BenchResult& result);
void write_comparisons_csv(std::ostream& out,
                           const std::vector<OpComparison>& comparisons);

std::string format_number(double value);

}  // namespace pqcwc::bench

#endif  // PQCWC_BENCH_H_
