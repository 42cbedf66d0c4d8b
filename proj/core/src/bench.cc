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

#include "pqcwc/bench.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <initializer_list>
#include <ostream>
#include <sstream>

#include "pqcwc/error.h"
#include "pqcwc/expansion.h"
#include "pqcwc/random.h"
#include "pqcwc/wots.h"

namespace pqcwc::bench {

namespace {

constexpr std::string_view kOpNames[kNumBenchOps] = {
    "keygen",    "expand_m1", "expand_m2",   "sign_orig", "sign_m1",
    "sign_m2",   "verify_orig", "verify_m1", "verify_m2",
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start, Clock::time_point end) {
  return std::chrono::duration<double, std::milli>(end - start).count();
}

bool selected(const BenchConfig& config, BenchOp op) {
  return std::find(config.operations.begin(), config.operations.end(), op) !=
         config.operations.end();
}

bool any_selected(const BenchConfig& config,
                  std::initializer_list<BenchOp> ops) {
  for (BenchOp op : ops) {
    if (selected(config, op)) return true;
  }
  return false;
}

// Times fn(i) for every iteration when `op` is selected, after the untimed
// warm-up. Otherwise, if a later cell needs its outputs, runs it untimed once
// per iteration.
template <typename Fn>
void run_cell(const BenchConfig& config, BenchOp op, bool needed, HashAlg alg,
              std::size_t m, BenchResult& result, const ProgressFn& progress,
              Fn&& fn) {
  const std::size_t n = config.iterations;
  if (!selected(config, op)) {
    if (needed) {
      for (std::size_t i = 0; i < n; ++i) fn(i, false);
    }
    return;
  }
  if (progress) {
    progress(std::string(bench_op_name(op)) + " " +
             std::string(algorithm_name(alg)));
  }
  for (std::size_t j = 0; j < config.warmup; ++j) fn(j % n, true);
  const double scale = config.per_element ? 1.0 / static_cast<double>(m) : 1.0;
  std::vector<double> durations;
  durations.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto start = Clock::now();
    fn(i, false);
    auto end = Clock::now();
    double ms = elapsed_ms(start, end) * scale;
    durations.push_back(ms);
    result.samples.push_back(BenchSample{op, alg, i, ms});
  }
  result.summaries.push_back(CellSummary{op, alg, stats::summarize(durations)});
}

}  // namespace

std::vector<LengthRow> table_lengths(unsigned w1) {
  if (w1 != 8 && w1 != 16) {
    throw Error(ErrorCode::kInvalidParams,
                "length tables exist for w1 = 8 and 16, got " +
                    std::to_string(w1));
  }
  std::vector<LengthRow> rows;
  for (HashAlg alg : list_algorithms()) {
    ChainParams params(alg, w1, 1);
    rows.push_back(LengthRow{alg, digest_bits(alg), w1, params.m(),
                             params.signature_bits()});
  }
  return rows;
}

std::string format_length_table(const std::vector<LengthRow>& rows) {
  std::ostringstream out;
  out << "hash_algorithm,hash_bits,w1,m,signature_bits\n";
  for (const LengthRow& r : rows) {
    out << algorithm_name(r.alg) << ',' << r.hash_bits << ',' << r.w1 << ','
        << r.m << ',' << r.signature_bits << '\n';
  }
  return out.str();
}

const std::vector<BenchOp>& all_bench_ops() {
  static const std::vector<BenchOp> ops = {
      BenchOp::kKeygen,   BenchOp::kExpandM1,   BenchOp::kExpandM2,
      BenchOp::kSignOrig, BenchOp::kSignM1,     BenchOp::kSignM2,
      BenchOp::kVerifyOrig, BenchOp::kVerifyM1, BenchOp::kVerifyM2,
  };
  return ops;
}

std::string_view bench_op_name(BenchOp op) {
  return kOpNames[static_cast<std::size_t>(op)];
}

BenchOp parse_bench_op(std::string_view name) {
  for (std::size_t i = 0; i < kNumBenchOps; ++i) {
    if (kOpNames[i] == name) return static_cast<BenchOp>(i);
  }
  throw Error(ErrorCode::kInvalidParams,
              "unknown operation " + std::string(name));
}

std::size_t BenchConfig::default_iterations(unsigned w1) {
  return w1 == 16 ? 100 : 1000;
}

void BenchConfig::validate() const {
  if (w1 != 8 && w1 != 16) {
    throw Error(ErrorCode::kInvalidParams, "bench w1 must be 8 or 16");
  }
  ChainParams(HashAlg::kSha256, w1, w2);
  if (iterations < 2) {
    throw Error(ErrorCode::kInvalidParams, "need at least two iterations");
  }
  if (algorithms.empty()) {
    throw Error(ErrorCode::kInvalidParams, "no algorithms selected");
  }
}

const CellSummary& BenchResult::cell(BenchOp op, HashAlg alg) const {
  for (const CellSummary& c : summaries) {
    if (c.op == op && c.alg == alg) return c;
  }
  throw Error(ErrorCode::kInvalidParams,
              std::string(bench_op_name(op)) + " was not timed for " +
                  std::string(algorithm_name(alg)));
}

std::vector<double> BenchResult::means(BenchOp op) const {
  std::vector<double> out;
  for (HashAlg alg : config.algorithms) out.push_back(cell(op, alg).summary.mean);
  return out;
}

BenchInputs make_bench_inputs(const BenchConfig& config) {
  const std::size_t m = ChainParams::kMessageDigestBits / config.w1;
  SeededRandom rng(config.seed);
  BenchInputs in;
  for (std::size_t i = 0; i < config.iterations; ++i) {
    in.key_seeds.push_back(rng.bytes(32));
    in.messages.push_back(rng.bytes(32));
    for (;;) {
      Bytes seed = rng.bytes(32);
      try {
        derive_expansion_vector(seed, m, config.w2);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kDegenerateSeed) continue;
        throw;
      }
      in.expansion_seeds.push_back(std::move(seed));
      break;
    }
  }
  return in;
}

BenchResult run_bench(const BenchConfig& config, const ProgressFn& progress) {
  config.validate();
  const BenchInputs in = make_bench_inputs(config);
  const std::size_t n = config.iterations;
  BenchResult result;
  result.config = config;

  for (HashAlg alg : config.algorithms) {
    const ChainParams params(alg, config.w1, config.w2);
    const std::size_t m = params.m();
    std::vector<KeyPair> keys;
    std::vector<KeySequence> pub_m1, pub_m2, priv_m1, priv_m2;
    std::vector<Signature> sig_orig, sig_m1, sig_m2;
    keys.reserve(n);

    // Results of warm-up calls are discarded; only the timed (or untimed
    // preparation) pass appends.
    auto keep = [](auto& vec, bool warmup, auto&& value) {
      if (!warmup) vec.push_back(std::forward<decltype(value)>(value));
    };

    const bool need_m1 =
        any_selected(config, {BenchOp::kSignM1, BenchOp::kVerifyM1});
    const bool need_m2 =
        any_selected(config, {BenchOp::kSignM2, BenchOp::kVerifyM2});

    run_cell(config, BenchOp::kKeygen, true, alg, m, result, progress,
             [&](std::size_t i, bool w) {
               keep(keys, w, generate_keypair(in.key_seeds[i], params));
             });
    run_cell(config, BenchOp::kExpandM1,
             selected(config, BenchOp::kVerifyM1), alg, m, result, progress,
             [&](std::size_t i, bool w) {
               keep(pub_m1, w,
                    expand_public_model1(keys[i].public_key, params));
             });
    run_cell(config, BenchOp::kExpandM2,
             selected(config, BenchOp::kVerifyM2), alg, m, result, progress,
             [&](std::size_t i, bool w) {
               ExpansionVector ev =
                   derive_expansion_vector(in.expansion_seeds[i], m, config.w2);
               keep(pub_m2, w, expand_public_model2(keys[i].public_key, ev));
             });

    // Expanded private keys are preparation, never timed.
    for (std::size_t i = 0; i < n; ++i) {
      if (need_m1) {
        priv_m1.push_back(expand_private_model1(keys[i].private_key, params));
      }
      if (need_m2) {
        ExpansionVector ev =
            derive_expansion_vector(in.expansion_seeds[i], m, config.w2);
        priv_m2.push_back(expand_private_model2(keys[i].private_key, ev));
      }
    }

    run_cell(config, BenchOp::kSignOrig,
             selected(config, BenchOp::kVerifyOrig), alg, m, result, progress,
             [&](std::size_t i, bool w) {
               keep(sig_orig, w,
                    sign(keys[i].private_key, in.messages[i], params));
             });
    run_cell(config, BenchOp::kSignM1,
             selected(config, BenchOp::kVerifyM1), alg, m, result, progress,
             [&](std::size_t i, bool w) {
               keep(sig_m1, w, sign(priv_m1[i], in.messages[i], params));
             });
    run_cell(config, BenchOp::kSignM2,
             selected(config, BenchOp::kVerifyM2), alg, m, result, progress,
             [&](std::size_t i, bool w) {
               keep(sig_m2, w, sign(priv_m2[i], in.messages[i], params));
             });

    auto verify_cell = [&](BenchOp op, const std::vector<KeySequence>* pubs,
                           const std::vector<Signature>& sigs) {
      run_cell(config, op, false, alg, m, result, progress,
               [&](std::size_t i, bool) {
                 const KeySequence& pk =
                     pubs != nullptr ? (*pubs)[i] : keys[i].public_key;
                 if (!verify(pk, in.messages[i], sigs[i], params)) {
                   throw Error(ErrorCode::kProtocolError,
                               "benchmark signature failed to verify");
                 }
               });
    };
    verify_cell(BenchOp::kVerifyOrig, nullptr, sig_orig);
    verify_cell(BenchOp::kVerifyM1, &pub_m1, sig_m1);
    verify_cell(BenchOp::kVerifyM2, &pub_m2, sig_m2);
  }
  return result;
}

std::vector<std::pair<BenchOp, BenchOp>> default_comparisons() {
  return {
      {BenchOp::kKeygen, BenchOp::kExpandM1},
      {BenchOp::kKeygen, BenchOp::kExpandM2},
      {BenchOp::kExpandM1, BenchOp::kExpandM2},
      {BenchOp::kSignOrig, BenchOp::kSignM1},
      {BenchOp::kSignOrig, BenchOp::kSignM2},
      {BenchOp::kSignM1, BenchOp::kSignM2},
      {BenchOp::kVerifyOrig, BenchOp::kVerifyM1},
      {BenchOp::kVerifyOrig, BenchOp::kVerifyM2},
      {BenchOp::kVerifyM1, BenchOp::kVerifyM2},
  };
}

std::vector<OpComparison> compare_operations(
    const BenchResult& result,
    const std::vector<std::pair<BenchOp, BenchOp>>& pairs) {
  if (result.config.algorithms.size() < 2) {
    throw Error(ErrorCode::kInvalidParams,
                "cross-algorithm comparison needs two or more algorithms");
  }
  std::vector<OpComparison> out;
  for (auto [a, b] : pairs) {
    if (!selected(result.config, a) || !selected(result.config, b)) continue;
    std::vector<double> xs = result.means(a);
    std::vector<double> ys = result.means(b);
    out.push_back(OpComparison{a, b, stats::ttest_two_sample(xs, ys)});
  }
  return out;
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 10);
  return std::string(buf, ptr);
}

void write_samples_csv(std::ostream& out, const BenchResult& result) {
  out << "operation,algorithm,iteration,duration_ms\n";
  for (const BenchSample& s : result.samples) {
    out << bench_op_name(s.op) << ',' << algorithm_name(s.alg) << ','
        << s.iteration << ',' << format_number(s.duration_ms) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const BenchResult& result) {
  out << "operation,algorithm,count,mean_ms,median_ms,min_ms,max_ms,"
         "stddev_ms\n";
  for (const CellSummary& c : result.summaries) {
    const stats::Summary& s = c.summary;
    out << bench_op_name(c.op) << ',' << algorithm_name(c.alg) << ','
        << s.count << ',' << format_number(s.mean) << ','
        << format_number(s.median) << ',' << format_number(s.min) << ','
        << format_number(s.max) << ',' << format_number(s.stddev) << '\n';
  }
}

void write_comparisons_csv(std::ostream& out,
                           const std::vector<OpComparison>& comparisons) {
  out << "operation_a,operation_b,t_value,df,threshold,significant\n";
  for (const OpComparison& c : comparisons) {
    out << bench_op_name(c.a) << ',' << bench_op_name(c.b) << ','
        << format_number(c.result.t_value) << ',' << c.result.df << ','
        << format_number(c.result.threshold) << ','
        << (c.result.significant ? "yes" : "no") << '\n';
  }
}

}  // namespace pqcwc::bench
