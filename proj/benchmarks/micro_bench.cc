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

#include <benchmark/benchmark.h>

#include "pqcwc/expansion.h"
#include "pqcwc/hash_suite.h"
#include "pqcwc/random.h"
#include "pqcwc/wots.h"

namespace pqcwc {
namespace {

HashAlg alg_arg(const benchmark::State& state) {
  return list_algorithms()[static_cast<std::size_t>(state.range(0))];
}

void label(benchmark::State& state) {
  state.SetLabel(std::string(algorithm_name(alg_arg(state))));
}

void BM_Chain(benchmark::State& state) {
  Hasher hasher(alg_arg(state));
  Bytes x(32, 0x5a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chain(hasher, x, 255));
  }
  label(state);
}

void BM_Keygen(benchmark::State& state) {
  ChainParams p(alg_arg(state), 8, 8);
  SeededRandom rng(1);
  Bytes seed = rng.bytes(32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_keypair(seed, p));
  }
  label(state);
}

void BM_ExpandModel1(benchmark::State& state) {
  ChainParams p(alg_arg(state), 8, 8);
  KeyPair kp = generate_keypair(Bytes(32, 1), p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand_public_model1(kp.public_key, p));
  }
  label(state);
}

void BM_ExpandModel2(benchmark::State& state) {
  ChainParams p(alg_arg(state), 8, 8);
  KeyPair kp = generate_keypair(Bytes(32, 1), p);
  Bytes r4(32, 7);
  for (auto _ : state) {
    ExpansionVector ev = derive_expansion_vector(r4, p.m(), p.w2());
    benchmark::DoNotOptimize(expand_public_model2(kp.public_key, ev));
  }
  label(state);
}

void BM_Sign(benchmark::State& state) {
  ChainParams p(alg_arg(state), 8, 8);
  KeyPair kp = generate_keypair(Bytes(32, 1), p);
  Bytes msg(64, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sign(kp.private_key, msg, p));
  }
  label(state);
}

void BM_Verify(benchmark::State& state) {
  ChainParams p(alg_arg(state), 8, 8);
  KeyPair kp = generate_keypair(Bytes(32, 1), p);
  Bytes msg(64, 3);
  Signature sig = sign(kp.private_key, msg, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify(kp.public_key, msg, sig, p));
  }
  label(state);
}

constexpr int kLastAlg = static_cast<int>(kNumHashAlgs) - 1;

BENCHMARK(BM_Chain)->DenseRange(0, kLastAlg);
BENCHMARK(BM_Keygen)->DenseRange(0, kLastAlg)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ExpandModel1)
    ->DenseRange(0, kLastAlg)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ExpandModel2)
    ->DenseRange(0, kLastAlg)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Sign)->DenseRange(0, kLastAlg)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Verify)->DenseRange(0, kLastAlg)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace pqcwc

BENCHMARK_MAIN();
