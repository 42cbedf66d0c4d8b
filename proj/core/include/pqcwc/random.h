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

#ifndef PQCWC_RANDOM_H_
#define PQCWC_RANDOM_H_

#include <cstdint>
#include <span>

#include "pqcwc/bytes.h"

namespace pqcwc {

// Every random value the protocol consumes comes from one of these, so tests
// and benchmarks can run reproducibly.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  Bytes bytes(std::size_t n) {
    Bytes out(n);
    fill(out);
    return out;
  }
};

// OpenSSL's CSPRNG.
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

// Deterministic stream: block j = SHA-256("pqcwc-drbg" || seed || be64(j)).
// For tests and benchmark inputs, not for keys that matter.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed);
  explicit SeededRandom(ByteView seed);

  void fill(std::span<std::uint8_t> out) override;

 private:
  void refill();

  Bytes seed_;
  std::uint64_t counter_ = 0;
  std::uint8_t block_[32] = {};
  std::size_t used_ = sizeof(block_);
};

}  // namespace pqcwc

#endif  // PQCWC_RANDOM_H_
