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

#include "pqcwc/random.h"

#include <openssl/rand.h>

#include <algorithm>
#include <string_view>

#include "pqcwc/error.h"
#include "pqcwc/hash_suite.h"

namespace pqcwc {

void SystemRandom::fill(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw Error(ErrorCode::kIoError, "RAND_bytes failed");
  }
}

SeededRandom::SeededRandom(std::uint64_t seed) {
  put_u64_be(seed_, seed);
}

SeededRandom::SeededRandom(ByteView seed) : seed_(seed.begin(), seed.end()) {}

void SeededRandom::refill() {
  constexpr std::string_view kLabel = "pqcwc-drbg";
  Bytes input(kLabel.begin(), kLabel.end());
  append(input, seed_);
  put_u64_be(input, counter_++);
  Bytes block = hash(HashAlg::kSha256, input);
  std::copy(block.begin(), block.end(), block_);
  used_ = 0;
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
  std::size_t pos = 0;
  while (pos < out.size()) {
    if (used_ == sizeof(block_)) refill();
    std::size_t n = std::min(out.size() - pos, sizeof(block_) - used_);
    std::copy_n(block_ + used_, n, out.begin() + pos);
    used_ += n;
    pos += n;
  }
}

}  // namespace pqcwc
