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

#ifndef PQCWC_HASH_SUITE_H_
#define PQCWC_HASH_SUITE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>

#include "pqcwc/bytes.h"

namespace pqcwc {

// The twelve benchmark hash functions, in benchmark-table order. The numeric
// value is the on-wire algorithm index used by every file format.
enum class HashAlg : std::uint8_t {
  kSha1 = 0,
  kSha224 = 1,
  kSha256 = 2,
  kSha384 = 3,
  kSha512 = 4,
  kSha3_224 = 5,
  kSha3_256 = 6,
  kSha3_384 = 7,
  kSha3_512 = 8,
  kBlake2_256 = 9,
  kBlake2_384 = 10,
  kBlake2_512 = 11,
};

inline constexpr std::size_t kNumHashAlgs = 12;

const std::array<HashAlg, kNumHashAlgs>& list_algorithms();

std::size_t digest_bits(HashAlg alg);
inline std::size_t digest_bytes(HashAlg alg) { return digest_bits(alg) / 8; }

// Canonical display name, e.g. "SHA3-256" or "BLAKE2-512".
std::string_view algorithm_name(HashAlg alg);

// Case-insensitive lookup of the canonical names. Throws
// Error(UnsupportedAlgorithm) for anything else.
HashAlg parse_algorithm(std::string_view name);

// Throws Error(UnsupportedAlgorithm) for an index outside [0, 12).
HashAlg algorithm_from_index(std::uint8_t index);

inline std::uint8_t algorithm_index(HashAlg alg) {
  return static_cast<std::uint8_t>(alg);
}

// A reusable one-shot hashing context. Not thread-safe; create one per thread.
// BLAKE2 rows are BLAKE2b truncated to 256/384/512 bits via the BLAKE2b
// output-length parameter (not by truncating a 512-bit digest).
class Hasher {
 public:
  explicit Hasher(HashAlg alg);
  ~Hasher();
  Hasher(Hasher&&) noexcept;
  Hasher& operator=(Hasher&&) noexcept;
  Hasher(const Hasher&) = delete;
  Hasher& operator=(const Hasher&) = delete;

  HashAlg alg() const { return alg_; }
  std::size_t size() const { return size_; }

  // Writes exactly size() bytes to `out`.
  void digest(ByteView input, std::uint8_t* out);
  Bytes digest(ByteView input);

 private:
  struct Impl;
  HashAlg alg_;
  std::size_t size_;
  std::unique_ptr<Impl> impl_;
};

Bytes hash(HashAlg alg, ByteView input);

// f^k(x): `hash_fn` applied k times; k == 0 returns x unchanged. The first
// application consumes x as given, every later one the previous full digest.
// `hash_fn` is any callable Bytes(ByteView).
template <typename HashFn>
Bytes iterate_hash(HashFn&& hash_fn, ByteView x, std::uint64_t k) {
  Bytes value(x.begin(), x.end());
  for (std::uint64_t i = 0; i < k; ++i) {
    value = hash_fn(ByteView(value));
  }
  return value;
}

// Equivalent to iterate_hash with hash(alg, .), but reuses one context and
// buffer across iterations.
Bytes chain(HashAlg alg, ByteView x, std::uint64_t k);
Bytes chain(Hasher& hasher, ByteView x, std::uint64_t k);

}  // namespace pqcwc

#endif  // PQCWC_HASH_SUITE_H_
