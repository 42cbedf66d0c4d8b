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

#ifndef PQCWC_EXPANSION_H_
#define PQCWC_EXPANSION_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pqcwc/bytes.h"
#include "pqcwc/wots.h"

namespace pqcwc {

// Per-element step counts e_i in [0, 2^w2 - 1] for a Model-2 expansion.
class ExpansionVector {
 public:
  // Validates 1 <= w2 <= 16 and the range of every value (InvalidParams). An
  // all-zero vector is representable; the expansion functions refuse it.
  ExpansionVector(std::vector<std::uint32_t> values, unsigned w2,
                  std::optional<std::array<std::uint8_t, 16>> seed_id = {});

  const std::vector<std::uint32_t>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  std::uint32_t operator[](std::size_t i) const { return values_[i]; }
  unsigned w2() const { return w2_; }
  const std::optional<std::array<std::uint8_t, 16>>& seed_id() const {
    return seed_id_;
  }
  bool is_zero() const;

  // Wire form: "PQCWCEV", u8 w2, u16 m, then m big-endian u16 values.
  Bytes serialize() const;
  // Throws Error(MalformedMessage) on bad magic, truncation or trailing bytes.
  static ExpansionVector deserialize(ByteView data);

  bool operator==(const ExpansionVector& other) const {
    return w2_ == other.w2_ && values_ == other.values_;
  }

 private:
  std::vector<std::uint32_t> values_;
  unsigned w2_;
  std::optional<std::array<std::uint8_t, 16>> seed_id_;
};

// Shared-seed PRNG: e_i = be32(SHA-256(seed || be32(i))[0..4]) mod 2^w2.
// seed_id records the first 16 bytes of SHA-256(seed).
// Throws InvalidParams for an empty seed, m == 0 or w2 outside [1, 16], and
// DegenerateSeed if every e_i comes out zero.
ExpansionVector derive_expansion_vector(ByteView seed, std::size_t m,
                                        unsigned w2);

// Model 1: b'_i = f^(2^w2 - 1)(b_i).
KeySequence expand_public_model1(const KeySequence& public_key,
                                 const ChainParams& params);
// Model 1: a'_i = f^(2^w2 - 1)(a_i).
KeySequence expand_private_model1(const KeySequence& private_key,
                                  const ChainParams& params);

// Model 2: b''_i = f^(e_i)(b_i). The vector must have m entries and the key's
// w2 (ParamsMismatch) and must not be all zero (DegenerateSeed).
KeySequence expand_public_model2(const KeySequence& public_key,
                                 const ExpansionVector& ev);
// Model 2: a''_i = f^(e_i)(a_i).
KeySequence expand_private_model2(const KeySequence& private_key,
                                  const ExpansionVector& ev);

// Two successive Model-2 stages (registration authority, then certificate
// authority) applied to either role. Computed as one pass with the per-element
// sum e_RA,i + e_CA,i, which is the same chain position. One stage may be
// zero; both zero is DegenerateSeed.
KeySequence compose_butterfly(const KeySequence& base,
                              const ExpansionVector& ev_ra,
                              const ExpansionVector& ev_ca);

}  // namespace pqcwc

#endif  // PQCWC_EXPANSION_H_
