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

#ifndef PQCWC_ENVELOPE_H_
#define PQCWC_ENVELOPE_H_

#include <array>
#include <cstdint>

#include "pqcwc/bytes.h"
#include "pqcwc/random.h"

namespace pqcwc {

// An AES key (q3, q_RA, q_CA). 16 bytes selects AES-128, 32 bytes AES-256.
class SymmetricKey {
 public:
  // Throws Error(InvalidParams) unless the length is 16 or 32.
  explicit SymmetricKey(Bytes bytes);
  static SymmetricKey generate(RandomSource& rng, std::size_t length = 32);

  ByteView bytes() const { return bytes_; }
  std::size_t size() const { return bytes_.size(); }

  bool operator==(const SymmetricKey&) const = default;

 private:
  Bytes bytes_;
};

// AES-GCM ciphertext with its 96-bit nonce; the 16-byte tag is appended to
// the ciphertext.
struct SealedBox {
  static constexpr std::size_t kNonceBytes = 12;
  static constexpr std::size_t kTagBytes = 16;

  std::array<std::uint8_t, kNonceBytes> nonce{};
  Bytes ciphertext;

  // nonce || ciphertext || tag
  Bytes serialize() const;
  // Throws Error(TamperDetected) if shorter than nonce + tag.
  static SealedBox deserialize(ByteView data);

  bool operator==(const SealedBox&) const = default;
};

// Encrypts under a fresh random nonce drawn from `rng`.
SealedBox seal(const SymmetricKey& key, ByteView plaintext, RandomSource& rng,
               ByteView aad = {});

// Throws Error(TamperDetected) if authentication fails.
Bytes open(const SymmetricKey& key, const SealedBox& box, ByteView aad = {});

// The epoch index l shared by end entity and registration authority.
struct TimePeriod {
  std::uint64_t value = 0;

  bool operator==(const TimePeriod&) const = default;
};

// r_RA = AES_{q_RA}(be128(l)): one raw block encryption. AES-128 or AES-256
// according to the key length.
Bytes derive_ra_seed(const SymmetricKey& q_ra, TimePeriod period);

}  // namespace pqcwc

#endif  // PQCWC_ENVELOPE_H_
