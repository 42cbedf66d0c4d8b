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

#ifndef PQCWC_WOTS_H_
#define PQCWC_WOTS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pqcwc/bytes.h"
#include "pqcwc/hash_suite.h"

namespace pqcwc {

// Parameters shared by every chain computation: hash function f, message
// element width w1, expansion width w2. The signed value D is always 256 bits,
// so a key has m = 256 / w1 elements.
//
// Security note: the one-time signature built on these parameters carries no
// Winternitz checksum. Anyone holding a signature on D can forge one on any
// D' whose elements are all >= those of D. Each key must sign one message.
class ChainParams {
 public:
  static constexpr unsigned kMessageDigestBits = 256;
  static constexpr unsigned kPrivateElementBytes = 32;
  static constexpr unsigned kMaxWidth = 16;

  // Throws Error(InvalidParams) unless 1 <= w1, w2 <= 16 and w1 divides 256.
  ChainParams(HashAlg alg, unsigned w1, unsigned w2);

  HashAlg alg() const { return alg_; }
  unsigned w1() const { return w1_; }
  unsigned w2() const { return w2_; }
  std::size_t m() const { return kMessageDigestBits / w1_; }
  std::size_t element_bytes() const { return digest_bytes(alg_); }

  // 2^w1 - 1: chain length from a private element to its public element.
  std::uint32_t chain_length() const { return (1u << w1_) - 1; }
  // 2^w2 - 1: the fixed expansion step count (and the Model-2 upper bound).
  std::uint32_t max_expansion() const { return (1u << w2_) - 1; }

  std::size_t signature_bits() const { return m() * digest_bits(alg_); }

  bool operator==(const ChainParams&) const = default;

 private:
  HashAlg alg_;
  unsigned w1_;
  unsigned w2_;
};

enum class KeyRole : std::uint8_t { kPrivate = 0, kPublic = 1 };

// An ordered sequence of m chain values: a private key A (or an expansion A',
// A''), or a public key B (B', B'').
class KeySequence {
 public:
  // Throws Error(MalformedKey) if the element count is not params.m() or an
  // element has the wrong length. Public elements are digest-length; private
  // elements are 256-bit seeds or, once expanded, digest-length.
  KeySequence(KeyRole role, std::vector<Bytes> elements, ChainParams params);

  KeyRole role() const { return role_; }
  const ChainParams& params() const { return params_; }
  const std::vector<Bytes>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Bytes& operator[](std::size_t i) const { return elements_[i]; }

  // Advisory one-time-use marker, persisted by the key file format. Nothing in
  // the library refuses to sign with a used key.
  bool used() const { return used_; }
  void set_used(bool used) { used_ = used; }

  bool operator==(const KeySequence& other) const {
    return role_ == other.role_ && params_ == other.params_ &&
           elements_ == other.elements_;
  }

 private:
  KeyRole role_;
  std::vector<Bytes> elements_;
  ChainParams params_;
  bool used_ = false;
};

struct KeyPair {
  KeySequence private_key;
  KeySequence public_key;
};

struct Signature {
  std::vector<Bytes> elements;
  ChainParams params;

  std::size_t bit_length() const;
  bool operator==(const Signature&) const = default;
};

// The m digits d_i of the signed value D.
struct MessageElements {
  std::vector<std::uint32_t> values;
};

// a_i = SHA-256(seed || be32(i)), i in [0, m). Always SHA-256 and 256 bits,
// whatever params.alg() is. Throws Error(InvalidSeed) unless seed is 32 bytes.
KeySequence derive_private_key(ByteView seed, const ChainParams& params);

// b_i = f^(2^w1 - 1)(a_i).
KeyPair generate_keypair(ByteView seed, const ChainParams& params);

KeySequence derive_public_key(const KeySequence& private_key);

// D = SHA-256(message), cut into w1-bit digits, most significant bit first.
MessageElements digest_to_elements(ByteView message, const ChainParams& params);

// Same split applied to an already-computed 32-byte D. Throws
// Error(InvalidParams) for any other length.
MessageElements split_digest(ByteView digest, const ChainParams& params);

// s_i = f^(d_i)(a_i). A digit of zero reveals a_i itself.
Signature sign(const KeySequence& private_key, ByteView message,
               const ChainParams& params);
Signature sign_digest(const KeySequence& private_key, ByteView digest,
                      const ChainParams& params);

// True iff f^(2^w1 - 1 - d_i)(s_i) == b_i for every i. Throws
// Error(MalformedSignature) when the signature shape does not match params;
// a well-formed but wrong signature returns false.
bool verify(const KeySequence& public_key, ByteView message,
            const Signature& signature, const ChainParams& params);
bool verify_digest(const KeySequence& public_key, ByteView digest,
                   const Signature& signature, const ChainParams& params);

// SHA-256(b_1 || ... || b_m): a 256-bit fingerprint of a public key.
Bytes compress_public_key(const KeySequence& public_key);

// SHA-256 over the concatenated elements regardless of role. Transcripts use
// this to record every sequence an actor observes.
Bytes fingerprint(const KeySequence& sequence);

}  // namespace pqcwc

#endif  // PQCWC_WOTS_H_
