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

#include "pqcwc/wots.h"

#include <string>
#include <utility>

#include "pqcwc/error.h"

namespace pqcwc {

namespace {

void require_role(const KeySequence& key, KeyRole role) {
  if (key.role() != role) {
    throw Error(ErrorCode::kWrongKeyRole,
                role == KeyRole::kPrivate ? "expected a private key"
                                          : "expected a public key");
  }
}

void require_params(const KeySequence& key, const ChainParams& params) {
  if (!(key.params() == params)) {
    throw Error(ErrorCode::kParamsMismatch, "key parameters differ");
  }
}

Bytes sha256_concat(const std::vector<Bytes>& elements) {
  Bytes joined;
  for (const Bytes& e : elements) append(joined, e);
  return hash(HashAlg::kSha256, joined);
}

}  // namespace

ChainParams::ChainParams(HashAlg alg, unsigned w1, unsigned w2)
    : alg_(alg), w1_(w1), w2_(w2) {
  digest_bits(alg);  // rejects out-of-range ids
  if (w1 < 1 || w1 > kMaxWidth) {
    throw Error(ErrorCode::kInvalidParams,
                "w1 must be in [1, 16], got " + std::to_string(w1));
  }
  if (kMessageDigestBits % w1 != 0) {
    throw Error(ErrorCode::kInvalidParams,
                "w1 must divide 256, got " + std::to_string(w1));
  }
  if (w2 < 1 || w2 > kMaxWidth) {
    throw Error(ErrorCode::kInvalidParams,
                "w2 must be in [1, 16], got " + std::to_string(w2));
  }
}

KeySequence::KeySequence(KeyRole role, std::vector<Bytes> elements,
                         ChainParams params)
    : role_(role), elements_(std::move(elements)), params_(params) {
  if (elements_.size() != params_.m()) {
    throw Error(ErrorCode::kMalformedKey,
                "expected " + std::to_string(params_.m()) + " elements, got " +
                    std::to_string(elements_.size()));
  }
  const std::size_t digest_len = params_.element_bytes();
  for (const Bytes& e : elements_) {
    bool ok = e.size() == digest_len ||
              (role_ == KeyRole::kPrivate &&
               e.size() == ChainParams::kPrivateElementBytes);
    if (!ok) {
      throw Error(ErrorCode::kMalformedKey,
                  "element of " + std::to_string(e.size()) + " bytes");
    }
  }
}

std::size_t Signature::bit_length() const {
  std::size_t bits = 0;
  for (const Bytes& e : elements) bits += e.size() * 8;
  return bits;
}

KeySequence derive_private_key(ByteView seed, const ChainParams& params) {
  if (seed.size() != 32) {
    throw Error(ErrorCode::kInvalidSeed,
                "seed must be 32 bytes, got " + std::to_string(seed.size()));
  }
  Hasher sha256(HashAlg::kSha256);
  Bytes input(seed.begin(), seed.end());
  input.resize(seed.size() + 4);
  std::vector<Bytes> elements;
  elements.reserve(params.m());
  for (std::size_t i = 0; i < params.m(); ++i) {
    auto index = static_cast<std::uint32_t>(i);
    input[32] = static_cast<std::uint8_t>(index >> 24);
    input[33] = static_cast<std::uint8_t>(index >> 16);
    input[34] = static_cast<std::uint8_t>(index >> 8);
    input[35] = static_cast<std::uint8_t>(index);
    elements.push_back(sha256.digest(input));
  }
  return KeySequence(KeyRole::kPrivate, std::move(elements), params);
}

KeySequence derive_public_key(const KeySequence& private_key) {
  require_role(private_key, KeyRole::kPrivate);
  const ChainParams& params = private_key.params();
  Hasher hasher(params.alg());
  std::vector<Bytes> elements;
  elements.reserve(params.m());
  for (const Bytes& a : private_key.elements()) {
    elements.push_back(chain(hasher, a, params.chain_length()));
  }
  return KeySequence(KeyRole::kPublic, std::move(elements), params);
}

KeyPair generate_keypair(ByteView seed, const ChainParams& params) {
  KeySequence sk = derive_private_key(seed, params);
  KeySequence pk = derive_public_key(sk);
  return KeyPair{std::move(sk), std::move(pk)};
}

MessageElements split_digest(ByteView digest, const ChainParams& params) {
  if (digest.size() * 8 != ChainParams::kMessageDigestBits) {
    throw Error(ErrorCode::kInvalidParams,
                "signed digest must be 32 bytes, got " +
                    std::to_string(digest.size()));
  }
  const unsigned w1 = params.w1();
  MessageElements out;
  out.values.reserve(params.m());
  // Shift register over the digest bits, MSB first.
  std::uint32_t acc = 0;
  unsigned acc_bits = 0;
  for (std::uint8_t byte : digest) {
    acc = (acc << 8) | byte;
    acc_bits += 8;
    while (acc_bits >= w1) {
      acc_bits -= w1;
      out.values.push_back((acc >> acc_bits) & params.chain_length());
    }
    acc &= (1u << acc_bits) - 1;
  }
  return out;
}

MessageElements digest_to_elements(ByteView message,
                                   const ChainParams& params) {
  return split_digest(hash(HashAlg::kSha256, message), params);
}

Signature sign_digest(const KeySequence& private_key, ByteView digest,
                      const ChainParams& params) {
  require_role(private_key, KeyRole::kPrivate);
  require_params(private_key, params);
  MessageElements d = split_digest(digest, params);
  Hasher hasher(params.alg());
  Signature sig{{}, params};
  sig.elements.reserve(params.m());
  for (std::size_t i = 0; i < params.m(); ++i) {
    sig.elements.push_back(chain(hasher, private_key[i], d.values[i]));
  }
  return sig;
}

Signature sign(const KeySequence& private_key, ByteView message,
               const ChainParams& params) {
  return sign_digest(private_key, hash(HashAlg::kSha256, message), params);
}

bool verify_digest(const KeySequence& public_key, ByteView digest,
                   const Signature& signature, const ChainParams& params) {
  require_role(public_key, KeyRole::kPublic);
  require_params(public_key, params);
  if (!(signature.params == params)) {
    throw Error(ErrorCode::kParamsMismatch, "signature parameters differ");
  }
  if (signature.elements.size() != params.m()) {
    throw Error(ErrorCode::kMalformedSignature,
                "expected " + std::to_string(params.m()) + " elements, got " +
                    std::to_string(signature.elements.size()));
  }
  // A zero digit leaves a_i itself in the signature, which may be a 256-bit
  // seed rather than a digest.
  for (const Bytes& s : signature.elements) {
    if (s.size() != params.element_bytes() &&
        s.size() != ChainParams::kPrivateElementBytes) {
      throw Error(ErrorCode::kMalformedSignature,
                  "element of " + std::to_string(s.size()) + " bytes");
    }
  }
  MessageElements d = split_digest(digest, params);
  Hasher hasher(params.alg());
  bool ok = true;
  for (std::size_t i = 0; i < params.m(); ++i) {
    Bytes v = chain(hasher, signature.elements[i],
                    params.chain_length() - d.values[i]);
    ok &= ct_equal(v, public_key[i]);
  }
  return ok;
}

bool verify(const KeySequence& public_key, ByteView message,
            const Signature& signature, const ChainParams& params) {
  return verify_digest(public_key, hash(HashAlg::kSha256, message), signature,
                       params);
}

Bytes compress_public_key(const KeySequence& public_key) {
  require_role(public_key, KeyRole::kPublic);
  return sha256_concat(public_key.elements());
}

Bytes fingerprint(const KeySequence& sequence) {
  return sha256_concat(sequence.elements());
}

}  // namespace pqcwc
