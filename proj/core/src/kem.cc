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

#include "pqcwc/kem.h"

#include <string>

#include "pqcwc/error.h"
#include "pqcwc/hash_suite.h"

namespace pqcwc {

namespace {

constexpr std::string_view kSharedLabel = "pqcwc-test-kem";
constexpr std::string_view kWrapLabel = "pqcwc-kem-wrap";

SymmetricKey wrapping_key(ByteView shared_secret) {
  Bytes input(kWrapLabel.begin(), kWrapLabel.end());
  append(input, shared_secret);
  return SymmetricKey(hash(HashAlg::kSha256, input));
}

Bytes shared_secret(ByteView secret, ByteView nonce) {
  Bytes input(kSharedLabel.begin(), kSharedLabel.end());
  append(input, secret);
  append(input, nonce);
  return hash(HashAlg::kSha256, input);
}

}  // namespace

KemKeyPair InsecureTestKem::generate_keypair(RandomSource& rng) const {
  Bytes secret = rng.bytes(kKeyBytes);
  return KemKeyPair{secret, secret};
}

Encapsulation InsecureTestKem::encapsulate(ByteView public_key,
                                           RandomSource& rng) const {
  if (public_key.size() != kKeyBytes) {
    throw Error(ErrorCode::kKemError,
                "public key must be " + std::to_string(kKeyBytes) + " bytes");
  }
  Bytes nonce = rng.bytes(kCiphertextBytes);
  return Encapsulation{nonce, shared_secret(public_key, nonce)};
}

Bytes InsecureTestKem::decapsulate(ByteView secret_key,
                                   ByteView ciphertext) const {
  if (secret_key.size() != kKeyBytes) {
    throw Error(ErrorCode::kKemError, "secret key has the wrong length");
  }
  if (ciphertext.size() != kCiphertextBytes) {
    throw Error(ErrorCode::kKemError, "ciphertext has the wrong length");
  }
  return shared_secret(secret_key, ciphertext);
}

SealedKey seal_key(const Kem& kem, ByteView recipient_public,
                   const SymmetricKey& key, RandomSource& rng) {
  Encapsulation enc = kem.encapsulate(recipient_public, rng);
  SealedKey out;
  out.box = seal(wrapping_key(enc.shared_secret), key.bytes(), rng,
                 enc.ciphertext);
  out.kem_ciphertext = std::move(enc.ciphertext);
  return out;
}

SymmetricKey unseal_key(const Kem& kem, ByteView recipient_secret,
                        const SealedKey& sealed) {
  Bytes ss = kem.decapsulate(recipient_secret, sealed.kem_ciphertext);
  Bytes key = open(wrapping_key(ss), sealed.box, sealed.kem_ciphertext);
  if (key.size() != 16 && key.size() != 32) {
    throw Error(ErrorCode::kProtocolError, "unsealed key has a bad length");
  }
  return SymmetricKey(std::move(key));
}

}  // namespace pqcwc
