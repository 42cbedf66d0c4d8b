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

#ifndef PQCWC_KEM_H_
#define PQCWC_KEM_H_

#include <string_view>

#include "pqcwc/bytes.h"
#include "pqcwc/envelope.h"
#include "pqcwc/random.h"

namespace pqcwc {

struct KemKeyPair {
  Bytes public_key;
  Bytes secret_key;
};

struct Encapsulation {
  Bytes ciphertext;
  Bytes shared_secret;
};

// Key-encapsulation boundary used to move AES keys to the registration and
// certificate authorities. A lattice KEM (ML-KEM) provider slots in here.
//
// Implementations throw Error(KemError) only for structurally invalid input
// (wrong key or ciphertext length). A well-formed but wrong ciphertext yields
// an unrelated shared secret, which the envelope then rejects.
class Kem {
 public:
  virtual ~Kem() = default;
  virtual std::string_view name() const = 0;
  virtual KemKeyPair generate_keypair(RandomSource& rng) const = 0;
  virtual Encapsulation encapsulate(ByteView public_key,
                                    RandomSource& rng) const = 0;
  virtual Bytes decapsulate(ByteView secret_key,
                            ByteView ciphertext) const = 0;
};

// NOT SECURE. Protocol test double: the public key is the recipient secret
// itself, the ciphertext is a 32-byte sender nonce and the shared secret is
// SHA-256(label || secret || nonce). It exists so the issuance flows can be
// exercised end to end without a real KEM.
class InsecureTestKem final : public Kem {
 public:
  static constexpr std::size_t kKeyBytes = 32;
  static constexpr std::size_t kCiphertextBytes = 32;

  std::string_view name() const override { return "insecure-test-kem"; }
  KemKeyPair generate_keypair(RandomSource& rng) const override;
  Encapsulation encapsulate(ByteView public_key,
                            RandomSource& rng) const override;
  Bytes decapsulate(ByteView secret_key, ByteView ciphertext) const override;
};

// An AES key wrapped for one recipient: KEM ciphertext plus the key sealed
// under a key derived from the shared secret (q3', q_RA', q_CA').
struct SealedKey {
  Bytes kem_ciphertext;
  SealedBox box;

  bool operator==(const SealedKey&) const = default;
};

SealedKey seal_key(const Kem& kem, ByteView recipient_public,
                   const SymmetricKey& key, RandomSource& rng);

// Throws KemError for malformed KEM input and TamperDetected when the
// envelope does not authenticate.
SymmetricKey unseal_key(const Kem& kem, ByteView recipient_secret,
                        const SealedKey& sealed);

}  // namespace pqcwc

#endif  // PQCWC_KEM_H_
