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

#ifndef PQCWC_CERTIFICATE_H_
#define PQCWC_CERTIFICATE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pqcwc/bytes.h"
#include "pqcwc/wots.h"

namespace pqcwc {

struct Validity {
  std::uint64_t not_before = 0;  // unix seconds
  std::uint64_t not_after = 0;

  bool operator==(const Validity&) const = default;
};

// The to-be-signed request information I.
struct SubjectInfo {
  std::string subject_id;
  std::vector<std::string> permissions;
  Validity validity;

  // Throws Error(InvalidSubject) unless not_before < not_after and at least
  // one permission is listed.
  void validate() const;

  bool operator==(const SubjectInfo&) const = default;
};

// J: the permission and validity part of I, without the subject identity.
struct PermissionInfo {
  std::vector<std::string> permissions;
  Validity validity;

  bool operator==(const PermissionInfo&) const = default;
};

PermissionInfo permissions_of(const SubjectInfo& subject);
// A pseudonymous subject (empty subject_id) carrying J.
SubjectInfo pseudonymous_subject(const PermissionInfo& info);

struct AnonymousCertificate {
  static constexpr std::uint8_t kVersion = 1;

  std::uint8_t version = kVersion;
  // Expanded public key B' or B''; carries alg, w1 and w2.
  KeySequence public_key;
  // Emit the 256-bit compressed form next to the full sequence.
  bool include_compressed_key = true;
  SubjectInfo subject;
  Bytes issuer_id;
  Bytes issuer_signature;

  const ChainParams& params() const { return public_key.params(); }

  bool operator==(const AnonymousCertificate&) const = default;
};

// Deterministic TLV encoding; fields always appear in one fixed order and a
// SHA-256 checksum record closes the encoding.
Bytes encode_certificate(const AnonymousCertificate& cert);
// Everything except the issuer signature record; this is what the CA signs.
Bytes encode_certificate_tbs(const AnonymousCertificate& cert);
// Throws Error(MalformedCertificate) on truncation, unknown or out-of-order
// tags, trailing bytes, a checksum mismatch, bad parameters, a compressed key that does not match
// the sequence, or an invalid subject.
AnonymousCertificate decode_certificate(ByteView data);

// The certificate authority's signing identity. The issuer signature is a
// one-time signature over SHA-256(tbs) made with a single CA key, so it only
// provides depth-1 integrity checking and the key is reused across
// certificates.
struct CaIdentity {
  KeyPair signing_key;
  Bytes issuer_id;  // compressed CA public key

  static ChainParams signing_params();
  // Throws Error(InvalidSeed) unless the seed is 32 bytes.
  static CaIdentity from_seed(ByteView seed);
};

// Fills issuer_id and issuer_signature.
void sign_certificate(AnonymousCertificate& cert, const CaIdentity& ca);
// False for a wrong or unparsable signature, or an issuer_id that does not
// name `ca_public_key`.
bool verify_certificate_issuer(const AnonymousCertificate& cert,
                               const KeySequence& ca_public_key);

}  // namespace pqcwc

#endif  // PQCWC_CERTIFICATE_H_
