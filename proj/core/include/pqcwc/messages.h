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

#ifndef PQCWC_MESSAGES_H_
#define PQCWC_MESSAGES_H_

#include <cstdint>

#include "pqcwc/bytes.h"
#include "pqcwc/certificate.h"
#include "pqcwc/envelope.h"
#include "pqcwc/kem.h"
#include "pqcwc/wots.h"

namespace pqcwc {

// Frame: "PQCWCMSG" | u8 type | u32 big-endian body length | TLV body.
// The body ends in a checksum record, SHA-256 over every preceding frame byte.
enum class MessageType : std::uint8_t {
  kCertRequestM1 = 1,
  kCertificateM1 = 2,
  kCertRequestM2 = 3,
  kCaResponseM2 = 4,
  kBkeRequest = 5,
  kRaToCaRequest = 6,
  kBkeResponse = 7,
};

// End entity -> CA, Model 1: caterpillar public key B and request info I.
struct CertRequestM1 {
  KeySequence public_key;
  SubjectInfo subject;
};

// CA -> end entity, Model 1.
struct CertificateM1 {
  AnonymousCertificate certificate;
};

// End entity -> CA, Model 2: B, q3 sealed to the CA (q3'), I.
struct CertRequestM2 {
  KeySequence public_key;
  SealedKey sealed_q3;
  SubjectInfo subject;
};

// CA -> end entity, Model 2: the certificate and r4 sealed under q3.
struct CaResponseM2 {
  AnonymousCertificate certificate;
  SealedBox sealed_r4;
};

// End entity -> RA, butterfly expansion: B, q_RA', q_CA', I.
struct BkeRequest {
  KeySequence public_key;
  SealedKey sealed_q_ra;
  SealedKey sealed_q_ca;
  SubjectInfo subject;
};

// RA -> CA: cocoon key B', permission info J, q_CA' forwarded untouched.
struct RaToCaRequest {
  KeySequence cocoon_key;
  PermissionInfo permissions;
  SealedKey sealed_q_ca;
};

// CA -> RA -> end entity: Z = Seal_{q_CA}(encode(Cert) || r_CA).
struct BkeResponse {
  SealedBox sealed_payload;
};

struct Frame {
  MessageType type;
  ByteView body;
};

Bytes frame_message(MessageType type, ByteView body);
// Throws Error(MalformedMessage) on bad magic, unknown type, a length that
// disagrees with the input, or a checksum mismatch. The returned body excludes
// the checksum record.
Frame unframe_message(ByteView data);

Bytes encode_message(const CertRequestM1& msg);
Bytes encode_message(const CertificateM1& msg);
Bytes encode_message(const CertRequestM2& msg);
Bytes encode_message(const CaResponseM2& msg);
Bytes encode_message(const BkeRequest& msg);
Bytes encode_message(const RaToCaRequest& msg);
Bytes encode_message(const BkeResponse& msg);

// Each decoder takes a full frame and throws Error(MalformedMessage) for a
// wrong type or any structural problem in the body.
CertRequestM1 decode_cert_request_m1(ByteView data);
CertificateM1 decode_certificate_m1(ByteView data);
CertRequestM2 decode_cert_request_m2(ByteView data);
CaResponseM2 decode_ca_response_m2(ByteView data);
BkeRequest decode_bke_request(ByteView data);
RaToCaRequest decode_ra_to_ca_request(ByteView data);
BkeResponse decode_bke_response(ByteView data);

}  // namespace pqcwc

#endif  // PQCWC_MESSAGES_H_
