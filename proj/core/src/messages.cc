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

#include "pqcwc/messages.h"

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>

#include "codec_util.h"
#include "pqcwc/error.h"
#include "pqcwc/tlv.h"

namespace pqcwc {

namespace {

constexpr std::string_view kMagic = "PQCWCMSG";
constexpr std::size_t kFrameHeader = 8 + 1 + 4;
constexpr ErrorCode kCode = ErrorCode::kMalformedMessage;

constexpr std::uint8_t kTagKey = 0x40;
constexpr std::uint8_t kTagSubject = 0x41;
constexpr std::uint8_t kTagSealedKey = 0x42;
constexpr std::uint8_t kTagCertificate = 0x43;
constexpr std::uint8_t kTagSealedBox = 0x44;
constexpr std::uint8_t kTagPermissions = 0x45;

constexpr std::uint8_t kTagKemCiphertext = 0x50;
constexpr std::uint8_t kTagBox = 0x51;

Bytes encode_sealed_key(const SealedKey& sk) {
  tlv::Writer w;
  w.add(kTagKemCiphertext, sk.kem_ciphertext);
  w.add(kTagBox, sk.box.serialize());
  return w.take();
}

SealedKey decode_sealed_key(ByteView data) {
  tlv::Reader r(data, kCode);
  SealedKey out;
  ByteView ct = r.expect(kTagKemCiphertext);
  out.kem_ciphertext.assign(ct.begin(), ct.end());
  ByteView box = r.expect(kTagBox);
  if (box.size() < SealedBox::kNonceBytes + SealedBox::kTagBytes) {
    r.fail("sealed box too short");
  }
  out.box = SealedBox::deserialize(box);
  r.finish();
  return out;
}

SealedBox decode_box(ByteView data) {
  if (data.size() < SealedBox::kNonceBytes + SealedBox::kTagBytes) {
    throw Error(kCode, "sealed box too short");
  }
  return SealedBox::deserialize(data);
}

AnonymousCertificate decode_cert_field(ByteView data) {
  try {
    return decode_certificate(data);
  } catch (const Error& e) {
    throw Error(kCode, e.what());
  }
}

ByteView body_of(ByteView data, MessageType want) {
  Frame f = unframe_message(data);
  if (f.type != want) {
    throw Error(kCode, "unexpected message type " +
                           std::to_string(static_cast<int>(f.type)));
  }
  return f.body;
}

// Runs a body decoder and folds any library error into MalformedMessage.
template <typename Fn>
auto decode_body(ByteView data, MessageType type, Fn&& fn) {
  ByteView body = body_of(data, type);
  try {
    tlv::Reader r(body, kCode);
    auto out = fn(r);
    r.finish();
    return out;
  } catch (const Error& e) {
    if (e.code() == kCode) throw;
    throw Error(kCode, e.what());
  }
}

}  // namespace

Bytes frame_message(MessageType type, ByteView body) {
  Bytes out(kMagic.begin(), kMagic.end());
  out.push_back(static_cast<std::uint8_t>(type));
  put_u32_be(out, static_cast<std::uint32_t>(body.size() + detail::kChecksumRecordBytes));
  append(out, body);
  detail::append_checksum(out);
  return out;
}

Frame unframe_message(ByteView data) {
  if (data.size() < kFrameHeader ||
      !std::equal(kMagic.begin(), kMagic.end(), data.begin())) {
    throw Error(kCode, "missing PQCWCMSG header");
  }
  const std::uint8_t type = data[8];
  if (type < 1 || type > 7) {
    throw Error(kCode, "unknown message type " + std::to_string(type));
  }
  const std::uint32_t len = get_u32_be(data.data() + 9);
  if (data.size() - kFrameHeader != len) {
    throw Error(kCode, "frame length does not match body");
  }
  ByteView covered = detail::strip_checksum(data, kCode);
  return Frame{static_cast<MessageType>(type), covered.subspan(kFrameHeader)};
}

Bytes encode_message(const CertRequestM1& msg) {
  tlv::Writer w;
  w.add(kTagKey, detail::encode_key_record(msg.public_key));
  w.add(kTagSubject, detail::encode_subject(msg.subject));
  return frame_message(MessageType::kCertRequestM1, w.bytes());
}

Bytes encode_message(const CertificateM1& msg) {
  tlv::Writer w;
  w.add(kTagCertificate, encode_certificate(msg.certificate));
  return frame_message(MessageType::kCertificateM1, w.bytes());
}

Bytes encode_message(const CertRequestM2& msg) {
  tlv::Writer w;
  w.add(kTagKey, detail::encode_key_record(msg.public_key));
  w.add(kTagSealedKey, encode_sealed_key(msg.sealed_q3));
  w.add(kTagSubject, detail::encode_subject(msg.subject));
  return frame_message(MessageType::kCertRequestM2, w.bytes());
}

Bytes encode_message(const CaResponseM2& msg) {
  tlv::Writer w;
  w.add(kTagCertificate, encode_certificate(msg.certificate));
  w.add(kTagSealedBox, msg.sealed_r4.serialize());
  return frame_message(MessageType::kCaResponseM2, w.bytes());
}

Bytes encode_message(const BkeRequest& msg) {
  tlv::Writer w;
  w.add(kTagKey, detail::encode_key_record(msg.public_key));
  w.add(kTagSealedKey, encode_sealed_key(msg.sealed_q_ra));
  w.add(kTagSealedKey, encode_sealed_key(msg.sealed_q_ca));
  w.add(kTagSubject, detail::encode_subject(msg.subject));
  return frame_message(MessageType::kBkeRequest, w.bytes());
}

Bytes encode_message(const RaToCaRequest& msg) {
  tlv::Writer w;
  w.add(kTagKey, detail::encode_key_record(msg.cocoon_key));
  w.add(kTagPermissions, detail::encode_permissions(msg.permissions));
  w.add(kTagSealedKey, encode_sealed_key(msg.sealed_q_ca));
  return frame_message(MessageType::kRaToCaRequest, w.bytes());
}

Bytes encode_message(const BkeResponse& msg) {
  tlv::Writer w;
  w.add(kTagSealedBox, msg.sealed_payload.serialize());
  return frame_message(MessageType::kBkeResponse, w.bytes());
}

CertRequestM1 decode_cert_request_m1(ByteView data) {
  return decode_body(data, MessageType::kCertRequestM1, [](tlv::Reader& r) {
    KeySequence key = detail::decode_key_record(r.expect(kTagKey), kCode);
    SubjectInfo subject = detail::decode_subject(r.expect(kTagSubject), kCode);
    return CertRequestM1{std::move(key), std::move(subject)};
  });
}

CertificateM1 decode_certificate_m1(ByteView data) {
  return decode_body(data, MessageType::kCertificateM1, [](tlv::Reader& r) {
    return CertificateM1{decode_cert_field(r.expect(kTagCertificate))};
  });
}

CertRequestM2 decode_cert_request_m2(ByteView data) {
  return decode_body(data, MessageType::kCertRequestM2, [](tlv::Reader& r) {
    KeySequence key = detail::decode_key_record(r.expect(kTagKey), kCode);
    SealedKey q3 = decode_sealed_key(r.expect(kTagSealedKey));
    SubjectInfo subject = detail::decode_subject(r.expect(kTagSubject), kCode);
    return CertRequestM2{std::move(key), std::move(q3), std::move(subject)};
  });
}

CaResponseM2 decode_ca_response_m2(ByteView data) {
  return decode_body(data, MessageType::kCaResponseM2, [](tlv::Reader& r) {
    AnonymousCertificate cert = decode_cert_field(r.expect(kTagCertificate));
    SealedBox r4 = decode_box(r.expect(kTagSealedBox));
    return CaResponseM2{std::move(cert), std::move(r4)};
  });
}

BkeRequest decode_bke_request(ByteView data) {
  return decode_body(data, MessageType::kBkeRequest, [](tlv::Reader& r) {
    KeySequence key = detail::decode_key_record(r.expect(kTagKey), kCode);
    SealedKey q_ra = decode_sealed_key(r.expect(kTagSealedKey));
    SealedKey q_ca = decode_sealed_key(r.expect(kTagSealedKey));
    SubjectInfo subject = detail::decode_subject(r.expect(kTagSubject), kCode);
    return BkeRequest{std::move(key), std::move(q_ra), std::move(q_ca),
                      std::move(subject)};
  });
}

RaToCaRequest decode_ra_to_ca_request(ByteView data) {
  return decode_body(data, MessageType::kRaToCaRequest, [](tlv::Reader& r) {
    KeySequence key = detail::decode_key_record(r.expect(kTagKey), kCode);
    PermissionInfo j =
        detail::decode_permissions(r.expect(kTagPermissions), kCode);
    SealedKey q_ca = decode_sealed_key(r.expect(kTagSealedKey));
    return RaToCaRequest{std::move(key), std::move(j), std::move(q_ca)};
  });
}

BkeResponse decode_bke_response(ByteView data) {
  return decode_body(data, MessageType::kBkeResponse, [](tlv::Reader& r) {
    return BkeResponse{decode_box(r.expect(kTagSealedBox))};
  });
}

}  // namespace pqcwc
