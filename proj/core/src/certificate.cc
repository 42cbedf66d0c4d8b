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

#include "pqcwc/certificate.h"

#include <string>
#include <utility>

#include "codec_util.h"
#include "pqcwc/error.h"
#include "pqcwc/hash_suite.h"
#include "pqcwc/tlv.h"

namespace pqcwc {

namespace {

constexpr std::uint8_t kTagVersion = 0x01;
constexpr std::uint8_t kTagAlg = 0x02;
constexpr std::uint8_t kTagW1 = 0x03;
constexpr std::uint8_t kTagW2 = 0x04;
constexpr std::uint8_t kTagPublicKey = 0x05;
constexpr std::uint8_t kTagCompressedKey = 0x06;
constexpr std::uint8_t kTagSubject = 0x07;
constexpr std::uint8_t kTagIssuerId = 0x08;
constexpr std::uint8_t kTagIssuerSignature = 0x09;

AnonymousCertificate decode_unchecked(ByteView data) {
  tlv::Reader r(detail::strip_checksum(data, ErrorCode::kMalformedCertificate),
                ErrorCode::kMalformedCertificate);
  const std::uint8_t version = r.expect_u8(kTagVersion);
  if (version != AnonymousCertificate::kVersion) {
    r.fail("unsupported version " + std::to_string(version));
  }
  HashAlg alg = algorithm_from_index(r.expect_u8(kTagAlg));
  const unsigned w1 = r.expect_u8(kTagW1);
  const unsigned w2 = r.expect_u8(kTagW2);
  ChainParams params(alg, w1, w2);
  KeySequence key(KeyRole::kPublic,
                  detail::decode_elements(r.expect(kTagPublicKey),
                                          ErrorCode::kMalformedCertificate),
                  params);
  std::optional<ByteView> compressed = r.optional(kTagCompressedKey);
  if (compressed && !ct_equal(*compressed, compress_public_key(key))) {
    r.fail("compressed key does not match the key sequence");
  }
  SubjectInfo subject = detail::decode_subject(
      r.expect(kTagSubject), ErrorCode::kMalformedCertificate);
  ByteView issuer_id = r.expect(kTagIssuerId);
  ByteView signature = r.expect(kTagIssuerSignature);
  r.finish();
  return AnonymousCertificate{
      version,
      std::move(key),
      compressed.has_value(),
      std::move(subject),
      Bytes(issuer_id.begin(), issuer_id.end()),
      Bytes(signature.begin(), signature.end()),
  };
}

}  // namespace

void SubjectInfo::validate() const {
  if (permissions.empty()) {
    throw Error(ErrorCode::kInvalidSubject, "permission list is empty");
  }
  if (!(validity.not_before < validity.not_after)) {
    throw Error(ErrorCode::kInvalidSubject,
                "not_before must precede not_after");
  }
  if (!tlv::is_valid_utf8(as_bytes(subject_id))) {
    throw Error(ErrorCode::kInvalidSubject, "subject id is not UTF-8");
  }
  for (const std::string& p : permissions) {
    if (!tlv::is_valid_utf8(as_bytes(p))) {
      throw Error(ErrorCode::kInvalidSubject, "permission is not UTF-8");
    }
  }
}

PermissionInfo permissions_of(const SubjectInfo& subject) {
  return PermissionInfo{subject.permissions, subject.validity};
}

SubjectInfo pseudonymous_subject(const PermissionInfo& info) {
  return SubjectInfo{"", info.permissions, info.validity};
}

Bytes encode_certificate_tbs(const AnonymousCertificate& cert) {
  cert.subject.validate();
  if (cert.public_key.role() != KeyRole::kPublic) {
    throw Error(ErrorCode::kWrongKeyRole, "certificate key must be public");
  }
  const ChainParams& p = cert.params();
  tlv::Writer w;
  w.add_u8(kTagVersion, cert.version);
  w.add_u8(kTagAlg, algorithm_index(p.alg()));
  w.add_u8(kTagW1, static_cast<std::uint8_t>(p.w1()));
  w.add_u8(kTagW2, static_cast<std::uint8_t>(p.w2()));
  w.add(kTagPublicKey, detail::encode_elements(cert.public_key.elements()));
  if (cert.include_compressed_key) {
    w.add(kTagCompressedKey, compress_public_key(cert.public_key));
  }
  w.add(kTagSubject, detail::encode_subject(cert.subject));
  w.add(kTagIssuerId, cert.issuer_id);
  return w.take();
}

Bytes encode_certificate(const AnonymousCertificate& cert) {
  Bytes out = encode_certificate_tbs(cert);
  tlv::Writer w;
  w.add(kTagIssuerSignature, cert.issuer_signature);
  append(out, w.bytes());
  detail::append_checksum(out);
  return out;
}

AnonymousCertificate decode_certificate(ByteView data) {
  try {
    return decode_unchecked(data);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformedCertificate) throw;
    throw Error(ErrorCode::kMalformedCertificate, e.what());
  }
}

ChainParams CaIdentity::signing_params() {
  return ChainParams(HashAlg::kSha256, 8, 1);
}

CaIdentity CaIdentity::from_seed(ByteView seed) {
  KeyPair pair = generate_keypair(seed, signing_params());
  Bytes id = compress_public_key(pair.public_key);
  return CaIdentity{std::move(pair), std::move(id)};
}

void sign_certificate(AnonymousCertificate& cert, const CaIdentity& ca) {
  cert.issuer_id = ca.issuer_id;
  Bytes tbs_digest = hash(HashAlg::kSha256, encode_certificate_tbs(cert));
  Signature sig = sign_digest(ca.signing_key.private_key, tbs_digest,
                              CaIdentity::signing_params());
  cert.issuer_signature = detail::encode_elements(sig.elements);
}

bool verify_certificate_issuer(const AnonymousCertificate& cert,
                               const KeySequence& ca_public_key) {
  if (ca_public_key.role() != KeyRole::kPublic ||
      !ct_equal(cert.issuer_id, compress_public_key(ca_public_key))) {
    return false;
  }
  try {
    Signature sig{detail::decode_elements(cert.issuer_signature,
                                          ErrorCode::kMalformedSignature),
                  ca_public_key.params()};
    Bytes tbs_digest = hash(HashAlg::kSha256, encode_certificate_tbs(cert));
    return verify_digest(ca_public_key, tbs_digest, sig,
                         ca_public_key.params());
  } catch (const Error&) {
    return false;
  }
}

}  // namespace pqcwc
