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

#include "codec_util.h"

#include <utility>

#include "pqcwc/error.h"
#include "pqcwc/hash_suite.h"

namespace pqcwc::detail {

namespace {

constexpr std::uint8_t kTagAlg = 0x02;
constexpr std::uint8_t kTagW1 = 0x03;
constexpr std::uint8_t kTagW2 = 0x04;
constexpr std::uint8_t kTagRole = 0x31;
constexpr std::uint8_t kTagElements = 0x32;

constexpr std::uint8_t kTagSubjectId = 0x10;
constexpr std::uint8_t kTagPermission = 0x11;
constexpr std::uint8_t kTagNotBefore = 0x12;
constexpr std::uint8_t kTagNotAfter = 0x13;

void encode_permission_list(tlv::Writer& w,
                            const std::vector<std::string>& permissions,
                            const Validity& validity) {
  for (const std::string& p : permissions) w.add_string(kTagPermission, p);
  w.add_u64(kTagNotBefore, validity.not_before);
  w.add_u64(kTagNotAfter, validity.not_after);
}

void decode_permission_list(tlv::Reader& r,
                            std::vector<std::string>& permissions,
                            Validity& validity) {
  while (r.peek_tag() == kTagPermission) {
    permissions.push_back(r.expect_string(kTagPermission));
  }
  validity.not_before = r.expect_u64(kTagNotBefore);
  validity.not_after = r.expect_u64(kTagNotAfter);
  r.finish();
}

constexpr std::size_t kChecksumBytes = 32;

}  // namespace

void append_checksum(Bytes& out) {
  Bytes digest = hash(HashAlg::kSha256, out);
  tlv::Writer w;
  w.add(kTagChecksum, digest);
  append(out, w.bytes());
}

ByteView strip_checksum(ByteView data, ErrorCode code) {
  if (data.size() < kChecksumRecordBytes) {
    throw Error(code, "missing checksum record");
  }
  ByteView covered = data.first(data.size() - kChecksumRecordBytes);
  ByteView record = data.subspan(covered.size());
  if (record[0] != kTagChecksum ||
      get_u32_be(record.data() + 1) != kChecksumBytes) {
    throw Error(code, "missing checksum record");
  }
  if (!ct_equal(record.subspan(5), hash(HashAlg::kSha256, covered))) {
    throw Error(code, "checksum mismatch");
  }
  return covered;
}

Bytes encode_elements(const std::vector<Bytes>& elements) {
  tlv::Writer w;
  for (const Bytes& e : elements) w.add(kTagElement, e);
  return w.take();
}

std::vector<Bytes> decode_elements(ByteView data, ErrorCode code) {
  tlv::Reader r(data, code);
  std::vector<Bytes> out;
  while (!r.done()) {
    ByteView v = r.expect(kTagElement);
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

Bytes encode_key_record(const KeySequence& key) {
  tlv::Writer w;
  w.add_u8(kTagAlg, algorithm_index(key.params().alg()));
  w.add_u8(kTagW1, static_cast<std::uint8_t>(key.params().w1()));
  w.add_u8(kTagW2, static_cast<std::uint8_t>(key.params().w2()));
  w.add_u8(kTagRole, static_cast<std::uint8_t>(key.role()));
  w.add(kTagElements, encode_elements(key.elements()));
  return w.take();
}

KeySequence decode_key_record(ByteView data, ErrorCode code) {
  tlv::Reader r(data, code);
  try {
    HashAlg alg = algorithm_from_index(r.expect_u8(kTagAlg));
    unsigned w1 = r.expect_u8(kTagW1);
    unsigned w2 = r.expect_u8(kTagW2);
    std::uint8_t role = r.expect_u8(kTagRole);
    if (role > 1) r.fail("unknown key role");
    std::vector<Bytes> elements = decode_elements(r.expect(kTagElements), code);
    r.finish();
    return KeySequence(static_cast<KeyRole>(role), std::move(elements),
                       ChainParams(alg, w1, w2));
  } catch (const Error& e) {
    if (e.code() == code) throw;
    throw Error(code, e.what());
  }
}

Bytes encode_subject(const SubjectInfo& subject) {
  tlv::Writer w;
  w.add_string(kTagSubjectId, subject.subject_id);
  encode_permission_list(w, subject.permissions, subject.validity);
  return w.take();
}

SubjectInfo decode_subject(ByteView data, ErrorCode code) {
  tlv::Reader r(data, code);
  SubjectInfo s;
  s.subject_id = r.expect_string(kTagSubjectId);
  decode_permission_list(r, s.permissions, s.validity);
  try {
    s.validate();
  } catch (const Error& e) {
    throw Error(code, e.what());
  }
  return s;
}

Bytes encode_permissions(const PermissionInfo& info) {
  tlv::Writer w;
  encode_permission_list(w, info.permissions, info.validity);
  return w.take();
}

PermissionInfo decode_permissions(ByteView data, ErrorCode code) {
  tlv::Reader r(data, code);
  PermissionInfo info;
  decode_permission_list(r, info.permissions, info.validity);
  try {
    pseudonymous_subject(info).validate();
  } catch (const Error& e) {
    throw Error(code, e.what());
  }
  return info;
}

}  // namespace pqcwc::detail
