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

#ifndef PQCWC_SRC_CODEC_UTIL_H_
#define PQCWC_SRC_CODEC_UTIL_H_

#include <vector>

#include "pqcwc/bytes.h"
#include "pqcwc/certificate.h"
#include "pqcwc/tlv.h"
#include "pqcwc/wots.h"

namespace pqcwc::detail {

inline constexpr std::uint8_t kTagElement = 0x20;
inline constexpr std::uint8_t kTagChecksum = 0x7F;
inline constexpr std::size_t kChecksumRecordBytes = 1 + 4 + 32;

// Appends a checksum record holding SHA-256 of everything already in `out`.
void append_checksum(Bytes& out);
// Verifies the trailing checksum record and returns the bytes it covers.
ByteView strip_checksum(ByteView data, ErrorCode code);

// A list of byte strings as consecutive element records.
Bytes encode_elements(const std::vector<Bytes>& elements);
std::vector<Bytes> decode_elements(ByteView data, ErrorCode code);

// Nested record: alg, w1, w2, role, elements.
Bytes encode_key_record(const KeySequence& key);
KeySequence decode_key_record(ByteView data, ErrorCode code);

Bytes encode_subject(const SubjectInfo& subject);
SubjectInfo decode_subject(ByteView data, ErrorCode code);

Bytes encode_permissions(const PermissionInfo& info);
PermissionInfo decode_permissions(ByteView data, ErrorCode code);

}  // namespace pqcwc::detail

#endif  // PQCWC_SRC_CODEC_UTIL_H_
