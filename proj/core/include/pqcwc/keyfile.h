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

#ifndef PQCWC_KEYFILE_H_
#define PQCWC_KEYFILE_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "pqcwc/bytes.h"
#include "pqcwc/wots.h"

namespace pqcwc {

// Binary layout shared by keys and signatures:
//   "PQCWC1" | u8 kind | u8 alg index | u8 w1 | u8 w2 | u16 m |
//   m x (u16 length | bytes)
// all integers big-endian. Bit 7 of the kind byte is the advisory "used"
// flag on keys.
enum class FileKind : std::uint8_t {
  kPrivateKey = 0,
  kPublicKey = 1,
  kSignature = 2,
};

Bytes encode_key(const KeySequence& key);
// Throws Error(MalformedKey).
KeySequence decode_key(ByteView data);

Bytes encode_signature(const Signature& sig);
// Throws Error(MalformedSignature).
Signature decode_signature(ByteView data);

// Reads the kind byte without decoding the rest. Throws Error(MalformedKey)
// if the magic is missing.
FileKind peek_file_kind(ByteView data);

// Hex armor for human inspection:
//   -----BEGIN PQCWC PUBLIC KEY-----
//   Algorithm: SHA-256
//   ...header lines...
//   <blank line>
//   <hex body, 64 columns>
//   -----END PQCWC PUBLIC KEY-----
// The headers are informational; dearmor only reads the hex body.
std::string armor(ByteView binary);
// Throws Error(MalformedKey) for broken armor.
Bytes dearmor(std::string_view text);
// Returns the binary form of either an armored or a raw file.
Bytes load_key_material(ByteView file_contents);

}  // namespace pqcwc

#endif  // PQCWC_KEYFILE_H_
