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

#include "pqcwc/keyfile.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "pqcwc/error.h"
#include "pqcwc/hash_suite.h"

namespace pqcwc {

namespace {

constexpr std::string_view kMagic = "PQCWC1";
constexpr std::size_t kHeaderBytes = 6 + 1 + 1 + 1 + 1 + 2;
constexpr std::uint8_t kUsedBit = 0x80;

struct RawFile {
  std::uint8_t kind;
  bool used;
  ChainParams params;
  std::vector<Bytes> elements;
};

Bytes encode_raw(std::uint8_t kind_byte, const ChainParams& params,
                 const std::vector<Bytes>& elements) {
  Bytes out(kMagic.begin(), kMagic.end());
  out.push_back(kind_byte);
  out.push_back(algorithm_index(params.alg()));
  out.push_back(static_cast<std::uint8_t>(params.w1()));
  out.push_back(static_cast<std::uint8_t>(params.w2()));
  put_u16_be(out, static_cast<std::uint16_t>(elements.size()));
  for (const Bytes& e : elements) {
    put_u16_be(out, static_cast<std::uint16_t>(e.size()));
    append(out, e);
  }
  return out;
}

RawFile decode_raw(ByteView data, ErrorCode code) {
  if (data.size() < kHeaderBytes ||
      !std::equal(kMagic.begin(), kMagic.end(), data.begin())) {
    throw Error(code, "missing PQCWC1 header");
  }
  const std::uint8_t kind_byte = data[6];
  try {
    ChainParams params(algorithm_from_index(data[7]), data[8], data[9]);
    const std::size_t m = get_u16_be(data.data() + 10);
    std::size_t pos = kHeaderBytes;
    std::vector<Bytes> elements;
    elements.reserve(std::min<std::size_t>(m, 1024));
    for (std::size_t i = 0; i < m; ++i) {
      if (data.size() - pos < 2) throw Error(code, "truncated element length");
      const std::size_t len = get_u16_be(data.data() + pos);
      pos += 2;
      if (data.size() - pos < len) throw Error(code, "truncated element");
      elements.emplace_back(data.begin() + pos, data.begin() + pos + len);
      pos += len;
    }
    if (pos != data.size()) throw Error(code, "trailing bytes");
    return RawFile{static_cast<std::uint8_t>(kind_byte & ~kUsedBit),
                   (kind_byte & kUsedBit) != 0, params, std::move(elements)};
  } catch (const Error& e) {
    if (e.code() == code) throw;
    throw Error(code, e.what());
  }
}

std::string_view kind_label(std::uint8_t kind) {
  switch (kind) {
    case 0: return "PRIVATE KEY";
    case 1: return "PUBLIC KEY";
    case 2: return "SIGNATURE";
  }
  return "";
}

}  // namespace

Bytes encode_key(const KeySequence& key) {
  auto kind = static_cast<std::uint8_t>(key.role() == KeyRole::kPrivate
                                            ? FileKind::kPrivateKey
                                            : FileKind::kPublicKey);
  if (key.used()) kind |= kUsedBit;
  return encode_raw(kind, key.params(), key.elements());
}

KeySequence decode_key(ByteView data) {
  RawFile raw = decode_raw(data, ErrorCode::kMalformedKey);
  if (raw.kind > 1) {
    throw Error(ErrorCode::kMalformedKey, "file does not hold a key");
  }
  try {
    KeySequence key(static_cast<KeyRole>(raw.kind), std::move(raw.elements),
                    raw.params);
    key.set_used(raw.used);
    return key;
  } catch (const Error& e) {
    throw Error(ErrorCode::kMalformedKey, e.what());
  }
}

Bytes encode_signature(const Signature& sig) {
  return encode_raw(static_cast<std::uint8_t>(FileKind::kSignature),
                    sig.params, sig.elements);
}

Signature decode_signature(ByteView data) {
  RawFile raw = decode_raw(data, ErrorCode::kMalformedSignature);
  if (raw.kind != static_cast<std::uint8_t>(FileKind::kSignature) ||
      raw.used) {
    throw Error(ErrorCode::kMalformedSignature,
                "file does not hold a signature");
  }
  return Signature{std::move(raw.elements), raw.params};
}

FileKind peek_file_kind(ByteView data) {
  if (data.size() < kHeaderBytes ||
      !std::equal(kMagic.begin(), kMagic.end(), data.begin())) {
    throw Error(ErrorCode::kMalformedKey, "missing PQCWC1 header");
  }
  const std::uint8_t kind = data[6] & ~kUsedBit;
  if (kind > 2) throw Error(ErrorCode::kMalformedKey, "unknown file kind");
  return static_cast<FileKind>(kind);
}

std::string armor(ByteView binary) {
  const FileKind kind = peek_file_kind(binary);
  const std::string_view label = kind_label(static_cast<std::uint8_t>(kind));
  std::ostringstream out;
  out << "-----BEGIN PQCWC " << label << "-----\n";
  out << "Algorithm: " << algorithm_name(algorithm_from_index(binary[7]))
      << "\n";
  out << "W1: " << unsigned{binary[8]} << "\n";
  out << "W2: " << unsigned{binary[9]} << "\n";
  out << "Elements: " << get_u16_be(binary.data() + 10) << "\n";
  if (kind != FileKind::kSignature) {
    out << "Used: " << ((binary[6] & kUsedBit) ? "yes" : "no") << "\n";
  }
  out << "\n";
  const std::string hex = to_hex(binary);
  for (std::size_t i = 0; i < hex.size(); i += 64) {
    out << hex.substr(i, 64) << "\n";
  }
  out << "-----END PQCWC " << label << "-----\n";
  return out.str();
}

Bytes dearmor(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string label;
  bool begun = false;
  bool in_body = false;
  std::string hex;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!begun) {
      if (line.rfind("-----BEGIN PQCWC ", 0) == 0) {
        begun = true;
        label = line.substr(17);
      }
      continue;
    }
    if (line.rfind("-----END PQCWC ", 0) == 0) {
      if (line.substr(15) != label) {
        throw Error(ErrorCode::kMalformedKey, "armor END label mismatch");
      }
      Bytes binary = from_hex(hex);
      peek_file_kind(binary);
      return binary;
    }
    if (!in_body) {
      if (line.empty()) in_body = true;
      continue;
    }
    hex += line;
  }
  throw Error(ErrorCode::kMalformedKey, "incomplete armor");
}

Bytes load_key_material(ByteView file_contents) {
  if (file_contents.size() >= kMagic.size() &&
      std::equal(kMagic.begin(), kMagic.end(), file_contents.begin())) {
    return Bytes(file_contents.begin(), file_contents.end());
  }
  try {
    return dearmor(std::string_view(
        reinterpret_cast<const char*>(file_contents.data()),
        file_contents.size()));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformedKey) throw;
    throw Error(ErrorCode::kMalformedKey, e.what());
  }
}

}  // namespace pqcwc
