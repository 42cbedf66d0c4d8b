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

#ifndef PQCWC_TLV_H_
#define PQCWC_TLV_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pqcwc/bytes.h"
#include "pqcwc/error.h"

namespace pqcwc::tlv {

// Records are tag (u8) || length (u32 big-endian) || value.
class Writer {
 public:
  void add(std::uint8_t tag, ByteView value);
  void add_u8(std::uint8_t tag, std::uint8_t value);
  void add_u64(std::uint8_t tag, std::uint64_t value);
  void add_string(std::uint8_t tag, std::string_view value);

  const Bytes& bytes() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

struct Field {
  std::uint8_t tag;
  ByteView value;
};

// Strict sequential reader. Every failure throws Error(code) with the code
// chosen by the owner of the format.
class Reader {
 public:
  Reader(ByteView data, ErrorCode code) : data_(data), code_(code) {}

  bool done() const { return pos_ == data_.size(); }
  std::optional<std::uint8_t> peek_tag() const;

  Field next();
  // Reads the next record and fails unless it carries `tag`.
  ByteView expect(std::uint8_t tag);
  std::uint8_t expect_u8(std::uint8_t tag);
  std::uint64_t expect_u64(std::uint8_t tag);
  // Also rejects invalid UTF-8.
  std::string expect_string(std::uint8_t tag);
  // Consumes the next record only when it carries `tag`.
  std::optional<ByteView> optional(std::uint8_t tag);

  // Fails if any bytes remain.
  void finish() const;

  [[noreturn]] void fail(const std::string& what) const;

 private:
  ByteView data_;
  std::size_t pos_ = 0;
  ErrorCode code_;
};

bool is_valid_utf8(ByteView data);

}  // namespace pqcwc::tlv

#endif  // PQCWC_TLV_H_
