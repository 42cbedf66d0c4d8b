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

#include "pqcwc/tlv.h"

#include <limits>

namespace pqcwc::tlv {

void Writer::add(std::uint8_t tag, ByteView value) {
  if (value.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kInvalidParams, "TLV value too long");
  }
  out_.push_back(tag);
  put_u32_be(out_, static_cast<std::uint32_t>(value.size()));
  append(out_, value);
}

void Writer::add_u8(std::uint8_t tag, std::uint8_t value) {
  add(tag, ByteView(&value, 1));
}

void Writer::add_u64(std::uint8_t tag, std::uint64_t value) {
  Bytes v;
  put_u64_be(v, value);
  add(tag, v);
}

void Writer::add_string(std::uint8_t tag, std::string_view value) {
  add(tag, as_bytes(value));
}

std::optional<std::uint8_t> Reader::peek_tag() const {
  if (done()) return std::nullopt;
  return data_[pos_];
}

Field Reader::next() {
  if (data_.size() - pos_ < 5) fail("truncated TLV header");
  const std::uint8_t tag = data_[pos_];
  const std::uint32_t len = get_u32_be(data_.data() + pos_ + 1);
  if (data_.size() - pos_ - 5 < len) fail("TLV length exceeds input");
  Field f{tag, data_.subspan(pos_ + 5, len)};
  pos_ += 5 + std::size_t{len};
  return f;
}

ByteView Reader::expect(std::uint8_t tag) {
  Field f = next();
  if (f.tag != tag) {
    fail("unexpected tag " + std::to_string(f.tag) + ", wanted " +
         std::to_string(tag));
  }
  return f.value;
}

std::uint8_t Reader::expect_u8(std::uint8_t tag) {
  ByteView v = expect(tag);
  if (v.size() != 1) fail("tag " + std::to_string(tag) + " must be 1 byte");
  return v[0];
}

std::uint64_t Reader::expect_u64(std::uint8_t tag) {
  ByteView v = expect(tag);
  if (v.size() != 8) fail("tag " + std::to_string(tag) + " must be 8 bytes");
  return get_u64_be(v.data());
}

std::string Reader::expect_string(std::uint8_t tag) {
  ByteView v = expect(tag);
  if (!is_valid_utf8(v)) fail("invalid UTF-8");
  return std::string(v.begin(), v.end());
}

std::optional<ByteView> Reader::optional(std::uint8_t tag) {
  if (peek_tag() != tag) return std::nullopt;
  return next().value;
}

void Reader::finish() const {
  if (!done()) fail("trailing bytes after last record");
}

void Reader::fail(const std::string& what) const { throw Error(code_, what); }

bool is_valid_utf8(ByteView data) {
  std::size_t i = 0;
  while (i < data.size()) {
    const std::uint8_t c = data[i];
    std::size_t extra = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xe0) == 0xc0) {
      extra = 1;
      cp = c & 0x1f;
    } else if ((c & 0xf0) == 0xe0) {
      extra = 2;
      cp = c & 0x0f;
    } else if ((c & 0xf8) == 0xf0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (data.size() - i <= extra) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      if ((data[i + k] & 0xc0) != 0x80) return false;
      cp = (cp << 6) | (data[i + k] & 0x3f);
    }
    // Overlong forms, surrogates and values past U+10FFFF.
    static constexpr std::uint32_t kMin[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMin[extra] || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

}  // namespace pqcwc::tlv
