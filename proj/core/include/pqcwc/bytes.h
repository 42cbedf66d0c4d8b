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

#ifndef PQCWC_BYTES_H_
#define PQCWC_BYTES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqcwc {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

std::string to_hex(ByteView data);
// Throws Error(InvalidParams) on odd length or a non-hex digit.
Bytes from_hex(std::string_view hex);

void append(Bytes& out, ByteView data);
void put_u16_be(Bytes& out, std::uint16_t v);
void put_u32_be(Bytes& out, std::uint32_t v);
void put_u64_be(Bytes& out, std::uint64_t v);

std::uint16_t get_u16_be(const std::uint8_t* p);
std::uint32_t get_u32_be(const std::uint8_t* p);
std::uint64_t get_u64_be(const std::uint8_t* p);

// Constant-time equality; false when the lengths differ.
bool ct_equal(ByteView a, ByteView b);

// True when `needle` occurs as a contiguous run inside `haystack`.
bool contains_subsequence(ByteView haystack, ByteView needle);

}  // namespace pqcwc

#endif  // PQCWC_BYTES_H_
