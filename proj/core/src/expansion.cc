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

#include "pqcwc/expansion.h"

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>

#include "pqcwc/error.h"
#include "pqcwc/hash_suite.h"

namespace pqcwc {

namespace {

constexpr std::string_view kEvMagic = "PQCWCEV";

void require_role(const KeySequence& key, KeyRole role) {
  if (key.role() != role) {
    throw Error(ErrorCode::kWrongKeyRole,
                role == KeyRole::kPrivate ? "expected a private key"
                                          : "expected a public key");
  }
}

void require_compatible(const KeySequence& key, const ExpansionVector& ev) {
  if (ev.size() != key.size()) {
    throw Error(ErrorCode::kParamsMismatch,
                "expansion vector has " + std::to_string(ev.size()) +
                    " entries, key has " + std::to_string(key.size()));
  }
  if (ev.w2() != key.params().w2()) {
    throw Error(ErrorCode::kParamsMismatch, "expansion vector w2 differs");
  }
}

KeySequence advance_chains(const KeySequence& key,
                    std::span<const std::uint64_t> steps) {
  Hasher hasher(key.params().alg());
  std::vector<Bytes> elements;
  elements.reserve(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) {
    elements.push_back(chain(hasher, key[i], steps[i]));
  }
  return KeySequence(key.role(), std::move(elements), key.params());
}

KeySequence expand_fixed(const KeySequence& key, const ChainParams& params) {
  if (!(key.params() == params)) {
    throw Error(ErrorCode::kParamsMismatch, "key parameters differ");
  }
  std::vector<std::uint64_t> steps(key.size(), params.max_expansion());
  return advance_chains(key, steps);
}

KeySequence expand_by_vector(const KeySequence& key,
                             const ExpansionVector& ev) {
  require_compatible(key, ev);
  if (ev.is_zero()) {
    throw Error(ErrorCode::kDegenerateSeed,
                "all-zero expansion vector leaves the key unchanged");
  }
  std::vector<std::uint64_t> steps(ev.values().begin(), ev.values().end());
  return advance_chains(key, steps);
}

}  // namespace

ExpansionVector::ExpansionVector(
    std::vector<std::uint32_t> values, unsigned w2,
    std::optional<std::array<std::uint8_t, 16>> seed_id)
    : values_(std::move(values)), w2_(w2), seed_id_(seed_id) {
  if (w2_ < 1 || w2_ > ChainParams::kMaxWidth) {
    throw Error(ErrorCode::kInvalidParams,
                "w2 must be in [1, 16], got " + std::to_string(w2_));
  }
  const std::uint32_t bound = 1u << w2_;
  for (std::uint32_t v : values_) {
    if (v >= bound) {
      throw Error(ErrorCode::kInvalidParams,
                  "expansion value " + std::to_string(v) + " out of range");
    }
  }
}

bool ExpansionVector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](std::uint32_t v) { return v == 0; });
}

Bytes ExpansionVector::serialize() const {
  Bytes out(kEvMagic.begin(), kEvMagic.end());
  out.push_back(static_cast<std::uint8_t>(w2_));
  put_u16_be(out, static_cast<std::uint16_t>(values_.size()));
  for (std::uint32_t v : values_) put_u16_be(out, static_cast<std::uint16_t>(v));
  return out;
}

ExpansionVector ExpansionVector::deserialize(ByteView data) {
  const std::size_t header = kEvMagic.size() + 3;
  if (data.size() < header ||
      !std::equal(kEvMagic.begin(), kEvMagic.end(), data.begin())) {
    throw Error(ErrorCode::kMalformedMessage, "not an expansion vector");
  }
  const unsigned w2 = data[kEvMagic.size()];
  const std::size_t m = get_u16_be(data.data() + kEvMagic.size() + 1);
  if (data.size() != header + 2 * m) {
    throw Error(ErrorCode::kMalformedMessage,
                "expansion vector length does not match its count");
  }
  std::vector<std::uint32_t> values(m);
  for (std::size_t i = 0; i < m; ++i) {
    values[i] = get_u16_be(data.data() + header + 2 * i);
  }
  try {
    return ExpansionVector(std::move(values), w2);
  } catch (const Error& e) {
    throw Error(ErrorCode::kMalformedMessage, e.what());
  }
}

ExpansionVector derive_expansion_vector(ByteView seed, std::size_t m,
                                        unsigned w2) {
  if (seed.empty()) {
    throw Error(ErrorCode::kInvalidParams, "expansion seed is empty");
  }
  if (m == 0 || m > 0xffff) {
    throw Error(ErrorCode::kInvalidParams, "element count out of range");
  }
  if (w2 < 1 || w2 > ChainParams::kMaxWidth) {
    throw Error(ErrorCode::kInvalidParams,
                "w2 must be in [1, 16], got " + std::to_string(w2));
  }
  Hasher sha256(HashAlg::kSha256);
  Bytes input(seed.begin(), seed.end());
  const std::size_t base = input.size();
  input.resize(base + 4);
  const std::uint32_t mask = (1u << w2) - 1;
  std::vector<std::uint32_t> values(m);
  std::uint8_t digest[32];
  for (std::size_t i = 0; i < m; ++i) {
    auto index = static_cast<std::uint32_t>(i);
    input[base] = static_cast<std::uint8_t>(index >> 24);
    input[base + 1] = static_cast<std::uint8_t>(index >> 16);
    input[base + 2] = static_cast<std::uint8_t>(index >> 8);
    input[base + 3] = static_cast<std::uint8_t>(index);
    sha256.digest(input, digest);
    values[i] = get_u32_be(digest) & mask;
  }
  std::array<std::uint8_t, 16> id{};
  sha256.digest(seed, digest);
  std::copy_n(digest, id.size(), id.begin());
  ExpansionVector ev(std::move(values), w2, id);
  if (ev.is_zero()) {
    throw Error(ErrorCode::kDegenerateSeed,
                "seed produced an all-zero expansion vector");
  }
  return ev;
}

KeySequence expand_public_model1(const KeySequence& public_key,
                                 const ChainParams& params) {
  require_role(public_key, KeyRole::kPublic);
  return expand_fixed(public_key, params);
}

KeySequence expand_private_model1(const KeySequence& private_key,
                                  const ChainParams& params) {
  require_role(private_key, KeyRole::kPrivate);
  return expand_fixed(private_key, params);
}

KeySequence expand_public_model2(const KeySequence& public_key,
                                 const ExpansionVector& ev) {
  require_role(public_key, KeyRole::kPublic);
  return expand_by_vector(public_key, ev);
}

KeySequence expand_private_model2(const KeySequence& private_key,
                                  const ExpansionVector& ev) {
  require_role(private_key, KeyRole::kPrivate);
  return expand_by_vector(private_key, ev);
}

KeySequence compose_butterfly(const KeySequence& base,
                              const ExpansionVector& ev_ra,
                              const ExpansionVector& ev_ca) {
  require_compatible(base, ev_ra);
  require_compatible(base, ev_ca);
  if (ev_ra.is_zero() && ev_ca.is_zero()) {
    throw Error(ErrorCode::kDegenerateSeed,
                "both expansion stages are all-zero");
  }
  std::vector<std::uint64_t> steps(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    steps[i] = std::uint64_t{ev_ra[i]} + ev_ca[i];
  }
  return advance_chains(base, steps);
}

}  // namespace pqcwc
