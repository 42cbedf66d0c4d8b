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

#include "pqcwc/hash_suite.h"

#include <openssl/evp.h>
#include <sodium.h>

#include <algorithm>
#include <cctype>
#include <mutex>
#include <string>

#include "pqcwc/error.h"

namespace pqcwc {

namespace {

struct AlgInfo {
  HashAlg alg;
  std::string_view name;
  std::size_t bits;
  const char* openssl_name;  // nullptr for BLAKE2b rows
};

constexpr std::array<AlgInfo, kNumHashAlgs> kAlgs = {{
    {HashAlg::kSha1, "SHA-1", 160, "SHA1"},
    {HashAlg::kSha224, "SHA-224", 224, "SHA2-224"},
    {HashAlg::kSha256, "SHA-256", 256, "SHA2-256"},
    {HashAlg::kSha384, "SHA-384", 384, "SHA2-384"},
    {HashAlg::kSha512, "SHA-512", 512, "SHA2-512"},
    {HashAlg::kSha3_224, "SHA3-224", 224, "SHA3-224"},
    {HashAlg::kSha3_256, "SHA3-256", 256, "SHA3-256"},
    {HashAlg::kSha3_384, "SHA3-384", 384, "SHA3-384"},
    {HashAlg::kSha3_512, "SHA3-512", 512, "SHA3-512"},
    {HashAlg::kBlake2_256, "BLAKE2-256", 256, nullptr},
    {HashAlg::kBlake2_384, "BLAKE2-384", 384, nullptr},
    {HashAlg::kBlake2_512, "BLAKE2-512", 512, nullptr},
}};

const AlgInfo& info(HashAlg alg) {
  auto index = static_cast<std::size_t>(alg);
  if (index >= kAlgs.size()) {
    throw Error(ErrorCode::kUnsupportedAlgorithm,
                "algorithm index " + std::to_string(index));
  }
  return kAlgs[index];
}

// Fetched EVP_MD objects live for the whole process.
const EVP_MD* fetch_md(HashAlg alg) {
  static std::array<EVP_MD*, kNumHashAlgs> cache{};
  static std::once_flag once;
  std::call_once(once, [] {
    for (const AlgInfo& a : kAlgs) {
      if (a.openssl_name != nullptr) {
        cache[static_cast<std::size_t>(a.alg)] =
            EVP_MD_fetch(nullptr, a.openssl_name, nullptr);
      }
    }
  });
  const EVP_MD* md = cache[static_cast<std::size_t>(alg)];
  if (md == nullptr) {
    throw Error(ErrorCode::kUnsupportedAlgorithm,
                std::string(info(alg).name) + " unavailable in OpenSSL");
  }
  return md;
}

void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) {
    throw Error(ErrorCode::kUnsupportedAlgorithm, "libsodium failed to start");
  }
}

}  // namespace

const std::array<HashAlg, kNumHashAlgs>& list_algorithms() {
  static const std::array<HashAlg, kNumHashAlgs> algs = [] {
    std::array<HashAlg, kNumHashAlgs> out{};
    for (std::size_t i = 0; i < kAlgs.size(); ++i) out[i] = kAlgs[i].alg;
    return out;
  }();
  return algs;
}

std::size_t digest_bits(HashAlg alg) { return info(alg).bits; }

std::string_view algorithm_name(HashAlg alg) { return info(alg).name; }

HashAlg parse_algorithm(std::string_view name) {
  auto upper = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
      return static_cast<char>(std::toupper(c));
    });
    return out;
  };
  const std::string wanted = upper(name);
  for (const AlgInfo& a : kAlgs) {
    if (a.name == wanted) return a.alg;
  }
  throw Error(ErrorCode::kUnsupportedAlgorithm, std::string(name));
}

HashAlg algorithm_from_index(std::uint8_t index) {
  if (index >= kNumHashAlgs) {
    throw Error(ErrorCode::kUnsupportedAlgorithm,
                "algorithm index " + std::to_string(index));
  }
  return static_cast<HashAlg>(index);
}

struct Hasher::Impl {
  const EVP_MD* md = nullptr;
  EVP_MD_CTX* ctx = nullptr;

  ~Impl() { EVP_MD_CTX_free(ctx); }
};

Hasher::Hasher(HashAlg alg)
    : alg_(alg), size_(info(alg).bits / 8), impl_(std::make_unique<Impl>()) {
  if (info(alg).openssl_name != nullptr) {
    impl_->md = fetch_md(alg);
    impl_->ctx = EVP_MD_CTX_new();
    if (impl_->ctx == nullptr) throw std::bad_alloc();
  } else {
    ensure_sodium();
  }
}

Hasher::~Hasher() = default;
Hasher::Hasher(Hasher&&) noexcept = default;
Hasher& Hasher::operator=(Hasher&&) noexcept = default;

void Hasher::digest(ByteView input, std::uint8_t* out) {
  if (impl_->md == nullptr) {
    crypto_generichash(out, size_, input.data(), input.size(), nullptr, 0);
    return;
  }
  unsigned int len = 0;
  if (EVP_DigestInit_ex2(impl_->ctx, impl_->md, nullptr) != 1 ||
      EVP_DigestUpdate(impl_->ctx, input.data(), input.size()) != 1 ||
      EVP_DigestFinal_ex(impl_->ctx, out, &len) != 1 || len != size_) {
    throw Error(ErrorCode::kUnsupportedAlgorithm,
                std::string(algorithm_name(alg_)) + " digest failed");
  }
}

Bytes Hasher::digest(ByteView input) {
  Bytes out(size_);
  digest(input, out.data());
  return out;
}

Bytes hash(HashAlg alg, ByteView input) {
  Hasher hasher(alg);
  return hasher.digest(input);
}

Bytes chain(HashAlg alg, ByteView x, std::uint64_t k) {
  if (k == 0) {
    info(alg);
    return Bytes(x.begin(), x.end());
  }
  Hasher hasher(alg);
  return chain(hasher, x, k);
}

Bytes chain(Hasher& hasher, ByteView x, std::uint64_t k) {
  if (k == 0) return Bytes(x.begin(), x.end());
  Bytes a(hasher.size());
  Bytes b(hasher.size());
  hasher.digest(x, a.data());
  for (std::uint64_t i = 1; i < k; ++i) {
    hasher.digest(a, b.data());
    a.swap(b);
  }
  return a;
}

}  // namespace pqcwc
