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

#include "pqcwc/envelope.h"

#include <openssl/evp.h>

#include <memory>
#include <string>
#include <utility>

#include "pqcwc/error.h"

namespace pqcwc {

namespace {

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter>;

CipherCtx new_ctx() {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw std::bad_alloc();
  return ctx;
}

const EVP_CIPHER* gcm_cipher(const SymmetricKey& key) {
  return key.size() == 16 ? EVP_aes_128_gcm() : EVP_aes_256_gcm();
}

[[noreturn]] void crypto_failure(const char* what) {
  throw Error(ErrorCode::kProtocolError, std::string("OpenSSL: ") + what);
}

}  // namespace

SymmetricKey::SymmetricKey(Bytes bytes) : bytes_(std::move(bytes)) {
  if (bytes_.size() != 16 && bytes_.size() != 32) {
    throw Error(ErrorCode::kInvalidParams,
                "AES key must be 16 or 32 bytes, got " +
                    std::to_string(bytes_.size()));
  }
}

SymmetricKey SymmetricKey::generate(RandomSource& rng, std::size_t length) {
  return SymmetricKey(rng.bytes(length));
}

Bytes SealedBox::serialize() const {
  Bytes out(nonce.begin(), nonce.end());
  append(out, ciphertext);
  return out;
}

SealedBox SealedBox::deserialize(ByteView data) {
  if (data.size() < kNonceBytes + kTagBytes) {
    throw Error(ErrorCode::kTamperDetected, "sealed box too short");
  }
  SealedBox box;
  std::copy_n(data.begin(), kNonceBytes, box.nonce.begin());
  box.ciphertext.assign(data.begin() + kNonceBytes, data.end());
  return box;
}

SealedBox seal(const SymmetricKey& key, ByteView plaintext, RandomSource& rng,
               ByteView aad) {
  SealedBox box;
  rng.fill(box.nonce);
  CipherCtx ctx = new_ctx();
  int len = 0;
  if (EVP_EncryptInit_ex(ctx.get(), gcm_cipher(key), nullptr,
                         key.bytes().data(), box.nonce.data()) != 1) {
    crypto_failure("EncryptInit");
  }
  if (!aad.empty() &&
      EVP_EncryptUpdate(ctx.get(), nullptr, &len, aad.data(),
                        static_cast<int>(aad.size())) != 1) {
    crypto_failure("EncryptUpdate(aad)");
  }
  box.ciphertext.resize(plaintext.size() + SealedBox::kTagBytes);
  if (!plaintext.empty() &&
      EVP_EncryptUpdate(ctx.get(), box.ciphertext.data(), &len,
                        plaintext.data(),
                        static_cast<int>(plaintext.size())) != 1) {
    crypto_failure("EncryptUpdate");
  }
  int tail = 0;
  if (EVP_EncryptFinal_ex(ctx.get(), box.ciphertext.data() + plaintext.size(),
                          &tail) != 1 ||
      tail != 0) {
    crypto_failure("EncryptFinal");
  }
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG,
                          SealedBox::kTagBytes,
                          box.ciphertext.data() + plaintext.size()) != 1) {
    crypto_failure("GET_TAG");
  }
  return box;
}

Bytes open(const SymmetricKey& key, const SealedBox& box, ByteView aad) {
  if (box.ciphertext.size() < SealedBox::kTagBytes) {
    throw Error(ErrorCode::kTamperDetected, "sealed box too short");
  }
  const std::size_t body = box.ciphertext.size() - SealedBox::kTagBytes;
  CipherCtx ctx = new_ctx();
  int len = 0;
  if (EVP_DecryptInit_ex(ctx.get(), gcm_cipher(key), nullptr,
                         key.bytes().data(), box.nonce.data()) != 1) {
    crypto_failure("DecryptInit");
  }
  if (!aad.empty() &&
      EVP_DecryptUpdate(ctx.get(), nullptr, &len, aad.data(),
                        static_cast<int>(aad.size())) != 1) {
    crypto_failure("DecryptUpdate(aad)");
  }
  Bytes plaintext(body);
  if (body > 0 &&
      EVP_DecryptUpdate(ctx.get(), plaintext.data(), &len,
                        box.ciphertext.data(), static_cast<int>(body)) != 1) {
    crypto_failure("DecryptUpdate");
  }
  Bytes tag(box.ciphertext.begin() + body, box.ciphertext.end());
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG,
                          SealedBox::kTagBytes, tag.data()) != 1) {
    crypto_failure("SET_TAG");
  }
  int tail = 0;
  if (EVP_DecryptFinal_ex(ctx.get(), plaintext.data() + body, &tail) != 1) {
    throw Error(ErrorCode::kTamperDetected, "authentication tag mismatch");
  }
  return plaintext;
}

Bytes derive_ra_seed(const SymmetricKey& q_ra, TimePeriod period) {
  Bytes block(8, 0);
  put_u64_be(block, period.value);
  Bytes out(16 + 16);
  CipherCtx ctx = new_ctx();
  const EVP_CIPHER* cipher =
      q_ra.size() == 16 ? EVP_aes_128_ecb() : EVP_aes_256_ecb();
  int len = 0;
  if (EVP_EncryptInit_ex(ctx.get(), cipher, nullptr, q_ra.bytes().data(),
                         nullptr) != 1 ||
      EVP_CIPHER_CTX_set_padding(ctx.get(), 0) != 1 ||
      EVP_EncryptUpdate(ctx.get(), out.data(), &len, block.data(), 16) != 1 ||
      len != 16) {
    crypto_failure("AES block");
  }
  out.resize(16);
  return out;
}

}  // namespace pqcwc
