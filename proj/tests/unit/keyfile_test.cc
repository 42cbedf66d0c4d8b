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

#include <gtest/gtest.h>

#include <random>

#include "pqcwc/error.h"
#include "test_util.h"

namespace pqcwc {
namespace {

using testing::bytes_of;

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIoError;
}

TEST(KeyFileTest, LayoutAndRoundTrip) {
  ChainParams params(HashAlg::kSha384, 8, 4);
  KeyPair kp = generate_keypair(Bytes(32, 1), params);
  Bytes pub = encode_key(kp.public_key);
  ASSERT_GE(pub.size(), 12u);
  EXPECT_EQ(Bytes(pub.begin(), pub.begin() + 6), bytes_of("PQCWC1"));
  EXPECT_EQ(pub[6], 1);
  EXPECT_EQ(pub[7], algorithm_index(HashAlg::kSha384));
  EXPECT_EQ(pub[8], 8);
  EXPECT_EQ(pub[9], 4);
  EXPECT_EQ(get_u16_be(pub.data() + 10), 32);
  EXPECT_EQ(pub.size(), 12u + 32 * (2 + 48));
  EXPECT_EQ(decode_key(pub), kp.public_key);
  EXPECT_EQ(peek_file_kind(pub), FileKind::kPublicKey);

  Bytes priv = encode_key(kp.private_key);
  EXPECT_EQ(priv[6], 0);
  EXPECT_EQ(decode_key(priv), kp.private_key);
  EXPECT_EQ(decode_key(priv).role(), KeyRole::kPrivate);
}

TEST(KeyFileTest, UsedFlagPersists) {
  ChainParams params(HashAlg::kSha256, 8, 8);
  KeySequence sk = derive_private_key(Bytes(32, 2), params);
  sk.set_used(true);
  Bytes wire = encode_key(sk);
  EXPECT_EQ(wire[6], 0x80);
  EXPECT_EQ(peek_file_kind(wire), FileKind::kPrivateKey);
  EXPECT_TRUE(decode_key(wire).used());
  sk.set_used(false);
  EXPECT_FALSE(decode_key(encode_key(sk)).used());
}

TEST(KeyFileTest, SignatureRoundTripAndKindChecks) {
  ChainParams params(HashAlg::kBlake2_512, 16, 8);
  KeyPair kp = generate_keypair(Bytes(32, 3), params);
  Signature sig = sign(kp.private_key, bytes_of("msg"), params);
  Bytes wire = encode_signature(sig);
  EXPECT_EQ(wire[6], 2);
  EXPECT_EQ(decode_signature(wire), sig);
  EXPECT_EQ(code_of([&] { decode_key(wire); }), ErrorCode::kMalformedKey);
  EXPECT_EQ(code_of([&] { decode_signature(encode_key(kp.public_key)); }),
            ErrorCode::kMalformedSignature);
}

TEST(KeyFileTest, MalformedInputs) {
  ChainParams params(HashAlg::kSha256, 8, 8);
  Bytes wire = encode_key(derive_private_key(Bytes(32, 4), params));
  EXPECT_EQ(code_of([] { decode_key(bytes_of("PQCWC")); }),
            ErrorCode::kMalformedKey);
  Bytes bad = wire;
  bad[0] = 'X';
  EXPECT_EQ(code_of([&] { decode_key(bad); }), ErrorCode::kMalformedKey);
  bad = wire;
  bad[7] = 12;  // no such algorithm
  EXPECT_EQ(code_of([&] { decode_key(bad); }), ErrorCode::kMalformedKey);
  bad = wire;
  bad[8] = 3;  // 256 % 3 != 0
  EXPECT_EQ(code_of([&] { decode_key(bad); }), ErrorCode::kMalformedKey);
  bad = wire;
  bad[11] = 31;  // element count disagrees with w1
  EXPECT_EQ(code_of([&] { decode_key(bad); }), ErrorCode::kMalformedKey);
  bad = wire;
  bad.push_back(0);
  EXPECT_EQ(code_of([&] { decode_key(bad); }), ErrorCode::kMalformedKey);
  bad = wire;
  bad.pop_back();
  EXPECT_EQ(code_of([&] { decode_key(bad); }), ErrorCode::kMalformedKey);
  bad = wire;
  bad[6] = 5;
  EXPECT_EQ(code_of([&] { peek_file_kind(bad); }), ErrorCode::kMalformedKey);
}

TEST(KeyFileTest, FuzzNeverCrashes) {
  std::mt19937_64 rng(40);
  ChainParams params(HashAlg::kSha1, 16, 8);
  Bytes wire = encode_key(generate_keypair(Bytes(32, 5), params).public_key);
  for (int i = 0; i < 500; ++i) {
    Bytes bad = testing::mutate(rng, wire);
    try {
      KeySequence k = decode_key(bad);
      EXPECT_EQ(encode_key(k), bad);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformedKey);
    }
  }
}

TEST(ArmorTest, RoundTripAndHeaders) {
  ChainParams params(HashAlg::kSha3_256, 8, 8);
  KeyPair kp = generate_keypair(Bytes(32, 6), params);
  Bytes wire = encode_key(kp.public_key);
  std::string text = armor(wire);
  EXPECT_EQ(text.rfind("-----BEGIN PQCWC PUBLIC KEY-----\n", 0), 0u);
  EXPECT_NE(text.find("Algorithm: SHA3-256\n"), std::string::npos);
  EXPECT_NE(text.find("W1: 8\n"), std::string::npos);
  EXPECT_NE(text.find("Elements: 32\n"), std::string::npos);
  EXPECT_NE(text.find("Used: no\n"), std::string::npos);
  EXPECT_NE(text.find("-----END PQCWC PUBLIC KEY-----\n"), std::string::npos);
  EXPECT_EQ(dearmor(text), wire);
  EXPECT_EQ(load_key_material(bytes_of(text)), wire);
  EXPECT_EQ(load_key_material(wire), wire);

  Signature sig = sign(kp.private_key, bytes_of("x"), params);
  std::string sig_text = armor(encode_signature(sig));
  EXPECT_NE(sig_text.find("BEGIN PQCWC SIGNATURE"), std::string::npos);
  EXPECT_EQ(sig_text.find("Used:"), std::string::npos);
}

TEST(ArmorTest, Errors) {
  ChainParams params(HashAlg::kSha256, 8, 8);
  std::string text = armor(encode_key(derive_private_key(Bytes(32, 7), params)));
  EXPECT_EQ(code_of([&] { dearmor(text.substr(0, text.size() / 2)); }),
            ErrorCode::kMalformedKey);
  std::string mismatched = text;
  mismatched.replace(mismatched.rfind("PRIVATE"), 7, "PUBLIC!");
  EXPECT_EQ(code_of([&] { dearmor(mismatched); }), ErrorCode::kMalformedKey);
  EXPECT_EQ(code_of([] { load_key_material(bytes_of("hello")); }),
            ErrorCode::kMalformedKey);
  std::string bad_hex = text;
  bad_hex[bad_hex.find("\n\n") + 2] = 'z';
  EXPECT_EQ(code_of([&] { load_key_material(bytes_of(bad_hex)); }),
            ErrorCode::kMalformedKey);
}

}  // namespace
}  // namespace pqcwc
