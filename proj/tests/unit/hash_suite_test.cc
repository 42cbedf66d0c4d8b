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

#include <gtest/gtest.h>

#include <random>

#include "pqcwc/error.h"
#include "test_util.h"

namespace pqcwc {
namespace {

using testing::oracle_chain;
using testing::random_bytes;

TEST(HashSuiteTest, ListsTwelveAlgorithmsInTableOrder) {
  const auto& algs = list_algorithms();
  ASSERT_EQ(algs.size(), 12u);
  EXPECT_EQ(algs.front(), HashAlg::kSha1);
  EXPECT_EQ(algs.back(), HashAlg::kBlake2_512);
  EXPECT_EQ(&list_algorithms(), &algs);
  for (std::size_t i = 0; i < algs.size(); ++i) {
    EXPECT_EQ(algorithm_index(algs[i]), i);
  }
}

TEST(HashSuiteTest, DigestLengthsMatchTable) {
  const std::size_t expected[] = {160, 224, 256, 384, 512, 224,
                                  256, 384, 512, 256, 384, 512};
  const char* names[] = {"SHA-1",    "SHA-224",    "SHA-256",    "SHA-384",
                         "SHA-512",  "SHA3-224",   "SHA3-256",   "SHA3-384",
                         "SHA3-512", "BLAKE2-256", "BLAKE2-384", "BLAKE2-512"};
  for (std::size_t i = 0; i < 12; ++i) {
    HashAlg alg = list_algorithms()[i];
    EXPECT_EQ(digest_bits(alg), expected[i]);
    EXPECT_EQ(algorithm_name(alg), names[i]);
    EXPECT_EQ(hash(alg, as_bytes("x")).size() * 8, expected[i]);
  }
}

TEST(HashSuiteTest, KnownAnswers) {
  EXPECT_EQ(to_hex(hash(HashAlg::kSha256, {})),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(to_hex(hash(HashAlg::kSha3_256, as_bytes("abc"))),
            "3a985da74fe225b2045c172d6bd390bd855f086e3e9d525b46bfe24511431532");
  // BLAKE2b with a 32/48/64-byte output parameter (hashlib.blake2b).
  EXPECT_EQ(to_hex(hash(HashAlg::kBlake2_256, as_bytes("abc"))),
            "bddd813c634239723171ef3fee98579b94964e3bb1cb3e427262c8c068d52319");
  EXPECT_EQ(to_hex(hash(HashAlg::kBlake2_384, as_bytes("abc"))),
            "6f56a82c8e7ef526dfe182eb5212f7db9df1317e57815dbda46083fc30f54ee6"
            "c66ba83be64b302d7cba6ce15bb556f4");
  EXPECT_EQ(to_hex(hash(HashAlg::kBlake2_512, as_bytes("abc"))),
            "ba80a53f981c4d0d6a2797b69f12f6e94c212f14685ac4b74b12bb6fdbffa2d1"
            "7d87c5392aab792dc252d5de4533cc9518d38aa8dbf1925ab92386edd4009923");
}

TEST(HashSuiteTest, Deterministic) {
  for (HashAlg alg : list_algorithms()) {
    EXPECT_EQ(hash(alg, as_bytes("same input")),
              hash(alg, as_bytes("same input")));
  }
}

TEST(HashSuiteTest, ParsesNamesCaseInsensitively) {
  EXPECT_EQ(parse_algorithm("SHA3-256"), HashAlg::kSha3_256);
  EXPECT_EQ(parse_algorithm("blake2-512"), HashAlg::kBlake2_512);
  EXPECT_EQ(parse_algorithm("Sha-1"), HashAlg::kSha1);
  for (HashAlg alg : list_algorithms()) {
    EXPECT_EQ(parse_algorithm(algorithm_name(alg)), alg);
  }
}

TEST(HashSuiteTest, RejectsUnknownAlgorithms) {
  auto expect_unsupported = [](auto&& fn) {
    try {
      fn();
      FAIL() << "expected UnsupportedAlgorithm";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kUnsupportedAlgorithm);
    }
  };
  expect_unsupported([] { parse_algorithm("MD5"); });
  expect_unsupported([] { parse_algorithm("SHA3-1024"); });
  expect_unsupported([] { algorithm_from_index(12); });
  expect_unsupported([] { hash(static_cast<HashAlg>(40), {}); });
  expect_unsupported([] { chain(static_cast<HashAlg>(12), {}, 0); });
}

TEST(ChainTest, ZeroStepsIsIdentity) {
  std::mt19937_64 rng(1);
  for (HashAlg alg : list_algorithms()) {
    Bytes x = random_bytes(rng, 32);
    EXPECT_EQ(chain(alg, x, 0), x);
  }
}

TEST(ChainTest, Sha256ZeroInput255Steps) {
  // Frozen from an independent Python loop over hashlib.sha256.
  const Bytes zero(32, 0);
  const std::string expected =
      "49b85ae5536901b2da5e912fd05a88922223194146c668a7cdaaddc79563018e";
  EXPECT_EQ(to_hex(chain(HashAlg::kSha256, zero, 255)), expected);
  EXPECT_EQ(to_hex(oracle_chain(HashAlg::kSha256, zero, 255)), expected);
}

TEST(ChainTest, MatchesBruteForceForEveryAlgorithm) {
  std::mt19937_64 rng(2);
  for (HashAlg alg : list_algorithms()) {
    Bytes x = random_bytes(rng, 32);
    for (std::uint64_t k : {1u, 2u, 17u, 255u}) {
      EXPECT_EQ(chain(alg, x, k), oracle_chain(alg, x, k))
          << algorithm_name(alg) << " k=" << k;
    }
  }
}

TEST(ChainTest, CompositionLaw) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> steps(0, 64);
  for (HashAlg alg : list_algorithms()) {
    Hasher hasher(alg);
    for (int trial = 0; trial < 8; ++trial) {
      Bytes x = random_bytes(rng, 1 + rng() % 80);
      std::uint64_t a = steps(rng);
      std::uint64_t b = steps(rng);
      EXPECT_EQ(chain(hasher, chain(hasher, x, a), b), chain(hasher, x, a + b))
          << algorithm_name(alg) << " a=" << a << " b=" << b;
    }
  }
}

TEST(ChainTest, PerformsExactlyKHashCalls) {
  for (HashAlg alg : {HashAlg::kSha1, HashAlg::kSha3_384, HashAlg::kBlake2_256}) {
    for (std::uint64_t k : {0u, 1u, 5u, 64u}) {
      std::uint64_t calls = 0;
      auto counting = [&](ByteView in) {
        ++calls;
        return hash(alg, in);
      };
      Bytes x(32, 0x5a);
      Bytes out = iterate_hash(counting, x, k);
      EXPECT_EQ(calls, k);
      EXPECT_EQ(out, chain(alg, x, k));
    }
  }
}

TEST(ChainTest, OutputLengthIsDigestLengthAfterFirstStep) {
  Bytes x(7, 1);
  for (HashAlg alg : list_algorithms()) {
    EXPECT_EQ(chain(alg, x, 3).size(), digest_bytes(alg));
  }
}

}  // namespace
}  // namespace pqcwc
