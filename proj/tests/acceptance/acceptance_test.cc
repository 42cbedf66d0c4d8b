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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pqcwc/actors.h"
#include "pqcwc/bench.h"
#include "pqcwc/error.h"
#include "pqcwc/expansion.h"
#include "pqcwc/hash_suite.h"
#include "pqcwc/kem.h"
#include "pqcwc/messages.h"
#include "pqcwc/protocol.h"
#include "pqcwc/random.h"
#include "pqcwc/stats.h"
#include "pqcwc/wots.h"
#include "pqcwc_cli/cli.h"
#include "test_util.h"

namespace pqcwc {
namespace {

using testing::oracle_chain;
using testing::random_bytes;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

const char kTableW8[] =
    "hash_algorithm,hash_bits,w1,m,signature_bits\n"
    "SHA-1,160,8,32,5120\n"
    "SHA-224,224,8,32,7168\n"
    "SHA-256,256,8,32,8192\n"
    "SHA-384,384,8,32,12288\n"
    "SHA-512,512,8,32,16384\n"
    "SHA3-224,224,8,32,7168\n"
    "SHA3-256,256,8,32,8192\n"
    "SHA3-384,384,8,32,12288\n"
    "SHA3-512,512,8,32,16384\n"
    "BLAKE2-256,256,8,32,8192\n"
    "BLAKE2-384,384,8,32,12288\n"
    "BLAKE2-512,512,8,32,16384\n";

const char kTableW16[] =
    "hash_algorithm,hash_bits,w1,m,signature_bits\n"
    "SHA-1,160,16,16,2560\n"
    "SHA-224,224,16,16,3584\n"
    "SHA-256,256,16,16,4096\n"
    "SHA-384,384,16,16,6144\n"
    "SHA-512,512,16,16,8192\n"
    "SHA3-224,224,16,16,3584\n"
    "SHA3-256,256,16,16,4096\n"
    "SHA3-384,384,16,16,6144\n"
    "SHA3-512,512,16,16,8192\n"
    "BLAKE2-256,256,16,16,4096\n"
    "BLAKE2-384,384,16,16,6144\n"
    "BLAKE2-512,512,16,16,8192\n";

Outcome length_tables() {
  Outcome o;
  auto start = Clock::now();
  const std::pair<const char*, const char*> tables[] = {{"8", kTableW8},
                                                        {"16", kTableW16}};
  for (auto [w1, golden] : tables) {
    std::ostringstream out, err;
    int code = cli::run_cli({"table-lengths", "--w1", w1}, out, err);
    o.require(code == cli::kExitOk, std::string("exit code for w1 = ") + w1);
    o.require(out.str() == golden, std::string("table mismatch at w1 = ") + w1);
  }
  double elapsed = seconds_since(start);
  o.require(elapsed < 1.0, fmt("took %.3f s", elapsed));
  if (o.pass) o.detail = "24 rows match, " + fmt("%.3f s", elapsed);
  return o;
}

// Expected length: zero digits reveal the 32-byte a_i, all others are digests.
std::size_t expected_signature_bits(ByteView message, const ChainParams& p) {
  std::size_t bits = 0;
  for (std::uint32_t d : digest_to_elements(message, p).values) {
    bits += d == 0 ? 256 : digest_bits(p.alg());
  }
  return bits;
}

void wots_pairs(Outcome& o, std::mt19937_64& rng, unsigned w1, int pairs) {
  for (HashAlg alg : list_algorithms()) {
    ChainParams p(alg, w1, 8);
    for (int i = 0; i < pairs; ++i) {
      KeyPair kp = generate_keypair(random_bytes(rng, 32), p);
      Bytes msg = random_bytes(rng, 1 + rng() % 200);
      Signature sig = sign(kp.private_key, msg, p);
      const std::string where = std::string(algorithm_name(alg)) +
                                " w1=" + std::to_string(w1);
      o.require(sig.elements.size() == p.m(), "element count, " + where);
      o.require(sig.bit_length() == expected_signature_bits(msg, p),
                "signature length, " + where);
      o.require(verify(kp.public_key, msg, sig, p), "valid rejected, " + where);
      Signature bad = sig;
      Bytes& elem = bad.elements[rng() % bad.elements.size()];
      const std::size_t bit = rng() % (elem.size() * 8);
      elem[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
      o.require(!verify(kp.public_key, msg, bad, p),
                "bit flip accepted, " + where);
    }
  }
}

Outcome wots_round_trip() {
  Outcome o;
  std::mt19937_64 rng(2);
  auto start = Clock::now();
  wots_pairs(o, rng, 8, 25);
  const double t8 = seconds_since(start);
  o.require(t8 < 60.0, fmt("w1 = 8 took %.1f s", t8));
  start = Clock::now();
  wots_pairs(o, rng, 16, 5);
  const double t16 = seconds_since(start);
  if (o.pass) {
    o.detail = fmt("300 pairs at w1 = 8 in %.1f s, 60 pairs at w1 = 16 in %.1f s",
                   t8, t16);
  }
  return o;
}

bool chain_relation_holds(HashAlg alg, const KeySequence& priv,
                          const KeySequence& pub, unsigned w1) {
  if (priv.size() != pub.size()) return false;
  for (std::size_t i = 0; i < priv.size(); ++i) {
    if (oracle_chain(alg, priv.elements()[i], (1u << w1) - 1) !=
        pub.elements()[i]) {
      return false;
    }
  }
  return true;
}

ExpansionVector fresh_vector(std::mt19937_64& rng, std::size_t m,
                             unsigned w2) {
  for (;;) {
    try {
      return derive_expansion_vector(random_bytes(rng, 32), m, w2);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegenerateSeed) throw;
    }
  }
}

void check_expanded(Outcome& o, std::mt19937_64& rng, const KeySequence& priv,
                    const KeySequence& pub, const ChainParams& p,
                    const std::string& where) {
  o.require(chain_relation_holds(p.alg(), priv, pub, p.w1()),
            "chain relation, " + where);
  Bytes msg = random_bytes(rng, 64);
  Signature sig = sign(priv, msg, p);
  o.require(verify(pub, msg, sig, p), "round trip, " + where);
  Bytes other = msg;
  other[0] ^= 1;
  o.require(!verify(pub, other, sig, p), "wrong message accepted, " + where);
}

Outcome expansion_correctness() {
  Outcome o;
  std::mt19937_64 rng(3);
  int cases = 0;
  for (HashAlg alg : list_algorithms()) {
    for (unsigned w2 : {4u, 8u}) {
      ChainParams p(alg, 8, w2);
      const std::string where = std::string(algorithm_name(alg)) +
                                " w2=" + std::to_string(w2);
      KeyPair kp = generate_keypair(random_bytes(rng, 32), p);

      KeySequence pub1 = expand_public_model1(kp.public_key, p);
      check_expanded(o, rng, expand_private_model1(kp.private_key, p), pub1, p,
                     "model 1, " + where);

      ExpansionVector ev = fresh_vector(rng, p.m(), w2);
      check_expanded(o, rng, expand_private_model2(kp.private_key, ev),
                     expand_public_model2(kp.public_key, ev), p,
                     "model 2, " + where);

      ExpansionVector ev_ca = fresh_vector(rng, p.m(), w2);
      check_expanded(o, rng, compose_butterfly(kp.private_key, ev, ev_ca),
                     compose_butterfly(kp.public_key, ev, ev_ca), p,
                     "butterfly, " + where);

      ExpansionVector all_max(
          std::vector<std::uint32_t>(p.m(), (1u << w2) - 1), w2);
      o.require(expand_public_model2(kp.public_key, all_max) == pub1,
                "model 1 differs from all-max model 2, " + where);
      cases += 3;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(cases) +
               " expansions over 12 algorithms, model 1 equals all-max model 2";
  }
  return o;
}

// One butterfly issuance over the bus, with an observer holding both KEM
// secret keys.
struct BkeRun {
  HashAlg alg;
  Bytes seed;
  KeyPair caterpillar;
  IssuedCredential credential;
  KeySequence expected_public;
  KeySequence expected_private;
  std::vector<Delivery> log;
  ActorTranscript ra_transcript;
  ActorTranscript ca_transcript;
  KeySequence ca_signing_key;
};

BkeRun run_observed_bke(HashAlg alg, std::uint64_t seed_value) {
  InsecureTestKem kem;
  SeededRandom rng(seed_value);
  KemKeyPair ra_keys = kem.generate_keypair(rng);
  KemKeyPair ca_keys = kem.generate_keypair(rng);
  const TimePeriod period{1700000000 + seed_value};
  ChainParams p(alg, 8, 8);

  MessageBus bus;
  EndEntity ee(kem, rng);
  RegistrationAuthority ra(kem, ra_keys, period);
  CertificateAuthority ca(kem, ca_keys, CaIdentity::from_seed(rng.bytes(32)),
                          rng);
  Bytes seed = rng.bytes(32);
  IssuedCredential cred = run_bke_flow(bus, ee, ra, ca, seed, p,
                                       testing::sample_subject());

  const std::vector<Delivery>& log = bus.log();
  BkeRequest request = decode_bke_request(log.at(0).bytes);
  SymmetricKey q_ra = unseal_key(kem, ra_keys.secret_key, request.sealed_q_ra);
  SymmetricKey q_ca = unseal_key(kem, ca_keys.secret_key, request.sealed_q_ca);
  ExpansionVector e_ra = ra_expansion_vector(q_ra, period, p);
  BkeResponse response = decode_bke_response(log.at(2).bytes);
  auto [cert, r_ca] = split_bke_payload(open(q_ca, response.sealed_payload));
  ExpansionVector e_ca = derive_expansion_vector(r_ca, p.m(), p.w2());

  KeyPair caterpillar = generate_keypair(seed, p);
  KeySequence expected_public =
      compose_butterfly(request.public_key, e_ra, e_ca);
  KeySequence expected_private =
      compose_butterfly(caterpillar.private_key, e_ra, e_ca);
  return BkeRun{alg,
                seed,
                std::move(caterpillar),
                std::move(cred),
                std::move(expected_public),
                std::move(expected_private),
                log,
                ra.transcript(),
                ca.transcript(),
                ca.signing_public_key()};
}

std::vector<BkeRun> g_bke_runs;

Outcome butterfly_end_to_end() {
  Outcome o;
  std::mt19937_64 rng(4);
  auto start = Clock::now();
  std::uint64_t seed_value = 400;
  for (HashAlg alg : list_algorithms()) {
    BkeRun run = run_observed_bke(alg, ++seed_value);
    const std::string where(algorithm_name(alg));
    const ChainParams& p = run.expected_public.params();
    o.require(run.credential.certificate.public_key == run.expected_public,
              "certificate key differs from the observer's B'', " + where);
    o.require(run.credential.private_key == run.expected_private,
              "private key differs from the observer's A'', " + where);
    o.require(verify_certificate_issuer(run.credential.certificate,
                                        run.ca_signing_key),
              "issuer signature, " + where);
    for (int i = 0; i < 20; ++i) {
      Bytes msg = random_bytes(rng, 1 + rng() % 100);
      Signature sig = sign(run.credential.private_key, msg, p);
      o.require(verify(run.credential.certificate.public_key, msg, sig, p),
                "message round trip, " + where);
    }
    g_bke_runs.push_back(std::move(run));
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 30.0, fmt("took %.1f s", elapsed));
  if (o.pass) {
    o.detail = fmt("12 algorithms, 240 messages, %.2f s", elapsed);
  }
  return o;
}

bool contains_bytes(ByteView haystack, ByteView needle) {
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

Outcome actor_visibility() {
  Outcome o;
  o.require(!g_bke_runs.empty(), "no butterfly runs recorded");
  std::size_t messages_to_ca = 0;
  for (const BkeRun& run : g_bke_runs) {
    const std::string where(algorithm_name(run.alg));
    const KeySequence& b2 = run.credential.certificate.public_key;
    const KeySequence& a2 = run.credential.private_key;
    const KeySequence& b = run.caterpillar.public_key;
    const KeySequence& a = run.caterpillar.private_key;
    o.require(!run.ra_transcript.contains(b2), "RA saw B'', " + where);
    o.require(!run.ra_transcript.contains(a2), "RA saw A'', " + where);
    o.require(!run.ca_transcript.contains(b), "CA saw B, " + where);
    o.require(!run.ca_transcript.contains(a), "CA saw A, " + where);
    o.require(run.ra_transcript.contains(b), "RA transcript lacks B, " + where);
    o.require(run.ca_transcript.contains(b2),
              "CA transcript lacks B'', " + where);
    for (const Delivery& d : run.log) {
      for (const Bytes& a_i : a.elements()) {
        o.require(!contains_bytes(d.bytes, a_i),
                  "a private element crossed the bus, " + where);
      }
      if (d.to == Actor::kCertificateAuthority) {
        ++messages_to_ca;
        for (const Bytes& b_i : b.elements()) {
          o.require(!contains_bytes(d.bytes, b_i),
                    "an element of B reached the CA, " + where);
        }
      }
      if (d.to == Actor::kRegistrationAuthority) {
        for (const Bytes& e : b2.elements()) {
          o.require(!contains_bytes(d.bytes, e),
                    "an element of B'' reached the RA, " + where);
        }
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(g_bke_runs.size()) + " runs, " +
               std::to_string(messages_to_ca) +
               " messages to the CA scanned element by element";
  }
  return o;
}

void flip_byte(Bytes& data, std::mt19937_64& rng) {
  data[rng() % data.size()] ^= static_cast<std::uint8_t>(1 + rng() % 255);
}

SealedKey corrupt(const SealedKey& sk, std::mt19937_64& rng) {
  Bytes flat = sk.kem_ciphertext;
  append(flat, sk.box.serialize());
  flip_byte(flat, rng);
  const std::size_t n = sk.kem_ciphertext.size();
  return SealedKey{Bytes(flat.begin(), flat.begin() + n),
                   SealedBox::deserialize(ByteView(flat).subspan(n))};
}

SealedBox corrupt(const SealedBox& box, std::mt19937_64& rng) {
  Bytes flat = box.serialize();
  flip_byte(flat, rng);
  return SealedBox::deserialize(flat);
}

// Each trial rewrites one envelope inside a well-formed frame and hands it to
// the actor that opens it.
bool envelope_trial(int kind, std::uint64_t trial, std::mt19937_64& flips) {
  InsecureTestKem kem;
  SeededRandom rng(6000 + trial);
  KemKeyPair ra_keys = kem.generate_keypair(rng);
  KemKeyPair ca_keys = kem.generate_keypair(rng);
  const TimePeriod period{trial};
  ChainParams p(HashAlg::kSha256, 8, 8);
  EndEntity ee(kem, rng);
  RegistrationAuthority ra(kem, ra_keys, period);
  CertificateAuthority ca(kem, ca_keys, CaIdentity::from_seed(rng.bytes(32)),
                          rng);
  Bytes seed = rng.bytes(32);
  SubjectInfo subject = testing::sample_subject();
  try {
    if (kind < 2) {
      Bytes request_bytes = ee.request_model2(seed, p, subject,
                                              ca.kem_public_key());
      if (kind == 0) {
        CertRequestM2 request = decode_cert_request_m2(request_bytes);
        request.sealed_q3 = corrupt(request.sealed_q3, flips);
        ca.handle(encode_message(request));
      } else {
        CaResponseM2 response = decode_ca_response_m2(ca.handle(request_bytes));
        response.sealed_r4 = corrupt(response.sealed_r4, flips);
        ee.finalize_model2(encode_message(response));
      }
    } else {
      Bytes request_bytes =
          ee.request_bke(seed, p, subject, ra.kem_public_key(),
                         ca.kem_public_key(), period);
      if (kind == 2) {
        BkeRequest request = decode_bke_request(request_bytes);
        request.sealed_q_ra = corrupt(request.sealed_q_ra, flips);
        ra.handle(encode_message(request));
      } else if (kind == 3) {
        BkeRequest request = decode_bke_request(request_bytes);
        request.sealed_q_ca = corrupt(request.sealed_q_ca, flips);
        ca.handle(ra.handle(encode_message(request)));
      } else {
        BkeResponse response =
            decode_bke_response(ca.handle(ra.handle(request_bytes)));
        response.sealed_payload = corrupt(response.sealed_payload, flips);
        ee.finalize_bke(ra.handle(encode_message(response)), period);
      }
    }
  } catch (const Error& e) {
    return e.code() == ErrorCode::kTamperDetected;
  }
  return false;
}

Outcome envelope_integrity() {
  Outcome o;
  const char* names[] = {"q3'", "r4", "q_RA'", "q_CA'", "Z"};
  std::mt19937_64 flips(6);
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    const int kind = static_cast<int>(trial % 5);
    o.require(envelope_trial(kind, trial, flips),
              std::string("corrupted ") + names[kind] +
                  " not rejected as tampered, trial " + std::to_string(trial));
  }
  if (o.pass) o.detail = "100 corruptions, 20 per envelope, all TamperDetected";
  return o;
}

Outcome timing_and_statistics() {
  Outcome o;
  bench::BenchConfig config;
  config.algorithms.assign(list_algorithms().begin(), list_algorithms().end());
  config.w1 = 8;
  config.w2 = 8;
  config.iterations = 1000;
  config.seed = 7;
  config.operations = {bench::BenchOp::kKeygen, bench::BenchOp::kExpandM2,
                       bench::BenchOp::kSignOrig, bench::BenchOp::kSignM1,
                       bench::BenchOp::kSignM2};
  auto start = Clock::now();
  bench::BenchResult result = bench::run_bench(config);
  const double elapsed = seconds_since(start);

  std::vector<double> keygen = result.means(bench::BenchOp::kKeygen);
  std::vector<double> expand = result.means(bench::BenchOp::kExpandM2);
  int faster = 0;
  for (std::size_t i = 0; i < keygen.size(); ++i) {
    if (expand[i] < keygen[i]) ++faster;
  }
  o.require(faster >= 10, "expand_m2 beat keygen for only " +
                              std::to_string(faster) + " of 12 algorithms");

  std::vector<bench::OpComparison> sign_pairs = bench::compare_operations(
      result, {{bench::BenchOp::kSignOrig, bench::BenchOp::kSignM1},
               {bench::BenchOp::kSignOrig, bench::BenchOp::kSignM2},
               {bench::BenchOp::kSignM1, bench::BenchOp::kSignM2}});
  o.require(sign_pairs.size() == 3, "missing sign comparisons");
  std::string ts;
  for (const bench::OpComparison& c : sign_pairs) {
    const double t = c.result.t_value;
    ts += fmt(" %.3f", t);
    o.require(std::abs(t) < 2.074,
              std::string(bench::bench_op_name(c.a)) + " vs " +
                  std::string(bench::bench_op_name(c.b)) +
                  fmt(" significant, t = %.3f", t));
  }

  const std::vector<double> xs = {1.5, 2.25, 3.0, 4.75, 5.5};
  const std::vector<double> ys = {2.0, 6.5, 7.25, 3.125};
  const double reference = -0.9366366681875475;
  const double t = stats::ttest_two_sample(xs, ys).t_value;
  o.require(std::abs(t - reference) <= 1e-9 * std::abs(reference),
            fmt("fixture t = %.12f", t));
  if (o.pass) {
    o.detail = std::to_string(faster) +
               "/12 expand_m2 < keygen, sign |t|:" + ts +
               fmt(", fixture t matches, %.0f s", elapsed);
  }
  return o;
}

Outcome codec_robustness() {
  Outcome o;
  std::mt19937_64 rng(8);
  for (int i = 0; i < 1000; ++i) {
    AnonymousCertificate cert = testing::random_certificate(rng);
    Bytes wire = encode_certificate(cert);
    AnonymousCertificate back = decode_certificate(wire);
    o.require(back == cert && encode_certificate(back) == wire,
              "certificate round trip " + std::to_string(i));
    Bytes msg = testing::random_message(rng);
    o.require(testing::reencode_message(msg) == msg,
              "message round trip " + std::to_string(i));
  }
  int structured = 0;
  for (int i = 0; i < 1000; ++i) {
    const bool is_cert = i % 2 == 0;
    Bytes original = is_cert
                         ? encode_certificate(testing::random_certificate(rng))
                         : testing::random_message(rng);
    Bytes bad = testing::mutate(rng, original);
    const ErrorCode want = is_cert ? ErrorCode::kMalformedCertificate
                                   : ErrorCode::kMalformedMessage;
    try {
      if (is_cert) {
        decode_certificate(bad);
      } else {
        testing::reencode_message(bad);
      }
      o.require(false, "mutation " + std::to_string(i) + " decoded silently");
    } catch (const Error& e) {
      o.require(e.code() == want, "mutation " + std::to_string(i) +
                                      " gave " + e.what());
      if (e.code() == want) ++structured;
    } catch (const std::exception& e) {
      o.require(false, "mutation " + std::to_string(i) +
                           " raised an unstructured exception: " + e.what());
    }
  }
  if (o.pass) {
    o.detail = "2000 round trips, " + std::to_string(structured) +
               "/1000 mutations rejected with a structured error";
  }
  return o;
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace pqcwc

int main() {
  using pqcwc::Criterion;
  using pqcwc::Outcome;
  const std::vector<Criterion> criteria = {
      {1, "signature length tables", pqcwc::length_tables},
      {2, "WOTS sign/verify round trip", pqcwc::wots_round_trip},
      {3, "key expansion correctness", pqcwc::expansion_correctness},
      {4, "butterfly expansion end to end", pqcwc::butterfly_end_to_end},
      {5, "actor visibility", pqcwc::actor_visibility},
      {6, "envelope integrity", pqcwc::envelope_integrity},
      {7, "timing harness and t-tests", pqcwc::timing_and_statistics},
      {8, "codec robustness", pqcwc::codec_robustness},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL",
                c.number, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
