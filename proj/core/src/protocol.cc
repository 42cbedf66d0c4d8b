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

#include "pqcwc/protocol.h"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "pqcwc/error.h"

namespace pqcwc {

namespace {

void check_request(const KeySequence& key, const SubjectInfo& subject) {
  if (key.role() != KeyRole::kPublic) {
    throw Error(ErrorCode::kProtocolError, "request must carry a public key");
  }
  try {
    subject.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kProtocolError, e.what());
  }
}

void check_issued(const AnonymousCertificate& cert,
                  const KeySequence& expected) {
  if (!(cert.params() == expected.params())) {
    throw Error(ErrorCode::kProtocolError,
                "certificate parameters differ from the request");
  }
  if (!(cert.public_key == expected)) {
    throw Error(ErrorCode::kProtocolError,
                "certificate key differs from the expected expansion");
  }
}

// Draws seeds until one gives a usable vector.
std::pair<Bytes, ExpansionVector> draw_expansion(RandomSource& rng,
                                                 const ChainParams& params) {
  for (int attempt = 0; attempt < kMaxSeedAttempts; ++attempt) {
    Bytes seed = rng.bytes(kExpansionSeedBytes);
    try {
      ExpansionVector ev = derive_expansion_vector(seed, params.m(), params.w2());
      return {std::move(seed), std::move(ev)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegenerateSeed) throw;
    }
  }
  throw Error(ErrorCode::kDegenerateSeed,
              "no usable expansion seed after " +
                  std::to_string(kMaxSeedAttempts) + " draws");
}

AnonymousCertificate make_certificate(KeySequence key, SubjectInfo subject,
                                      const CaIdentity& ca) {
  AnonymousCertificate cert{AnonymousCertificate::kVersion, std::move(key),
                            true, std::move(subject), {}, {}};
  sign_certificate(cert, ca);
  return cert;
}

}  // namespace

std::pair<Model1State, CertRequestM1> ee_request_model1(
    ByteView seed, const ChainParams& params, const SubjectInfo& subject) {
  subject.validate();
  KeyPair pair = generate_keypair(seed, params);
  CertRequestM1 request{pair.public_key, subject};
  return {Model1State{std::move(pair.private_key), std::move(pair.public_key)},
          std::move(request)};
}

AnonymousCertificate ca_issue_model1(const CertRequestM1& request,
                                     const CaIdentity& ca) {
  check_request(request.public_key, request.subject);
  KeySequence expanded = expand_public_model1(request.public_key,
                                              request.public_key.params());
  return make_certificate(std::move(expanded), request.subject, ca);
}

IssuedCredential ee_finalize_model1(const Model1State& state,
                                    const AnonymousCertificate& cert) {
  const ChainParams& params = state.private_key.params();
  check_issued(cert, expand_public_model1(state.public_key, params));
  return IssuedCredential{expand_private_model1(state.private_key, params),
                          cert};
}

std::pair<Model2State, CertRequestM2> ee_request_model2(
    ByteView seed, const ChainParams& params, const SubjectInfo& subject,
    const Kem& kem, ByteView ca_kem_public, RandomSource& rng) {
  subject.validate();
  KeyPair pair = generate_keypair(seed, params);
  SymmetricKey q3 = SymmetricKey::generate(rng);
  CertRequestM2 request{pair.public_key, seal_key(kem, ca_kem_public, q3, rng),
                        subject};
  return {Model2State{std::move(pair.private_key), std::move(pair.public_key),
                      std::move(q3)},
          std::move(request)};
}

CaResponseM2 ca_issue_model2(const CertRequestM2& request, const Kem& kem,
                             ByteView ca_kem_secret, const CaIdentity& ca,
                             RandomSource& rng) {
  check_request(request.public_key, request.subject);
  SymmetricKey q3 = unseal_key(kem, ca_kem_secret, request.sealed_q3);
  auto [r4, ev] = draw_expansion(rng, request.public_key.params());
  KeySequence expanded = expand_public_model2(request.public_key, ev);
  return CaResponseM2{make_certificate(std::move(expanded), request.subject, ca),
                      seal(q3, r4, rng)};
}

IssuedCredential ee_finalize_model2(const Model2State& state,
                                    const CaResponseM2& response) {
  Bytes r4 = open(state.q3, response.sealed_r4);
  if (r4.size() != kExpansionSeedBytes) {
    throw Error(ErrorCode::kProtocolError, "r4 has the wrong length");
  }
  const ChainParams& params = state.private_key.params();
  ExpansionVector ev = derive_expansion_vector(r4, params.m(), params.w2());
  check_issued(response.certificate,
               expand_public_model2(state.public_key, ev));
  return IssuedCredential{expand_private_model2(state.private_key, ev),
                          response.certificate};
}

std::pair<BkeState, BkeRequest> ee_request_bke(
    ByteView seed, const ChainParams& params, const SubjectInfo& subject,
    const Kem& kem, ByteView ra_kem_public, ByteView ca_kem_public,
    TimePeriod period, RandomSource& rng) {
  subject.validate();
  KeyPair pair = generate_keypair(seed, params);
  std::optional<SymmetricKey> q_ra;
  for (int attempt = 0; attempt < kMaxRaKeyAttempts; ++attempt) {
    SymmetricKey candidate = SymmetricKey::generate(rng);
    try {
      ExpansionVector ev = ra_expansion_vector(candidate, period, params);
      q_ra = std::move(candidate);
      if (std::find(ev.values().begin(), ev.values().end(), 0u) ==
          ev.values().end()) {
        break;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegenerateSeed) throw;
    }
  }
  if (!q_ra) {
    throw Error(ErrorCode::kDegenerateSeed,
                "no usable q_RA after " + std::to_string(kMaxRaKeyAttempts) +
                    " draws");
  }
  SymmetricKey q_ca = SymmetricKey::generate(rng);
  BkeRequest request{pair.public_key, seal_key(kem, ra_kem_public, *q_ra, rng),
                     seal_key(kem, ca_kem_public, q_ca, rng), subject};
  return {BkeState{std::move(pair.private_key), std::move(pair.public_key),
                   std::move(*q_ra), std::move(q_ca)},
          std::move(request)};
}

ExpansionVector ra_expansion_vector(const SymmetricKey& q_ra,
                                    TimePeriod period,
                                    const ChainParams& params) {
  return derive_expansion_vector(derive_ra_seed(q_ra, period), params.m(),
                                 params.w2());
}

RaToCaRequest ra_process(const BkeRequest& request, const Kem& kem,
                         ByteView ra_kem_secret, TimePeriod period) {
  check_request(request.public_key, request.subject);
  SymmetricKey q_ra = unseal_key(kem, ra_kem_secret, request.sealed_q_ra);
  ExpansionVector ev =
      ra_expansion_vector(q_ra, period, request.public_key.params());
  return RaToCaRequest{expand_public_model2(request.public_key, ev),
                       permissions_of(request.subject), request.sealed_q_ca};
}

BkeResponse ca_issue_bke(const RaToCaRequest& request, const Kem& kem,
                         ByteView ca_kem_secret, const CaIdentity& ca,
                         RandomSource& rng,
                         std::optional<AnonymousCertificate>* issued) {
  if (request.cocoon_key.role() != KeyRole::kPublic) {
    throw Error(ErrorCode::kProtocolError, "request must carry a public key");
  }
  SymmetricKey q_ca = unseal_key(kem, ca_kem_secret, request.sealed_q_ca);
  auto [r_ca, ev] = draw_expansion(rng, request.cocoon_key.params());
  KeySequence butterfly = expand_public_model2(request.cocoon_key, ev);
  AnonymousCertificate cert = make_certificate(
      std::move(butterfly), pseudonymous_subject(request.permissions), ca);
  Bytes payload = encode_certificate(cert);
  append(payload, r_ca);
  if (issued != nullptr) *issued = cert;
  return BkeResponse{seal(q_ca, payload, rng)};
}

std::pair<AnonymousCertificate, Bytes> split_bke_payload(ByteView payload) {
  if (payload.size() <= kExpansionSeedBytes) {
    throw Error(ErrorCode::kProtocolError, "Z payload too short");
  }
  const std::size_t cert_len = payload.size() - kExpansionSeedBytes;
  AnonymousCertificate cert = decode_certificate(payload.first(cert_len));
  ByteView r_ca = payload.subspan(cert_len);
  return {std::move(cert), Bytes(r_ca.begin(), r_ca.end())};
}

IssuedCredential ee_finalize_bke(const BkeState& state,
                                 const BkeResponse& response,
                                 TimePeriod period) {
  Bytes payload = open(state.q_ca, response.sealed_payload);
  auto [cert, r_ca] = split_bke_payload(payload);
  const ChainParams& params = state.private_key.params();
  ExpansionVector ev_ra = ra_expansion_vector(state.q_ra, period, params);
  ExpansionVector ev_ca =
      derive_expansion_vector(r_ca, params.m(), params.w2());
  check_issued(cert, compose_butterfly(state.public_key, ev_ra, ev_ca));
  KeySequence cocoon = expand_private_model2(state.private_key, ev_ra);
  return IssuedCredential{expand_private_model2(cocoon, ev_ca),
                          std::move(cert)};
}

}  // namespace pqcwc
