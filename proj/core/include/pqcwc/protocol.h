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

#ifndef PQCWC_PROTOCOL_H_
#define PQCWC_PROTOCOL_H_

#include <optional>
#include <utility>

#include "pqcwc/bytes.h"
#include "pqcwc/certificate.h"
#include "pqcwc/envelope.h"
#include "pqcwc/expansion.h"
#include "pqcwc/kem.h"
#include "pqcwc/messages.h"
#include "pqcwc/random.h"
#include "pqcwc/wots.h"

// Issuance steps for the three flows, as pure functions over typed messages.
// actors.h wraps them in stateful actors that exchange serialized frames.
namespace pqcwc {

// The certificate authority redraws r4 / r_CA at most this many times when a
// draw yields an all-zero expansion vector.
inline constexpr int kMaxSeedAttempts = 16;
inline constexpr std::size_t kExpansionSeedBytes = 32;

struct Model1State {
  KeySequence private_key;
  KeySequence public_key;
};

struct Model2State {
  KeySequence private_key;
  KeySequence public_key;
  SymmetricKey q3;
};

struct BkeState {
  KeySequence private_key;  // caterpillar A
  KeySequence public_key;   // caterpillar B
  SymmetricKey q_ra;
  SymmetricKey q_ca;
};

struct IssuedCredential {
  KeySequence private_key;  // A' or A''
  AnonymousCertificate certificate;
};

// Model 1: the CA expands B by the fixed 2^w2 - 1 steps.
std::pair<Model1State, CertRequestM1> ee_request_model1(
    ByteView seed, const ChainParams& params, const SubjectInfo& subject);
// Throws ProtocolError for a private key or an invalid subject.
AnonymousCertificate ca_issue_model1(const CertRequestM1& request,
                                     const CaIdentity& ca);
// Throws ProtocolError if the certificate does not carry this end entity's
// expected B'.
IssuedCredential ee_finalize_model1(const Model1State& state,
                                    const AnonymousCertificate& cert);

// Model 2: the CA expands B by a vector derived from its random r4, and
// returns r4 sealed under the end entity's q3.
std::pair<Model2State, CertRequestM2> ee_request_model2(
    ByteView seed, const ChainParams& params, const SubjectInfo& subject,
    const Kem& kem, ByteView ca_kem_public, RandomSource& rng);
CaResponseM2 ca_issue_model2(const CertRequestM2& request, const Kem& kem,
                             ByteView ca_kem_secret, const CaIdentity& ca,
                             RandomSource& rng);
// Throws TamperDetected if sealed r4 fails to open.
IssuedCredential ee_finalize_model2(const Model2State& state,
                                    const CaResponseM2& response);

// Butterfly expansion: RA expands B to the cocoon key B' with a vector
// seeded by r_RA = AES_{q_RA}(l); the CA expands B' to the butterfly key B''
// with a vector seeded by its random r_CA.
//
// The end entity redraws q_RA (at most kMaxRaKeyAttempts times) until E_RA
// has no zero entry, since e_RA,i = 0 would put b_i itself into B'. If no
// such draw turns up, the last non-degenerate one is used.
inline constexpr int kMaxRaKeyAttempts = 64;
std::pair<BkeState, BkeRequest> ee_request_bke(
    ByteView seed, const ChainParams& params, const SubjectInfo& subject,
    const Kem& kem, ByteView ra_kem_public, ByteView ca_kem_public,
    TimePeriod period, RandomSource& rng);
// Throws DegenerateSeed if r_RA yields an all-zero vector; the end entity has
// to send a fresh request since r_RA is deterministic.
RaToCaRequest ra_process(const BkeRequest& request, const Kem& kem,
                         ByteView ra_kem_secret, TimePeriod period);
// `issued`, when given, receives a copy of the certificate sealed into Z.
BkeResponse ca_issue_bke(const RaToCaRequest& request, const Kem& kem,
                         ByteView ca_kem_secret, const CaIdentity& ca,
                         RandomSource& rng,
                         std::optional<AnonymousCertificate>* issued = nullptr);
// Throws TamperDetected if Z fails to open and ProtocolError if its contents
// do not match the end entity's own recomputation.
IssuedCredential ee_finalize_bke(const BkeState& state,
                                 const BkeResponse& response,
                                 TimePeriod period);

// E_RA as derived by both end entity and RA.
ExpansionVector ra_expansion_vector(const SymmetricKey& q_ra,
                                    TimePeriod period,
                                    const ChainParams& params);

// Splits an opened Z into its certificate and r_CA.
std::pair<AnonymousCertificate, Bytes> split_bke_payload(ByteView payload);

}  // namespace pqcwc

#endif  // PQCWC_PROTOCOL_H_
