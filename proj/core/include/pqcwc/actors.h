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

#ifndef PQCWC_ACTORS_H_
#define PQCWC_ACTORS_H_

#include <deque>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "pqcwc/bytes.h"
#include "pqcwc/protocol.h"

namespace pqcwc {

enum class Actor { kEndEntity, kRegistrationAuthority, kCertificateAuthority };

std::string_view actor_name(Actor actor);

// Append-only record of the fingerprint of every key sequence an actor has
// held, received or produced.
class ActorTranscript {
 public:
  void observe(const KeySequence& key);
  bool contains(const KeySequence& key) const;
  bool contains_fingerprint(ByteView fp) const;
  const std::vector<Bytes>& fingerprints() const { return fingerprints_; }

 private:
  std::vector<Bytes> fingerprints_;
};

struct Delivery {
  Actor from;
  Actor to;
  Bytes bytes;
};

// In-process transport. Everything crossing it is an encoded frame, and every
// delivery is kept in an inspectable log.
class MessageBus {
 public:
  void send(Actor from, Actor to, Bytes message);
  // FIFO per recipient. Throws ProtocolError when nothing is queued.
  Bytes receive(Actor to);
  bool has_pending(Actor to) const;

  const std::vector<Delivery>& log() const { return log_; }
  std::vector<Bytes> delivered_to(Actor to) const;

 private:
  std::map<Actor, std::deque<Bytes>> queues_;
  std::vector<Delivery> log_;
};

class EndEntity {
 public:
  EndEntity(const Kem& kem, RandomSource& rng) : kem_(kem), rng_(rng) {}

  Bytes request_model1(ByteView seed, const ChainParams& params,
                       const SubjectInfo& subject);
  IssuedCredential finalize_model1(ByteView response);

  Bytes request_model2(ByteView seed, const ChainParams& params,
                       const SubjectInfo& subject, ByteView ca_kem_public);
  IssuedCredential finalize_model2(ByteView response);

  Bytes request_bke(ByteView seed, const ChainParams& params,
                    const SubjectInfo& subject, ByteView ra_kem_public,
                    ByteView ca_kem_public, TimePeriod period);
  IssuedCredential finalize_bke(ByteView response, TimePeriod period);

  const ActorTranscript& transcript() const { return transcript_; }
  // Pending-request state, exposed for test harnesses.
  const std::optional<Model1State>& model1_state() const { return m1_; }
  const std::optional<Model2State>& model2_state() const { return m2_; }
  const std::optional<BkeState>& bke_state() const { return bke_; }

 private:
  const Kem& kem_;
  RandomSource& rng_;
  ActorTranscript transcript_;
  std::optional<Model1State> m1_;
  std::optional<Model2State> m2_;
  std::optional<BkeState> bke_;
};

class RegistrationAuthority {
 public:
  RegistrationAuthority(const Kem& kem, KemKeyPair keys, TimePeriod period)
      : kem_(kem), keys_(std::move(keys)), period_(period) {}

  ByteView kem_public_key() const { return keys_.public_key; }
  TimePeriod period() const { return period_; }

  // BkeRequest -> RaToCaRequest (for the CA); BkeResponse -> the same bytes
  // (for the end entity). Anything else is a ProtocolError.
  Bytes handle(ByteView message);

  const ActorTranscript& transcript() const { return transcript_; }

 private:
  const Kem& kem_;
  KemKeyPair keys_;
  TimePeriod period_;
  ActorTranscript transcript_;
};

class CertificateAuthority {
 public:
  CertificateAuthority(const Kem& kem, KemKeyPair keys, CaIdentity identity,
                       RandomSource& rng)
      : kem_(kem), keys_(std::move(keys)), identity_(std::move(identity)),
        rng_(rng) {}

  ByteView kem_public_key() const { return keys_.public_key; }
  const KeySequence& signing_public_key() const {
    return identity_.signing_key.public_key;
  }

  // CertRequestM1 -> CertificateM1, CertRequestM2 -> CaResponseM2,
  // RaToCaRequest -> BkeResponse.
  Bytes handle(ByteView message);

  const ActorTranscript& transcript() const { return transcript_; }

 private:
  const Kem& kem_;
  KemKeyPair keys_;
  CaIdentity identity_;
  RandomSource& rng_;
  ActorTranscript transcript_;
};

IssuedCredential run_model1_flow(MessageBus& bus, EndEntity& ee,
                                 CertificateAuthority& ca, ByteView seed,
                                 const ChainParams& params,
                                 const SubjectInfo& subject);

IssuedCredential run_model2_flow(MessageBus& bus, EndEntity& ee,
                                 CertificateAuthority& ca, ByteView seed,
                                 const ChainParams& params,
                                 const SubjectInfo& subject);

// EE -> RA -> CA -> RA -> EE. The end entity uses the RA's time period.
IssuedCredential run_bke_flow(MessageBus& bus, EndEntity& ee,
                              RegistrationAuthority& ra,
                              CertificateAuthority& ca, ByteView seed,
                              const ChainParams& params,
                              const SubjectInfo& subject);

}  // namespace pqcwc

#endif  // PQCWC_ACTORS_H_
