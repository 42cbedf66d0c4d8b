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

#include "pqcwc/actors.h"

#include <algorithm>
#include <string>
#include <utility>

#include "pqcwc/error.h"

namespace pqcwc {

namespace {

template <typename T>
const T& require_state(const std::optional<T>& state) {
  if (!state) {
    throw Error(ErrorCode::kProtocolError, "no request is outstanding");
  }
  return *state;
}

}  // namespace

std::string_view actor_name(Actor actor) {
  switch (actor) {
    case Actor::kEndEntity: return "EE";
    case Actor::kRegistrationAuthority: return "RA";
    case Actor::kCertificateAuthority: return "CA";
  }
  return "?";
}

void ActorTranscript::observe(const KeySequence& key) {
  fingerprints_.push_back(fingerprint(key));
}

bool ActorTranscript::contains(const KeySequence& key) const {
  return contains_fingerprint(fingerprint(key));
}

bool ActorTranscript::contains_fingerprint(ByteView fp) const {
  return std::any_of(fingerprints_.begin(), fingerprints_.end(),
                     [&](const Bytes& f) { return ct_equal(f, fp); });
}

void MessageBus::send(Actor from, Actor to, Bytes message) {
  log_.push_back(Delivery{from, to, message});
  queues_[to].push_back(std::move(message));
}

Bytes MessageBus::receive(Actor to) {
  auto it = queues_.find(to);
  if (it == queues_.end() || it->second.empty()) {
    throw Error(ErrorCode::kProtocolError,
                std::string("no message queued for ") +
                    std::string(actor_name(to)));
  }
  Bytes out = std::move(it->second.front());
  it->second.pop_front();
  return out;
}

bool MessageBus::has_pending(Actor to) const {
  auto it = queues_.find(to);
  return it != queues_.end() && !it->second.empty();
}

std::vector<Bytes> MessageBus::delivered_to(Actor to) const {
  std::vector<Bytes> out;
  for (const Delivery& d : log_) {
    if (d.to == to) out.push_back(d.bytes);
  }
  return out;
}

Bytes EndEntity::request_model1(ByteView seed, const ChainParams& params,
                                const SubjectInfo& subject) {
  auto [state, request] = ee_request_model1(seed, params, subject);
  transcript_.observe(state.private_key);
  transcript_.observe(state.public_key);
  m1_ = std::move(state);
  return encode_message(request);
}

IssuedCredential EndEntity::finalize_model1(ByteView response) {
  CertificateM1 msg = decode_certificate_m1(response);
  IssuedCredential out = ee_finalize_model1(require_state(m1_), msg.certificate);
  transcript_.observe(out.certificate.public_key);
  transcript_.observe(out.private_key);
  m1_.reset();
  return out;
}

Bytes EndEntity::request_model2(ByteView seed, const ChainParams& params,
                                const SubjectInfo& subject,
                                ByteView ca_kem_public) {
  auto [state, request] =
      ee_request_model2(seed, params, subject, kem_, ca_kem_public, rng_);
  transcript_.observe(state.private_key);
  transcript_.observe(state.public_key);
  m2_ = std::move(state);
  return encode_message(request);
}

IssuedCredential EndEntity::finalize_model2(ByteView response) {
  CaResponseM2 msg = decode_ca_response_m2(response);
  IssuedCredential out = ee_finalize_model2(require_state(m2_), msg);
  transcript_.observe(out.certificate.public_key);
  transcript_.observe(out.private_key);
  m2_.reset();
  return out;
}

Bytes EndEntity::request_bke(ByteView seed, const ChainParams& params,
                             const SubjectInfo& subject,
                             ByteView ra_kem_public, ByteView ca_kem_public,
                             TimePeriod period) {
  auto [state, request] =
      ee_request_bke(seed, params, subject, kem_, ra_kem_public,
                     ca_kem_public, period, rng_);
  transcript_.observe(state.private_key);
  transcript_.observe(state.public_key);
  bke_ = std::move(state);
  return encode_message(request);
}

IssuedCredential EndEntity::finalize_bke(ByteView response,
                                         TimePeriod period) {
  BkeResponse msg = decode_bke_response(response);
  IssuedCredential out = ee_finalize_bke(require_state(bke_), msg, period);
  transcript_.observe(out.certificate.public_key);
  transcript_.observe(out.private_key);
  bke_.reset();
  return out;
}

Bytes RegistrationAuthority::handle(ByteView message) {
  Frame frame = unframe_message(message);
  switch (frame.type) {
    case MessageType::kBkeRequest: {
      BkeRequest request = decode_bke_request(message);
      transcript_.observe(request.public_key);
      RaToCaRequest forward =
          ra_process(request, kem_, keys_.secret_key, period_);
      transcript_.observe(forward.cocoon_key);
      return encode_message(forward);
    }
    case MessageType::kBkeResponse:
      decode_bke_response(message);
      return Bytes(message.begin(), message.end());
    default:
      throw Error(ErrorCode::kProtocolError,
                  "registration authority cannot handle message type " +
                      std::to_string(static_cast<int>(frame.type)));
  }
}

Bytes CertificateAuthority::handle(ByteView message) {
  Frame frame = unframe_message(message);
  switch (frame.type) {
    case MessageType::kCertRequestM1: {
      CertRequestM1 request = decode_cert_request_m1(message);
      transcript_.observe(request.public_key);
      AnonymousCertificate cert = ca_issue_model1(request, identity_);
      transcript_.observe(cert.public_key);
      return encode_message(CertificateM1{std::move(cert)});
    }
    case MessageType::kCertRequestM2: {
      CertRequestM2 request = decode_cert_request_m2(message);
      transcript_.observe(request.public_key);
      CaResponseM2 response =
          ca_issue_model2(request, kem_, keys_.secret_key, identity_, rng_);
      transcript_.observe(response.certificate.public_key);
      return encode_message(response);
    }
    case MessageType::kRaToCaRequest: {
      RaToCaRequest request = decode_ra_to_ca_request(message);
      transcript_.observe(request.cocoon_key);
      std::optional<AnonymousCertificate> issued;
      BkeResponse response = ca_issue_bke(request, kem_, keys_.secret_key,
                                          identity_, rng_, &issued);
      transcript_.observe(issued->public_key);
      return encode_message(response);
    }
    default:
      throw Error(ErrorCode::kProtocolError,
                  "certificate authority cannot handle message type " +
                      std::to_string(static_cast<int>(frame.type)));
  }
}

IssuedCredential run_model1_flow(MessageBus& bus, EndEntity& ee,
                                 CertificateAuthority& ca, ByteView seed,
                                 const ChainParams& params,
                                 const SubjectInfo& subject) {
  bus.send(Actor::kEndEntity, Actor::kCertificateAuthority,
           ee.request_model1(seed, params, subject));
  bus.send(Actor::kCertificateAuthority, Actor::kEndEntity,
           ca.handle(bus.receive(Actor::kCertificateAuthority)));
  return ee.finalize_model1(bus.receive(Actor::kEndEntity));
}

IssuedCredential run_model2_flow(MessageBus& bus, EndEntity& ee,
                                 CertificateAuthority& ca, ByteView seed,
                                 const ChainParams& params,
                                 const SubjectInfo& subject) {
  bus.send(Actor::kEndEntity, Actor::kCertificateAuthority,
           ee.request_model2(seed, params, subject, ca.kem_public_key()));
  bus.send(Actor::kCertificateAuthority, Actor::kEndEntity,
           ca.handle(bus.receive(Actor::kCertificateAuthority)));
  return ee.finalize_model2(bus.receive(Actor::kEndEntity));
}

IssuedCredential run_bke_flow(MessageBus& bus, EndEntity& ee,
                              RegistrationAuthority& ra,
                              CertificateAuthority& ca, ByteView seed,
                              const ChainParams& params,
                              const SubjectInfo& subject) {
  bus.send(Actor::kEndEntity, Actor::kRegistrationAuthority,
           ee.request_bke(seed, params, subject, ra.kem_public_key(),
                          ca.kem_public_key(), ra.period()));
  bus.send(Actor::kRegistrationAuthority, Actor::kCertificateAuthority,
           ra.handle(bus.receive(Actor::kRegistrationAuthority)));
  bus.send(Actor::kCertificateAuthority, Actor::kRegistrationAuthority,
           ca.handle(bus.receive(Actor::kCertificateAuthority)));
  bus.send(Actor::kRegistrationAuthority, Actor::kEndEntity,
           ra.handle(bus.receive(Actor::kRegistrationAuthority)));
  return ee.finalize_bke(bus.receive(Actor::kEndEntity), ra.period());
}

}  // namespace pqcwc
