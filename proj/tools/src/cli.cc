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

#include "pqcwc_cli/cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "pqcwc/actors.h"
#include "pqcwc/bench.h"
#include "pqcwc/certificate.h"
#include "pqcwc/error.h"
#include "pqcwc/kem.h"
#include "pqcwc/keyfile.h"
#include "pqcwc/random.h"
#include "pqcwc/stats.h"
#include "pqcwc/wots.h"

namespace pqcwc::cli {

namespace {

constexpr std::string_view kSha1Warning =
    "warning: SHA-1 is deprecated (practical collisions exist); it is kept "
    "only for comparison with the published tables\n";

// ---------------------------------------------------------------------------
// File and input helpers
// ---------------------------------------------------------------------------

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  Bytes data((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIoError, "cannot read " + path);
  return data;
}

void write_file(const std::string& path, ByteView data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot create " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
}

void write_text(const std::string& path, const std::string& text) {
  write_file(path, as_bytes(text));
}

bool is_armored(ByteView data) {
  static constexpr std::string_view kMagic = "PQCWC1";
  return !(data.size() >= kMagic.size() &&
           std::equal(kMagic.begin(), kMagic.end(), data.begin()));
}

void write_key_material(const std::string& path, ByteView binary,
                        bool armored) {
  if (armored) {
    write_text(path, armor(binary));
  } else {
    write_file(path, binary);
  }
}

std::optional<std::uint64_t> env_seed() {
  const char* value = std::getenv("PQCWC_SEED");
  if (value == nullptr || *value == '\0') return std::nullopt;
  std::string_view text(value);
  std::uint64_t seed = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidParams,
                "PQCWC_SEED must be an unsigned integer");
  }
  return seed;
}

std::unique_ptr<RandomSource> make_rng() {
  if (auto seed = env_seed()) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<SystemRandom>();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void warn_if_sha1(HashAlg alg, std::ostream& err) {
  if (alg == HashAlg::kSha1) err << kSha1Warning;
}

// Parses whitespace- or comma-separated numbers.
std::vector<double> read_numbers(const std::string& path) {
  Bytes raw = read_file(path);
  std::string text(raw.begin(), raw.end());
  for (char& c : text) {
    if (c == ',' || c == ';') c = ' ';
  }
  std::istringstream in(text);
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    double v = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kInvalidParams,
                  path + ": not a number: " + token);
    }
    out.push_back(v);
  }
  return out;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoError:
      return kExitIo;
    case ErrorCode::kProtocolError:
    case ErrorCode::kKemError:
    case ErrorCode::kTamperDetected:
    case ErrorCode::kDegenerateSeed:
      return kExitProtocol;
    default:
      return kExitMalformed;
  }
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

struct TableLengthsArgs {
  unsigned w1 = 8;
  std::string out_path;
};

int cmd_table_lengths(const TableLengthsArgs& a, std::ostream& out) {
  const std::string csv =
      bench::format_length_table(bench::table_lengths(a.w1));
  if (a.out_path.empty()) {
    out << csv;
  } else {
    write_text(a.out_path, csv);
  }
  return kExitOk;
}

struct BenchArgs {
  unsigned w1 = 8;
  unsigned w2 = 8;
  std::size_t iterations = 0;  // 0 = default for w1
  std::string algorithms;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string summary_path;
  std::string ttest_path;
  std::string operations;
  std::size_t warmup = 10;
  bool per_element = false;
  bool quiet = false;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  bench::BenchConfig config;
  config.w1 = a.w1;
  config.w2 = a.w2;
  config.iterations = a.iterations != 0
                          ? a.iterations
                          : bench::BenchConfig::default_iterations(a.w1);
  config.seed = env_seed().value_or(a.seed);
  config.warmup = a.warmup;
  config.per_element = a.per_element;
  if (a.algorithms.empty()) {
    const auto& all = list_algorithms();
    config.algorithms.assign(all.begin(), all.end());
  } else {
    for (const std::string& name : split_list(a.algorithms)) {
      config.algorithms.push_back(parse_algorithm(name));
    }
  }
  if (!a.operations.empty()) {
    config.operations.clear();
    for (const std::string& name : split_list(a.operations)) {
      config.operations.push_back(bench::parse_bench_op(name));
    }
  }
  config.validate();
  for (HashAlg alg : config.algorithms) warn_if_sha1(alg, err);

  bench::ProgressFn progress;
  if (!a.quiet) {
    progress = [&err](std::string_view cell) { err << "bench " << cell << "\n"; };
  }
  bench::BenchResult result = bench::run_bench(config, progress);

  std::ostringstream samples, summary, ttest;
  bench::write_samples_csv(samples, result);
  bench::write_summary_csv(summary, result);
  const bool compare = config.algorithms.size() >= 2;
  if (compare) {
    bench::write_comparisons_csv(ttest, bench::compare_operations(result));
  }

  write_text(a.out_path, samples.str());
  if (a.summary_path.empty()) {
    out << summary.str();
  } else {
    write_text(a.summary_path, summary.str());
  }
  if (compare) {
    if (a.ttest_path.empty()) {
      out << "\n" << ttest.str();
    } else {
      write_text(a.ttest_path, ttest.str());
    }
  }
  return kExitOk;
}

struct KeygenArgs {
  std::string alg = "SHA-256";
  unsigned w1 = 8;
  unsigned w2 = 8;
  std::string seed_hex;
  std::string private_path;
  std::string public_path;
  bool armored = false;
};

void check_cli_w1(unsigned w1) {
  if (w1 != 8 && w1 != 16) {
    throw Error(ErrorCode::kInvalidParams, "w1 must be 8 or 16");
  }
}

int cmd_keygen(const KeygenArgs& a, std::ostream& out, std::ostream& err) {
  const HashAlg alg = parse_algorithm(a.alg);
  check_cli_w1(a.w1);
  ChainParams params(alg, a.w1, a.w2);
  warn_if_sha1(alg, err);
  Bytes seed;
  if (a.seed_hex.empty()) {
    seed = make_rng()->bytes(32);
  } else {
    seed = from_hex(a.seed_hex);
  }
  KeyPair pair = generate_keypair(seed, params);
  write_key_material(a.private_path, encode_key(pair.private_key), a.armored);
  write_key_material(a.public_path, encode_key(pair.public_key), a.armored);
  out << "fingerprint " << to_hex(compress_public_key(pair.public_key))
      << "\n";
  return kExitOk;
}

struct MessageArgs {
  std::string in_path;
  std::string message;
  std::string digest_hex;
};

bool digest_mode(const MessageArgs& m) { return !m.digest_hex.empty(); }

// The value to sign: file contents, the literal text, or a raw digest.
Bytes message_bytes(const MessageArgs& m) {
  if (digest_mode(m)) {
    Bytes d = from_hex(m.digest_hex);
    if (d.size() != 32) {
      throw Error(ErrorCode::kInvalidParams, "digest must be 32 bytes");
    }
    return d;
  }
  if (!m.in_path.empty()) return read_file(m.in_path);
  return Bytes(m.message.begin(), m.message.end());
}

struct SignArgs {
  std::string key_path;
  MessageArgs message;
  std::string sig_path;
  bool armored = false;
};

int cmd_sign(const SignArgs& a, std::ostream& err) {
  const Bytes key_file = read_file(a.key_path);
  KeySequence key = decode_key(load_key_material(key_file));
  if (key.role() != KeyRole::kPrivate) {
    throw Error(ErrorCode::kWrongKeyRole, "sign needs a private key");
  }
  warn_if_sha1(key.params().alg(), err);
  if (key.used()) {
    err << "warning: this one-time key has already signed a message\n";
  }
  const Bytes msg = message_bytes(a.message);
  Signature sig = digest_mode(a.message)
                      ? sign_digest(key, msg, key.params())
                      : sign(key, msg, key.params());
  write_key_material(a.sig_path, encode_signature(sig), a.armored);
  key.set_used(true);
  write_key_material(a.key_path, encode_key(key), is_armored(key_file));
  return kExitOk;
}

struct VerifyArgs {
  std::string pub_path;
  std::string cert_path;
  std::string ca_pub_path;
  std::string sig_path;
  MessageArgs message;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.pub_path.empty() == a.cert_path.empty()) {
    throw Error(ErrorCode::kInvalidParams,
                "give exactly one of --pub and --cert");
  }
  std::optional<KeySequence> key;
  if (!a.pub_path.empty()) {
    key = decode_key(load_key_material(read_file(a.pub_path)));
  } else {
    AnonymousCertificate cert = decode_certificate(read_file(a.cert_path));
    if (!a.ca_pub_path.empty()) {
      KeySequence ca = decode_key(load_key_material(read_file(a.ca_pub_path)));
      if (!verify_certificate_issuer(cert, ca)) {
        out << "invalid: certificate issuer check failed\n";
        return kExitInvalid;
      }
    }
    key = cert.public_key;
  }
  const Bytes sig_file = read_file(a.sig_path);
  const Signature sig = [&] {
    try {
      return decode_signature(load_key_material(sig_file));
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformedSignature, e.what());
    }
  }();
  warn_if_sha1(key->params().alg(), err);
  const Bytes msg = message_bytes(a.message);
  const bool ok = digest_mode(a.message)
                      ? verify_digest(*key, msg, sig, key->params())
                      : verify(*key, msg, sig, key->params());
  out << (ok ? "valid" : "invalid") << "\n";
  return ok ? kExitOk : kExitInvalid;
}

struct IssueArgs {
  std::string model = "m1";
  std::string alg = "SHA-256";
  unsigned w1 = 8;
  unsigned w2 = 8;
  std::string seed_hex;
  std::string subject_id = "end-entity";
  std::string permissions = "cam.send";
  std::uint64_t not_before = 1700000000;
  std::uint64_t not_after = 1700604800;
  std::uint64_t period = 0;
  std::string cert_path;
  std::string key_path;
  std::string ca_pub_path;
  bool armored = false;
};

int cmd_issue(const IssueArgs& a, std::ostream& out, std::ostream& err) {
  const HashAlg alg = parse_algorithm(a.alg);
  check_cli_w1(a.w1);
  ChainParams params(alg, a.w1, a.w2);
  warn_if_sha1(alg, err);
  SubjectInfo subject{a.subject_id, split_list(a.permissions),
                      {a.not_before, a.not_after}};
  subject.validate();

  std::unique_ptr<RandomSource> rng = make_rng();
  const Bytes seed = a.seed_hex.empty() ? rng->bytes(32) : from_hex(a.seed_hex);
  InsecureTestKem kem;
  err << "note: key transport uses " << kem.name()
      << ", a test double with no security\n";
  MessageBus bus;
  EndEntity ee(kem, *rng);
  CertificateAuthority ca(kem, kem.generate_keypair(*rng),
                          CaIdentity::from_seed(rng->bytes(32)), *rng);
  const IssuedCredential cred = [&] {
    if (a.model == "m1") {
      return run_model1_flow(bus, ee, ca, seed, params, subject);
    }
    if (a.model == "m2") {
      return run_model2_flow(bus, ee, ca, seed, params, subject);
    }
    RegistrationAuthority ra(kem, kem.generate_keypair(*rng),
                             TimePeriod{a.period});
    return run_bke_flow(bus, ee, ra, ca, seed, params, subject);
  }();
  write_file(a.cert_path, encode_certificate(cred.certificate));
  write_key_material(a.key_path, encode_key(cred.private_key), a.armored);
  if (!a.ca_pub_path.empty()) {
    write_key_material(a.ca_pub_path, encode_key(ca.signing_public_key()),
                       a.armored);
  }
  out << "issued " << a.model << " certificate, key fingerprint "
      << to_hex(compress_public_key(cred.certificate.public_key)) << "\n";
  return kExitOk;
}

struct TTestArgs {
  std::string a_path;
  std::string b_path;
};

int cmd_ttest(const TTestArgs& a, std::ostream& out) {
  std::vector<double> xs = read_numbers(a.a_path);
  std::vector<double> ys = read_numbers(a.b_path);
  stats::TTestResult r = stats::ttest_two_sample(xs, ys);
  out << "t_value,df,threshold,significant\n"
      << bench::format_number(r.t_value) << ',' << r.df << ','
      << bench::format_number(r.threshold) << ','
      << (r.significant ? "yes" : "no") << '\n';
  return kExitOk;
}

void add_message_options(CLI::App* cmd, MessageArgs& m) {
  auto* in = cmd->add_option("--in", m.in_path, "Message file");
  auto* text = cmd->add_option("--message", m.message, "Message text");
  auto* digest = cmd->add_option(
      "--digest-hex", m.digest_hex,
      "Sign/verify this 32-byte digest directly instead of SHA-256(message)");
  in->excludes(text)->excludes(digest);
  text->excludes(digest);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"PQCWC anonymous certificates: WOTS keys, key expansion, "
               "issuance flows and benchmarks"};
  app.name("pqcwc");
  app.require_subcommand(1);

  TableLengthsArgs tl;
  auto* tl_cmd =
      app.add_subcommand("table-lengths", "Print signature lengths per hash");
  tl_cmd->add_option("--w1", tl.w1, "Message element width (8 or 16)")
      ->required();
  tl_cmd->add_option("--out", tl.out_path, "Write CSV here instead of stdout");

  BenchArgs bn;
  auto* bn_cmd = app.add_subcommand("bench", "Run the timing benchmark");
  bn_cmd->add_option("--w1", bn.w1, "Message element width (8 or 16)");
  bn_cmd->add_option("--w2", bn.w2, "Expansion width");
  bn_cmd->add_option("--iters", bn.iterations,
                     "Iterations per cell (default 1000, or 100 at w1=16)");
  bn_cmd->add_option("--algs", bn.algorithms,
                     "Comma-separated algorithms (default: all 12)");
  bn_cmd->add_option("--seed", bn.seed,
                     "Input seed (PQCWC_SEED overrides)");
  bn_cmd->add_option("--out", bn.out_path, "Per-sample CSV")->required();
  bn_cmd->add_option("--summary", bn.summary_path,
                     "Per-cell summary CSV (default: stdout)");
  bn_cmd->add_option("--ttest", bn.ttest_path,
                     "Operation comparison CSV (default: stdout)");
  bn_cmd->add_option("--ops", bn.operations,
                     "Comma-separated operations to time (default: all)");
  bn_cmd->add_option("--warmup", bn.warmup, "Untimed iterations per cell");
  bn_cmd->add_flag("--per-element", bn.per_element,
                   "Report time per chain element");
  bn_cmd->add_flag("--quiet", bn.quiet, "No progress output");

  KeygenArgs kg;
  auto* kg_cmd = app.add_subcommand("keygen", "Generate a WOTS key pair");
  kg_cmd->add_option("--alg", kg.alg, "Hash algorithm");
  kg_cmd->add_option("--w1", kg.w1, "Message element width (8 or 16)");
  kg_cmd->add_option("--w2", kg.w2, "Expansion width");
  kg_cmd->add_option("--seed-hex", kg.seed_hex, "32-byte key seed");
  kg_cmd->add_option("--private", kg.private_path, "Private key output")
      ->required();
  kg_cmd->add_option("--public", kg.public_path, "Public key output")
      ->required();
  kg_cmd->add_flag("--armor", kg.armored, "Write hex-armored files");

  SignArgs sg;
  auto* sg_cmd = app.add_subcommand("sign", "Sign with a private key");
  sg_cmd->add_option("--key", sg.key_path, "Private key file")->required();
  sg_cmd->add_option("--sig", sg.sig_path, "Signature output")->required();
  sg_cmd->add_flag("--armor", sg.armored, "Write a hex-armored signature");
  add_message_options(sg_cmd, sg.message);

  VerifyArgs vf;
  auto* vf_cmd = app.add_subcommand(
      "verify", "Verify a signature (exit 0 valid, 1 invalid, 2 malformed)");
  auto* vf_pub = vf_cmd->add_option("--pub", vf.pub_path, "Public key file");
  auto* vf_cert =
      vf_cmd->add_option("--cert", vf.cert_path, "Certificate file");
  vf_pub->excludes(vf_cert);
  vf_cmd->add_option("--ca-pub", vf.ca_pub_path,
                     "Also check the certificate's issuer signature")
      ->needs(vf_cert);
  vf_cmd->add_option("--sig", vf.sig_path, "Signature file")->required();
  add_message_options(vf_cmd, vf.message);

  IssueArgs is;
  auto* is_cmd = app.add_subcommand(
      "issue", "Run an in-process issuance flow and write the credential");
  is_cmd->add_option("--model", is.model, "m1, m2 or bke")
      ->check(CLI::IsMember({"m1", "m2", "bke"}));
  is_cmd->add_option("--alg", is.alg, "Hash algorithm");
  is_cmd->add_option("--w1", is.w1, "Message element width (8 or 16)");
  is_cmd->add_option("--w2", is.w2, "Expansion width");
  is_cmd->add_option("--seed-hex", is.seed_hex, "32-byte caterpillar seed");
  is_cmd->add_option("--subject", is.subject_id, "Subject identifier");
  is_cmd->add_option("--permissions", is.permissions,
                     "Comma-separated permissions");
  is_cmd->add_option("--not-before", is.not_before, "Unix seconds");
  is_cmd->add_option("--not-after", is.not_after, "Unix seconds");
  is_cmd->add_option("--period", is.period, "Time period l (bke)");
  is_cmd->add_option("--cert", is.cert_path, "Certificate output")
      ->required();
  is_cmd->add_option("--key", is.key_path, "Expanded private key output")
      ->required();
  is_cmd->add_option("--ca-pub", is.ca_pub_path,
                     "CA signing public key output");
  is_cmd->add_flag("--armor", is.armored, "Write hex-armored key files");

  TTestArgs tt;
  auto* tt_cmd =
      app.add_subcommand("ttest", "Pooled two-sample t-test of two files");
  tt_cmd->add_option("--a", tt.a_path, "First sample")->required();
  tt_cmd->add_option("--b", tt.b_path, "Second sample")->required();

  std::vector<const char*> argv;
  argv.push_back("pqcwc");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitMalformed;
  }

  try {
    if (tl_cmd->parsed()) return cmd_table_lengths(tl, out);
    if (bn_cmd->parsed()) return cmd_bench(bn, out, err);
    if (kg_cmd->parsed()) return cmd_keygen(kg, out, err);
    if (sg_cmd->parsed()) return cmd_sign(sg, err);
    if (vf_cmd->parsed()) return cmd_verify(vf, out, err);
    if (is_cmd->parsed()) return cmd_issue(is, out, err);
    if (tt_cmd->parsed()) return cmd_ttest(tt, out);
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitMalformed;
}

}  // namespace pqcwc::cli
