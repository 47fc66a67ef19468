/*
 * Copyright 2026 The SCET Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// scet: command-line front end.
//
// Exit codes: 0 success, 1 cryptographic reject, 2 I/O or format error,
// 3 invalid parameters. Secret keys are written to files only.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scet/acceptance.h"
#include "scet/error.h"
#include "scet/lu_attack.h"
#include "scet/params.h"
#include "scet/scheme.h"

namespace {

using namespace scet;

enum Exit : int { kOk = 0, kReject = 1, kFormat = 2, kBadParams = 3 };

int exit_for(ErrorCode code) {
  return code == ErrorCode::kInvalidParams ? kBadParams : kFormat;
}

Rng make_rng(const std::optional<std::uint64_t>& seed) {
  if (seed) return Rng(*seed);
  std::random_device rd;
  std::seed_seq seq{rd(), rd(), rd(), rd()};
  return Rng(seq);
}

ParamSet load_profile(const std::string& profile) {
  if (profile == "toy") return toy_profile();
  if (profile == "demo") return demo_profile();
  std::ifstream in(profile);
  if (!in) throw Error(ErrorCode::kIo, "cannot open profile " + profile);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("profile ") + profile + ": " + e.what());
  }
  return params_from_json(j);
}

PublicParams load_pp(const std::string& path) {
  return deserialize_public_params(wire::read_file(path));
}

struct KeyPair {
  std::string pk_r;
  std::string pk_s;
};

// Byte-level damage inside a well-labelled ciphertext container is a
// cryptographic reject rather than a format error.
bool is_content_error(ErrorCode code) {
  return code == ErrorCode::kTruncated || code == ErrorCode::kModulusMismatch ||
         code == ErrorCode::kDimensionMismatch || code == ErrorCode::kInvalidArgument;
}

Ciphertext load_ciphertext(const std::string& path, const ParamSet& ps, bool* damaged) {
  wire::Bytes bytes = wire::read_file(path);
  if (peek_kind(bytes) != wire::Kind::kCiphertext) {
    throw Error(ErrorCode::kBadKind, path + " is not a ciphertext");
  }
  try {
    return deserialize_ciphertext(bytes, ps);
  } catch (const Error& e) {
    if (!is_content_error(e.code())) throw;
    *damaged = true;
    return {};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice signcryption with equality test"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  std::string pp_path = "pp.bin";

  // setup
  std::string profile = "toy";
  std::string out_path;
  auto* setup_cmd = app.add_subcommand("setup", "Generate public parameters");
  setup_cmd->add_option("--profile", profile, "toy, demo, or a JSON parameter file");
  setup_cmd->add_option("--seed", seed);
  setup_cmd->add_option("--out", out_path)->required();

  // keygen
  std::string role;
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a receiver or sender key pair");
  keygen_cmd->add_option("--pp", pp_path);
  keygen_cmd->add_option("--role", role)->required()->check(CLI::IsMember({"receiver", "sender"}));
  keygen_cmd->add_option("--out", out_path, "writes PREFIX.pk and PREFIX.sk")->required();
  keygen_cmd->add_option("--seed", seed);

  // signcrypt
  std::string to, from, from_pk, msg;
  auto* sc_cmd = app.add_subcommand("signcrypt", "Signcrypt a message");
  sc_cmd->add_option("--pp", pp_path);
  sc_cmd->add_option("--to", to, "receiver public key")->required();
  sc_cmd->add_option("--from", from, "sender secret key")->required();
  sc_cmd->add_option("--from-pk", from_pk, "sender public key")->required();
  sc_cmd->add_option("--msg", msg, "message as hex, ell bits MSB-first")->required();
  sc_cmd->add_option("--out", out_path)->required();
  sc_cmd->add_option("--seed", seed);

  // unsigncrypt
  std::string key, my_pk, sender, in_path;
  auto* usc_cmd = app.add_subcommand("unsigncrypt", "Recover and verify a message");
  usc_cmd->add_option("--pp", pp_path);
  usc_cmd->add_option("--key", key, "receiver secret key")->required();
  usc_cmd->add_option("--my-pk", my_pk, "receiver public key")->required();
  usc_cmd->add_option("--sender", sender, "sender public key")->required();
  usc_cmd->add_option("--in", in_path)->required();
  usc_cmd->add_option("--seed", seed);

  // tag
  auto* tag_cmd = app.add_subcommand("tag", "Extract the equality-test key");
  tag_cmd->add_option("--pp", pp_path);
  tag_cmd->add_option("--key", key, "receiver secret key")->required();
  tag_cmd->add_option("--out", out_path)->required();

  // test
  std::string tag1, tag2, ct1, ct2;
  std::vector<std::string> keys1, keys2;
  auto* test_cmd = app.add_subcommand("test", "Test two ciphertexts for equal messages");
  test_cmd->add_option("--pp", pp_path);
  test_cmd->add_option("--tag1", tag1)->required();
  test_cmd->add_option("--ct1", ct1)->required();
  test_cmd->add_option("--keys1", keys1, "receiver pk and sender pk")->required()->expected(2);
  test_cmd->add_option("--tag2", tag2)->required();
  test_cmd->add_option("--ct2", ct2)->required();
  test_cmd->add_option("--keys2", keys2, "receiver pk and sender pk")->required()->expected(2);
  test_cmd->add_option("--seed", seed);

  // params-check
  bool json = false;
  auto* pc_cmd = app.add_subcommand("params-check", "Evaluate parameter constraints");
  pc_cmd->add_option("--profile", profile, "toy, demo, or a JSON parameter file");
  pc_cmd->add_flag("--json", json);

  // attack-demo
  std::size_t trials = 10;
  std::uint64_t attack_seed = 1;
  auto* atk_cmd = app.add_subcommand("attack-demo", "IND-CPA distinguisher against Lu et al.");
  atk_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  atk_cmd->add_option("--seed", attack_seed);

  // selftest
  std::uint64_t self_seed = 20260501;
  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suite at the toy profile");
  self_cmd->add_option("--seed", self_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kFormat;
  }

  try {
    if (*setup_cmd) {
      PublicParams pp = setup(load_profile(profile), make_rng(seed)());
      wire::write_file(out_path, serialize(pp));
      std::cout << "wrote " << out_path << " (" << pp.params.name << ")\n";
      return kOk;
    }
    if (*pc_cmd) {
      ConstraintReport rep = check_constraints(load_profile(profile));
      if (json) {
        std::cout << rep.to_json().dump(2) << "\n";
      } else {
        std::cout << rep.to_text();
      }
      return rep.functional_ok() ? kOk : kBadParams;
    }
    if (*atk_cmd) {
      lu::AttackReport rep = lu::attack_experiment(trials, attack_seed);
      for (std::size_t i = 0; i < rep.games.size(); ++i) {
        const auto& g = rep.games[i];
        std::cout << "trial " << i << ": b=" << g.b << " guess=" << g.guess
                  << (g.outcome == lu::CpaOutcome::kMatch ? "" : " (neither matched)") << "\n";
      }
      std::cout << "correct " << rep.correct << "/" << rep.trials << "  collisions "
                << rep.collisions << "  advantage " << rep.advantage() << "\n";
      return kOk;
    }
    if (*self_cmd) {
      int failed = 0;
      run_acceptance(self_seed, [&](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
        failed += !r.passed;
      });
      return failed == 0 ? kOk : kReject;
    }

    PublicParams pp = load_pp(pp_path);
    const ParamSet& ps = pp.params;

    if (*keygen_cmd) {
      Rng rng = make_rng(seed);
      if (role == "receiver") {
        ReceiverKeys k = keygen_receiver(pp, rng);
        wire::write_file(out_path + ".pk", serialize(ps, k.pk));
        wire::write_file(out_path + ".sk", serialize(ps, k.sk));
      } else {
        SenderKeys k = keygen_sender(pp, rng);
        wire::write_file(out_path + ".pk", serialize(ps, k.pk));
        wire::write_file(out_path + ".sk", serialize(ps, k.sk));
      }
      std::cout << "wrote " << out_path << ".pk and " << out_path << ".sk\n";
      return kOk;
    }
    if (*sc_cmd) {
      Rng rng = make_rng(seed);
      Bits mu = hex_to_bits(msg, ps.ell);
      auto pk_r = deserialize_receiver_pk(wire::read_file(to), ps);
      auto sk_s = deserialize_sender_sk(wire::read_file(from), ps);
      auto pk_s = deserialize_sender_pk(wire::read_file(from_pk), ps);
      wire::write_file(out_path, serialize(ps, signcrypt(pp, pk_r, sk_s, pk_s, mu, rng)));
      std::cout << "wrote " << out_path << "\n";
      return kOk;
    }
    if (*usc_cmd) {
      Rng rng = make_rng(seed);
      auto sk_r = deserialize_receiver_sk(wire::read_file(key), ps);
      auto pk_r = deserialize_receiver_pk(wire::read_file(my_pk), ps);
      auto pk_s = deserialize_sender_pk(wire::read_file(sender), ps);
      bool damaged = false;
      Ciphertext ct = load_ciphertext(in_path, ps, &damaged);
      std::optional<Bits> mu;
      if (!damaged) mu = unsigncrypt(pp, sk_r, pk_r, pk_s, ct, rng);
      if (!mu) {
        std::cout << "REJECT\n";
        return kReject;
      }
      std::cout << bits_to_hex(*mu) << "\n";
      return kOk;
    }
    if (*tag_cmd) {
      auto sk_r = deserialize_receiver_sk(wire::read_file(key), ps);
      wire::write_file(out_path, serialize(ps, tag_extract(sk_r)));
      std::cout << "wrote " << out_path << "\n";
      return kOk;
    }
    if (*test_cmd) {
      Rng rng = make_rng(seed);
      auto t1 = deserialize_tag_key(wire::read_file(tag1), ps);
      auto t2 = deserialize_tag_key(wire::read_file(tag2), ps);
      auto r1 = deserialize_receiver_pk(wire::read_file(keys1[0]), ps);
      auto s1 = deserialize_sender_pk(wire::read_file(keys1[1]), ps);
      auto r2 = deserialize_receiver_pk(wire::read_file(keys2[0]), ps);
      auto s2 = deserialize_sender_pk(wire::read_file(keys2[1]), ps);
      bool d1 = false, d2 = false;
      Ciphertext c1 = load_ciphertext(ct1, ps, &d1);
      Ciphertext c2 = load_ciphertext(ct2, ps, &d2);
      bool eq = !d1 && !d2 && test_equality(pp, {t1, c1, r1, s1}, {t2, c2, r2, s2}, rng);
      std::cout << (eq ? 1 : 0) << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFormat;
  }
  return kFormat;
}
