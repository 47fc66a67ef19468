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

#include "scet/acceptance.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "scet/error.h"
#include "scet/gadget.h"
#include "scet/hashes.h"
#include "scet/lu_attack.h"
#include "scet/params.h"
#include "scet/scheme.h"
#include "scet/trapdoor.h"

namespace scet {

namespace {

// Pinned tolerances.
constexpr std::size_t kRoundtrips = 200;
constexpr double kRoundtripSeconds = 60.0;
constexpr std::size_t kEqualityPairs = 100;
constexpr double kEqualitySeconds = 120.0;
constexpr std::size_t kKeygensPerTag = 100;
constexpr std::size_t kPreimageIdentityDraws = 1000;
constexpr std::size_t kNormDraws = 10000;
constexpr double kNormTailLimit = 0.01;
constexpr std::size_t kInvertTrials = 10000;
constexpr double kInvertSuccess = 0.999;
constexpr std::uint64_t kWatModulus = 97;
constexpr std::size_t kWatBudget = 10;
constexpr std::size_t kWatTrials = 100000;
constexpr double kWatSigmas = 3.0;
constexpr std::size_t kCombinations = 100;
constexpr std::size_t kCombinationTerms = 3;
constexpr std::size_t kAttackGames = 100;
constexpr double kAttackAdvantage = 0.99;
constexpr double kAttackSeconds = 120.0;
constexpr std::size_t kTampersPerField = 100;
constexpr double kTamperRejectRate = 0.99;

Bits random_bits(std::size_t len, Rng& rng) {
  Bits b(len);
  for (auto& x : b) x = static_cast<std::uint8_t>(rng() & 1);
  return b;
}

std::string fraction(std::size_t num, std::size_t den) {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

CriterionResult roundtrip(Rng& rng) {
  CriterionResult r{1, "signcrypt/unsigncrypt roundtrip", false, "", 0};
  auto start = std::chrono::steady_clock::now();
  PublicParams pp = setup(toy_profile(), rng());
  ReceiverKeys rk = keygen_receiver(pp, rng);
  SenderKeys sk = keygen_sender(pp, rng);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < kRoundtrips; ++i) {
    Bits mu = random_bits(pp.params.ell, rng);
    Ciphertext ct = signcrypt(pp, rk.pk, sk.sk, sk.pk, mu, rng);
    auto got = unsigncrypt(pp, rk.sk, rk.pk, sk.pk, ct, rng);
    ok += got && *got == mu;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = ok == kRoundtrips && secs < kRoundtripSeconds;
  r.detail = fraction(ok, kRoundtrips) + " recovered, limit " + fixed(kRoundtripSeconds, 0) + " s";
  return r;
}

CriterionResult equality(Rng& rng) {
  CriterionResult r{2, "equality test truth table", false, "", 0};
  auto start = std::chrono::steady_clock::now();
  PublicParams pp = setup(toy_profile(), rng());
  std::vector<ReceiverKeys> receivers;
  std::vector<SenderKeys> senders;
  std::vector<TagKey> tags;
  for (std::size_t i = 0; i < pp.params.num_receivers; ++i) {
    receivers.push_back(keygen_receiver(pp, rng));
    tags.push_back(tag_extract(receivers.back().sk));
  }
  for (std::size_t i = 0; i < pp.params.num_senders; ++i) senders.push_back(keygen_sender(pp, rng));

  std::size_t same_ok = 0, diff_ok = 0, cross = 0;
  for (std::size_t trial = 0; trial < 2 * kEqualityPairs; ++trial) {
    const bool same = trial < kEqualityPairs;
    std::size_t ri = trial % receivers.size();
    std::size_t rj = (trial / 2) % receivers.size();
    std::size_t si = trial % senders.size();
    std::size_t sj = (trial / 3) % senders.size();
    cross += ri != rj;
    Bits mu1 = random_bits(pp.params.ell, rng);
    Bits mu2 = mu1;
    if (!same) {
      while (mu2 == mu1) mu2 = random_bits(pp.params.ell, rng);
    }
    Ciphertext c1 = signcrypt(pp, receivers[ri].pk, senders[si].sk, senders[si].pk, mu1, rng);
    Ciphertext c2 = signcrypt(pp, receivers[rj].pk, senders[sj].sk, senders[sj].pk, mu2, rng);
    bool eq = test_equality(pp, {tags[ri], c1, receivers[ri].pk, senders[si].pk},
                            {tags[rj], c2, receivers[rj].pk, senders[sj].pk}, rng);
    if (same) {
      same_ok += eq;
    } else {
      diff_ok += !eq;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = same_ok == kEqualityPairs && diff_ok == kEqualityPairs && cross > 0 &&
             secs < kEqualitySeconds;
  r.detail = "same " + fraction(same_ok, kEqualityPairs) + " -> 1, different " +
             fraction(diff_ok, kEqualityPairs) + " -> 0, " + std::to_string(cross) +
             " cross-receiver pairs";
  return r;
}

CriterionResult trapdoor_identities(Rng& rng) {
  CriterionResult r{3, "trapdoor and preimage identities", false, "", 0};
  const ParamSet ps = toy_profile();
  std::size_t ok = 0;
  for (Residue tag : {Residue{0}, Residue{1}}) {
    ZqMatrix want = mat_scale(gadget_matrix(ps.n, ps.q), tag);
    for (std::size_t i = 0; i < kKeygensPerTag; ++i) {
      TrapGen g = gen_trap(ps.n, ps.mbar, ps.q, ps.sigma1, tag, rng);
      ok += trapdoor_image(g.a, g.trapdoor.r) == want;
    }
  }
  TrapGen g = gen_trap(ps.n, ps.mbar, ps.q, ps.sigma1, 1, rng);
  PreimageSampler sampler(g.trapdoor.r, ps.sigma2);
  TagMatrix one = TagMatrix::scalar(1, ps.n, ps.q);
  std::size_t pre_ok = 0;
  for (std::size_t i = 0; i < kPreimageIdentityDraws; ++i) {
    ZqVector u = sample_uniform_vector(ps.n, ps.q, rng);
    pre_ok += mat_vec(g.a, sampler.sample(g.a, one, u, rng)) == u;
  }
  r.passed = ok == 2 * kKeygensPerTag && pre_ok == kPreimageIdentityDraws;
  r.detail = "A[R;I] = tag G in " + fraction(ok, 2 * kKeygensPerTag) + ", A e = u in " +
             fraction(pre_ok, kPreimageIdentityDraws);
  return r;
}

CriterionResult norm_bound(Rng& rng) {
  CriterionResult r{4, "preimage norm tail", false, "", 0};
  const ParamSet ps = toy_profile();
  TrapGen g = gen_trap(ps.n, ps.mbar, ps.q, ps.sigma1, 1, rng);
  PreimageSampler sampler(g.trapdoor.r, ps.sigma2);
  TagMatrix one = TagMatrix::scalar(1, ps.n, ps.q);
  const double bound = ps.sigma2 * std::sqrt(static_cast<double>(ps.m()));
  std::size_t over = 0;
  for (std::size_t i = 0; i < kNormDraws; ++i) {
    ZqVector u = sample_uniform_vector(ps.n, ps.q, rng);
    over += norm(sampler.sample(g.a, one, u, rng)) > bound;
  }
  double rate = static_cast<double>(over) / kNormDraws;
  r.passed = rate <= kNormTailLimit;
  r.detail = "Pr[||e|| > sigma2 sqrt(m)] = " + fixed(rate) + " (limit " + fixed(kNormTailLimit) +
             ")";
  return r;
}

CriterionResult invert_success(Rng& rng) {
  CriterionResult r{5, "LWE inversion", false, "", 0};
  PublicParams pp = setup(toy_profile(), rng());
  const ParamSet& ps = pp.params;
  ReceiverKeys rk = keygen_receiver(pp, rng);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < kInvertTrials; ++i) {
    ZqVector t = sample_uniform_vector(ps.n, ps.q, rng);
    if (t.is_zero()) t[0] = 1;
    TagMatrix h(frd_encode(t, pp.frd));
    ZqMatrix right = mat_add(rk.pk.a.column_range(ps.mbar, ps.m()), tagged_gadget(h.matrix()));
    ZqMatrix a = hconcat(rk.pk.a.column_range(0, ps.mbar), right);
    ZqVector s = sample_uniform_vector(ps.n, ps.q, rng);
    IntVector e = sample_vec(ps.m(), ps.alpha_q(), rng);
    ZqVector b = vec_add(vec_mat(s, a), e);
    try {
      LweSolution sol = invert_lwe(a, rk.sk.t, h, b);
      ok += sol.s == s && sol.e == e;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kDecodingFailure) throw;
    }
  }
  double rate = static_cast<double>(ok) / kInvertTrials;
  r.passed = rate >= kInvertSuccess;
  r.detail = fraction(ok, kInvertTrials) + " exact (s, e) recoveries (need " +
             fixed(kInvertSuccess, 3) + ")";
  return r;
}

CriterionResult abort_resistance(Rng& rng) {
  CriterionResult r{6, "abort-resistant hash interval", false, "", 0};
  const double q = static_cast<double>(kWatModulus);
  const double lo = (1.0 / q) * (1.0 - static_cast<double>(kWatBudget) / q);
  const double hi = 1.0 / q;
  const double se = std::sqrt(hi * (1.0 - hi) / static_cast<double>(kWatTrials));
  double est = wat_nonabort_estimate(kWatModulus, kWatBudget, kWatTrials, rng);
  r.passed = est >= lo - kWatSigmas * se && est <= hi + kWatSigmas * se;
  r.detail = "estimate " + fixed(est, 5) + " in [" + fixed(lo - kWatSigmas * se, 5) + ", " +
             fixed(hi + kWatSigmas * se, 5) + "]";
  return r;
}

CriterionResult combination(Rng& rng) {
  CriterionResult r{7, "trapdoor linear combination", false, "", 0};
  const ParamSet ps = toy_profile();
  const std::size_t nk = ps.nk();
  ZqMatrix g = gadget_matrix(ps.n, ps.q);
  std::size_t ok = 0;
  for (std::size_t trial = 0; trial < kCombinations; ++trial) {
    ZqMatrix abar = sample_uniform_matrix(ps.n, ps.mbar, ps.q, rng);
    std::vector<GTrapdoor> parts;
    std::vector<ZqMatrix> blocks;
    std::vector<Residue> coeffs;
    for (std::size_t i = 0; i < kCombinationTerms; ++i) {
      GTrapdoor t{sample_matrix(ps.mbar, nk, ps.sigma1, rng), sample_uniform(ps.q, rng)};
      blocks.push_back(mat_sub(mat_scale(g, t.tag), mat_mul(abar, t.r)));
      parts.push_back(std::move(t));
      coeffs.push_back(sample_uniform(ps.q, rng));
    }
    GTrapdoor combined = trapdoor_combine(parts, coeffs, ps.q);
    ZqMatrix sum(ps.n, nk, ps.q);
    for (std::size_t i = 0; i < kCombinationTerms; ++i) {
      sum = mat_add(sum, mat_scale(blocks[i], coeffs[i]));
    }
    ZqMatrix lhs = trapdoor_image(hconcat(abar, sum), combined.r);
    ok += lhs == mat_scale(g, combined.tag);
  }
  r.passed = ok == kCombinations;
  r.detail = fraction(ok, kCombinations) + " combinations satisfy the trapdoor relation";
  return r;
}

CriterionResult size_accounting(Rng& rng) {
  CriterionResult r{8, "size accounting", false, "", 0};
  PublicParams pp = setup(toy_profile(), rng());
  const ParamSet& ps = pp.params;
  ReceiverKeys rk = keygen_receiver(pp, rng);
  SenderKeys sk = keygen_sender(pp, rng);
  Ciphertext ct = signcrypt(pp, rk.pk, sk.sk, sk.pk, random_bits(ps.ell, rng), rng);
  const std::size_t m = ps.m();
  const std::size_t want_pk = 2 * m * ps.n;
  const std::size_t want_sk = 2 * ps.mbar * ps.nk();
  const std::size_t want_ct = 3 * m + (m + ps.nk()) + 2 * (m + ps.ell);
  std::size_t pk_r = container_element_count(serialize(ps, rk.pk));
  std::size_t pk_s = container_element_count(serialize(ps, sk.pk));
  std::size_t sk_r = container_element_count(serialize(ps, rk.sk));
  std::size_t sk_s = container_element_count(serialize(ps, sk.sk));
  std::size_t ctn = container_element_count(serialize(ps, ct));
  r.passed = pk_r == want_pk && pk_s == want_pk && sk_r == want_sk && sk_s == want_sk &&
             ctn == want_ct;
  r.detail = "pk " + std::to_string(pk_r) + "/" + std::to_string(want_pk) + ", sk " +
             std::to_string(sk_r) + "/" + std::to_string(want_sk) + ", ct " +
             std::to_string(ctn) + "/" + std::to_string(want_ct);
  return r;
}

CriterionResult attack(Rng& rng) {
  CriterionResult r{9, "IND-CPA attack on Lu et al.", false, "", 0};
  auto start = std::chrono::steady_clock::now();
  lu::AttackReport rep = lu::attack_experiment(kAttackGames, rng());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = rep.correct == kAttackGames && rep.advantage() >= kAttackAdvantage &&
             secs < kAttackSeconds;
  r.detail = "accuracy " + fraction(rep.correct, rep.trials) + ", advantage " +
             fixed(rep.advantage(), 3) + ", collisions " + std::to_string(rep.collisions);
  return r;
}

CriterionResult tamper(Rng& rng) {
  CriterionResult r{10, "tamper rejection", false, "", 0};
  PublicParams pp = setup(toy_profile(), rng());
  const ParamSet& ps = pp.params;
  ReceiverKeys rk = keygen_receiver(pp, rng);
  SenderKeys sk = keygen_sender(pp, rng);
  Bits mu = random_bits(ps.ell, rng);
  const Ciphertext honest = signcrypt(pp, rk.pk, sk.sk, sk.pk, mu, rng);
  if (!unsigncrypt(pp, rk.sk, rk.pk, sk.pk, honest, rng)) {
    r.detail = "honest ciphertext rejected";
    return r;
  }
  auto nonzero_int = [&]() {
    std::int64_t d = 0;
    while (d == 0) d = std::uniform_int_distribution<std::int64_t>(-8, 8)(rng);
    return d;
  };
  auto nonzero_res = [&]() { return 1 + sample_uniform(ps.q - 1, rng); };
  auto pick = [&](std::size_t len) {
    return std::uniform_int_distribution<std::size_t>(0, len - 1)(rng);
  };

  const char* names[] = {"e", "c1", "r_s", "r_e"};
  bool all = true;
  std::ostringstream detail;
  for (int field = 0; field < 4; ++field) {
    std::size_t rejected = 0;
    for (std::size_t i = 0; i < kTampersPerField; ++i) {
      Ciphertext ct = honest;
      switch (field) {
        case 0: ct.e[pick(ct.e.size())] += nonzero_int(); break;
        case 1: {
          std::size_t j = pick(ct.c1.size());
          ct.c1[j] = add_mod(ct.c1[j], nonzero_res(), ps.q);
          break;
        }
        case 2: ct.r_s[pick(ct.r_s.size())] += nonzero_int(); break;
        default: ct.r_e[pick(ct.r_e.size())] += nonzero_int(); break;
      }
      rejected += !unsigncrypt(pp, rk.sk, rk.pk, sk.pk, ct, rng).has_value();
    }
    double rate = static_cast<double>(rejected) / kTampersPerField;
    all = all && rate >= kTamperRejectRate;
    detail << (field ? ", " : "") << names[field] << " " << fraction(rejected, kTampersPerField);
  }
  r.passed = all;
  r.detail = "rejected " + detail.str();
  return r;
}

CriterionResult checker(Rng&) {
  CriterionResult r{11, "parameter checker", false, "", 0};
  ConstraintReport demo = check_constraints(demo_profile());
  ParamSet mutated = demo_profile();
  mutated.name = "demo-weak-noise";
  mutated.alpha = 0.9 * 2.0 * std::sqrt(static_cast<double>(mutated.n)) /
                  static_cast<double>(mutated.q);
  ConstraintReport weak = check_constraints(mutated);
  std::vector<std::string> failing = weak.failing_ids();
  r.passed = demo.all_ok() && failing == std::vector<std::string>{"lwe-hardness"};
  std::string names;
  for (const auto& id : failing) names += (names.empty() ? "" : ",") + id;
  r.detail = std::string("demo ") + (demo.all_ok() ? "passes all" : "fails") +
             ", mutated flags {" + names + "}";
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(id));
  auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = roundtrip(rng); break;
      case 2: r = equality(rng); break;
      case 3: r = trapdoor_identities(rng); break;
      case 4: r = norm_bound(rng); break;
      case 5: r = invert_success(rng); break;
      case 6: r = abort_resistance(rng); break;
      case 7: r = combination(rng); break;
      case 8: r = size_accounting(rng); break;
      case 9: r = attack(rng); break;
      case 10: r = tamper(rng); break;
      case 11: r = checker(rng); break;
      default: throw Error(ErrorCode::kInvalidArgument, "no such criterion");
    }
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kInvalidArgument && (id < 1 || id > kCriterionCount)) throw;
    r.id = id;
    r.passed = false;
    r.detail = std::string("error: ") + err.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(
    std::uint64_t seed, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, seed));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << " ("
    << fixed(r.seconds, 2) << " s)";
  return s.str();
}

}  // namespace scet
