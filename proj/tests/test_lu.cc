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

#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "scet/gadget.h"
#include "scet/lu_attack.h"
#include "scet/params.h"
#include "scet/trapdoor.h"

using namespace scet;
using namespace scet::lu;

TEST_CASE("toy parameters") {
  LuParams pp = lu_toy_params(1);
  CHECK(pp.n == 4);
  CHECK(pp.q == 1048573);
  CHECK(is_prime(pp.q));
  CHECK(pp.m == static_cast<std::size_t>(std::ceil(6.0 * pp.n * std::log2(double(pp.q)))));
  CHECK(pp.c.size() == pp.tau + 1);
  for (const auto& c : pp.c) {
    CHECK(c.rows() == pp.n);
    CHECK(c.cols() == pp.m);
  }
  CHECK(pp.norm_bound() == doctest::Approx(pp.sigma * std::sqrt(2.0 * pp.m)));
}

TEST_CASE("keys are trapdoored and distinct") {
  LuParams pp = lu_toy_params(2);
  Rng rng(70);
  std::set<std::vector<Residue>> seen;
  for (int t = 0; t < 100; ++t) {
    LuKeys k = lu_keygen(pp, rng);
    seen.insert({k.pk_s.a.entries().begin(), k.pk_s.a.entries().end()});
    seen.insert({k.pk_r.a.entries().begin(), k.pk_r.a.entries().end()});
    if (t == 0) {
      ZqMatrix g = gadget_matrix(pp.n, pp.q);
      CHECK(trapdoor_image(k.pk_s.a, k.sk_s.t) == g);
      CHECK(trapdoor_image(k.pk_r.a, k.sk_r.t) == g);
      CHECK(k.pk_s.b.cols() == pp.m);
    }
  }
  CHECK(seen.size() == 200);
}

TEST_CASE("honest signcryption verifies and its kernel vector is short") {
  LuParams pp = lu_toy_params(3);
  Rng rng(71);
  LuKeys k = lu_keygen(pp, rng);
  int short_v = 0;
  for (int t = 0; t < 100; ++t) {
    ZqVector mu = sample_uniform_vector(pp.n, pp.q, rng);
    LuSignature sig = lu_signcrypt_detailed(pp, mu, k.sk_s, k.pk_s, k.pk_r, rng);
    CHECK(sig.v.size() == 2 * pp.m);
    CHECK(mat_vec(lu_f_mu(pp, k.pk_s, k.pk_r, mu), sig.v).is_zero());
    double nv = norm(sig.v);
    short_v += nv > 0 && nv <= pp.norm_bound();
    auto back = lu_unsigncrypt(pp, sig.ct, k.pk_s, k.pk_r, k.sk_r);
    REQUIRE(back.has_value());
    CHECK(*back == mu);
  }
  CHECK(short_v >= 99);
}

TEST_CASE("hash outputs") {
  LuParams pp = lu_toy_params(4);
  Rng rng(72);
  LuKeys k = lu_keygen(pp, rng);
  ZqVector mu = sample_uniform_vector(pp.n, pp.q, rng);
  auto h = lu_hash1(pp, mu, k.pk_r);
  CHECK(h.size() == pp.tau);
  for (auto b : h) CHECK(b <= 1);
  CHECK(lu_hash1(pp, mu, k.pk_r) == h);
  IntVector v(2 * pp.m, 1);
  CHECK(lu_hash2(pp, mu, k.pk_s, k.pk_r, v).size() == pp.n);
}

TEST_CASE("distinguisher identifies the challenge message") {
  LuParams pp = lu_toy_params(5);
  Rng rng(73);
  LuKeys k = lu_keygen(pp, rng);
  for (int b = 0; b < 2; ++b) {
    int correct = 0;
    for (int t = 0; t < 100; ++t) {
      ZqVector mu0 = sample_uniform_vector(pp.n, pp.q, rng);
      ZqVector mu1 = sample_uniform_vector(pp.n, pp.q, rng);
      LuCiphertext ct = lu_signcrypt(pp, b ? mu1 : mu0, k.sk_s, k.pk_s, k.pk_r, rng);
      CpaVerdict v = cpa_distinguish(pp, ct, k.pk_s, k.pk_r, mu0, mu1);
      correct += v.outcome == CpaOutcome::kMatch && v.guess == b;
    }
    CHECK(correct == 100);
  }

  LuCiphertext garbage{sample_uniform_vector(pp.n, pp.q, rng),
                       sample_uniform_vector(2 * pp.m, pp.q, rng),
                       sample_uniform_vector(2 * pp.m, pp.q, rng)};
  ZqVector mu0 = sample_uniform_vector(pp.n, pp.q, rng);
  ZqVector mu1 = sample_uniform_vector(pp.n, pp.q, rng);
  CHECK(cpa_distinguish(pp, garbage, k.pk_s, k.pk_r, mu0, mu1).outcome ==
        CpaOutcome::kNeitherMatches);
  CHECK_FALSE(lu_unsigncrypt(pp, garbage, k.pk_s, k.pk_r, k.sk_r).has_value());
}

TEST_CASE("attack experiment") {
  AttackReport rep = attack_experiment(20, 9);
  CHECK(rep.trials == 20);
  CHECK(rep.games.size() == 20);
  CHECK(rep.correct == 20);
  CHECK(rep.advantage() >= 0.99);
  CHECK(rep.collisions == 0);
}
