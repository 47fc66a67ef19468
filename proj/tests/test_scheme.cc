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

#include <chrono>
#include <set>
#include <vector>

#include "doctest.h"
#include "scet/error.h"
#include "scet/gadget.h"
#include "scet/scheme.h"
#include "scet/trapdoor.h"

using namespace scet;

namespace {

Bits random_bits(std::size_t n, Rng& rng) {
  Bits b(n);
  for (auto& x : b) x = rng() & 1;
  return b;
}

struct World {
  PublicParams pp;
  ReceiverKeys r1, r2;
  SenderKeys s1, s2;
};

World make_world(std::uint64_t seed) {
  Rng rng(seed);
  PublicParams pp = setup(toy_profile(), seed);
  ReceiverKeys r1 = keygen_receiver(pp, rng);
  ReceiverKeys r2 = keygen_receiver(pp, rng);
  SenderKeys s1 = keygen_sender(pp, rng);
  SenderKeys s2 = keygen_sender(pp, rng);
  return {std::move(pp), std::move(r1), std::move(r2), std::move(s1), std::move(s2)};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("setup dimensions and speed") {
  auto start = std::chrono::steady_clock::now();
  PublicParams pp = setup(toy_profile(), 1);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 1.0);
  const ParamSet& ps = pp.params;
  CHECK(pp.c.size() == ps.n + 1);
  CHECK(pp.c_prime.size() == ps.n + 1);
  for (const auto& c : pp.c) {
    CHECK(c.rows() == ps.n);
    CHECK(c.cols() == ps.nk());
  }
  CHECK(pp.b.rows() == ps.n);
  CHECK(pp.b.cols() == ps.m());
  CHECK(pp.u_mat.rows() == ps.n);
  CHECK(pp.u_mat.cols() == ps.ell);
  CHECK(pp.u.size() == ps.n);
  CHECK(setup(toy_profile(), 1).b == pp.b);

  ParamSet bad = toy_profile();
  bad.sigma2 = 40;
  CHECK(code_of([&] { setup(bad, 1); }) == ErrorCode::kInvalidParams);
}

TEST_CASE("key generation") {
  Rng rng(50);
  PublicParams pp = setup(toy_profile(), 2);
  const ParamSet& ps = pp.params;
  ZqMatrix g = gadget_matrix(ps.n, ps.q);
  std::set<std::vector<Residue>> seen;
  for (int t = 0; t < 100; ++t) {
    ReceiverKeys r = keygen_receiver(pp, rng);
    CHECK(trapdoor_image(r.pk.a, r.sk.t).is_zero());
    CHECK(trapdoor_image(r.pk.a_prime, r.sk.t_prime).is_zero());
    seen.insert({r.pk.a.entries().begin(), r.pk.a.entries().end()});
  }
  CHECK(seen.size() == 100);
  SenderKeys s = keygen_sender(pp, rng);
  CHECK(trapdoor_image(s.pk.a, s.sk.t) == g);
  CHECK(trapdoor_image(s.pk.a_prime, s.sk.t_prime) == g);
}

TEST_CASE("ciphertext component counts") {
  World w = make_world(51);
  Rng rng(52);
  const ParamSet& ps = w.pp.params;
  Ciphertext ct = signcrypt(w.pp, w.r1.pk, w.s1.sk, w.s1.pk, random_bits(ps.ell, rng), rng);
  const std::size_t m = ps.m(), nk = ps.nk(), ell = ps.ell;
  // r_e, r_s, r_e' ~ D_{alpha q}; e ~ D_{sigma2}; the c parts are in Z_q.
  CHECK(ct.r_e.size() + ct.r_s.size() + ct.r_e_prime.size() == 3 * m);
  CHECK(ct.e.size() == m + nk);
  CHECK(ct.c0.size() + ct.c1.size() + ct.c0_prime.size() + ct.c1_prime.size() == 2 * (m + ell));
  CHECK(ct.element_count() == 3 * m + (m + nk) + 2 * (m + ell));
  CHECK(element_count(w.r1.pk) == 2 * m * ps.n);
  CHECK(element_count(w.s1.sk) == 2 * ps.mbar * nk);
}

TEST_CASE("roundtrip") {
  World w = make_world(53);
  Rng rng(54);
  const ParamSet& ps = w.pp.params;
  int ok = 0;
  for (int t = 0; t < 200; ++t) {
    Bits mu = random_bits(ps.ell, rng);
    Ciphertext ct = signcrypt(w.pp, w.r1.pk, w.s1.sk, w.s1.pk, mu, rng);
    auto got = unsigncrypt(w.pp, w.r1.sk, w.r1.pk, w.s1.pk, ct, rng);
    ok += got && *got == mu;
  }
  CHECK(ok == 200);
}

TEST_CASE("unsigncrypt rejects the wrong receiver or sender") {
  World w = make_world(55);
  Rng rng(56);
  Bits mu = random_bits(w.pp.params.ell, rng);
  Ciphertext ct = signcrypt(w.pp, w.r1.pk, w.s1.sk, w.s1.pk, mu, rng);
  CHECK_FALSE(unsigncrypt(w.pp, w.r2.sk, w.r2.pk, w.s1.pk, ct, rng).has_value());
  CHECK_FALSE(unsigncrypt(w.pp, w.r1.sk, w.r1.pk, w.s2.pk, ct, rng).has_value());
}

TEST_CASE("tampering") {
  World w = make_world(57);
  Rng rng(58);
  const ParamSet& ps = w.pp.params;
  Bits mu = random_bits(ps.ell, rng);
  const Ciphertext ct = signcrypt(w.pp, w.r1.pk, w.s1.sk, w.s1.pk, mu, rng);
  REQUIRE(unsigncrypt(w.pp, w.r1.sk, w.r1.pk, w.s1.pk, ct, rng) == mu);

  for (std::size_t i = 0; i < ct.e.size(); i += 7) {
    Ciphertext bad = ct;
    bad.e[i] += 1;
    CHECK(mat_vec(signature_matrix(w.pp, w.s1.pk, w.r1.pk, mu, bad), bad.e) != w.pp.u);
    CHECK_FALSE(unsigncrypt(w.pp, w.r1.sk, w.r1.pk, w.s1.pk, bad, rng).has_value());
  }
  for (std::size_t i = 0; i < ps.ell; i += 3) {
    Ciphertext bad = ct;
    bad.c1[i] = add_mod(bad.c1[i], ps.q / 2, ps.q);
    CHECK_FALSE(unsigncrypt(w.pp, w.r1.sk, w.r1.pk, w.s1.pk, bad, rng).has_value());
  }
  Ciphertext truncated = ct;
  truncated.e.pop_back();
  CHECK(code_of([&] { unsigncrypt(w.pp, w.r1.sk, w.r1.pk, w.s1.pk, truncated, rng); }) ==
        ErrorCode::kDimensionMismatch);
}

TEST_CASE("equality test across receivers and senders") {
  World w = make_world(59);
  Rng rng(60);
  const ParamSet& ps = w.pp.params;
  TagKey t1 = tag_extract(w.r1.sk), t2 = tag_extract(w.r2.sk);
  CHECK(t1.t_prime == w.r1.sk.t_prime);
  for (int t = 0; t < 20; ++t) {
    Bits mu = random_bits(ps.ell, rng);
    Bits other = mu;
    other[rng() % ps.ell] ^= 1;
    Ciphertext a = signcrypt(w.pp, w.r1.pk, w.s1.sk, w.s1.pk, mu, rng);
    Ciphertext b = signcrypt(w.pp, w.r2.pk, w.s2.sk, w.s2.pk, mu, rng);
    Ciphertext c = signcrypt(w.pp, w.r2.pk, w.s1.sk, w.s1.pk, other, rng);
    CHECK(test_equality(w.pp, {t1, a, w.r1.pk, w.s1.pk}, {t2, b, w.r2.pk, w.s2.pk}, rng));
    CHECK_FALSE(test_equality(w.pp, {t1, a, w.r1.pk, w.s1.pk}, {t2, c, w.r2.pk, w.s1.pk}, rng));
    auto h = open_tag_track(w.pp, {t1, a, w.r1.pk, w.s1.pk}, rng);
    REQUIRE(h.has_value());
    CHECK(*h == hash_H(mu));
  }
  // A tag for the wrong receiver cannot open the tag track.
  Ciphertext a = signcrypt(w.pp, w.r1.pk, w.s1.sk, w.s1.pk, random_bits(ps.ell, rng), rng);
  CHECK(test_equality_detailed(w.pp, {t2, a, w.r1.pk, w.s1.pk}, {t1, a, w.r1.pk, w.s1.pk}, rng) !=
        TestOutcome::kEqual);
}

TEST_CASE("bit decoding threshold") {
  ZqVector v(64, {14, 18, 32, 0, 48, 47, 17, 15, 16});
  CHECK(decode_bits(v) == Bits{0, 1, 1, 0, 0, 1, 1, 0, 0});
}

TEST_CASE("containers roundtrip bit-exactly") {
  World w = make_world(61);
  Rng rng(62);
  const ParamSet& ps = w.pp.params;
  Ciphertext ct = signcrypt(w.pp, w.r1.pk, w.s1.sk, w.s1.pk, random_bits(ps.ell, rng), rng);
  TagKey tag = tag_extract(w.r1.sk);

  wire::Bytes ppb = serialize(w.pp);
  PublicParams pp2 = deserialize_public_params(ppb);
  CHECK(serialize(pp2) == ppb);
  CHECK(pp2.params == ps);
  CHECK(pp2.frd.poly() == w.pp.frd.poly());

  CHECK(deserialize_receiver_pk(serialize(ps, w.r1.pk), ps) == w.r1.pk);
  CHECK(deserialize_receiver_sk(serialize(ps, w.r1.sk), ps) == w.r1.sk);
  CHECK(deserialize_sender_pk(serialize(ps, w.s1.pk), ps) == w.s1.pk);
  CHECK(deserialize_sender_sk(serialize(ps, w.s1.sk), ps) == w.s1.sk);
  CHECK(deserialize_ciphertext(serialize(ps, ct), ps) == ct);
  CHECK(deserialize_tag_key(serialize(ps, tag), ps) == tag);
  CHECK(peek_kind(serialize(ps, ct)) == wire::Kind::kCiphertext);
  CHECK(container_element_count(serialize(ps, ct)) == ct.element_count());
  CHECK(container_element_count(serialize(ps, w.r1.pk)) == element_count(w.r1.pk));
  CHECK(container_element_count(serialize(ps, w.r1.sk)) == element_count(w.r1.sk));

  CHECK(code_of([&] { deserialize_sender_pk(serialize(ps, w.r1.pk), ps); }) ==
        ErrorCode::kBadKind);
  CHECK(code_of([&] { deserialize_ciphertext(serialize(ps, ct), demo_profile()); }) ==
        ErrorCode::kParamMismatch);
  wire::Bytes cut = serialize(ps, ct);
  cut.resize(cut.size() - 3);
  CHECK(code_of([&] { deserialize_ciphertext(cut, ps); }) == ErrorCode::kTruncated);
  wire::Bytes pp_bad = ppb;
  pp_bad[20] ^= 1;
  CHECK_THROWS_AS(deserialize_public_params(pp_bad), Error);
}
