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

#include "scet/scheme.h"

#include <cmath>
#include <utility>

#include "scet/error.h"
#include "scet/gadget.h"
#include "scet/trapdoor.h"

namespace scet {

namespace {

constexpr int kMaxTagResamples = 64;

ZqMatrix uniform_blocks(const ParamSet& ps, Rng& rng) {
  return sample_uniform_matrix(ps.n, ps.nk(), ps.q, rng);
}

ZqVector add_bits(const ZqVector& v, const Bits& bits, bool subtract) {
  const std::uint64_t q = v.modulus();
  const Residue half = q / 2;
  ZqVector out = v;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!bits[i]) continue;
    out[i] = subtract ? sub_mod(out[i], half, q) : add_mod(out[i], half, q);
  }
  return out;
}

// A + [0 | H2(t) G].
ZqMatrix tagged_receiver_matrix(const PublicParams& pp, const ZqMatrix& a_r, const ZqMatrix& h) {
  const std::size_t mbar = pp.params.mbar;
  ZqMatrix right = mat_add(a_r.column_range(mbar, a_r.cols()), tagged_gadget(h));
  return hconcat(a_r.column_range(0, mbar), right);
}

std::optional<Bits> open_track(const PublicParams& pp, const ZqMatrix& a_r, const ZqMatrix& a_s,
                               const ZqMatrix& b, const ZqMatrix& u_mat, const IntMatrix& trap,
                               const ZqVector& c0, const ZqVector& c1, const IntVector& r_e,
                               Rng& rng) {
  ZqVector t = receiver_tag_vector(pp, a_r, a_s, b, r_e);
  if (t.is_zero()) return std::nullopt;
  try {
    TagMatrix h(frd_encode(t, pp.frd));
    ZqMatrix a_rt = tagged_receiver_matrix(pp, a_r, h.matrix());
    LweSolution sol = invert_lwe(a_rt, trap, h, c0);
    IntMatrix e_mat = PreimageSampler(trap, pp.params.sigma2).sample_matrix(a_rt, h, u_mat, rng);
    ZqVector v = vec_sub(c1, vec_mat(vec_sub(c0, sol.e), e_mat));
    return decode_bits(v);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kDecodingFailure || err.code() == ErrorCode::kNonInvertibleTag) {
      return std::nullopt;
    }
    throw;
  }
}

void check_ciphertext_shape(const ParamSet& ps, const Ciphertext& ct) {
  const std::size_t m = ps.m();
  bool ok = ct.c0.size() == m && ct.c1.size() == ps.ell && ct.r_e.size() == m &&
            ct.r_s.size() == m && ct.c0_prime.size() == m && ct.c1_prime.size() == ps.ell &&
            ct.r_e_prime.size() == m && ct.e.size() == m + ps.nk();
  if (!ok) throw Error(ErrorCode::kDimensionMismatch, "ciphertext shape differs from parameters");
  for (const ZqVector* v : {&ct.c0, &ct.c1, &ct.c0_prime, &ct.c1_prime}) {
    if (v->modulus() != ps.q) throw Error(ErrorCode::kModulusMismatch, "ciphertext modulus");
  }
}

}  // namespace

std::size_t Ciphertext::element_count() const {
  return c0.size() + c1.size() + r_e.size() + r_s.size() + c0_prime.size() + c1_prime.size() +
         r_e_prime.size() + e.size();
}

PublicParams setup(const ParamSet& ps, std::uint64_t seed) {
  ConstraintReport report = check_constraints(ps);
  if (!report.functional_ok()) {
    std::string ids;
    for (const auto& id : report.failing_ids()) ids += (ids.empty() ? "" : ", ") + id;
    throw Error(ErrorCode::kInvalidParams, "parameter set fails: " + ids);
  }
  Rng rng(seed);
  PublicParams pp{ps, FrdCtx::find(ps.n, ps.q), {}, {}, {}, {}, {}, {}, {}};
  for (std::size_t i = 0; i <= ps.n; ++i) pp.c.push_back(uniform_blocks(ps, rng));
  for (std::size_t i = 0; i <= ps.n; ++i) pp.c_prime.push_back(uniform_blocks(ps, rng));
  pp.b = sample_uniform_matrix(ps.n, ps.m(), ps.q, rng);
  pp.b_prime = sample_uniform_matrix(ps.n, ps.m(), ps.q, rng);
  pp.u_mat = sample_uniform_matrix(ps.n, ps.ell, ps.q, rng);
  pp.u_mat_prime = sample_uniform_matrix(ps.n, ps.ell, ps.q, rng);
  pp.u = sample_uniform_vector(ps.n, ps.q, rng);
  return pp;
}

ReceiverKeys keygen_receiver(const PublicParams& pp, Rng& rng) {
  const ParamSet& ps = pp.params;
  TrapGen main = gen_trap(ps.n, ps.mbar, ps.q, ps.sigma1, 0, rng);
  TrapGen prime = gen_trap(ps.n, ps.mbar, ps.q, ps.sigma1, 0, rng);
  return {{std::move(main.a), std::move(prime.a)},
          {std::move(main.trapdoor.r), std::move(prime.trapdoor.r)}};
}

SenderKeys keygen_sender(const PublicParams& pp, Rng& rng) {
  const ParamSet& ps = pp.params;
  TrapGen main = gen_trap(ps.n, ps.mbar, ps.q, ps.sigma1, 1, rng);
  TrapGen prime = gen_trap(ps.n, ps.mbar, ps.q, ps.sigma1, 1, rng);
  return {{std::move(main.a), std::move(prime.a)},
          {std::move(main.trapdoor.r), std::move(prime.trapdoor.r)}};
}

ZqVector receiver_tag_vector(const PublicParams& pp, const ZqMatrix& a_r, const ZqMatrix& a_s,
                             const ZqMatrix& b, const IntVector& r) {
  const std::size_t mbar = pp.params.mbar;
  ZqVector digest = hash_H1(a_s, mbar);
  return vec_add(f_hash(a_r.column_range(0, mbar), digest), f_hash(b, r));
}

ZqMatrix signature_matrix(const PublicParams& pp, const SenderPublicKey& pk_s,
                          const ReceiverPublicKey& pk_r, const Bits& mu, const Ciphertext& ct) {
  const ParamSet& ps = pp.params;
  wire::Writer w;
  w.put_u64(mu.size());
  w.put_bytes(pack_bits(mu));
  w.put(pk_r.a);
  w.put(pk_r.a_prime);
  w.put(ct.c0);
  w.put(add_bits(ct.c1, mu, true));
  w.put_ints(ct.r_e);
  w.put(ct.c0_prime);
  w.put(add_bits(ct.c1_prime, hash_H(mu), true));
  w.put_ints(ct.r_e_prime);

  ZqVector digest = hash_H3(w.bytes(), ps.mbar, ps.q);
  ZqVector h = vec_add(f_hash(pk_s.a.column_range(0, ps.mbar), digest), f_hash(pp.b, ct.r_s));
  ZqMatrix c_h = pp.c[0];
  for (std::size_t i = 0; i < ps.n; ++i) c_h = mat_add(c_h, mat_scale(pp.c[i + 1], h[i]));
  return hconcat(pk_s.a, c_h);
}

double signature_norm_bound(const ParamSet& ps) {
  return ps.sigma2 * std::sqrt(static_cast<double>(ps.m() + ps.nk()));
}

Ciphertext signcrypt(const PublicParams& pp, const ReceiverPublicKey& pk_r,
                     const SenderSecretKey& sk_s, const SenderPublicKey& pk_s, const Bits& mu,
                     Rng& rng) {
  const ParamSet& ps = pp.params;
  if (mu.size() != ps.ell) throw Error(ErrorCode::kInvalidArgument, "message length differs from ell");
  const std::size_t m = ps.m();
  const double aq = ps.alpha_q();

  auto draw_tag = [&](const ZqMatrix& a_r, const ZqMatrix& a_s, const ZqMatrix& b,
                      IntVector& r) -> ZqVector {
    for (int attempt = 0; attempt < kMaxTagResamples; ++attempt) {
      r = sample_vec(m, aq, rng);
      ZqVector t = receiver_tag_vector(pp, a_r, a_s, b, r);
      if (!t.is_zero()) return t;
    }
    throw Error(ErrorCode::kInternal, "tag vector stayed zero after resampling");
  };

  Ciphertext ct;
  ZqVector t = draw_tag(pk_r.a, pk_s.a, pp.b, ct.r_e);
  ZqVector t_prime = draw_tag(pk_r.a_prime, pk_s.a_prime, pp.b_prime, ct.r_e_prime);
  ZqMatrix a_rt = tagged_receiver_matrix(pp, pk_r.a, frd_encode(t, pp.frd));
  ZqMatrix a_rt_prime = tagged_receiver_matrix(pp, pk_r.a_prime, frd_encode(t_prime, pp.frd));

  ZqVector s = sample_uniform_vector(ps.n, ps.q, rng);
  ZqVector s_prime = sample_uniform_vector(ps.n, ps.q, rng);
  IntVector x0 = sample_vec(m, aq, rng);
  IntVector x0_prime = sample_vec(m, aq, rng);
  IntVector x1 = sample_vec(ps.ell, aq, rng);
  IntVector x1_prime = sample_vec(ps.ell, aq, rng);

  ct.c0 = vec_add(vec_mat(s, a_rt), x0);
  ct.c0_prime = vec_add(vec_mat(s_prime, a_rt_prime), x0_prime);
  ct.c1 = add_bits(vec_add(vec_mat(s, pp.u_mat), x1), mu, false);
  ct.c1_prime = add_bits(vec_add(vec_mat(s_prime, pp.u_mat_prime), x1_prime), hash_H(mu), false);

  ct.r_s = sample_vec(m, aq, rng);
  ZqMatrix a_sh = signature_matrix(pp, pk_s, pk_r, mu, ct);
  PreimageSampler signer(sk_s.t, ps.sigma2);
  ct.e = signer.sample_extended(a_sh.column_range(0, m), TagMatrix::scalar(1, ps.n, ps.q),
                                a_sh.column_range(m, a_sh.cols()), pp.u, rng);
  return ct;
}

std::optional<Bits> unsigncrypt(const PublicParams& pp, const ReceiverSecretKey& sk_r,
                                const ReceiverPublicKey& pk_r, const SenderPublicKey& pk_s,
                                const Ciphertext& ct, Rng& rng) {
  const ParamSet& ps = pp.params;
  check_ciphertext_shape(ps, ct);
  std::optional<Bits> mu =
      open_track(pp, pk_r.a, pk_s.a, pp.b, pp.u_mat, sk_r.t, ct.c0, ct.c1, ct.r_e, rng);
  if (!mu) return std::nullopt;
  ZqMatrix a_sh = signature_matrix(pp, pk_s, pk_r, *mu, ct);
  if (mat_vec(a_sh, ct.e) != pp.u) return std::nullopt;
  if (norm(ct.e) > signature_norm_bound(ps)) return std::nullopt;
  return mu;
}

TagKey tag_extract(const ReceiverSecretKey& sk_r) { return TagKey{sk_r.t_prime}; }

std::optional<Bits> open_tag_track(const PublicParams& pp, const TestSide& side, Rng& rng) {
  check_ciphertext_shape(pp.params, side.ct);
  return open_track(pp, side.pk_r.a_prime, side.pk_s.a_prime, pp.b_prime, pp.u_mat_prime,
                    side.tag.t_prime, side.ct.c0_prime, side.ct.c1_prime, side.ct.r_e_prime, rng);
}

TestOutcome test_equality_detailed(const PublicParams& pp, const TestSide& i, const TestSide& j,
                                   Rng& rng) {
  std::optional<Bits> hi = open_tag_track(pp, i, rng);
  std::optional<Bits> hj = open_tag_track(pp, j, rng);
  if (!hi || !hj) return TestOutcome::kDecodeFailure;
  return *hi == *hj ? TestOutcome::kEqual : TestOutcome::kNotEqual;
}

bool test_equality(const PublicParams& pp, const TestSide& i, const TestSide& j, Rng& rng) {
  return test_equality_detailed(pp, i, j, rng) == TestOutcome::kEqual;
}

Bits decode_bits(const ZqVector& v) {
  const std::uint64_t q = v.modulus();
  const Residue half = q / 2;
  Bits out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::int64_t d = lift(sub_mod(v[i], half, q), q);
    std::uint64_t mag = static_cast<std::uint64_t>(d < 0 ? -d : d);
    out[i] = static_cast<std::uint8_t>(4 * static_cast<unsigned __int128>(mag) < q);
  }
  return out;
}

std::size_t element_count(const ReceiverPublicKey& pk) {
  return pk.a.rows() * pk.a.cols() + pk.a_prime.rows() * pk.a_prime.cols();
}
std::size_t element_count(const SenderPublicKey& pk) {
  return pk.a.rows() * pk.a.cols() + pk.a_prime.rows() * pk.a_prime.cols();
}
std::size_t element_count(const ReceiverSecretKey& sk) {
  return sk.t.rows() * sk.t.cols() + sk.t_prime.rows() * sk.t_prime.cols();
}
std::size_t element_count(const SenderSecretKey& sk) {
  return sk.t.rows() * sk.t.cols() + sk.t_prime.rows() * sk.t_prime.cols();
}

}  // namespace scet
