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

#include "scet/lu_attack.h"

#include <cmath>

#include "scet/error.h"
#include "scet/hashes.h"
#include "scet/params.h"
#include "scet/trapdoor.h"
#include "scet/wire.h"

namespace scet::lu {

namespace {

void put_key(wire::Writer& w, const LuPublicKey& pk) {
  w.put(pk.a);
  w.put(pk.b);
}

ZqVector stacked_transpose_times(const ZqMatrix& left, const ZqMatrix& right, const ZqVector& t) {
  return vec_mat(t, hconcat(left, right));
}

bool short_nonzero(std::span<const std::int64_t> x, double bound) {
  double nrm = norm(x);
  return nrm > 0.0 && nrm <= bound;
}

}  // namespace

std::size_t LuParams::k() const { return ceil_log2(q); }

double LuParams::norm_bound() const { return sigma * std::sqrt(2.0 * static_cast<double>(m)); }

LuParams lu_setup(std::size_t n, std::uint64_t q, std::size_t m, std::size_t tau, double sigma,
                  double alpha, std::uint64_t seed) {
  check_modulus(q);
  if (n == 0 || tau == 0) throw Error(ErrorCode::kInvalidArgument, "n and tau must be positive");
  LuParams pp{n, q, m, tau, sigma, alpha, 3.0, {}};
  if (m <= pp.nk()) throw Error(ErrorCode::kInvalidArgument, "m must exceed n ceil(log2 q)");
  Rng rng(seed);
  for (std::size_t i = 0; i <= tau; ++i) pp.c.push_back(sample_uniform_matrix(n, m, q, rng));
  return pp;
}

LuParams lu_toy_params(std::uint64_t seed) {
  const std::size_t n = 4;
  const std::uint64_t q = 1048573;
  const auto m = static_cast<std::size_t>(std::ceil(6.0 * n * std::log2(static_cast<double>(q))));
  return lu_setup(n, q, m, 16, 250.0, 8.0 / static_cast<double>(q), seed);
}

LuKeys lu_keygen(const LuParams& pp, Rng& rng) {
  TrapGen s = gen_trap(pp.n, pp.mbar(), pp.q, pp.sigma1, 1, rng);
  TrapGen r = gen_trap(pp.n, pp.mbar(), pp.q, pp.sigma1, 1, rng);
  ZqMatrix b_s = sample_uniform_matrix(pp.n, pp.m, pp.q, rng);
  ZqMatrix b_r = sample_uniform_matrix(pp.n, pp.m, pp.q, rng);
  return {{std::move(s.a), std::move(b_s)},
          {std::move(s.trapdoor.r)},
          {std::move(r.a), std::move(b_r)},
          {std::move(r.trapdoor.r)}};
}

std::vector<std::uint8_t> lu_hash1(const LuParams& pp, const ZqVector& mu, const LuPublicKey& pk_r) {
  wire::Writer w;
  w.put(mu);
  put_key(w, pk_r);
  std::vector<std::uint8_t> bytes = shake256(kDomainH1, w.bytes(), (pp.tau + 7) / 8);
  std::vector<std::uint8_t> bits(pp.tau);
  for (std::size_t i = 0; i < pp.tau; ++i) bits[i] = (bytes[i / 8] >> (i % 8)) & 1;
  return bits;
}

ZqVector lu_hash2(const LuParams& pp, const ZqVector& mu, const LuPublicKey& pk_s,
                  const LuPublicKey& pk_r, std::span<const std::int64_t> v) {
  wire::Writer w;
  w.put(mu);
  put_key(w, pk_s);
  put_key(w, pk_r);
  w.put_ints(v);
  return ZqVector::from_residues(pp.q, xof_expand(kDomainH2, w.bytes(), pp.n, pp.q));
}

ZqMatrix lu_f_mu(const LuParams& pp, const LuPublicKey& pk_s, const LuPublicKey& pk_r,
                 const ZqVector& mu) {
  std::vector<std::uint8_t> h = lu_hash1(pp, mu, pk_r);
  ZqMatrix acc = pp.c[0];
  for (std::size_t i = 0; i < pp.tau; ++i) {
    acc = h[i] ? mat_sub(acc, pp.c[i + 1]) : mat_add(acc, pp.c[i + 1]);
  }
  return hconcat(pk_s.a, acc);
}

LuSignature lu_signcrypt_detailed(const LuParams& pp, const ZqVector& mu, const LuSecretKey& sk_s,
                                  const LuPublicKey& pk_s, const LuPublicKey& pk_r, Rng& rng) {
  if (mu.size() != pp.n || mu.modulus() != pp.q) {
    throw Error(ErrorCode::kDimensionMismatch, "message must lie in Z_q^n");
  }
  ZqMatrix f = lu_f_mu(pp, pk_s, pk_r, mu);
  PreimageSampler sampler(sk_s.t, pp.sigma);
  TagMatrix one = TagMatrix::scalar(1, pp.n, pp.q);
  IntVector v;
  do {
    v = sampler.sample_extended(f.column_range(0, pp.m), one, f.column_range(pp.m, 2 * pp.m),
                                ZqVector(pp.n, pp.q), rng);
  } while (norm(v) == 0.0);

  ZqVector t = lu_hash2(pp, mu, pk_s, pk_r, v);
  LuSignature out;
  out.ct.c = vec_add(t, mu);
  out.ct.b1 = vec_add(stacked_transpose_times(pk_r.a, pp.c[0], t), v);
  ZqVector e(2 * pp.m, pp.q);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = sample_discretized(pp.alpha, pp.q, rng);
  out.ct.b2 = vec_add(stacked_transpose_times(pk_r.b, pp.c[1], t), e);
  out.v = std::move(v);
  return out;
}

LuCiphertext lu_signcrypt(const LuParams& pp, const ZqVector& mu, const LuSecretKey& sk_s,
                          const LuPublicKey& pk_s, const LuPublicKey& pk_r, Rng& rng) {
  return lu_signcrypt_detailed(pp, mu, sk_s, pk_s, pk_r, rng).ct;
}

std::optional<ZqVector> lu_unsigncrypt(const LuParams& pp, const LuCiphertext& ct,
                                       const LuPublicKey& pk_s, const LuPublicKey& pk_r,
                                       const LuSecretKey& sk_r) {
  if (ct.c.size() != pp.n || ct.b1.size() != 2 * pp.m || ct.b2.size() != 2 * pp.m) {
    throw Error(ErrorCode::kDimensionMismatch, "ciphertext shape differs from parameters");
  }
  ZqVector top(pp.m, pp.q);
  for (std::size_t i = 0; i < pp.m; ++i) top[i] = ct.b1[i];
  LweSolution sol;
  try {
    sol = invert_lwe(pk_r.a, GTrapdoor{sk_r.t, 1}, top);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kDecodingFailure) return std::nullopt;
    throw;
  }
  const ZqVector& t = sol.s;
  IntVector v = balanced_lift(vec_sub(ct.b1, stacked_transpose_times(pk_r.a, pp.c[0], t)));
  IntVector e = balanced_lift(vec_sub(ct.b2, stacked_transpose_times(pk_r.b, pp.c[1], t)));
  if (!short_nonzero(e, pp.norm_bound())) return std::nullopt;
  ZqVector mu = vec_sub(ct.c, t);
  if (lu_hash2(pp, mu, pk_s, pk_r, v) != t) return std::nullopt;
  if (!short_nonzero(v, pp.norm_bound())) return std::nullopt;
  if (!mat_vec(lu_f_mu(pp, pk_s, pk_r, mu), v).is_zero()) return std::nullopt;
  return mu;
}

bool lu_candidate_matches(const LuParams& pp, const LuCiphertext& ct, const LuPublicKey& pk_s,
                          const LuPublicKey& pk_r, const ZqVector& mu) {
  ZqVector t = vec_sub(ct.c, mu);
  IntVector v = balanced_lift(vec_sub(ct.b1, stacked_transpose_times(pk_r.a, pp.c[0], t)));
  if (!short_nonzero(v, pp.norm_bound())) return false;
  IntVector e = balanced_lift(vec_sub(ct.b2, stacked_transpose_times(pk_r.b, pp.c[1], t)));
  if (!short_nonzero(e, pp.norm_bound())) return false;
  if (lu_hash2(pp, mu, pk_s, pk_r, v) != t) return false;
  return mat_vec(lu_f_mu(pp, pk_s, pk_r, mu), v).is_zero();
}

CpaVerdict cpa_distinguish(const LuParams& pp, const LuCiphertext& ct, const LuPublicKey& pk_s,
                           const LuPublicKey& pk_r, const ZqVector& mu0, const ZqVector& mu1) {
  bool ok0 = lu_candidate_matches(pp, ct, pk_s, pk_r, mu0);
  bool ok1 = lu_candidate_matches(pp, ct, pk_s, pk_r, mu1);
  CpaVerdict verdict;
  if (ok0 || ok1) verdict.outcome = CpaOutcome::kMatch;
  verdict.guess = (!ok0 && ok1) ? 1 : 0;
  verdict.collision_witness = ok0 && ok1 && mu0 != mu1;
  return verdict;
}

double AttackReport::advantage() const {
  if (trials == 0) return 0.0;
  double p = static_cast<double>(correct) / static_cast<double>(trials);
  return 2.0 * std::abs(p - 0.5);
}

AttackReport attack_experiment(std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::kInvalidArgument, "trials must be positive");
  Rng rng(seed);
  AttackReport report;
  report.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    LuParams pp = lu_toy_params(rng());
    LuKeys keys = lu_keygen(pp, rng);
    ZqVector mu0 = sample_uniform_vector(pp.n, pp.q, rng);
    ZqVector mu1 = sample_uniform_vector(pp.n, pp.q, rng);
    while (mu1 == mu0) mu1 = sample_uniform_vector(pp.n, pp.q, rng);
    int b = static_cast<int>(rng() & 1);
    LuCiphertext ct = lu_signcrypt(pp, b ? mu1 : mu0, keys.sk_s, keys.pk_s, keys.pk_r, rng);
    CpaVerdict v = cpa_distinguish(pp, ct, keys.pk_s, keys.pk_r, mu0, mu1);
    report.games.push_back({b, v.guess, v.outcome});
    if (v.outcome == CpaOutcome::kMatch && v.guess == b) ++report.correct;
    if (v.outcome == CpaOutcome::kNeitherMatches) ++report.neither;
    if (v.collision_witness) ++report.collisions;
  }
  return report;
}

}  // namespace scet::lu
