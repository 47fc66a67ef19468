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

// The Lu et al. signcryption, reduced to what is needed to produce honest
// ciphertexts and check them, and the chosen-plaintext distinguisher that
// breaks it.
//
// The sender's kernel vector v is drawn with a gadget trapdoor on A_S and
// the extend-right sampler, in place of basis delegation. The verification
// relations the attack reads are unchanged by this choice.

#ifndef SCET_LU_ATTACK_H_
#define SCET_LU_ATTACK_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "scet/gaussian.h"
#include "scet/zq.h"

namespace scet::lu {

inline constexpr std::string_view kDomainH1 = "LU/H1";
inline constexpr std::string_view kDomainH2 = "LU/H2";

struct LuParams {
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::size_t m = 0;      // ceil(6 n log2 q)
  std::size_t tau = 0;    // bits of H1
  double sigma = 0;       // kernel sample width
  double alpha = 0;       // noise rate of b2
  double sigma1 = 0;      // trapdoor entry width
  std::vector<ZqMatrix> c;  // C_0..C_tau, each n x m

  std::size_t k() const;
  std::size_t nk() const { return n * k(); }
  std::size_t mbar() const { return m - nk(); }
  // sigma sqrt(2m).
  double norm_bound() const;
};

// Parameters small enough for fast experiments: n = 4, q = 1048573,
// m = 480, tau = 16, sigma = 250, alpha q = 8.
LuParams lu_setup(std::size_t n, std::uint64_t q, std::size_t m, std::size_t tau, double sigma,
                  double alpha, std::uint64_t seed);
LuParams lu_toy_params(std::uint64_t seed);

struct LuPublicKey {
  ZqMatrix a;  // n x m, A = [Abar | G - Abar T]
  ZqMatrix b;  // n x m
};
struct LuSecretKey {
  IntMatrix t;
};
struct LuKeys {
  LuPublicKey pk_s;
  LuSecretKey sk_s;
  LuPublicKey pk_r;
  LuSecretKey sk_r;
};

LuKeys lu_keygen(const LuParams& pp, Rng& rng);

struct LuCiphertext {
  ZqVector c;   // n
  ZqVector b1;  // 2m
  ZqVector b2;  // 2m
};

// (h_i) = H1(mu, pk_R) as tau bits.
std::vector<std::uint8_t> lu_hash1(const LuParams& pp, const ZqVector& mu, const LuPublicKey& pk_r);
// H2(mu, pk_S, pk_R, v) in Z_q^n.
ZqVector lu_hash2(const LuParams& pp, const ZqVector& mu, const LuPublicKey& pk_s,
                  const LuPublicKey& pk_r, std::span<const std::int64_t> v);
// F_mu = [A_S | C_0 + sum (-1)^{h_i} C_i].
ZqMatrix lu_f_mu(const LuParams& pp, const LuPublicKey& pk_s, const LuPublicKey& pk_r,
                 const ZqVector& mu);

struct LuSignature {
  LuCiphertext ct;
  IntVector v;  // kernel vector, kept for tests
};

LuSignature lu_signcrypt_detailed(const LuParams& pp, const ZqVector& mu, const LuSecretKey& sk_s,
                                  const LuPublicKey& pk_s, const LuPublicKey& pk_r, Rng& rng);
LuCiphertext lu_signcrypt(const LuParams& pp, const ZqVector& mu, const LuSecretKey& sk_s,
                          const LuPublicKey& pk_s, const LuPublicKey& pk_r, Rng& rng);

// Receiver-side check with T_R; nullopt on reject.
std::optional<ZqVector> lu_unsigncrypt(const LuParams& pp, const LuCiphertext& ct,
                                       const LuPublicKey& pk_s, const LuPublicKey& pk_r,
                                       const LuSecretKey& sk_r);

enum class CpaOutcome { kMatch, kNeitherMatches };

struct CpaVerdict {
  CpaOutcome outcome = CpaOutcome::kNeitherMatches;
  int guess = 0;
  // Both distinct candidates passed, exhibiting an H2 collision.
  bool collision_witness = false;
};

// True when every public relation holds for candidate mu.
bool lu_candidate_matches(const LuParams& pp, const LuCiphertext& ct, const LuPublicKey& pk_s,
                          const LuPublicKey& pk_r, const ZqVector& mu);

CpaVerdict cpa_distinguish(const LuParams& pp, const LuCiphertext& ct, const LuPublicKey& pk_s,
                           const LuPublicKey& pk_r, const ZqVector& mu0, const ZqVector& mu1);

struct GameRecord {
  int b;
  int guess;
  CpaOutcome outcome;
};

struct AttackReport {
  std::size_t trials = 0;
  std::size_t correct = 0;
  std::size_t neither = 0;
  std::size_t collisions = 0;
  std::vector<GameRecord> games;
  // |Pr[guess = b] - 1/2| * 2.
  double advantage() const;
};

// Full IND-CPA games with fresh parameters, keys and challenges per trial.
AttackReport attack_experiment(std::size_t trials, std::uint64_t seed);

}  // namespace scet::lu

#endif  // SCET_LU_ATTACK_H_
