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

// Hash roles of the scheme, all instantiated from SHAKE256 with distinct
// domain tags, plus the FRD encoding and the abort-resistant family
// H_x(h) = 1 + <x, h>.

#ifndef SCET_HASHES_H_
#define SCET_HASHES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "scet/bits.h"
#include "scet/gaussian.h"
#include "scet/zq.h"

namespace scet {

inline constexpr std::string_view kDomainH = "SCET/H";
inline constexpr std::string_view kDomainH1 = "SCET/H1";
inline constexpr std::string_view kDomainH3 = "SCET/H3";

// Raw SHAKE256 of (len(domain) || domain || input), out_len bytes.
std::vector<std::uint8_t> shake256(std::string_view domain, std::span<const std::uint8_t> input,
                                   std::size_t out_len);

// count residues uniform in [0, q), by rejection on ceil(log2 q)-bit chunks.
std::vector<Residue> xof_expand(std::string_view domain, std::span<const std::uint8_t> input,
                                std::size_t count, std::uint64_t q);

// Length-preserving one-way hash on bit strings.
Bits hash_H(const Bits& mu);
// H1: matrices to Z_q^{out_len}, over the canonical serialization.
ZqVector hash_H1(const ZqMatrix& a, std::size_t out_len);
// H3: byte strings to Z_q^{out_len}.
ZqVector hash_H3(std::span<const std::uint8_t> input, std::size_t out_len, std::uint64_t q);

// Multiplication by t(x) in Z_q[x] / f(x) for a monic irreducible f of
// degree n. Any nonzero t gives an invertible matrix.
class FrdCtx {
 public:
  // Validates f (n + 1 coefficients, low degree first, monic). Throws
  // kInvalidArgument if q is not prime or f is reducible.
  FrdCtx(std::size_t n, std::uint64_t q, std::vector<Residue> f);
  // Deterministic seeded search for an irreducible f.
  static FrdCtx find(std::size_t n, std::uint64_t q);

  std::size_t n() const { return n_; }
  std::uint64_t modulus() const { return q_; }
  const std::vector<Residue>& poly() const { return f_; }

 private:
  std::size_t n_;
  std::uint64_t q_;
  std::vector<Residue> f_;
};

// Ben-Or test: gcd(x^{q^i} - x, f) = 1 for every i <= deg f / 2.
bool is_irreducible(const std::vector<Residue>& f, std::uint64_t q);

// Column j holds the coefficients of t(x) x^j mod f.
ZqMatrix frd_encode(const ZqVector& t, const FrdCtx& ctx);

struct WatHash {
  ZqVector x;  // nonzero
};

Residue wat_eval(const WatHash& w, const ZqVector& h);

// Fraction of trials with a fresh nonzero x for which H_x(h_star) = 0 and
// H_x(h_j) != 0 for all j. Inputs must be pairwise distinct; q must be a
// prime larger than the number of h_j.
double wat_nonabort_estimate(const ZqVector& h_star, std::span<const ZqVector> h,
                             std::size_t trials, Rng& rng);
// Same with h_star and Q further points drawn at random (distinct, nonzero)
// in Z_q^n.
double wat_nonabort_estimate(std::uint64_t q, std::size_t query_budget, std::size_t trials,
                             Rng& rng, std::size_t n = 4);

}  // namespace scet

#endif  // SCET_HASHES_H_
