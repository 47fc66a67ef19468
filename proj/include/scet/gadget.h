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

// Gadget vector g = (1, 2, ..., 2^{k-1}), G = I_n (x) g^t, and the three
// primitives built on the lattice L = { z : <g, z> = 0 mod q }:
// short decomposition, Gaussian sampling on its cosets, and decoding of
// noisy multiples x * g + e.

#ifndef SCET_GADGET_H_
#define SCET_GADGET_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "scet/gaussian.h"
#include "scet/zq.h"

namespace scet {

class GadgetCtx {
 public:
  // n is the number of gadget blocks used by the *_block helpers.
  explicit GadgetCtx(std::uint64_t q, std::size_t n = 1);

  std::uint64_t modulus() const { return q_; }
  std::size_t k() const { return k_; }
  std::size_t n() const { return n_; }
  std::size_t nk() const { return n_ * k_; }

  // Basis S of L: column j < k-1 is 2 e_j - e_{j+1}; the last column is
  // 2 e_{k-1} when q = 2^k, otherwise the binary digits of q.
  const IntMatrix& basis() const { return s_; }
  // ||s~_i|| for the Gram-Schmidt vectors of S in column order.
  const std::vector<double>& gs_norms() const { return gs_norm_; }
  double max_gs_norm() const;
  // l2 radius q / (2 max ||s~_i||) within which decoding is exact.
  double decoding_radius() const;

  const std::vector<std::vector<double>>& gs_vectors() const { return gs_; }
  const std::vector<double>& gs_norms_squared() const { return gs_norm_sq_; }
  // mu(i, j) = <s_i, s~_j> / ||s~_j||^2 for j < i.
  double mu(std::size_t i, std::size_t j) const { return mu_[i][j]; }
  // Last column of S; its weighted sum against g equals q.
  const std::vector<std::int64_t>& last_column() const { return last_col_; }

 private:
  std::uint64_t q_;
  std::size_t k_;
  std::size_t n_;
  IntMatrix s_;
  std::vector<std::int64_t> last_col_;
  std::vector<std::vector<double>> gs_;
  std::vector<double> gs_norm_;
  std::vector<double> gs_norm_sq_;
  std::vector<std::vector<double>> mu_;
};

IntVector gadget_vector(std::uint64_t q);

// Binary digits of u; <g, z> = u and ||z||_inf <= 1.
IntVector g_decompose(Residue u, const GadgetCtx& ctx);
// Blockwise over a length-n vector; returns nk entries with G z = u.
IntVector g_decompose(const ZqVector& u, const GadgetCtx& ctx);

// z with <g, z> = u (mod q), close to the discrete Gaussian of width s on
// that coset (randomized nearest plane over S). Needs s >= sqrt(5) * floor.
IntVector g_sample_pre(Residue u, double s, const GadgetCtx& ctx, Rng& rng);
// Blockwise: G z = u for u of length n.
IntVector g_sample_pre(const ZqVector& u, double s, const GadgetCtx& ctx, Rng& rng);

struct GadgetDecoding {
  Residue x;
  IntVector error;
};

// Recovers (x, e) from b = x g + e (mod q). Throws kDecodingFailure when the
// residual has l2 norm at or beyond decoding_radius().
GadgetDecoding g_invert_block(const ZqVector& b, const GadgetCtx& ctx);

struct GadgetBlockDecoding {
  ZqVector x;
  IntVector error;
};

// b of length nk = x^t G + e^t; decodes every block.
GadgetBlockDecoding g_invert(const ZqVector& b, const GadgetCtx& ctx);

// G = I_n (x) g^t.
ZqMatrix gadget_matrix(std::size_t n, std::uint64_t q);
// H * G for a square n x n tag matrix H.
ZqMatrix tagged_gadget(const ZqMatrix& h);

}  // namespace scet

#endif  // SCET_GADGET_H_
