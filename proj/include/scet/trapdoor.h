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

// G-trapdoors: A [R; I] = H G (mod q) with R short and H invertible.
//
// Preimages are sampled with a perturbation p of covariance
// sigma^2 I - s_G^2 [R; I][R; I]^t followed by a gadget-coset sample, so the
// output e = p + [R; I] z is close to a spherical Gaussian of width sigma.

#ifndef SCET_TRAPDOOR_H_
#define SCET_TRAPDOOR_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "scet/gadget.h"
#include "scet/gaussian.h"
#include "scet/zq.h"

namespace scet {

struct GTrapdoor {
  IntMatrix r;     // mbar x nk
  Residue tag = 0;  // H = tag * I_n

  friend bool operator==(const GTrapdoor&, const GTrapdoor&) = default;
};

// An invertible n x n tag with its inverse. Throws kNonInvertibleTag.
class TagMatrix {
 public:
  explicit TagMatrix(ZqMatrix h);
  static TagMatrix scalar(Residue h, std::size_t n, std::uint64_t q);

  std::size_t n() const { return h_.rows(); }
  const ZqMatrix& matrix() const { return h_; }
  const ZqMatrix& inverse() const { return h_inv_; }

 private:
  ZqMatrix h_;
  ZqMatrix h_inv_;
};

struct TrapGen {
  ZqMatrix a;
  GTrapdoor trapdoor;
};

// A = [Abar | tag G - Abar R] with Abar uniform and R ~ D_{sigma1}.
TrapGen gen_trap(std::size_t n, std::size_t mbar, std::uint64_t q, double sigma1,
                 Residue tag, Rng& rng);

// A [R; I] = A_left R + A_right.
ZqMatrix trapdoor_image(const ZqMatrix& a, const IntMatrix& r);

// Samples preimages for every A whose trapdoor is R, under any invertible
// tag. The perturbation square root is computed once at construction.
class PreimageSampler {
 public:
  // Throws kNotPositiveDefinite when sigma is too small for R.
  PreimageSampler(IntMatrix r, double sigma);

  double sigma() const { return sigma_; }
  const IntMatrix& r() const { return r_; }
  std::size_t m() const { return r_.rows() + r_.cols(); }

  // A e = u with e of length m.
  IntVector sample(const ZqMatrix& a, const TagMatrix& tag, const ZqVector& u,
                   Rng& rng) const;
  // A E = U column by column.
  IntMatrix sample_matrix(const ZqMatrix& a, const TagMatrix& tag, const ZqMatrix& u,
                          Rng& rng) const;
  // [A | C] e = u: the C-block coordinates are drawn from D_sigma first and
  // the A-block is sampled on the adjusted syndrome.
  IntVector sample_extended(const ZqMatrix& a, const TagMatrix& tag, const ZqMatrix& c,
                            const ZqVector& u, Rng& rng) const;

 private:
  IntMatrix r_;
  double sigma_;
  Eigen::MatrixXd sqrt_cov_;
};

IntVector sample_pre(const ZqMatrix& a, const GTrapdoor& t, const ZqVector& u,
                     double sigma, Rng& rng);
IntMatrix sample_pre_matrix(const ZqMatrix& a, const GTrapdoor& t, const ZqMatrix& u,
                            double sigma, Rng& rng);
IntVector sample_pre_extended(const ZqMatrix& a, const GTrapdoor& t, const ZqMatrix& c,
                              const ZqVector& u, double sigma, Rng& rng);

struct LweSolution {
  ZqVector s;
  IntVector e;
};

// Recovers (s, e) from b = s^t A + e^t. Throws kNonInvertibleTag or
// kDecodingFailure.
LweSolution invert_lwe(const ZqMatrix& a, const GTrapdoor& t, const ZqVector& b);
LweSolution invert_lwe(const ZqMatrix& a, const IntMatrix& r, const TagMatrix& tag,
                       const ZqVector& b);

// R = sum h_i R_i over balanced lifts of h_i, tag = sum h_i x_i. For
// A_i = x_i G - A R_i this is a trapdoor of [A | sum h_i A_i].
GTrapdoor trapdoor_combine(std::span<const GTrapdoor> trapdoors,
                           std::span<const Residue> coeffs, std::uint64_t q);

// Largest singular value, from the eigenvalues of the smaller Gram matrix.
double s1_estimate(const IntMatrix& r);

}  // namespace scet

#endif  // SCET_TRAPDOOR_H_
