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

// Discrete and discretized Gaussian samplers.
//
// Widths follow the rho_s(x) = exp(-pi |x - c|^2 / s^2) convention, so a
// width-s sample has per-coordinate variance ~ s^2 / (2 pi).
//
// No constant-time or side-channel claims are made for any sampler here.

#ifndef SCET_GAUSSIAN_H_
#define SCET_GAUSSIAN_H_

#include <cstddef>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "scet/zq.h"

namespace scet {

// All randomized operations take an explicit generator; one per thread.
using Rng = std::mt19937_64;

// Samples are confined to [c - kTailCut * s, c + kTailCut * s].
inline constexpr double kTailCut = 10.0;

struct GaussParam {
  double s;
  double c = 0.0;
};

// D_{Z,s,c} by rejection against rho_{s,c} on the tail-cut window.
std::int64_t sample_z(const GaussParam& p, Rng& rng);

// round(q X) mod q with X continuous Gaussian of width alpha, mean 0.
Residue sample_discretized(double alpha, std::uint64_t q, Rng& rng);

// i.i.d. D_{Z,s} entries.
IntVector sample_vec(std::size_t dim, double s, Rng& rng);
IntMatrix sample_matrix(std::size_t rows, std::size_t cols, double s, Rng& rng);

// Uniform residues.
Residue sample_uniform(std::uint64_t q, Rng& rng);
ZqVector sample_uniform_vector(std::size_t n, std::uint64_t q, Rng& rng);
ZqMatrix sample_uniform_matrix(std::size_t rows, std::size_t cols, std::uint64_t q,
                               Rng& rng);

// Draws y = sqrt_cov * x for a continuous width-1 Gaussian x, then rounds
// each coordinate with D_{Z, base, y_i}. The result has covariance parameter
// sqrt_cov sqrt_cov^t + base^2 I. Throws kInvalidArgument on a non-square
// sqrt_cov.
IntVector sample_nonspherical(const Eigen::MatrixXd& sqrt_cov, double base, Rng& rng);

}  // namespace scet

#endif  // SCET_GAUSSIAN_H_
