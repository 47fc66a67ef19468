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

#include "scet/gaussian.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scet/error.h"

namespace scet {

std::int64_t sample_z(const GaussParam& p, Rng& rng) {
  const double lo = std::ceil(p.c - kTailCut * p.s);
  const double hi = std::floor(p.c + kTailCut * p.s);
  const double nearest = std::round(p.c);
  // Window too narrow to contain an integer: all mass sits at round(c).
  if (hi < lo) return static_cast<std::int64_t>(nearest);

  // Accept against rho / max_window(rho).
  const double peak_x = std::clamp(nearest, lo, hi);
  const double scale = std::numbers::pi / (p.s * p.s);
  const double peak_d = peak_x - p.c;
  const double log_peak = -scale * peak_d * peak_d;

  std::uniform_int_distribution<std::int64_t> pick(static_cast<std::int64_t>(lo),
                                                   static_cast<std::int64_t>(hi));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (;;) {
    std::int64_t x = pick(rng);
    double d = static_cast<double>(x) - p.c;
    if (coin(rng) < std::exp(-scale * d * d - log_peak)) return x;
  }
}

Residue sample_discretized(double alpha, std::uint64_t q, Rng& rng) {
  std::normal_distribution<double> normal(0.0, alpha / std::sqrt(2.0 * std::numbers::pi));
  double scaled = static_cast<double>(q) * normal(rng);
  return reduce(static_cast<std::int64_t>(std::llround(scaled)), q);
}

IntVector sample_vec(std::size_t dim, double s, Rng& rng) {
  IntVector out(dim);
  for (auto& v : out) v = sample_z({s, 0.0}, rng);
  return out;
}

IntMatrix sample_matrix(std::size_t rows, std::size_t cols, double s, Rng& rng) {
  IntMatrix out(rows, cols);
  for (auto& v : out.mutable_entries()) v = sample_z({s, 0.0}, rng);
  return out;
}

Residue sample_uniform(std::uint64_t q, Rng& rng) {
  return std::uniform_int_distribution<std::uint64_t>(0, q - 1)(rng);
}

ZqVector sample_uniform_vector(std::size_t n, std::uint64_t q, Rng& rng) {
  ZqVector v(n, q);
  for (std::size_t i = 0; i < n; ++i) v[i] = sample_uniform(q, rng);
  return v;
}

ZqMatrix sample_uniform_matrix(std::size_t rows, std::size_t cols, std::uint64_t q,
                               Rng& rng) {
  std::vector<Residue> entries(rows * cols);
  for (auto& e : entries) e = sample_uniform(q, rng);
  return ZqMatrix::from_entries(rows, cols, q, std::move(entries));
}

IntVector sample_nonspherical(const Eigen::MatrixXd& sqrt_cov, double base, Rng& rng) {
  if (sqrt_cov.rows() != sqrt_cov.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "sqrt_cov must be square");
  }
  const Eigen::Index dim = sqrt_cov.rows();
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0 * std::numbers::pi));
  Eigen::VectorXd x(dim);
  for (Eigen::Index i = 0; i < dim; ++i) x[i] = normal(rng);
  Eigen::VectorXd y = sqrt_cov * x;
  IntVector out(static_cast<std::size_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) out[static_cast<std::size_t>(i)] = sample_z({base, y[i]}, rng);
  return out;
}

}  // namespace scet
