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
#include <numbers>
#include <vector>

#include "doctest.h"
#include "scet/gaussian.h"
#include "scet/params.h"

using namespace scet;

namespace {

constexpr double kPi = std::numbers::pi;

// Mean and variance of D_{Z,s,c} by direct summation of rho_{s,c}.
std::pair<double, double> exact_moments(double s, double c) {
  double z = 0, m1 = 0, m2 = 0;
  for (long x = static_cast<long>(c - 40 * s); x <= static_cast<long>(c + 40 * s); ++x) {
    double w = std::exp(-kPi * (x - c) * (x - c) / (s * s));
    z += w;
    m1 += w * x;
    m2 += w * x * x;
  }
  double mean = m1 / z;
  return {mean, m2 / z - mean * mean};
}

}  // namespace

TEST_CASE("sample_z moments at s = 4") {
  Rng rng(10);
  const double s = 4.0;
  const int n = 100000;
  double sum = 0, sq = 0;
  for (int i = 0; i < n; ++i) {
    double x = static_cast<double>(sample_z({s, 0.0}, rng));
    sum += x;
    sq += x * x;
  }
  double mean = sum / n;
  double var = sq / n - mean * mean;
  CHECK(std::abs(mean) <= 3 * s / std::sqrt(n));
  CHECK(std::abs(var - s * s / (2 * kPi)) <= 0.10 * s * s / (2 * kPi));
  CHECK(var == doctest::Approx(exact_moments(s, 0).second).epsilon(0.03));
}

TEST_CASE("sample_z follows the summed moments off-center and for narrow widths") {
  Rng rng(11);
  for (auto [s, c] : {std::pair{3.0, 0.37}, std::pair{0.8, -2.5}, std::pair{12.0, 100.25}}) {
    auto [mu, var] = exact_moments(s, c);
    const int n = 50000;
    double sum = 0, sq = 0;
    for (int i = 0; i < n; ++i) {
      double x = static_cast<double>(sample_z({s, c}, rng));
      sum += x;
      sq += x * x;
    }
    double mean = sum / n;
    double v = sq / n - mean * mean;
    CHECK(std::abs(mean - mu) <= 4 * std::sqrt(var / n) + 1e-9);
    CHECK(v == doctest::Approx(var).epsilon(0.05));
  }
  // Width so small no integer lies in the window: all mass at round(c).
  CHECK(sample_z({1e-3, 4.4}, rng) == 4);
}

TEST_CASE("discretized Gaussian spread and symmetry") {
  Rng rng(12);
  const std::uint64_t q = 1 << 16;
  const double aq = 8.0;
  const int n = 100000;
  double sq = 0;
  for (int i = 0; i < n; ++i) {
    double l = static_cast<double>(lift(sample_discretized(aq / q, q, rng), q));
    sq += l * l;
  }
  CHECK(std::sqrt(sq / n) == doctest::Approx(aq / std::sqrt(2 * kPi)).epsilon(0.10));

  long plus = 0, minus = 0;
  for (int i = 0; i < 1000000; ++i) {
    std::int64_t l = lift(sample_discretized(4.0 / q, q, rng), q);
    plus += l == 1;
    minus += l == -1;
  }
  double ratio = static_cast<double>(plus) / static_cast<double>(minus);
  CHECK(ratio >= 0.9);
  CHECK(ratio <= 1.1);
}

TEST_CASE("spherical vectors: norm tail and independence") {
  Rng rng(13);
  const std::size_t m = 64;
  const double s = 8.0;
  const int n = 10000;
  int over = 0;
  std::vector<double> cov(m * m, 0.0);
  for (int t = 0; t < n; ++t) {
    IntVector x = sample_vec(m, s, rng);
    over += norm(x) > s * std::sqrt(static_cast<double>(m));
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) cov[i * m + j] += static_cast<double>(x[i] * x[j]);
  }
  CHECK(over <= n / 100);
  const double var = s * s / (2 * kPi);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (i != j) CHECK(std::abs(cov[i * m + j] / n) <= 0.1 * var);
}

TEST_CASE("nonspherical sampler variance adds") {
  Rng rng(14);
  const double s = 8.0;
  const double base = rounding_base();
  Eigen::MatrixXd l = s * Eigen::MatrixXd::Identity(16, 16);
  const int n = 10000;
  std::vector<double> sq(16, 0.0);
  for (int t = 0; t < n; ++t) {
    IntVector y = sample_nonspherical(l, base, rng);
    for (int i = 0; i < 16; ++i) sq[i] += static_cast<double>(y[i] * y[i]);
  }
  const double want = (s * s + base * base) / (2 * kPi);
  for (double v : sq) CHECK(v / n == doctest::Approx(want).epsilon(0.15));
}

TEST_CASE("nonspherical sampler reproduces a correlated covariance") {
  Rng rng(15);
  Eigen::MatrixXd l(2, 2);
  l << 2, 0, 1, 1;
  const double base = 3.0;
  Eigen::Matrix2d want = (l * l.transpose() + base * base * Eigen::Matrix2d::Identity()) / (2 * kPi);
  const int n = 100000;
  Eigen::Matrix2d got = Eigen::Matrix2d::Zero();
  for (int t = 0; t < n; ++t) {
    IntVector y = sample_nonspherical(l, base, rng);
    Eigen::Vector2d v(static_cast<double>(y[0]), static_cast<double>(y[1]));
    got += v * v.transpose();
  }
  got /= n;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(got(i, j) == doctest::Approx(want(i, j)).epsilon(0.15));
  CHECK_THROWS(sample_nonspherical(Eigen::MatrixXd(2, 3), base, rng));
}

TEST_CASE("uniform residues stay in range") {
  Rng rng(16);
  for (int i = 0; i < 1000; ++i) CHECK(sample_uniform(7, rng) < 7);
  ZqMatrix a = sample_uniform_matrix(3, 4, 5, rng);
  for (Residue r : a.entries()) CHECK(r < 5);
}
