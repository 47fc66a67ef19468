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
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "doctest.h"
#include "scet/error.h"
#include "scet/gadget.h"
#include "scet/params.h"

using namespace scet;

namespace {

std::int64_t dot_g(const IntVector& z) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < z.size(); ++i) acc += z[i] * (std::int64_t{1} << i);
  return acc;
}

// Every z in {-b..b}^k with <g, z> = u (mod q).
std::vector<IntVector> exhaustive_solutions(std::uint64_t q, std::size_t k, Residue u, int b) {
  std::vector<IntVector> out;
  IntVector z(k, -b);
  for (;;) {
    if (reduce(dot_g(z), q) == u) out.push_back(z);
    std::size_t i = 0;
    while (i < k && z[i] == b) z[i++] = -b;
    if (i == k) break;
    ++z[i];
  }
  return out;
}

Eigen::MatrixXd to_eigen(const IntMatrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = static_cast<double>(m(i, j));
  return e;
}

}  // namespace

TEST_CASE("decomposition for q = 10, u = 7") {
  GadgetCtx ctx(10);
  REQUIRE(ctx.k() == 4);
  auto sols = exhaustive_solutions(10, 4, 7, 2);
  REQUIRE(!sols.empty());
  IntVector z = g_decompose(7, ctx);
  CHECK(std::find(sols.begin(), sols.end(), z) != sols.end());
  CHECK(inf_norm(z) <= 2);
}

TEST_CASE("decomposition is a short preimage for every residue") {
  for (std::uint64_t q : {2ULL, 10ULL, 16ULL, 17ULL, 97ULL, 12289ULL}) {
    GadgetCtx ctx(q);
    for (Residue u = 0; u < q; u += (q > 200 ? 37 : 1)) {
      IntVector z = g_decompose(u, ctx);
      CHECK(z.size() == ctx.k());
      CHECK(reduce(dot_g(z), q) == u);
      CHECK(inf_norm(z) <= 1);
    }
  }
  GadgetCtx block(97, 3);
  ZqVector u(97, {5, 96, 0});
  CHECK(mat_vec(gadget_matrix(3, 97), g_decompose(u, block)) == u);
}

TEST_CASE("gadget basis spans the kernel lattice with short Gram-Schmidt vectors") {
  for (std::uint64_t q : {10ULL, 16ULL, 17ULL, 1024ULL, 12289ULL, 16777213ULL}) {
    GadgetCtx ctx(q);
    const IntMatrix& s = ctx.basis();
    for (std::size_t j = 0; j < ctx.k(); ++j) CHECK(reduce(dot_g(s.column(j)), q) == 0);
    Eigen::MatrixXd e = to_eigen(s);
    // Index of L in Z^k is q, so |det S| = q exactly when S is a basis.
    CHECK(std::abs(e.determinant()) == doctest::Approx(static_cast<double>(q)));
    // Gram-Schmidt norms are the |R_ii| of a QR factorization.
    Eigen::MatrixXd r = e.householderQr().matrixQR().triangularView<Eigen::Upper>();
    for (std::size_t i = 0; i < ctx.k(); ++i) {
      CHECK(ctx.gs_norms()[i] == doctest::Approx(std::abs(r(i, i))).epsilon(1e-9));
      CHECK(ctx.gs_norms()[i] <= std::sqrt(5.0) + 1e-12);
    }
  }
}

TEST_CASE("gaussian coset sampling") {
  Rng rng(20);
  GadgetCtx ctx(16);
  const double s = 8.0;
  const int n = 10000;
  std::vector<double> sum(ctx.k(), 0.0);
  for (int t = 0; t < n; ++t) {
    IntVector z = g_sample_pre(Residue{0}, s, ctx, rng);
    CHECK(reduce(dot_g(z), 16) == 0);
    for (std::size_t i = 0; i < z.size(); ++i) sum[i] += static_cast<double>(z[i]);
  }
  for (double v : sum) CHECK(std::abs(v / n) <= 3 * s / std::sqrt(n));

  GadgetCtx odd(12289);
  std::set<IntVector> seen;
  for (int t = 0; t < 100; ++t) {
    IntVector z = g_sample_pre(Residue{4321}, s, odd, rng);
    CHECK(reduce(dot_g(z), 12289) == 4321);
    seen.insert(z);
  }
  CHECK(seen.size() >= 2);

  GadgetCtx block(12289, 4);
  ZqVector u(12289, {1, 2, 3, 12288});
  CHECK(mat_vec(gadget_matrix(4, 12289), g_sample_pre(u, gadget_width(), block, rng)) == u);
}

TEST_CASE("decoding q = 2^10, x = 417 under D_4 noise") {
  Rng rng(21);
  GadgetCtx ctx(1024);
  IntVector g = gadget_vector(1024);
  int ok = 0;
  for (int t = 0; t < 1000; ++t) {
    IntVector e = sample_vec(ctx.k(), 4.0, rng);
    ZqVector b(ctx.k(), 1024);
    for (std::size_t i = 0; i < ctx.k(); ++i) b[i] = reduce(417 * g[i] + e[i], 1024);
    try {
      GadgetDecoding d = g_invert_block(b, ctx);
      ok += d.x == 417 && d.error == e;
    } catch (const Error&) {
    }
  }
  CHECK(ok >= 999);
}

TEST_CASE("decoding agrees with exhaustive nearest-point search") {
  const std::uint64_t q = 17;
  GadgetCtx ctx(q);
  IntVector g = gadget_vector(q);
  const std::size_t k = ctx.k();
  int cases = 0;
  IntVector e(k, -2);
  for (;;) {
    if (norm(e) < ctx.decoding_radius()) {
      for (Residue x = 0; x < q; ++x) {
        ZqVector b(k, q);
        for (std::size_t i = 0; i < k; ++i) b[i] = reduce(static_cast<std::int64_t>(x) * g[i] + e[i], q);
        GadgetDecoding d = g_invert_block(b, ctx);
        CHECK(d.x == x);
        CHECK(d.error == e);
        ++cases;
      }
    }
    std::size_t i = 0;
    while (i < k && e[i] == 2) e[i++] = -2;
    if (i == k) break;
    ++e[i];
  }
  CHECK(cases > 1000);
}

TEST_CASE("decoding arbitrary words either fails loudly or is consistent") {
  Rng rng(22);
  for (std::uint64_t q : {97ULL, 12289ULL, 1ULL << 20}) {
    GadgetCtx ctx(q);
    IntVector g = gadget_vector(q);
    for (int t = 0; t < 500; ++t) {
      ZqVector b = sample_uniform_vector(ctx.k(), q, rng);
      try {
        GadgetDecoding d = g_invert_block(b, ctx);
        CHECK(norm(d.error) < ctx.decoding_radius());
        for (std::size_t i = 0; i < ctx.k(); ++i)
          CHECK(reduce(static_cast<std::int64_t>(d.x) * g[i] + d.error[i], q) == b[i]);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kDecodingFailure);
      }
    }
  }
}

TEST_CASE("blockwise decoding and tagged gadget") {
  Rng rng(23);
  const std::uint64_t q = 12289;
  GadgetCtx ctx(q, 4);
  ZqMatrix g = gadget_matrix(4, q);
  CHECK(g.rows() == 4);
  CHECK(g.cols() == 4 * ctx.k());
  ZqVector x = sample_uniform_vector(4, q, rng);
  IntVector e = sample_vec(ctx.nk(), 3.0, rng);
  GadgetBlockDecoding d = g_invert(vec_add(vec_mat(x, g), e), ctx);
  CHECK(d.x == x);
  CHECK(d.error == e);

  ZqMatrix h = sample_uniform_matrix(4, 4, q, rng);
  CHECK(tagged_gadget(h) == mat_mul(h, g));
}
