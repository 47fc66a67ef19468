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

#include <random>
#include <vector>

#include "doctest.h"
#include "scet/error.h"
#include "scet/zq.h"

using namespace scet;

namespace {

// Schoolbook product over Z with a final reduction.
ZqMatrix naive_mul(const ZqMatrix& a, const ZqMatrix& b) {
  std::vector<Residue> out(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      unsigned __int128 acc = 0;
      for (std::size_t t = 0; t < a.cols(); ++t)
        acc += static_cast<unsigned __int128>(a(i, t)) * b(t, j);
      out[i * b.cols() + j] = static_cast<Residue>(acc % a.modulus());
    }
  return ZqMatrix::from_entries(a.rows(), b.cols(), a.modulus(), out);
}

ZqMatrix random_matrix(std::size_t r, std::size_t c, std::uint64_t q, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, q - 1);
  std::vector<Residue> e(r * c);
  for (auto& x : e) x = d(rng);
  return ZqMatrix::from_entries(r, c, q, e);
}

}  // namespace

TEST_CASE("matrix product small example") {
  ZqMatrix a(7, {{1, 2}, {3, 4}});
  ZqMatrix b(7, {{5}, {6}});
  CHECK(mat_mul(a, b) == ZqMatrix(7, {{3}, {4}}));
}

TEST_CASE("lattice hash small example") {
  ZqMatrix w(7, {{1, 1}, {0, 2}});
  std::vector<std::int64_t> x = {3, 5};
  CHECK(f_hash(w, x) == ZqVector(7, {1, 3}));
}

TEST_CASE("products agree with schoolbook arithmetic near the modulus cap") {
  std::mt19937_64 rng(1);
  for (std::uint64_t q : {std::uint64_t{12289}, (std::uint64_t{1} << 62) - 57}) {
    ZqMatrix a = random_matrix(5, 9, q, rng);
    ZqMatrix b = random_matrix(9, 4, q, rng);
    CHECK(mat_mul(a, b) == naive_mul(a, b));
    ZqVector x = b.column(0);
    CHECK(mat_vec(a, x) == naive_mul(a, b).column(0));
    CHECK(vec_mat(x, a.transpose()) == mat_vec(a, x));
  }
}

TEST_CASE("inverse and non-invertible pivots") {
  std::mt19937_64 rng(2);
  const std::uint64_t q = 97;
  int checked = 0;
  while (checked < 20) {
    ZqMatrix a = random_matrix(4, 4, q, rng);
    try {
      ZqMatrix inv = mat_inverse(a);
      CHECK(mat_mul(a, inv) == ZqMatrix::identity(4, q));
      ++checked;
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNonInvertibleTag);
    }
  }
  ZqMatrix singular(q, {{1, 2}, {2, 4}});
  CHECK_THROWS_AS(mat_inverse(singular), Error);
  CHECK_THROWS_AS(inv_mod(6, 12), Error);
  CHECK(mul_mod(inv_mod(5, 12), 5, 12) == 1);
}

TEST_CASE("balanced lift lands in (-q/2, q/2]") {
  for (std::uint64_t q : {2ULL, 7ULL, 16ULL, 12289ULL}) {
    for (Residue r = 0; r < std::min<std::uint64_t>(q, 200); ++r) {
      std::int64_t l = lift(r, q);
      CHECK(2 * l > -static_cast<std::int64_t>(q));
      CHECK(2 * l <= static_cast<std::int64_t>(q));
      CHECK(reduce(l, q) == r);
    }
  }
  CHECK(lift(8, 16) == 8);
  CHECK(lift(9, 16) == -7);
}

TEST_CASE("norms") {
  std::vector<std::int64_t> x = {3, -4, 0};
  CHECK(norm(x) == doctest::Approx(5.0));
  CHECK(squared_norm(x) == 25);
  CHECK(inf_norm(x) == 4);
}

TEST_CASE("shape errors") {
  ZqMatrix a(3, 2, 7), b(3, 2, 7);
  CHECK_THROWS_AS(mat_mul(a, b), Error);
  CHECK_THROWS_AS(mat_add(a, ZqMatrix(3, 2, 11)), Error);
  CHECK_THROWS_AS(check_modulus(1), Error);
  CHECK_THROWS_AS(check_modulus(kMaxModulus + 1), Error);
}

TEST_CASE("hconcat and column ranges invert each other") {
  std::mt19937_64 rng(3);
  ZqMatrix a = random_matrix(3, 4, 101, rng), b = random_matrix(3, 5, 101, rng);
  ZqMatrix ab = hconcat(a, b);
  CHECK(ab.column_range(0, 4) == a);
  CHECK(ab.column_range(4, 9) == b);
}
