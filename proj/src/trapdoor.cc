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

#include "scet/trapdoor.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "scet/error.h"
#include "scet/params.h"

namespace scet {

namespace {

void check_shapes(const ZqMatrix& a, const IntMatrix& r) {
  if (a.cols() != r.rows() + r.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "A width differs from mbar + nk of trapdoor");
  }
  if (r.cols() != a.rows() * ceil_log2(a.modulus())) {
    throw Error(ErrorCode::kDimensionMismatch, "trapdoor width differs from nk");
  }
}

}  // namespace

TagMatrix::TagMatrix(ZqMatrix h) : h_(std::move(h)), h_inv_(mat_inverse(h_)) {}

TagMatrix TagMatrix::scalar(Residue h, std::size_t n, std::uint64_t q) {
  if (inv_mod(reduce(static_cast<std::int64_t>(h % q), q), q) == 0) {
    throw Error(ErrorCode::kNonInvertibleTag, "tag is not a unit");
  }
  return TagMatrix(mat_scale(ZqMatrix::identity(n, q), h % q));
}

TrapGen gen_trap(std::size_t n, std::size_t mbar, std::uint64_t q, double sigma1,
                 Residue tag, Rng& rng) {
  check_modulus(q);
  const std::size_t nk = n * ceil_log2(q);
  ZqMatrix abar = sample_uniform_matrix(n, mbar, q, rng);
  IntMatrix r = sample_matrix(mbar, nk, sigma1, rng);
  ZqMatrix right = mat_sub(mat_scale(gadget_matrix(n, q), tag % q), mat_mul(abar, r));
  return {hconcat(abar, right), GTrapdoor{std::move(r), tag % q}};
}

ZqMatrix trapdoor_image(const ZqMatrix& a, const IntMatrix& r) {
  check_shapes(a, r);
  return mat_add(mat_mul(a.column_range(0, r.rows()), r), a.column_range(r.rows(), a.cols()));
}

PreimageSampler::PreimageSampler(IntMatrix r, double sigma) : r_(std::move(r)), sigma_(sigma) {
  const Eigen::Index mbar = static_cast<Eigen::Index>(r_.rows());
  const Eigen::Index nk = static_cast<Eigen::Index>(r_.cols());
  const Eigen::Index m = mbar + nk;
  Eigen::MatrixXd stacked(m, nk);
  for (Eigen::Index i = 0; i < mbar; ++i) {
    for (Eigen::Index j = 0; j < nk; ++j) {
      stacked(i, j) = static_cast<double>(r_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  }
  stacked.bottomRows(nk).setIdentity();

  const double sg = gadget_width();
  const double base = rounding_base();
  Eigen::MatrixXd cov = -(sg * sg) * (stacked * stacked.transpose());
  cov.diagonal().array() += sigma * sigma - base * base;
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kNotPositiveDefinite,
                "perturbation covariance is not positive definite; sigma too small");
  }
  sqrt_cov_ = llt.matrixL();
}

IntVector PreimageSampler::sample(const ZqMatrix& a, const TagMatrix& tag, const ZqVector& u,
                                  Rng& rng) const {
  check_shapes(a, r_);
  if (u.size() != a.rows() || tag.n() != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "syndrome or tag size differs from A rows");
  }
  if (u.modulus() != a.modulus() || tag.matrix().modulus() != a.modulus()) {
    throw Error(ErrorCode::kModulusMismatch, "sample_pre modulus");
  }
  const std::size_t mbar = r_.rows();
  const std::size_t nk = r_.cols();

  IntVector p = sample_nonspherical(sqrt_cov_, rounding_base(), rng);
  ZqVector target = mat_vec(tag.inverse(), vec_sub(u, mat_vec(a, p)));
  GadgetCtx ctx(a.modulus(), a.rows());
  IntVector z = g_sample_pre(target, gadget_width(), ctx, rng);

  IntVector e = std::move(p);
  for (std::size_t i = 0; i < mbar; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < nk; ++j) acc += r_(i, j) * z[j];
    e[i] += acc;
  }
  for (std::size_t j = 0; j < nk; ++j) e[mbar + j] += z[j];
  return e;
}

IntMatrix PreimageSampler::sample_matrix(const ZqMatrix& a, const TagMatrix& tag,
                                         const ZqMatrix& u, Rng& rng) const {
  if (u.rows() != a.rows()) throw Error(ErrorCode::kDimensionMismatch, "U rows differ from A rows");
  IntMatrix out(a.cols(), u.cols());
  for (std::size_t c = 0; c < u.cols(); ++c) out.set_column(c, sample(a, tag, u.column(c), rng));
  return out;
}

IntVector PreimageSampler::sample_extended(const ZqMatrix& a, const TagMatrix& tag,
                                           const ZqMatrix& c, const ZqVector& u,
                                           Rng& rng) const {
  if (c.rows() != a.rows()) throw Error(ErrorCode::kDimensionMismatch, "C rows differ from A rows");
  if (c.modulus() != a.modulus()) throw Error(ErrorCode::kModulusMismatch, "C modulus");
  IntVector tail = sample_vec(c.cols(), sigma_, rng);
  IntVector head = sample(a, tag, vec_sub(u, mat_vec(c, tail)), rng);
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

IntVector sample_pre(const ZqMatrix& a, const GTrapdoor& t, const ZqVector& u, double sigma,
                     Rng& rng) {
  TagMatrix tag = TagMatrix::scalar(t.tag, a.rows(), a.modulus());
  return PreimageSampler(t.r, sigma).sample(a, tag, u, rng);
}

IntMatrix sample_pre_matrix(const ZqMatrix& a, const GTrapdoor& t, const ZqMatrix& u,
                            double sigma, Rng& rng) {
  TagMatrix tag = TagMatrix::scalar(t.tag, a.rows(), a.modulus());
  return PreimageSampler(t.r, sigma).sample_matrix(a, tag, u, rng);
}

IntVector sample_pre_extended(const ZqMatrix& a, const GTrapdoor& t, const ZqMatrix& c,
                              const ZqVector& u, double sigma, Rng& rng) {
  TagMatrix tag = TagMatrix::scalar(t.tag, a.rows(), a.modulus());
  return PreimageSampler(t.r, sigma).sample_extended(a, tag, c, u, rng);
}

LweSolution invert_lwe(const ZqMatrix& a, const GTrapdoor& t, const ZqVector& b) {
  return invert_lwe(a, t.r, TagMatrix::scalar(t.tag, a.rows(), a.modulus()), b);
}

LweSolution invert_lwe(const ZqMatrix& a, const IntMatrix& r, const TagMatrix& tag,
                       const ZqVector& b) {
  check_shapes(a, r);
  if (b.size() != a.cols()) throw Error(ErrorCode::kDimensionMismatch, "b length differs from A cols");
  if (b.modulus() != a.modulus()) throw Error(ErrorCode::kModulusMismatch, "invert_lwe modulus");
  const std::uint64_t q = a.modulus();
  const std::size_t mbar = r.rows();
  const std::size_t nk = r.cols();

  ZqVector top(mbar, q);
  for (std::size_t i = 0; i < mbar; ++i) top[i] = b[i];
  ZqVector w = vec_mat(top, r);
  for (std::size_t j = 0; j < nk; ++j) w[j] = add_mod(w[j], b[mbar + j], q);

  GadgetCtx ctx(q, a.rows());
  GadgetBlockDecoding dec = g_invert(w, ctx);
  // w = (H^t s)^t G + noise, so s = H^{-t} x.
  ZqVector s = mat_vec(tag.inverse().transpose(), dec.x);
  IntVector e = balanced_lift(vec_sub(b, vec_mat(s, a)));
  return {std::move(s), std::move(e)};
}

GTrapdoor trapdoor_combine(std::span<const GTrapdoor> trapdoors, std::span<const Residue> coeffs,
                           std::uint64_t q) {
  if (trapdoors.size() != coeffs.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "one coefficient per trapdoor required");
  }
  if (trapdoors.empty()) throw Error(ErrorCode::kInvalidArgument, "no trapdoors to combine");
  const std::size_t rows = trapdoors[0].r.rows();
  const std::size_t cols = trapdoors[0].r.cols();
  IntMatrix r(rows, cols);
  Residue tag = 0;
  for (std::size_t i = 0; i < trapdoors.size(); ++i) {
    const GTrapdoor& t = trapdoors[i];
    if (t.r.rows() != rows || t.r.cols() != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "trapdoor shapes differ");
    }
    const std::int64_t h = lift(coeffs[i] % q, q);
    auto dst = r.mutable_entries();
    auto src = t.r.entries();
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] += h * src[j];
    tag = add_mod(tag, mul_mod(coeffs[i] % q, t.tag % q, q), q);
  }
  return {std::move(r), tag};
}

double s1_estimate(const IntMatrix& r) {
  const Eigen::Index rows = static_cast<Eigen::Index>(r.rows());
  const Eigen::Index cols = static_cast<Eigen::Index>(r.cols());
  if (rows == 0 || cols == 0) return 0.0;
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = static_cast<double>(r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  }
  // Gram matrix on the smaller side.
  Eigen::MatrixXd gram = rows <= cols ? Eigen::MatrixXd(m * m.transpose())
                                      : Eigen::MatrixXd(m.transpose() * m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));
}

}  // namespace scet
