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

#include "scet/zq.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "scet/error.h"

namespace scet {

namespace {

using u128 = unsigned __int128;

// Products of two residues are < 2^124, so 15 of them can be summed before
// the accumulator must be folded back.
constexpr int kFoldEvery = 15;

class DotAccumulator {
 public:
  explicit DotAccumulator(std::uint64_t q) : q_(q) {}

  void add(Residue a, Residue b) {
    acc_ += static_cast<u128>(a) * b;
    if (++pending_ == kFoldEvery) {
      acc_ %= q_;
      pending_ = 0;
    }
  }

  Residue value() const { return static_cast<Residue>(acc_ % q_); }

 private:
  std::uint64_t q_;
  u128 acc_ = 0;
  int pending_ = 0;
};

void require(bool ok, ErrorCode code, const char* what) {
  if (!ok) throw Error(code, what);
}

void require_same_modulus(std::uint64_t a, std::uint64_t b) {
  require(a == b, ErrorCode::kModulusMismatch, "operands use different moduli");
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kModulusMismatch: return "ModulusMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kTruncated: return "Truncated";
    case ErrorCode::kBadMagic: return "BadMagic";
    case ErrorCode::kBadKind: return "BadKind";
    case ErrorCode::kParamMismatch: return "ParamMismatch";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kNonInvertibleTag: return "NonInvertibleTag";
    case ErrorCode::kDecodingFailure: return "DecodingFailure";
    case ErrorCode::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "Unknown";
}

void check_modulus(std::uint64_t q) {
  require(q >= 2 && q <= kMaxModulus, ErrorCode::kInvalidArgument,
          "modulus must satisfy 2 <= q <= 2^62");
}

Residue pow_mod(Residue base, std::uint64_t exp, std::uint64_t q) {
  Residue result = 1 % q;
  base %= q;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, q);
    base = mul_mod(base, base, q);
    exp >>= 1;
  }
  return result;
}

Residue inv_mod(Residue a, std::uint64_t q) {
  __int128 r0 = q, r1 = a % q;
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 quot = r0 / r1;
    __int128 r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    __int128 t2 = t0 - quot * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) {
    throw Error(ErrorCode::kNonInvertibleTag,
                std::to_string(static_cast<std::uint64_t>(a)) +
                    " is not a unit mod " + std::to_string(q));
  }
  return reduce128(t0, q);
}

// --- ZqVector --------------------------------------------------------------

ZqVector::ZqVector(std::size_t size, std::uint64_t q) : q_(q), data_(size, 0) {
  check_modulus(q);
}

ZqVector::ZqVector(std::uint64_t q, std::span<const std::int64_t> values)
    : q_(q) {
  check_modulus(q);
  data_.reserve(values.size());
  for (auto v : values) data_.push_back(reduce(v, q));
}

ZqVector::ZqVector(std::uint64_t q, std::initializer_list<std::int64_t> values)
    : ZqVector(q, std::span<const std::int64_t>(values.begin(), values.size())) {}

bool ZqVector::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue r) { return r == 0; });
}

// --- ZqMatrix --------------------------------------------------------------

ZqMatrix::ZqMatrix(std::size_t rows, std::size_t cols, std::uint64_t q)
    : rows_(rows), cols_(cols), q_(q), data_(rows * cols, 0) {
  check_modulus(q);
}

ZqMatrix::ZqMatrix(std::uint64_t q,
                   std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), q_(q) {
  check_modulus(q);
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require(row.size() == cols_, ErrorCode::kDimensionMismatch, "ragged rows");
    for (auto v : row) data_.push_back(reduce(v, q));
  }
}

ZqMatrix ZqMatrix::identity(std::size_t n, std::uint64_t q) {
  ZqMatrix id(n, n, q);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

ZqVector ZqVector::from_residues(std::uint64_t q, std::vector<Residue> entries) {
  check_modulus(q);
  for (auto e : entries) {
    require(e < q, ErrorCode::kInvalidArgument, "entry not reduced mod q");
  }
  ZqVector v;
  v.q_ = q;
  v.data_ = std::move(entries);
  return v;
}

ZqMatrix ZqMatrix::from_entries(std::size_t rows, std::size_t cols,
                                std::uint64_t q, std::vector<Residue> entries) {
  check_modulus(q);
  require(entries.size() == rows * cols, ErrorCode::kDimensionMismatch,
          "entry count does not match shape");
  for (auto e : entries) {
    require(e < q, ErrorCode::kInvalidArgument, "entry not reduced mod q");
  }
  ZqMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.q_ = q;
  m.data_ = std::move(entries);
  return m;
}

bool ZqMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue r) { return r == 0; });
}

ZqMatrix ZqMatrix::transpose() const {
  ZqMatrix t(cols_, rows_, q_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ZqVector ZqMatrix::column(std::size_t c) const {
  ZqVector v(rows_, q_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ZqMatrix ZqMatrix::column_range(std::size_t begin, std::size_t end) const {
  require(begin <= end && end <= cols_, ErrorCode::kDimensionMismatch,
          "column range out of bounds");
  ZqMatrix out(rows_, end - begin, q_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = begin; c < end; ++c) out(r, c - begin) = (*this)(r, c);
  return out;
}

// --- IntMatrix -------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require(row.size() == cols_, ErrorCode::kDimensionMismatch, "ragged rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void IntMatrix::set_column(std::size_t c, std::span<const std::int64_t> values) {
  require(values.size() == rows_, ErrorCode::kDimensionMismatch,
          "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

// --- arithmetic ------------------------------------------------------------

ZqMatrix mat_mul(const ZqMatrix& a, const ZqMatrix& b) {
  require_same_modulus(a.modulus(), b.modulus());
  require(a.cols() == b.rows(), ErrorCode::kDimensionMismatch,
          "mat_mul: inner dimensions differ");
  const std::uint64_t q = a.modulus();
  ZqMatrix bt = b.transpose();
  ZqMatrix out(a.rows(), b.cols(), q);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ar = a.row(i);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      auto bc = bt.row(j);
      DotAccumulator acc(q);
      for (std::size_t l = 0; l < ar.size(); ++l) acc.add(ar[l], bc[l]);
      out(i, j) = acc.value();
    }
  }
  return out;
}

ZqMatrix mat_mul(const ZqMatrix& a, const IntMatrix& r) {
  require(a.cols() == r.rows(), ErrorCode::kDimensionMismatch,
          "mat_mul: inner dimensions differ");
  const std::uint64_t q = a.modulus();
  ZqMatrix reduced(r.rows(), r.cols(), q);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) reduced(i, j) = reduce(r(i, j), q);
  return mat_mul(a, reduced);
}

ZqMatrix mat_add(const ZqMatrix& a, const ZqMatrix& b) {
  require_same_modulus(a.modulus(), b.modulus());
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          ErrorCode::kDimensionMismatch, "mat_add: shape mismatch");
  ZqMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = add_mod(a(i, j), b(i, j), a.modulus());
  return out;
}

ZqMatrix mat_sub(const ZqMatrix& a, const ZqMatrix& b) {
  require_same_modulus(a.modulus(), b.modulus());
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          ErrorCode::kDimensionMismatch, "mat_sub: shape mismatch");
  ZqMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = sub_mod(a(i, j), b(i, j), a.modulus());
  return out;
}

ZqMatrix mat_scale(const ZqMatrix& a, Residue c) {
  ZqMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = mul_mod(a(i, j), c % a.modulus(), a.modulus());
  return out;
}

ZqMatrix hconcat(const ZqMatrix& a, const ZqMatrix& b) {
  require_same_modulus(a.modulus(), b.modulus());
  require(a.rows() == b.rows(), ErrorCode::kDimensionMismatch,
          "hconcat: row counts differ");
  ZqMatrix out(a.rows(), a.cols() + b.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

ZqVector mat_vec(const ZqMatrix& a, const ZqVector& x) {
  require_same_modulus(a.modulus(), x.modulus());
  require(a.cols() == x.size(), ErrorCode::kDimensionMismatch,
          "mat_vec: dimension mismatch");
  ZqVector out(a.rows(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ar = a.row(i);
    DotAccumulator acc(a.modulus());
    for (std::size_t l = 0; l < ar.size(); ++l) acc.add(ar[l], x[l]);
    out[i] = acc.value();
  }
  return out;
}

ZqVector mat_vec(const ZqMatrix& a, std::span<const std::int64_t> x) {
  return mat_vec(a, ZqVector(a.modulus(), x));
}

ZqVector vec_mat(const ZqVector& x, const ZqMatrix& a) {
  require_same_modulus(a.modulus(), x.modulus());
  require(a.rows() == x.size(), ErrorCode::kDimensionMismatch,
          "vec_mat: dimension mismatch");
  const std::uint64_t q = a.modulus();
  std::vector<u128> acc(a.cols(), 0);
  ZqVector out(a.cols(), q);
  int pending = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ar = a.row(i);
    for (std::size_t j = 0; j < ar.size(); ++j) acc[j] += static_cast<u128>(x[i]) * ar[j];
    if (++pending == kFoldEvery) {
      for (auto& v : acc) v %= q;
      pending = 0;
    }
  }
  for (std::size_t j = 0; j < a.cols(); ++j) out[j] = static_cast<Residue>(acc[j] % q);
  return out;
}

ZqVector vec_mat(const ZqVector& x, const IntMatrix& r) {
  require(r.rows() == x.size(), ErrorCode::kDimensionMismatch,
          "vec_mat: dimension mismatch");
  const std::uint64_t q = x.modulus();
  ZqMatrix reduced(r.rows(), r.cols(), q);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) reduced(i, j) = reduce(r(i, j), q);
  return vec_mat(x, reduced);
}

ZqVector vec_add(const ZqVector& a, const ZqVector& b) {
  require_same_modulus(a.modulus(), b.modulus());
  require(a.size() == b.size(), ErrorCode::kDimensionMismatch, "vec_add: length");
  ZqVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = add_mod(a[i], b[i], a.modulus());
  return out;
}

ZqVector vec_sub(const ZqVector& a, const ZqVector& b) {
  require_same_modulus(a.modulus(), b.modulus());
  require(a.size() == b.size(), ErrorCode::kDimensionMismatch, "vec_sub: length");
  ZqVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sub_mod(a[i], b[i], a.modulus());
  return out;
}

ZqVector vec_add(const ZqVector& a, std::span<const std::int64_t> b) {
  return vec_add(a, ZqVector(a.modulus(), b));
}

ZqVector vec_sub(const ZqVector& a, std::span<const std::int64_t> b) {
  return vec_sub(a, ZqVector(a.modulus(), b));
}

ZqVector f_hash(const ZqMatrix& w, std::span<const std::int64_t> x) {
  return mat_vec(w, x);
}

ZqVector f_hash(const ZqMatrix& w, const ZqVector& x) { return mat_vec(w, x); }

IntVector balanced_lift(const ZqVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = lift(v[i], v.modulus());
  return out;
}

__int128 squared_norm(std::span<const std::int64_t> x) {
  __int128 s = 0;
  for (auto v : x) s += static_cast<__int128>(v) * v;
  return s;
}

double norm(std::span<const std::int64_t> x) {
  return std::sqrt(static_cast<double>(squared_norm(x)));
}

std::int64_t inf_norm(std::span<const std::int64_t> x) {
  std::int64_t best = 0;
  for (auto v : x) best = std::max(best, v < 0 ? -v : v);
  return best;
}

ZqMatrix mat_inverse(const ZqMatrix& a) {
  require(a.rows() == a.cols(), ErrorCode::kDimensionMismatch,
          "mat_inverse: matrix is not square");
  const std::size_t n = a.rows();
  const std::uint64_t q = a.modulus();
  ZqMatrix work = a;
  ZqMatrix inv = ZqMatrix::identity(n, q);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    Residue pivot_inv = 0;
    for (std::size_t r = col; r < n && pivot == n; ++r) {
      if (work(r, col) == 0) continue;
      try {
        pivot_inv = inv_mod(work(r, col), q);
        pivot = r;
      } catch (const Error&) {
        // Not a unit; keep looking.
      }
    }
    if (pivot == n) throw Error(ErrorCode::kNonInvertibleTag, "matrix is singular mod q");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) = mul_mod(work(col, j), pivot_inv, q);
      inv(col, j) = mul_mod(inv(col, j), pivot_inv, q);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col) == 0) continue;
      Residue f = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) = sub_mod(work(r, j), mul_mod(f, work(col, j), q), q);
        inv(r, j) = sub_mod(inv(r, j), mul_mod(f, inv(col, j), q), q);
      }
    }
  }
  return inv;
}

}  // namespace scet
