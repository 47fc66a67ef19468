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

// Dense linear algebra over Z_q. Residues are stored as uint64 in [0, q);
// products are formed in 128-bit intermediates, so q is capped at 2^62.

#ifndef SCET_ZQ_H_
#define SCET_ZQ_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace scet {

using Residue = std::uint64_t;
using IntVector = std::vector<std::int64_t>;

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

// Throws kInvalidArgument unless 2 <= q <= 2^62.
void check_modulus(std::uint64_t q);

inline Residue reduce(std::int64_t x, std::uint64_t q) {
  std::int64_t r = x % static_cast<std::int64_t>(q);
  return static_cast<Residue>(r < 0 ? r + static_cast<std::int64_t>(q) : r);
}

inline Residue reduce128(__int128 x, std::uint64_t q) {
  __int128 r = x % static_cast<__int128>(q);
  return static_cast<Residue>(r < 0 ? r + q : r);
}

inline Residue add_mod(Residue a, Residue b, std::uint64_t q) {
  Residue s = a + b;
  return s >= q ? s - q : s;
}

inline Residue sub_mod(Residue a, Residue b, std::uint64_t q) {
  return a >= b ? a - b : a + q - b;
}

inline Residue mul_mod(Residue a, Residue b, std::uint64_t q) {
  return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % q);
}

// Representative in (-q/2, q/2].
inline std::int64_t lift(Residue r, std::uint64_t q) {
  return r > q / 2 ? static_cast<std::int64_t>(r) - static_cast<std::int64_t>(q)
                   : static_cast<std::int64_t>(r);
}

Residue pow_mod(Residue base, std::uint64_t exp, std::uint64_t q);

// Inverse of a modulo q; throws kNonInvertibleTag when gcd(a, q) != 1.
Residue inv_mod(Residue a, std::uint64_t q);

class ZqVector {
 public:
  ZqVector() = default;
  ZqVector(std::size_t size, std::uint64_t q);
  // Entries are reduced into [0, q).
  ZqVector(std::uint64_t q, std::span<const std::int64_t> values);
  ZqVector(std::uint64_t q, std::initializer_list<std::int64_t> values);
  // Takes ownership of residues already in [0, q).
  static ZqVector from_residues(std::uint64_t q, std::vector<Residue> entries);

  std::uint64_t modulus() const { return q_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  bool is_zero() const;

  Residue operator[](std::size_t i) const { return data_[i]; }
  Residue& operator[](std::size_t i) { return data_[i]; }
  std::span<const Residue> entries() const { return data_; }

  friend bool operator==(const ZqVector&, const ZqVector&) = default;

 private:
  std::uint64_t q_ = 2;
  std::vector<Residue> data_;
};

// Row-major dense matrix over Z_q.
class ZqMatrix {
 public:
  ZqMatrix() = default;
  ZqMatrix(std::size_t rows, std::size_t cols, std::uint64_t q);
  ZqMatrix(std::uint64_t q,
           std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static ZqMatrix identity(std::size_t n, std::uint64_t q);
  // Takes ownership of row-major residues already in [0, q).
  static ZqMatrix from_entries(std::size_t rows, std::size_t cols,
                               std::uint64_t q, std::vector<Residue> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t modulus() const { return q_; }
  bool is_zero() const;

  Residue operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Residue& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Residue> entries() const { return data_; }

  ZqMatrix transpose() const;
  ZqVector column(std::size_t c) const;
  // Columns [begin, end).
  ZqMatrix column_range(std::size_t begin, std::size_t end) const;

  friend bool operator==(const ZqMatrix&, const ZqMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint64_t q_ = 2;
  std::vector<Residue> data_;
};

// Row-major dense matrix over Z (trapdoors, preimage batches).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::int64_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::span<const std::int64_t> entries() const { return data_; }
  std::span<std::int64_t> mutable_entries() { return data_; }

  IntVector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const std::int64_t> values);
  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// --- arithmetic ----------------------------------------------------------

ZqMatrix mat_mul(const ZqMatrix& a, const ZqMatrix& b);
// A * R with R integral (entries reduced mod q first).
ZqMatrix mat_mul(const ZqMatrix& a, const IntMatrix& r);
ZqMatrix mat_add(const ZqMatrix& a, const ZqMatrix& b);
ZqMatrix mat_sub(const ZqMatrix& a, const ZqMatrix& b);
ZqMatrix mat_scale(const ZqMatrix& a, Residue c);
// [A | B].
ZqMatrix hconcat(const ZqMatrix& a, const ZqMatrix& b);

ZqVector mat_vec(const ZqMatrix& a, const ZqVector& x);
ZqVector mat_vec(const ZqMatrix& a, std::span<const std::int64_t> x);
// Row vector times matrix: x^t A.
ZqVector vec_mat(const ZqVector& x, const ZqMatrix& a);
// x^t R for integral R.
ZqVector vec_mat(const ZqVector& x, const IntMatrix& r);

ZqVector vec_add(const ZqVector& a, const ZqVector& b);
ZqVector vec_sub(const ZqVector& a, const ZqVector& b);
ZqVector vec_add(const ZqVector& a, std::span<const std::int64_t> b);
ZqVector vec_sub(const ZqVector& a, std::span<const std::int64_t> b);

// Lattice hash f_W(x) = W x mod q; x is reduced mod q entrywise first.
ZqVector f_hash(const ZqMatrix& w, std::span<const std::int64_t> x);
ZqVector f_hash(const ZqMatrix& w, const ZqVector& x);

IntVector balanced_lift(const ZqVector& v);

// Euclidean norm, exact squared norm.
double norm(std::span<const std::int64_t> x);
__int128 squared_norm(std::span<const std::int64_t> x);
std::int64_t inf_norm(std::span<const std::int64_t> x);

// Inverse of a square matrix by Gaussian elimination mod q. Pivots must be
// units; throws kNonInvertibleTag otherwise.
ZqMatrix mat_inverse(const ZqMatrix& a);

}  // namespace scet

#endif  // SCET_ZQ_H_
