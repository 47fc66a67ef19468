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

#include "scet/wire.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iterator>

#include "scet/error.h"

namespace scet::wire {

void Writer::put_u64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void Writer::put_f64(double v) { put_u64(std::bit_cast<std::uint64_t>(v)); }

void Writer::put(const ZqMatrix& m) {
  put_magic();
  put_u8(static_cast<std::uint8_t>(Kind::kMatrix));
  put_u64(m.modulus());
  put_u64(m.rows());
  put_u64(m.cols());
  for (auto e : m.entries()) put_u64(e);
}

void Writer::put(const ZqVector& v) {
  put_magic();
  put_u8(static_cast<std::uint8_t>(Kind::kVector));
  put_u64(v.modulus());
  put_u64(v.size());
  put_u64(1);
  for (auto e : v.entries()) put_u64(e);
}

void Writer::put(const IntMatrix& m) {
  put_magic();
  put_u8(static_cast<std::uint8_t>(Kind::kIntMatrix));
  put_u64(0);
  put_u64(m.rows());
  put_u64(m.cols());
  for (auto e : m.entries()) put_i64(e);
}

void Writer::put_ints(std::span<const std::int64_t> v) {
  put_magic();
  put_u8(static_cast<std::uint8_t>(Kind::kIntVector));
  put_u64(0);
  put_u64(v.size());
  put_u64(1);
  for (auto e : v) put_i64(e);
}

void Reader::expect_magic() {
  auto got = get_bytes(kMagic.size());
  if (!std::equal(got.begin(), got.end(), kMagic.begin())) {
    throw Error(ErrorCode::kBadMagic, "container magic mismatch");
  }
}

std::uint8_t Reader::get_u8() { return get_bytes(1)[0]; }

std::uint64_t Reader::get_u64() {
  auto b = get_bytes(8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

double Reader::get_f64() { return std::bit_cast<double>(get_u64()); }

std::span<const std::uint8_t> Reader::get_bytes(std::size_t n) {
  if (n > remaining()) throw Error(ErrorCode::kTruncated, "unexpected end of stream");
  auto out = bytes_.subspan(pos_, n);
  pos_ += n;
  return out;
}

void Reader::expect_end() {
  if (!at_end()) throw Error(ErrorCode::kBadKind, "trailing bytes after record");
}

Reader::Header Reader::get_header(Kind expected) {
  expect_magic();
  auto kind = static_cast<Kind>(get_u8());
  if (kind != expected) {
    throw Error(ErrorCode::kBadKind,
                "expected record kind " + std::to_string(static_cast<int>(expected)) +
                    ", found " + std::to_string(static_cast<int>(kind)));
  }
  Header h{kind, get_u64(), get_u64(), get_u64()};
  // Shapes that cannot fit in the remaining bytes.
  if (h.rows != 0 && h.cols > remaining() / 8 / h.rows) {
    throw Error(ErrorCode::kTruncated, "record shape exceeds stream length");
  }
  return h;
}

ZqMatrix Reader::get_matrix(std::optional<std::uint64_t> expected_q) {
  Header h = get_header(Kind::kMatrix);
  if (expected_q && h.q != *expected_q) {
    throw Error(ErrorCode::kModulusMismatch, "matrix modulus differs from expected");
  }
  check_modulus(h.q);
  std::vector<Residue> entries(h.rows * h.cols);
  for (auto& e : entries) e = get_u64();
  return ZqMatrix::from_entries(h.rows, h.cols, h.q, std::move(entries));
}

ZqVector Reader::get_vector(std::optional<std::uint64_t> expected_q) {
  Header h = get_header(Kind::kVector);
  if (expected_q && h.q != *expected_q) {
    throw Error(ErrorCode::kModulusMismatch, "vector modulus differs from expected");
  }
  if (h.cols != 1) throw Error(ErrorCode::kBadKind, "vector record with cols != 1");
  ZqVector v(h.rows, h.q);
  for (std::size_t i = 0; i < h.rows; ++i) {
    auto e = get_u64();
    if (e >= h.q) throw Error(ErrorCode::kInvalidArgument, "vector entry not reduced");
    v[i] = e;
  }
  return v;
}

IntMatrix Reader::get_int_matrix() {
  Header h = get_header(Kind::kIntMatrix);
  IntMatrix m(h.rows, h.cols);
  for (auto& e : m.mutable_entries()) e = get_i64();
  return m;
}

IntVector Reader::get_ints() {
  Header h = get_header(Kind::kIntVector);
  if (h.cols != 1) throw Error(ErrorCode::kBadKind, "vector record with cols != 1");
  IntVector v(h.rows);
  for (auto& e : v) e = get_i64();
  return v;
}

Bytes serialize(const ZqMatrix& m) {
  Writer w;
  w.put(m);
  return std::move(w).bytes();
}

Bytes serialize(const ZqVector& v) {
  Writer w;
  w.put(v);
  return std::move(w).bytes();
}

Bytes serialize(const IntMatrix& m) {
  Writer w;
  w.put(m);
  return std::move(w).bytes();
}

Bytes serialize_ints(std::span<const std::int64_t> v) {
  Writer w;
  w.put_ints(v);
  return std::move(w).bytes();
}

ZqMatrix deserialize_matrix(std::span<const std::uint8_t> bytes,
                            std::optional<std::uint64_t> expected_q) {
  Reader r(bytes);
  auto m = r.get_matrix(expected_q);
  r.expect_end();
  return m;
}

ZqVector deserialize_vector(std::span<const std::uint8_t> bytes,
                            std::optional<std::uint64_t> expected_q) {
  Reader r(bytes);
  auto v = r.get_vector(expected_q);
  r.expect_end();
  return v;
}

IntMatrix deserialize_int_matrix(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  auto m = r.get_int_matrix();
  r.expect_end();
  return m;
}

IntVector deserialize_ints(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  auto v = r.get_ints();
  r.expect_end();
  return v;
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot create " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

}  // namespace scet::wire
