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

#include "scet/bits.h"

#include "scet/error.h"

namespace scet {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string bits_to_hex(const Bits& bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    int v = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      v <<= 1;
      if (i + j < bits.size()) v |= bits[i + j] & 1;
    }
    out.push_back(kDigits[v]);
  }
  return out;
}

Bits hex_to_bits(std::string_view hex, std::size_t len) {
  if (hex.size() != (len + 3) / 4) {
    throw Error(ErrorCode::kInvalidArgument, "message must have " +
                                                 std::to_string((len + 3) / 4) + " hex digits");
  }
  Bits out(len, 0);
  for (std::size_t d = 0; d < hex.size(); ++d) {
    int v = hex_value(hex[d]);
    if (v < 0) throw Error(ErrorCode::kInvalidArgument, "invalid hex digit");
    for (std::size_t j = 0; j < 4; ++j) {
      std::uint8_t bit = (v >> (3 - j)) & 1;
      std::size_t idx = 4 * d + j;
      if (idx < len) {
        out[idx] = bit;
      } else if (bit != 0) {
        throw Error(ErrorCode::kInvalidArgument, "nonzero padding bits in message");
      }
    }
  }
  return out;
}

std::vector<std::uint8_t> pack_bits(const Bits& bits) {
  std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] & 1) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return out;
}

Bits unpack_bits(const std::vector<std::uint8_t>& bytes, std::size_t len) {
  if (bytes.size() * 8 < len) throw Error(ErrorCode::kTruncated, "not enough bytes to unpack");
  Bits out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = (bytes[i / 8] >> (7 - i % 8)) & 1;
  return out;
}

}  // namespace scet
