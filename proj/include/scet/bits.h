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

// Bit strings used as messages. Hex form is MSB-first: bit 0 is the high bit
// of the first digit, and unused low bits of the last digit must be zero.

#ifndef SCET_BITS_H_
#define SCET_BITS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scet {

// One entry per bit, each 0 or 1.
using Bits = std::vector<std::uint8_t>;

std::string bits_to_hex(const Bits& bits);
// Throws kInvalidArgument on bad digits, wrong length, or nonzero padding.
Bits hex_to_bits(std::string_view hex, std::size_t len);

// Packs MSB-first into ceil(len / 8) bytes.
std::vector<std::uint8_t> pack_bits(const Bits& bits);
Bits unpack_bits(const std::vector<std::uint8_t>& bytes, std::size_t len);

}  // namespace scet

#endif  // SCET_BITS_H_
