/*
 * Copyright 2026 The SCP-ABE Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SCPABE_CODEC_H_
#define SCPABE_CODEC_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace scpabe {

using Bytes = std::vector<std::uint8_t>;

// Fixed-width big-endian encoding. Throws std::length_error if `value` is
// negative or needs more than `width` bytes.
Bytes to_fixed_be(const mpz_class& value, std::size_t width);
mpz_class from_be(std::span<const std::uint8_t> bytes);

std::size_t byte_length(const mpz_class& value);

std::string base64_encode(std::span<const std::uint8_t> bytes);
// Throws FormatError on malformed input.
Bytes base64_decode(std::string_view text);

std::string hex_encode(std::span<const std::uint8_t> bytes);

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data);
std::array<std::uint8_t, 32> sha256(std::string_view data);

inline std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace scpabe

#endif  // SCPABE_CODEC_H_
