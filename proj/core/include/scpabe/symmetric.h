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

#ifndef SCPABE_SYMMETRIC_H_
#define SCPABE_SYMMETRIC_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "scpabe/codec.h"

namespace scpabe {

inline constexpr std::string_view kKdfName = "HKDF-SHA256";
inline constexpr std::string_view kAeadName = "ChaCha20-Poly1305-IETF";

using ContentKey = std::array<std::uint8_t, 32>;
using Nonce = std::array<std::uint8_t, 12>;
using Tag = std::array<std::uint8_t, 16>;

// HKDF-SHA256 (RFC 5869) with an empty salt.
ContentKey hkdf_sha256(std::span<const std::uint8_t> ikm, std::string_view info);

struct Sealed {
  Bytes ciphertext;
  Tag tag;
};

Sealed aead_seal(const ContentKey& key, const Nonce& nonce,
                 std::span<const std::uint8_t> aad,
                 std::span<const std::uint8_t> plaintext);

// Throws AuthenticationError when the tag does not verify.
Bytes aead_open(const ContentKey& key, const Nonce& nonce,
                std::span<const std::uint8_t> aad,
                std::span<const std::uint8_t> ciphertext, const Tag& tag);

}  // namespace scpabe

#endif  // SCPABE_SYMMETRIC_H_
