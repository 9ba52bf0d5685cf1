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

#include "scpabe/random.h"

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "scpabe/codec.h"
#include "scpabe/errors.h"

namespace scpabe {

void SystemRandom::fill(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw Error("system randomness unavailable");
  }
}

struct SeededRandom::CipherState {
  struct Free {
    void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
  };
  std::unique_ptr<EVP_CIPHER_CTX, Free> ctx;
};

SeededRandom::SeededRandom(std::uint64_t seed,
                           std::optional<std::size_t> byte_budget)
    : state_(std::make_unique<CipherState>()), remaining_(byte_budget) {
  std::string material = "scpabe/seeded-rng/v1:" + std::to_string(seed);
  auto key = sha256(material);
  std::array<std::uint8_t, 16> iv{};
  state_->ctx.reset(EVP_CIPHER_CTX_new());
  if (!state_->ctx ||
      EVP_EncryptInit_ex(state_->ctx.get(), EVP_chacha20(), nullptr,
                         key.data(), iv.data()) != 1) {
    throw Error("cannot initialise seeded keystream");
  }
}

SeededRandom::~SeededRandom() = default;

void SeededRandom::fill(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  if (remaining_) {
    if (*remaining_ < out.size()) {
      *remaining_ = 0;
      throw RandomnessExhaustedError("seeded randomness budget exhausted");
    }
    *remaining_ -= out.size();
  }
  std::vector<std::uint8_t> zeros(out.size(), 0);
  int len = 0;
  if (EVP_EncryptUpdate(state_->ctx.get(), out.data(), &len, zeros.data(),
                        static_cast<int>(zeros.size())) != 1 ||
      static_cast<std::size_t>(len) != out.size()) {
    throw Error("seeded keystream failure");
  }
}

}  // namespace scpabe
