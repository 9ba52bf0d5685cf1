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

#ifndef SCPABE_RANDOM_H_
#define SCPABE_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>

namespace scpabe {

// Source of uniformly random bytes. Instances are owned by the caller and
// must not be shared between concurrent operations.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

// Operating-system CSPRNG (OpenSSL RAND_bytes).
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

// Deterministic ChaCha20 keystream keyed by SHA-256 of the seed. For tests
// and reproducible CLI runs only. An optional byte budget makes exhaustion
// observable; once spent, fill() throws RandomnessExhaustedError.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed,
                        std::optional<std::size_t> byte_budget = std::nullopt);
  ~SeededRandom() override;
  SeededRandom(const SeededRandom&) = delete;
  SeededRandom& operator=(const SeededRandom&) = delete;

  void fill(std::span<std::uint8_t> out) override;

 private:
  struct CipherState;
  std::unique_ptr<CipherState> state_;
  std::optional<std::size_t> remaining_;
};

}  // namespace scpabe

#endif  // SCPABE_RANDOM_H_
