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

#include <gtest/gtest.h>

#include <array>

#include "scpabe/errors.h"
#include "scpabe/random.h"

namespace scpabe {
namespace {

std::array<std::uint8_t, 48> draw(RandomSource& rng) {
  std::array<std::uint8_t, 48> out{};
  rng.fill(out);
  return out;
}

TEST(SeededRandomTest, SameSeedGivesSameStream) {
  SeededRandom a(42);
  SeededRandom b(42);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(draw(a), draw(b));
}

TEST(SeededRandomTest, DifferentSeedsDiverge) {
  SeededRandom a(1);
  SeededRandom b(2);
  EXPECT_NE(draw(a), draw(b));
}

TEST(SeededRandomTest, StreamDoesNotDependOnChunking) {
  SeededRandom a(7);
  SeededRandom b(7);
  std::array<std::uint8_t, 96> whole{};
  a.fill(whole);
  const auto first = draw(b);
  const auto second = draw(b);
  EXPECT_TRUE(std::equal(first.begin(), first.end(), whole.begin()));
  EXPECT_TRUE(std::equal(second.begin(), second.end(), whole.begin() + 48));
}

TEST(SeededRandomTest, BudgetExhaustionIsReported) {
  SeededRandom rng(3, 64);
  draw(rng);
  EXPECT_THROW(draw(rng), RandomnessExhaustedError);
}

TEST(SystemRandomTest, ProducesVaryingOutput) {
  SystemRandom rng;
  EXPECT_NE(draw(rng), draw(rng));
}

}  // namespace
}  // namespace scpabe
