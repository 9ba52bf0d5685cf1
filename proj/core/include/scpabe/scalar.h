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

#ifndef SCPABE_SCALAR_H_
#define SCPABE_SCALAR_H_

#include <cstddef>
#include <span>

#include <gmpxx.h>

#include "scpabe/codec.h"
#include "scpabe/random.h"

namespace scpabe {

// An exponent in Z_p. Always reduced into [0, p) by the ScalarField that
// produced it.
struct Scalar {
  mpz_class value;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value == b.value;
  }
};

// Arithmetic in Z_p for a prime group order p.
class ScalarField {
 public:
  explicit ScalarField(mpz_class order);

  const mpz_class& order() const { return order_; }
  std::size_t byte_length() const { return bytes_; }

  Scalar from(const mpz_class& v) const;
  Scalar from_int(long v) const { return from(mpz_class(v)); }
  Scalar zero() const { return Scalar{0}; }
  Scalar one() const { return Scalar{1}; }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  // Throws ValidationError for zero.
  Scalar inverse(const Scalar& a) const;

  // Uniform in [0, p) by rejection sampling on masked big-endian bytes.
  Scalar random(RandomSource& rng) const;
  // Uniform in [1, p); gives up with RandomnessExhaustedError after a bounded
  // number of zero draws.
  Scalar random_nonzero(RandomSource& rng) const;

  Bytes encode(const Scalar& s) const;
  // Throws FormatError on wrong length or a value >= p.
  Scalar decode(std::span<const std::uint8_t> bytes) const;

 private:
  mpz_class order_;
  std::size_t bytes_;
  unsigned top_bits_;
};

}  // namespace scpabe

#endif  // SCPABE_SCALAR_H_
