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

#include "scpabe/scalar.h"

#include <utility>

#include "scpabe/errors.h"

namespace scpabe {

namespace {
constexpr int kMaxZeroDraws = 64;
}  // namespace

ScalarField::ScalarField(mpz_class order)
    : order_(std::move(order)), bytes_(scpabe::byte_length(order_)) {
  if (order_ < 2) throw ValidationError("group order must be at least 2");
  unsigned bits = static_cast<unsigned>(mpz_sizeinbase(order_.get_mpz_t(), 2));
  top_bits_ = bits % 8 == 0 ? 8 : bits % 8;
}

Scalar ScalarField::from(const mpz_class& v) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), order_.get_mpz_t());
  return Scalar{std::move(r)};
}

Scalar ScalarField::add(const Scalar& a, const Scalar& b) const {
  mpz_class r = a.value + b.value;
  if (r >= order_) r -= order_;
  return Scalar{std::move(r)};
}

Scalar ScalarField::sub(const Scalar& a, const Scalar& b) const {
  mpz_class r = a.value - b.value;
  if (sgn(r) < 0) r += order_;
  return Scalar{std::move(r)};
}

Scalar ScalarField::mul(const Scalar& a, const Scalar& b) const {
  return from(a.value * b.value);
}

Scalar ScalarField::neg(const Scalar& a) const {
  if (sgn(a.value) == 0) return a;
  return Scalar{order_ - a.value};
}

Scalar ScalarField::inverse(const Scalar& a) const {
  mpz_class r;
  if (sgn(a.value) == 0 ||
      mpz_invert(r.get_mpz_t(), a.value.get_mpz_t(), order_.get_mpz_t()) == 0) {
    throw ValidationError("scalar has no inverse");
  }
  return Scalar{std::move(r)};
}

Scalar ScalarField::random(RandomSource& rng) const {
  Bytes buf(bytes_);
  const std::uint8_t mask =
      static_cast<std::uint8_t>((1u << top_bits_) - 1u);
  for (;;) {
    rng.fill(buf);
    buf[0] &= mask;
    mpz_class v = from_be(buf);
    if (v < order_) return Scalar{std::move(v)};
  }
}

Scalar ScalarField::random_nonzero(RandomSource& rng) const {
  for (int i = 0; i < kMaxZeroDraws; ++i) {
    Scalar s = random(rng);
    if (sgn(s.value) != 0) return s;
  }
  throw RandomnessExhaustedError("randomness source keeps producing zero");
}

Bytes ScalarField::encode(const Scalar& s) const {
  return to_fixed_be(s.value, bytes_);
}

Scalar ScalarField::decode(std::span<const std::uint8_t> bytes) const {
  if (bytes.size() != bytes_) throw FormatError("scalar: wrong encoding length");
  mpz_class v = from_be(bytes);
  if (v >= order_) throw FormatError("scalar: value out of range");
  return Scalar{std::move(v)};
}

}  // namespace scpabe
