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

#ifndef SCPABE_TRANSPARENT_GROUP_H_
#define SCPABE_TRANSPARENT_GROUP_H_

#include <span>
#include <string_view>

#include <gmpxx.h>

#include "scpabe/group.h"

namespace scpabe {

// Deliberately insecure bilinear group in which every element is its own
// discrete logarithm: g^x is stored as x, multiplication adds exponents,
// exponentiation multiplies them and e(g^x, g^y) = e(g,g)^{xy}. Every
// identity of the scheme becomes integer arithmetic modulo p that tests can
// assert exactly.
class TransparentGroup {
 public:
  struct G0 {
    mpz_class log;
    friend bool operator==(const G0& a, const G0& b) { return a.log == b.log; }
  };
  struct G1 {
    mpz_class log;
    friend bool operator==(const G1& a, const G1& b) { return a.log == b.log; }
  };

  // Defaults to the prime order of the production type-A group.
  TransparentGroup();
  // `order` must be prime; checked probabilistically.
  explicit TransparentGroup(mpz_class order);

  const GroupDescriptor& descriptor() const { return descriptor_; }
  const ScalarField& scalars() const { return field_; }

  G0 generator() const { return G0{1}; }
  G0 element(const mpz_class& log) const;
  G1 gt_element(const mpz_class& log) const;

  G0 mul(const G0& a, const G0& b) const;
  G0 exp(const G0& a, const Scalar& k) const;
  G1 pair(const G0& a, const G0& b) const;

  G1 gt_one() const { return G1{0}; }
  G1 gt_mul(const G1& a, const G1& b) const;
  G1 gt_div(const G1& a, const G1& b) const;
  G1 gt_exp(const G1& a, const Scalar& k) const;
  G1 random_gt(RandomSource& rng) const;

  // SHA-256(label) read as a big-endian integer, reduced mod p.
  G0 hash_to_g0(std::string_view label) const;

  Bytes encode(const G0& a) const;
  Bytes encode(const G1& a) const;
  G0 decode_g0(std::span<const std::uint8_t> bytes) const;
  G1 decode_g1(std::span<const std::uint8_t> bytes) const;

 private:
  mpz_class reduce(const mpz_class& v) const;
  mpz_class decode_log(std::span<const std::uint8_t> bytes) const;

  ScalarField field_;
  GroupDescriptor descriptor_;
};

static_assert(PairingGroup<TransparentGroup>);

}  // namespace scpabe

#endif  // SCPABE_TRANSPARENT_GROUP_H_
