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

#ifndef SCPABE_TYPE_A_GROUP_H_
#define SCPABE_TYPE_A_GROUP_H_

#include <span>
#include <string_view>

#include <gmpxx.h>

#include "scpabe/group.h"

namespace scpabe {

// Parameters of a type-A curve E: y^2 = x^3 + x over F_q with q = 3 mod 4.
// E is supersingular with #E(F_q) = q + 1 = h * r and embedding degree 2.
struct TypeAParams {
  mpz_class q;
  mpz_class r;
  mpz_class h;

  // 160-bit prime order r = 2^159 + 2^107 + 1 over a 512-bit field; the
  // widely deployed PBC "a.param" set.
  static const TypeAParams& standard();
};

// Production symmetric pairing. G0 is the order-r subgroup of E(F_q); G1 is
// the order-r subgroup of F_{q^2}^*. The pairing is the reduced Tate pairing
// composed with the distortion map (x, y) -> (-x, i*y), which makes it
// symmetric and non-degenerate on G0 x G0.
class TypeAGroup {
 public:
  // Affine point; `infinity` marks the identity.
  struct G0 {
    mpz_class x;
    mpz_class y;
    bool infinity = true;

    friend bool operator==(const G0& a, const G0& b) {
      if (a.infinity || b.infinity) return a.infinity == b.infinity;
      return a.x == b.x && a.y == b.y;
    }
  };
  // re + im * i in F_q[i]/(i^2 + 1).
  struct G1 {
    mpz_class re;
    mpz_class im;

    friend bool operator==(const G1& a, const G1& b) {
      return a.re == b.re && a.im == b.im;
    }
  };

  TypeAGroup();
  explicit TypeAGroup(TypeAParams params);

  const GroupDescriptor& descriptor() const { return descriptor_; }
  const ScalarField& scalars() const { return field_; }
  const TypeAParams& params() const { return params_; }

  G0 generator() const { return generator_; }
  G0 identity() const { return G0{}; }
  bool on_curve(const G0& a) const;

  G0 mul(const G0& a, const G0& b) const;
  G0 exp(const G0& a, const Scalar& k) const;
  G1 pair(const G0& a, const G0& b) const;

  G1 gt_one() const { return G1{1, 0}; }
  G1 gt_mul(const G1& a, const G1& b) const;
  G1 gt_div(const G1& a, const G1& b) const;
  G1 gt_exp(const G1& a, const Scalar& k) const;
  G1 random_gt(RandomSource& rng) const;

  // Try-and-increment map of SHA-256 output onto E(F_q), then cofactor
  // clearing into G0.
  G0 hash_to_g0(std::string_view label) const;

  // G0: x || y, each a fixed-width big-endian field element; the identity is
  // all zero bytes. G1: re || im.
  Bytes encode(const G0& a) const;
  Bytes encode(const G1& a) const;
  // Rejects wrong lengths, unreduced coordinates, points off the curve or
  // outside the order-r subgroup.
  G0 decode_g0(std::span<const std::uint8_t> bytes) const;
  G1 decode_g1(std::span<const std::uint8_t> bytes) const;

 private:
  G0 multiply(const G0& a, const mpz_class& k) const;
  G1 gt_pow(const G1& a, const mpz_class& k) const;
  G0 map_to_g0(std::string_view domain, std::string_view label) const;

  TypeAParams params_;
  ScalarField field_;
  std::size_t coord_bytes_;
  G0 generator_;
  G1 gt_generator_;
  GroupDescriptor descriptor_;
};

static_assert(PairingGroup<TypeAGroup>);

}  // namespace scpabe

#endif  // SCPABE_TYPE_A_GROUP_H_
