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

#include "scpabe/transparent_group.h"

#include <utility>

#include "scpabe/errors.h"
#include "scpabe/type_a_group.h"

namespace scpabe {

TransparentGroup::TransparentGroup()
    : TransparentGroup(TypeAParams::standard().r) {}

TransparentGroup::TransparentGroup(mpz_class order) : field_(order) {
  if (mpz_probab_prime_p(order.get_mpz_t(), 40) == 0) {
    throw ValidationError("transparent group order must be prime");
  }
  descriptor_.provider = ProviderId::kTransparent;
  descriptor_.order = order;
  descriptor_.parameters = "discrete-log representation";
  descriptor_.scalar_bytes = field_.byte_length();
  descriptor_.g0_bytes = field_.byte_length();
  descriptor_.g1_bytes = field_.byte_length();
  descriptor_.generator = encode(generator());
}

mpz_class TransparentGroup::reduce(const mpz_class& v) const {
  return field_.from(v).value;
}

TransparentGroup::G0 TransparentGroup::element(const mpz_class& log) const {
  return G0{reduce(log)};
}

TransparentGroup::G1 TransparentGroup::gt_element(const mpz_class& log) const {
  return G1{reduce(log)};
}

TransparentGroup::G0 TransparentGroup::mul(const G0& a, const G0& b) const {
  return G0{reduce(a.log + b.log)};
}

TransparentGroup::G0 TransparentGroup::exp(const G0& a, const Scalar& k) const {
  return G0{reduce(a.log * k.value)};
}

TransparentGroup::G1 TransparentGroup::pair(const G0& a, const G0& b) const {
  return G1{reduce(a.log * b.log)};
}

TransparentGroup::G1 TransparentGroup::gt_mul(const G1& a, const G1& b) const {
  return G1{reduce(a.log + b.log)};
}

TransparentGroup::G1 TransparentGroup::gt_div(const G1& a, const G1& b) const {
  return G1{reduce(a.log - b.log)};
}

TransparentGroup::G1 TransparentGroup::gt_exp(const G1& a,
                                              const Scalar& k) const {
  return G1{reduce(a.log * k.value)};
}

TransparentGroup::G1 TransparentGroup::random_gt(RandomSource& rng) const {
  return G1{field_.random(rng).value};
}

TransparentGroup::G0 TransparentGroup::hash_to_g0(std::string_view label) const {
  if (label.empty()) throw ValidationError("hash_to_g0: empty label");
  auto digest = sha256(label);
  return G0{reduce(from_be(digest))};
}

Bytes TransparentGroup::encode(const G0& a) const {
  return to_fixed_be(a.log, field_.byte_length());
}

Bytes TransparentGroup::encode(const G1& a) const {
  return to_fixed_be(a.log, field_.byte_length());
}

mpz_class TransparentGroup::decode_log(std::span<const std::uint8_t> bytes) const {
  if (bytes.size() != field_.byte_length()) {
    throw FormatError("transparent element: wrong encoding length");
  }
  mpz_class v = from_be(bytes);
  if (v >= field_.order()) {
    throw FormatError("transparent element: non-canonical encoding");
  }
  return v;
}

TransparentGroup::G0 TransparentGroup::decode_g0(
    std::span<const std::uint8_t> bytes) const {
  return G0{decode_log(bytes)};
}

TransparentGroup::G1 TransparentGroup::decode_g1(
    std::span<const std::uint8_t> bytes) const {
  return G1{decode_log(bytes)};
}

}  // namespace scpabe
