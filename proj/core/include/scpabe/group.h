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

#ifndef SCPABE_GROUP_H_
#define SCPABE_GROUP_H_

#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "scpabe/codec.h"
#include "scpabe/random.h"
#include "scpabe/scalar.h"

namespace scpabe {

enum class ProviderId { kTypeA, kTransparent };

std::string_view provider_name(ProviderId id);
// Throws ValidationError for unknown names.
ProviderId parse_provider(std::string_view name);

// Identifies one concrete instantiation of the bilinear group. Embedded in
// every serialized key and ciphertext; objects whose descriptors differ are
// never combined.
struct GroupDescriptor {
  ProviderId provider = ProviderId::kTypeA;
  mpz_class order;
  // Provider-specific parameters in canonical text form.
  std::string parameters;
  // Canonical G0 encoding of the generator g.
  Bytes generator;
  std::size_t scalar_bytes = 0;
  std::size_t g0_bytes = 0;
  std::size_t g1_bytes = 0;

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.provider == b.provider && a.order == b.order &&
           a.parameters == b.parameters && a.generator == b.generator &&
           a.scalar_bytes == b.scalar_bytes && a.g0_bytes == b.g0_bytes &&
           a.g1_bytes == b.g1_bytes;
  }
};

// Throws ProviderMismatchError naming `what` when the descriptors differ.
void require_same_group(const GroupDescriptor& expected,
                        const GroupDescriptor& actual, std::string_view what);

// A symmetric bilinear map e: G0 x G0 -> G1 of prime order p, with a hash
// into G0 and canonical fixed-width encodings. G0 is written
// multiplicatively (mul/exp); so is G1 (gt_mul/gt_exp).
template <class G>
concept PairingGroup =
    std::copy_constructible<typename G::G0> &&
    std::copy_constructible<typename G::G1> &&
    std::equality_comparable<typename G::G0> &&
    std::equality_comparable<typename G::G1> &&
    requires(const G& grp, const typename G::G0& a, const typename G::G1& t,
             const Scalar& k, std::string_view label,
             std::span<const std::uint8_t> bytes, RandomSource& rng) {
      { grp.descriptor() } -> std::same_as<const GroupDescriptor&>;
      { grp.scalars() } -> std::same_as<const ScalarField&>;
      { grp.generator() } -> std::convertible_to<typename G::G0>;
      { grp.mul(a, a) } -> std::same_as<typename G::G0>;
      { grp.exp(a, k) } -> std::same_as<typename G::G0>;
      { grp.pair(a, a) } -> std::same_as<typename G::G1>;
      { grp.gt_one() } -> std::convertible_to<typename G::G1>;
      { grp.gt_mul(t, t) } -> std::same_as<typename G::G1>;
      { grp.gt_div(t, t) } -> std::same_as<typename G::G1>;
      { grp.gt_exp(t, k) } -> std::same_as<typename G::G1>;
      { grp.random_gt(rng) } -> std::same_as<typename G::G1>;
      { grp.hash_to_g0(label) } -> std::same_as<typename G::G0>;
      { grp.encode(a) } -> std::same_as<Bytes>;
      { grp.encode(t) } -> std::same_as<Bytes>;
      { grp.decode_g0(bytes) } -> std::same_as<typename G::G0>;
      { grp.decode_g1(bytes) } -> std::same_as<typename G::G1>;
    };

}  // namespace scpabe

#endif  // SCPABE_GROUP_H_
