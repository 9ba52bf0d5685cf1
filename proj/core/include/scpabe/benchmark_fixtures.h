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

#ifndef SCPABE_BENCHMARK_FIXTURES_H_
#define SCPABE_BENCHMARK_FIXTURES_H_

#include <cstddef>
#include <span>

#include "scpabe/policy_lattice.h"

namespace scpabe {

// Lattice whose base policy holds `base_size` shared attributes
// ("base-1", ...), and where every other layer c additionally requires one
// fresh attribute "layer-<c>" per non-base layer dominated by c (itself
// included). Always passes validate_lattice.
PolicyLattice layered_fixture(const Dimensions& dims, std::size_t base_size);

// layered_fixture() with the base size chosen so that the access tree has
// `target_leaves` leaves, or the smallest achievable count if the target is
// below the structural minimum for `dims`.
PolicyLattice fixture_with_leaves(const Dimensions& dims,
                                  std::size_t target_leaves);

// Leaves needed to encrypt each layer separately under plain CP-ABE:
// the sum of |P_c| over all layers.
std::size_t naive_leaf_count(const PolicyLattice& lat);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  // Coefficient of determination.
  double r2 = 0;
};

// Ordinary least squares y = slope * x + intercept. Requires at least two
// points with distinct x.
LinearFit fit_line(std::span<const double> xs, std::span<const double> ys);

}  // namespace scpabe

#endif  // SCPABE_BENCHMARK_FIXTURES_H_
