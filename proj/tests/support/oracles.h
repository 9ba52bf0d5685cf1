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

#ifndef SCPABE_TESTS_SUPPORT_ORACLES_H_
#define SCPABE_TESTS_SUPPORT_ORACLES_H_

#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "scpabe/policy_lattice.h"

// Independent reference computations. None of these call into the tree,
// scheme or vault code they are used to check.
namespace scpabe::testing {

// Random lattice that satisfies the containment and novelty rules: layers
// are filled in lexicographic order, each taking the union of its
// predecessors' policies, one attribute outside that union and a few random
// extras. The alphabet has at most `max_alphabet` single-letter labels.
PolicyLattice random_lattice(const Dimensions& dims, std::size_t max_alphabet,
                             std::mt19937_64& gen);

// {c : P_c is a subset of held}.
// Random 2x3 lattice in which P_13 opens exactly {11, 12, 13} and P_21
// opens exactly {11, 21}: holders of those policies are entitled to nothing
// in {22, 23} on their own.
PolicyLattice cross_group_lattice(std::size_t max_alphabet, std::mt19937_64& gen);

std::set<LayerCoord> containment_oracle(const PolicyLattice& lat,
                                        const AttributeSet& held);

// Coordinates of the box by direct nested enumeration, bucketed by
// coordinate sum.
std::vector<std::vector<LayerCoord>> brute_force_groups(const Dimensions& dims);

// Expected SCP-ABE leaf count: P_base, P_c minus P_base per non-base layer,
// one uniqueness leaf per non-base layer, D-1 escapes, and the increments
// I_{d+1} minus I_d for d = 1..D-2.
std::size_t expected_leaf_count(const PolicyLattice& lat);

// q(x) mod p for q given by ascending coefficients.
mpz_class eval_poly(const std::vector<mpz_class>& coeffs, const mpz_class& x,
                    const mpz_class& p);

// Every subset of `universe` when it has at most max_bits elements, else
// `samples` random subsets; half of those are grown from a random anchor
// (typically a layer policy) so that boundary cases are well covered.
std::vector<AttributeSet> subsets_to_check(const AttributeSet& universe,
                                           std::size_t max_bits,
                                           std::size_t samples,
                                           std::mt19937_64& gen,
                                           const std::vector<AttributeSet>& anchors = {});

}  // namespace scpabe::testing

#endif  // SCPABE_TESTS_SUPPORT_ORACLES_H_
