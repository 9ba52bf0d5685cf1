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

#ifndef SCPABE_COST_PROBE_H_
#define SCPABE_COST_PROBE_H_

#include <algorithm>
#include <ctime>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scpabe/access_tree.h"
#include "scpabe/benchmark_fixtures.h"
#include "scpabe/random.h"
#include "scpabe/scheme.h"

namespace scpabe {

// Processor time of one encrypt / keygen / decrypt on a lattice, in
// milliseconds. keygen and decrypt use a key over the full alphabet, so every
// layer is recovered.
struct CostSample {
  std::size_t leaves = 0;
  std::size_t naive_leaves = 0;
  double encrypt_ms = 0;
  double keygen_ms = 0;
  double decrypt_ms = 0;
};

namespace detail {

// Process CPU time rather than wall time, so that scheduler preemption on a
// loaded machine is not billed to the operation.
template <class F>
double cpu_ms(F&& f) {
  const std::clock_t start = std::clock();
  f();
  const std::clock_t stop = std::clock();
  return 1000.0 * static_cast<double>(stop - start) / CLOCKS_PER_SEC;
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace detail

// One timed encrypt, keygen and decrypt.
template <PairingGroup G>
CostSample measure_costs(const Scheme<G>& scheme, const typename Scheme<G>::Keys& keys,
                         const PolicyLattice& lat, RandomSource& rng) {
  const G& grp = scheme.group();
  std::map<LayerCoord, typename G::G1> messages;
  for (const auto& c : lat.dims().coords()) messages.emplace(c, grp.random_gt(rng));

  CostSample out;
  out.naive_leaves = naive_leaf_count(lat);
  std::optional<Ciphertext<G>> ct;
  out.encrypt_ms =
      detail::cpu_ms([&] { ct.emplace(scheme.encrypt(keys.pk, lat, messages, rng)); });
  out.leaves = ct->tree.leaf_count();

  std::optional<UserKey<G>> uk;
  out.keygen_ms = detail::cpu_ms([&] {
    uk.emplace(scheme.keygen(keys.pk, keys.mk, lat.alphabet(), lat.dims(), rng));
  });

  std::size_t recovered = 0;
  out.decrypt_ms =
      detail::cpu_ms([&] { recovered = scheme.decrypt(keys.pk, *uk, *ct).size(); });
  if (recovered != lat.dims().layer_count()) {
    throw std::logic_error("measure_costs: full key failed to open every layer");
  }
  return out;
}

// Per-lattice medians over `rounds` passes. Each pass visits every lattice
// once, so slow periods spread across all points instead of skewing one.
template <PairingGroup G>
std::vector<CostSample> cost_curve(const Scheme<G>& scheme,
                                   const typename Scheme<G>::Keys& keys,
                                   const std::vector<PolicyLattice>& lattices, int rounds,
                                   RandomSource& rng) {
  if (rounds < 1) throw std::invalid_argument("cost_curve: rounds must be >= 1");
  std::vector<std::vector<CostSample>> runs(lattices.size());
  for (int r = 0; r < rounds; ++r) {
    for (std::size_t i = 0; i < lattices.size(); ++i) {
      runs[i].push_back(measure_costs(scheme, keys, lattices[i], rng));
    }
  }
  std::vector<CostSample> out;
  for (const auto& samples : runs) {
    CostSample m = samples.front();
    auto pick = [&](double CostSample::*field) {
      std::vector<double> v;
      for (const auto& s : samples) v.push_back(s.*field);
      return detail::median(std::move(v));
    };
    m.encrypt_ms = pick(&CostSample::encrypt_ms);
    m.keygen_ms = pick(&CostSample::keygen_ms);
    m.decrypt_ms = pick(&CostSample::decrypt_ms);
    out.push_back(m);
  }
  return out;
}

}  // namespace scpabe

#endif  // SCPABE_COST_PROBE_H_
