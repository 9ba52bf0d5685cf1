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

#include "scpabe/benchmark_fixtures.h"

#include <stdexcept>
#include <string>

#include "scpabe/access_tree.h"

namespace scpabe {

PolicyLattice layered_fixture(const Dimensions& dims, std::size_t base_size) {
  if (base_size == 0) throw std::invalid_argument("base policy must be nonempty");
  AttributeSet base;
  for (std::size_t i = 1; i <= base_size; ++i) base.insert("base-" + std::to_string(i));
  const LayerCoord origin = dims.base();
  const auto coords = dims.coords();
  std::map<LayerCoord, AccessPolicy> layers;
  for (const auto& c : coords) {
    AttributeSet attrs = base;
    for (const auto& lower : coords) {
      if (lower != origin && lower.dominated_by(c)) {
        attrs.insert("layer-" + lower.file_tag());
      }
    }
    layers.emplace(c, AccessPolicy(std::move(attrs)));
  }
  return PolicyLattice(dims, std::move(layers));
}

PolicyLattice fixture_with_leaves(const Dimensions& dims,
                                  std::size_t target_leaves) {
  // Each base attribute contributes exactly one leaf.
  const std::size_t minimum = build_tree(layered_fixture(dims, 1)).leaf_count();
  std::size_t base = target_leaves > minimum ? target_leaves - minimum + 1 : 1;
  return layered_fixture(dims, base);
}

std::size_t naive_leaf_count(const PolicyLattice& lat) {
  std::size_t total = 0;
  for (const auto& [c, p] : lat.policies()) total += p.size();
  return total;
}

LinearFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("fit_line: need >= 2 paired samples");
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("fit_line: x values are all equal");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

}  // namespace scpabe
