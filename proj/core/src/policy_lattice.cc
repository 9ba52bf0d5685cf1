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

#include "scpabe/policy_lattice.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "scpabe/errors.h"

namespace scpabe {

namespace {

std::vector<int> parse_ints(std::string_view text, char sep, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(sep, pos);
    std::string_view part = text.substr(pos, end == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : end - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw ValidationError(std::string("malformed ") + what + " '" +
                            std::string(text) + "'");
    }
    out.push_back(v);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::string join(const AttributeSet& attrs) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : attrs) {
    if (!first) out += ", ";
    out += a;
    first = false;
  }
  return out + "}";
}

}  // namespace

bool is_reserved(std::string_view label) {
  return label.substr(0, kReservedPrefix.size()) == kReservedPrefix;
}

AttributeSet unite(const AttributeSet& a, const AttributeSet& b) {
  AttributeSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

AttributeSet intersect(const AttributeSet& a, const AttributeSet& b) {
  AttributeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

AttributeSet subtract(const AttributeSet& a, const AttributeSet& b) {
  AttributeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

bool is_subset(const AttributeSet& sub, const AttributeSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

int LayerCoord::distance() const {
  int d = 0;
  for (int c : coords_) d += c - 1;
  return d;
}

bool LayerCoord::dominated_by(const LayerCoord& other) const {
  if (other.rank() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

std::string LayerCoord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out;
}

std::string LayerCoord::file_tag() const {
  std::string out = to_string();
  std::replace(out.begin(), out.end(), ',', '_');
  return out;
}

LayerCoord LayerCoord::parse(std::string_view text) {
  return LayerCoord(parse_ints(text, ',', "layer coordinate"));
}

Dimensions::Dimensions(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw ValidationError("dimensions: need at least one axis");
  for (int n : sizes_) {
    if (n < 1) throw ValidationError("dimensions: every axis needs >= 1 layer");
  }
}

std::size_t Dimensions::layer_count() const {
  return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{1},
                         [](std::size_t acc, int n) { return acc * n; });
}

int Dimensions::group_count() const {
  int d = 1;
  for (int n : sizes_) d += n - 1;
  return d;
}

bool Dimensions::contains(const LayerCoord& c) const {
  if (c.rank() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (c[i] < 1 || c[i] > sizes_[i]) return false;
  }
  return true;
}

LayerCoord Dimensions::base() const {
  return LayerCoord(std::vector<int>(rank(), 1));
}

LayerCoord Dimensions::top() const { return LayerCoord(sizes_); }

std::vector<LayerCoord> Dimensions::coords() const {
  std::vector<LayerCoord> out;
  out.reserve(layer_count());
  std::vector<int> cur(rank(), 1);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = rank();
    while (i > 0) {
      --i;
      if (cur[i] < sizes_[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 1;
      if (i == 0) return out;
    }
  }
}

std::string Dimensions::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(sizes_[i]);
  }
  return out;
}

Dimensions Dimensions::parse(std::string_view text) {
  return Dimensions(parse_ints(text, 'x', "dimensions"));
}

AccessPolicy::AccessPolicy(AttributeSet attrs) : attrs_(std::move(attrs)) {
  for (const auto& a : attrs_) {
    if (a.empty()) throw ValidationError("attribute labels must be nonempty");
    if (is_reserved(a)) {
      throw ValidationError("attribute '" + a + "' uses the reserved prefix '" +
                            std::string(kReservedPrefix) + "'");
    }
  }
}

PolicyLattice::PolicyLattice(Dimensions dims,
                             std::map<LayerCoord, AccessPolicy> policies)
    : dims_(std::move(dims)), policies_(std::move(policies)) {}

const AccessPolicy& PolicyLattice::policy(const LayerCoord& c) const {
  auto it = policies_.find(c);
  if (it == policies_.end()) {
    throw ValidationError("no policy for layer (" + c.to_string() + ")");
  }
  return it->second;
}

AttributeSet PolicyLattice::alphabet() const {
  AttributeSet out;
  for (const auto& [c, p] : policies_) {
    out.insert(p.attributes().begin(), p.attributes().end());
  }
  return out;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (const auto& v : violations) {
    out << "layer (" << v.at.to_string() << ")";
    if (v.other) out << " vs (" << v.other->to_string() << ")";
    out << ": " << v.detail << '\n';
  }
  return out.str();
}

ValidationReport validate_lattice(const PolicyLattice& lat) {
  ValidationReport report;
  const Dimensions& dims = lat.dims();
  for (const auto& [c, p] : lat.policies()) {
    if (!dims.contains(c)) {
      report.violations.push_back({Violation::Kind::kOutOfRange, c, std::nullopt,
                                   "coordinate outside " + dims.to_string()});
    }
  }
  const auto coords = dims.coords();
  bool complete = true;
  for (const auto& c : coords) {
    if (!lat.policies().contains(c)) {
      complete = false;
      report.violations.push_back({Violation::Kind::kMissingLayer, c,
                                   std::nullopt, "no policy for this layer"});
    }
  }
  if (!complete) return report;

  if (lat.policy(dims.base()).empty()) {
    report.violations.push_back({Violation::Kind::kEmptyBase, dims.base(),
                                 std::nullopt, "base policy is empty"});
  }
  for (const auto& lo : coords) {
    for (const auto& hi : coords) {
      if (lo == hi || !lo.dominated_by(hi)) continue;
      AttributeSet missing = subtract(lat.policy(lo).attributes(),
                                      lat.policy(hi).attributes());
      if (!missing.empty()) {
        report.violations.push_back(
            {Violation::Kind::kNotContained, lo, hi,
             "dominating layer lacks " + join(missing)});
      }
    }
  }
  for (const auto& c : coords) {
    if (c == dims.base()) continue;
    if (novel_attributes(lat, c).empty()) {
      report.violations.push_back(
          {Violation::Kind::kNoRefinement, c, std::nullopt,
           "policy adds no attribute beyond its referees"});
    }
  }
  return report;
}

void require_valid(const PolicyLattice& lat) {
  auto report = validate_lattice(lat);
  if (!report.ok()) {
    throw ValidationError("invalid policy lattice:\n" + report.to_string());
  }
}

std::vector<std::vector<LayerCoord>> group_partition(const Dimensions& dims) {
  std::vector<std::vector<LayerCoord>> groups(
      static_cast<std::size_t>(dims.group_count()));
  for (auto& c : dims.coords()) {
    groups[static_cast<std::size_t>(c.distance())].push_back(std::move(c));
  }
  return groups;
}

std::vector<LayerCoord> referees(const LayerCoord& c) {
  std::vector<LayerCoord> out;
  for (std::size_t i = 0; i < c.rank(); ++i) {
    if (c[i] > 1) {
      std::vector<int> v = c.values();
      --v[i];
      out.emplace_back(std::move(v));
    }
  }
  if (out.empty()) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

AttributeSet common_policy(const PolicyLattice& lat, int group) {
  auto groups = group_partition(lat.dims());
  if (group < 1 || group > static_cast<int>(groups.size())) {
    throw ValidationError("group index out of range");
  }
  const auto& members = groups[static_cast<std::size_t>(group - 1)];
  AttributeSet out = lat.policy(members.front()).attributes();
  for (const auto& c : members) out = intersect(out, lat.policy(c).attributes());
  return out;
}

AttributeSet union_policy(const PolicyLattice& lat, int group) {
  auto groups = group_partition(lat.dims());
  if (group < 1 || group > static_cast<int>(groups.size())) {
    throw ValidationError("group index out of range");
  }
  AttributeSet out;
  for (const auto& c : groups[static_cast<std::size_t>(group - 1)]) {
    out = unite(out, lat.policy(c).attributes());
  }
  return out;
}

AttributeSet novel_attributes(const PolicyLattice& lat, const LayerCoord& c) {
  if (c == lat.dims().base()) return {};
  AttributeSet covered;
  for (const auto& r : referees(c)) {
    covered = unite(covered, lat.policy(r).attributes());
  }
  return subtract(lat.policy(c).attributes(), covered);
}

}  // namespace scpabe
