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

#ifndef SCPABE_POLICY_LATTICE_H_
#define SCPABE_POLICY_LATTICE_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scpabe {

using Attribute = std::string;
// std::string orders bytewise (char_traits<char>::lt compares as unsigned
// char), which is the canonical attribute order everywhere.
using AttributeSet = std::set<Attribute>;

// Labels starting with this prefix are reserved for structural attributes.
inline constexpr std::string_view kReservedPrefix = "!";

bool is_reserved(std::string_view label);

AttributeSet unite(const AttributeSet& a, const AttributeSet& b);
AttributeSet intersect(const AttributeSet& a, const AttributeSet& b);
AttributeSet subtract(const AttributeSet& a, const AttributeSet& b);
bool is_subset(const AttributeSet& sub, const AttributeSet& super);

// A 1-based position in the layer grid. Ordered lexicographically.
class LayerCoord {
 public:
  LayerCoord() = default;
  explicit LayerCoord(std::vector<int> coords) : coords_(std::move(coords)) {}
  LayerCoord(std::initializer_list<int> coords) : coords_(coords) {}

  std::size_t rank() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<int>& values() const { return coords_; }

  // L1 distance to the base layer (1, ..., 1).
  int distance() const;
  // Componentwise <=.
  bool dominated_by(const LayerCoord& other) const;

  // "1,2,1"
  std::string to_string() const;
  // "1_2_1", used in file names.
  std::string file_tag() const;
  // Accepts the to_string() form. Throws ValidationError.
  static LayerCoord parse(std::string_view text);

  auto operator<=>(const LayerCoord&) const = default;

 private:
  std::vector<int> coords_;
};

// Layer counts (n_1, ..., n_k) per scalability dimension.
class Dimensions {
 public:
  // Throws ValidationError unless k >= 1 and every n_i >= 1.
  explicit Dimensions(std::vector<int> sizes);
  Dimensions(std::initializer_list<int> sizes)
      : Dimensions(std::vector<int>(sizes)) {}

  std::size_t rank() const { return sizes_.size(); }
  int size(std::size_t i) const { return sizes_[i]; }
  const std::vector<int>& sizes() const { return sizes_; }
  std::size_t layer_count() const;
  // D = sum(n_i - 1) + 1.
  int group_count() const;

  bool contains(const LayerCoord& c) const;
  LayerCoord base() const;
  LayerCoord top() const;
  // Every coordinate of the box in lexicographic order.
  std::vector<LayerCoord> coords() const;

  // "2x3x2"
  std::string to_string() const;
  static Dimensions parse(std::string_view text);

  friend bool operator==(const Dimensions&, const Dimensions&) = default;

 private:
  std::vector<int> sizes_;
};

// Conjunction of attribute labels. Labels are nonempty and never carry the
// reserved prefix.
class AccessPolicy {
 public:
  AccessPolicy() = default;
  // Throws ValidationError on empty or reserved labels.
  explicit AccessPolicy(AttributeSet attrs);
  AccessPolicy(std::initializer_list<Attribute> attrs)
      : AccessPolicy(AttributeSet(attrs)) {}

  const AttributeSet& attributes() const { return attrs_; }
  std::size_t size() const { return attrs_.size(); }
  bool empty() const { return attrs_.empty(); }
  bool satisfied_by(const AttributeSet& held) const {
    return is_subset(attrs_, held);
  }

  friend bool operator==(const AccessPolicy&, const AccessPolicy&) = default;

 private:
  AttributeSet attrs_;
};

// Per-layer policies over a layer grid.
class PolicyLattice {
 public:
  PolicyLattice(Dimensions dims, std::map<LayerCoord, AccessPolicy> policies);

  const Dimensions& dims() const { return dims_; }
  const std::map<LayerCoord, AccessPolicy>& policies() const { return policies_; }
  // Throws ValidationError when the coordinate has no policy.
  const AccessPolicy& policy(const LayerCoord& c) const;
  // Union of every layer's attributes.
  AttributeSet alphabet() const;

 private:
  Dimensions dims_;
  std::map<LayerCoord, AccessPolicy> policies_;
};

struct Violation {
  enum class Kind {
    kMissingLayer,
    kOutOfRange,
    kEmptyBase,
    kNotContained,
    kNoRefinement,
  };
  Kind kind;
  LayerCoord at;
  // For kNotContained: the dominating layer whose policy misses attributes.
  std::optional<LayerCoord> other;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Checks that (a) P_c is a subset of P_d whenever c <= d componentwise,
// (b) the base policy is nonempty, and (c) every non-base layer adds at least
// one attribute beyond the union of its referees' policies. Every offending
// pair or coordinate is reported.
ValidationReport validate_lattice(const PolicyLattice& lat);

// Throws ValidationError carrying the report text if validation fails.
void require_valid(const PolicyLattice& lat);

// G_1 ... G_D by L1 distance from the base; members in lexicographic order.
std::vector<std::vector<LayerCoord>> group_partition(const Dimensions& dims);

// 1-based group index of a coordinate.
inline int group_of(const LayerCoord& c) { return c.distance() + 1; }

// Immediate predecessors of c (one coordinate decremented); the base is its
// own referee.
std::vector<LayerCoord> referees(const LayerCoord& c);

// I_d: intersection of the member policies of group d (1-based).
AttributeSet common_policy(const PolicyLattice& lat, int group);
// U_d: union of the member policies of group d.
AttributeSet union_policy(const PolicyLattice& lat, int group);

// P_c minus the union of the referees' policies; empty for the base.
AttributeSet novel_attributes(const PolicyLattice& lat, const LayerCoord& c);

}  // namespace scpabe

#endif  // SCPABE_POLICY_LATTICE_H_
