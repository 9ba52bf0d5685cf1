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

#ifndef SCPABE_ACCESS_TREE_H_
#define SCPABE_ACCESS_TREE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scpabe/policy_lattice.h"
#include "scpabe/random.h"
#include "scpabe/scalar.h"

namespace scpabe {

using NodeId = std::uint32_t;

struct TreeNode {
  NodeId id = 0;
  // 0 for leaves; otherwise k of a k-of-n threshold gate.
  std::uint32_t threshold = 0;
  std::vector<NodeId> children;
  // Set for leaves only.
  Attribute attribute;
  // 1-based position among the parent's children; 0 for the root.
  std::uint32_t index = 0;
  std::optional<NodeId> parent;
  // Set when this node is the key node R_c of layer c.
  std::optional<LayerCoord> key_for;

  bool is_leaf() const { return threshold == 0; }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

// "!grp:d", lets a key holder stop climbing at group d.
std::string escape_attribute(int group);
// "!key:c", the uniqueness leaf beside key node R_c.
std::string uniqueness_attribute(const LayerCoord& c);

struct StructuralAttributes {
  std::vector<Attribute> escapes;     // "!grp:1" ... "!grp:D-1"
  std::vector<Attribute> uniqueness;  // one per non-base layer, lexicographic

  AttributeSet all() const;
};

StructuralAttributes structural_attributes(const Dimensions& dims);

// Threshold-gate tree stored in preorder: node ids are preorder positions,
// the root has id 0 and every child id is larger than its parent's.
class AccessTree {
 public:
  // Checks structural invariants (preorder ids, thresholds, child indices,
  // exactly one key node per layer). Throws FormatError.
  AccessTree(Dimensions dims, std::vector<TreeNode> nodes);

  const Dimensions& dims() const { return dims_; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(NodeId id) const { return nodes_.at(id); }
  const TreeNode& root() const { return nodes_.front(); }
  const std::map<LayerCoord, NodeId>& key_nodes() const { return key_nodes_; }
  StructuralAttributes structural() const { return structural_attributes(dims_); }

  // Leaf ids in preorder.
  std::vector<NodeId> leaves() const;
  std::size_t leaf_count() const;

  // Per-node satisfaction under ordinary threshold semantics.
  std::vector<bool> evaluate(const AttributeSet& held) const;

  friend bool operator==(const AccessTree& a, const AccessTree& b) {
    return a.dims_ == b.dims_ && a.nodes_ == b.nodes_;
  }

 private:
  Dimensions dims_;
  std::vector<TreeNode> nodes_;
  std::map<LayerCoord, NodeId> key_nodes_;
};

// Builds the multi-layer access tree for a lattice that passes
// validate_lattice (throws ValidationError otherwise).
//
//   R_c    = AND over P_c \ P_base (key node of non-base layer c)
//   V_c    = AND(R_c, !key:c)
//   gate_d = 1-of-|G_d| over V_c, c in G_d          (2 <= d <= D-1)
//   Q_d    = AND over I_{d+1} \ I_d, omitted if empty (1 <= d <= D-2)
//   T_D    = V_top
//   T_d    = AND(AND(gate_d, OR(!grp:d, T_{d+1})), Q_{d-1})   (D-1 >= d >= 2)
//   root   = AND(R_base, OR(!grp:1, T_2)),  R_base = AND over P_base
//
// A single-layer lattice yields just R_base.
AccessTree build_tree(const PolicyLattice& lat);

// Layers c whose key node is satisfied by `held` and whose root path is
// satisfied without using an escape attribute below c's group.
std::set<LayerCoord> satisfied_key_nodes(const AccessTree& tree,
                                         const AttributeSet& held);

struct ShareAssignment {
  Scalar secret;
  // shares[id] = p_id(0).
  std::vector<Scalar> shares;
};

// Top-down polynomial sharing of `secret`: each gate with threshold k gets a
// random polynomial of degree k-1 through its own share, and child i
// receives its value at i.
ShareAssignment assign_shares(const AccessTree& tree, const ScalarField& field,
                              const Scalar& secret, RandomSource& rng);

// Lagrange basis coefficient for `index` over `indices`, evaluated at 0.
Scalar lagrange_at_zero(const ScalarField& field, std::uint32_t index,
                        const std::vector<std::uint32_t>& indices);

std::string render_text(const AccessTree& tree);
std::string render_dot(const AccessTree& tree);

nlohmann::json tree_to_json(const AccessTree& tree);
// Throws FormatError.
AccessTree tree_from_json(const nlohmann::json& j);

}  // namespace scpabe

#endif  // SCPABE_ACCESS_TREE_H_
