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

#include "scpabe/access_tree.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <utility>

#include "scpabe/errors.h"

namespace scpabe {

namespace {

struct ProtoNode {
  std::uint32_t threshold = 0;
  Attribute attribute;
  std::optional<LayerCoord> key_for;
  std::vector<ProtoNode> children;
};

ProtoNode leaf(Attribute a) {
  ProtoNode n;
  n.attribute = std::move(a);
  return n;
}

ProtoNode gate(std::uint32_t threshold, std::vector<ProtoNode> children) {
  ProtoNode n;
  n.threshold = threshold;
  n.children = std::move(children);
  return n;
}

ProtoNode and_gate(std::vector<ProtoNode> children) {
  auto k = static_cast<std::uint32_t>(children.size());
  return gate(k, std::move(children));
}

ProtoNode and_of(const AttributeSet& attrs) {
  std::vector<ProtoNode> leaves;
  for (const auto& a : attrs) leaves.push_back(leaf(a));
  return and_gate(std::move(leaves));
}

void flatten(ProtoNode&& proto, std::optional<NodeId> parent,
             std::uint32_t index, std::vector<TreeNode>& out) {
  TreeNode node;
  node.id = static_cast<NodeId>(out.size());
  node.threshold = proto.threshold;
  node.attribute = std::move(proto.attribute);
  node.index = index;
  node.parent = parent;
  node.key_for = std::move(proto.key_for);
  out.push_back(std::move(node));
  NodeId self = out.back().id;
  std::uint32_t child_index = 1;
  for (auto& child : proto.children) {
    NodeId child_id = static_cast<NodeId>(out.size());
    out[self].children.push_back(child_id);
    flatten(std::move(child), self, child_index++, out);
  }
}

int escape_group(const Attribute& a) {
  constexpr std::string_view kPrefix = "!grp:";
  if (a.rfind(kPrefix, 0) != 0) return 0;
  int group = 0;
  const char* first = a.data() + kPrefix.size();
  const char* last = a.data() + a.size();
  auto [ptr, ec] = std::from_chars(first, last, group);
  return ec == std::errc() && ptr == last ? group : 0;
}

}  // namespace

std::string escape_attribute(int group) {
  return "!grp:" + std::to_string(group);
}

std::string uniqueness_attribute(const LayerCoord& c) {
  return "!key:" + c.to_string();
}

AttributeSet StructuralAttributes::all() const {
  AttributeSet out(escapes.begin(), escapes.end());
  out.insert(uniqueness.begin(), uniqueness.end());
  return out;
}

StructuralAttributes structural_attributes(const Dimensions& dims) {
  StructuralAttributes out;
  for (int d = 1; d < dims.group_count(); ++d) {
    out.escapes.push_back(escape_attribute(d));
  }
  const LayerCoord base = dims.base();
  for (const auto& c : dims.coords()) {
    if (c != base) out.uniqueness.push_back(uniqueness_attribute(c));
  }
  return out;
}

AccessTree::AccessTree(Dimensions dims, std::vector<TreeNode> nodes)
    : dims_(std::move(dims)), nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw FormatError("access tree: no nodes");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const TreeNode& n = nodes_[i];
    if (n.id != i) throw FormatError("access tree: ids must be preorder positions");
    if (i == 0 ? (n.parent.has_value() || n.index != 0) : !n.parent.has_value()) {
      throw FormatError("access tree: only the root lacks a parent");
    }
    if (n.is_leaf()) {
      if (!n.children.empty() || n.attribute.empty()) {
        throw FormatError("access tree: malformed leaf");
      }
    } else {
      if (n.threshold > n.children.size() || !n.attribute.empty()) {
        throw FormatError("access tree: malformed gate");
      }
      for (std::size_t k = 0; k < n.children.size(); ++k) {
        NodeId c = n.children[k];
        if (c <= n.id || c >= nodes_.size() || nodes_[c].parent != n.id ||
            nodes_[c].index != k + 1) {
          throw FormatError("access tree: inconsistent child links");
        }
      }
    }
    if (n.key_for) {
      if (!dims_.contains(*n.key_for) || n.is_leaf() ||
          !key_nodes_.emplace(*n.key_for, n.id).second) {
        throw FormatError("access tree: invalid key node");
      }
    }
  }
  // Preorder: each subtree occupies a contiguous id range.
  std::vector<NodeId> end(nodes_.size());
  for (std::size_t i = nodes_.size(); i-- > 0;) {
    end[i] = nodes_[i].children.empty() ? static_cast<NodeId>(i + 1)
                                        : end[nodes_[i].children.back()];
    NodeId expect = static_cast<NodeId>(i + 1);
    for (NodeId c : nodes_[i].children) {
      if (c != expect) throw FormatError("access tree: not in preorder");
      expect = end[c];
    }
  }
  if (end[0] != nodes_.size()) throw FormatError("access tree: not in preorder");
  if (root().is_leaf() || root().threshold != root().children.size()) {
    throw FormatError("access tree: root must be an AND gate");
  }
  if (key_nodes_.size() != dims_.layer_count()) {
    throw FormatError("access tree: every layer needs exactly one key node");
  }
}

std::vector<NodeId> AccessTree::leaves() const {
  std::vector<NodeId> out;
  for (const auto& n : nodes_) {
    if (n.is_leaf()) out.push_back(n.id);
  }
  return out;
}

std::size_t AccessTree::leaf_count() const {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(), [](const TreeNode& n) { return n.is_leaf(); }));
}

std::vector<bool> AccessTree::evaluate(const AttributeSet& held) const {
  std::vector<bool> sat(nodes_.size(), false);
  for (std::size_t i = nodes_.size(); i-- > 0;) {
    const TreeNode& n = nodes_[i];
    if (n.is_leaf()) {
      sat[i] = held.contains(n.attribute);
    } else {
      std::uint32_t count = 0;
      for (NodeId c : n.children) count += sat[c] ? 1 : 0;
      sat[i] = count >= n.threshold;
    }
  }
  return sat;
}

AccessTree build_tree(const PolicyLattice& lat) {
  require_valid(lat);
  const Dimensions& dims = lat.dims();
  const int depth = dims.group_count();
  const LayerCoord base = dims.base();
  const AttributeSet& base_attrs = lat.policy(base).attributes();

  ProtoNode base_key = and_of(base_attrs);
  base_key.key_for = base;

  ProtoNode root;
  if (depth == 1) {
    root = std::move(base_key);
  } else {
    auto groups = group_partition(dims);
    auto v_gate = [&](const LayerCoord& c) {
      ProtoNode key = and_of(subtract(lat.policy(c).attributes(), base_attrs));
      key.key_for = c;
      std::vector<ProtoNode> kids;
      kids.push_back(std::move(key));
      kids.push_back(leaf(uniqueness_attribute(c)));
      return and_gate(std::move(kids));
    };
    std::vector<AttributeSet> common(static_cast<std::size_t>(depth) + 1);
    for (int d = 1; d <= depth; ++d) common[d] = common_policy(lat, d);

    ProtoNode upper = v_gate(dims.top());
    for (int d = depth - 1; d >= 2; --d) {
      std::vector<ProtoNode> members;
      for (const auto& c : groups[static_cast<std::size_t>(d - 1)]) {
        members.push_back(v_gate(c));
      }
      ProtoNode group_gate = gate(1, std::move(members));
      std::vector<ProtoNode> climb;
      climb.push_back(leaf(escape_attribute(d)));
      climb.push_back(std::move(upper));
      std::vector<ProtoNode> level;
      level.push_back(std::move(group_gate));
      level.push_back(gate(1, std::move(climb)));
      ProtoNode a = and_gate(std::move(level));
      AttributeSet increment = subtract(common[d], common[d - 1]);
      if (increment.empty()) {
        upper = std::move(a);
      } else {
        std::vector<ProtoNode> pair;
        pair.push_back(std::move(a));
        pair.push_back(and_of(increment));
        upper = and_gate(std::move(pair));
      }
    }
    std::vector<ProtoNode> climb;
    climb.push_back(leaf(escape_attribute(1)));
    climb.push_back(std::move(upper));
    std::vector<ProtoNode> top;
    top.push_back(std::move(base_key));
    top.push_back(gate(1, std::move(climb)));
    root = and_gate(std::move(top));
  }

  std::vector<TreeNode> nodes;
  flatten(std::move(root), std::nullopt, 0, nodes);
  return AccessTree(dims, std::move(nodes));
}

std::set<LayerCoord> satisfied_key_nodes(const AccessTree& tree,
                                         const AttributeSet& held) {
  std::set<LayerCoord> out;
  const std::vector<bool> sat = tree.evaluate(held);
  std::map<int, bool> root_ok;
  for (const auto& [coord, id] : tree.key_nodes()) {
    if (!sat[id]) continue;
    const int group = group_of(coord);
    auto it = root_ok.find(group);
    if (it == root_ok.end()) {
      AttributeSet restricted;
      for (const auto& a : held) {
        int g = escape_group(a);
        if (g == 0 || g >= group) restricted.insert(a);
      }
      it = root_ok.emplace(group, tree.evaluate(restricted)[0]).first;
    }
    if (it->second) out.insert(coord);
  }
  return out;
}

ShareAssignment assign_shares(const AccessTree& tree, const ScalarField& field,
                              const Scalar& secret, RandomSource& rng) {
  ShareAssignment out{secret, std::vector<Scalar>(tree.nodes().size())};
  out.shares[0] = secret;
  for (const auto& n : tree.nodes()) {
    if (n.is_leaf()) continue;
    // q(x) = share + c_1 x + ... + c_{k-1} x^{k-1}
    std::vector<Scalar> coeffs{out.shares[n.id]};
    for (std::uint32_t i = 1; i < n.threshold; ++i) {
      coeffs.push_back(field.random(rng));
    }
    for (NodeId c : n.children) {
      Scalar x = field.from_int(tree.node(c).index);
      Scalar acc = coeffs.back();
      for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        acc = field.add(field.mul(acc, x), coeffs[i]);
      }
      out.shares[c] = std::move(acc);
    }
  }
  return out;
}

Scalar lagrange_at_zero(const ScalarField& field, std::uint32_t index,
                        const std::vector<std::uint32_t>& indices) {
  Scalar num = field.one();
  Scalar den = field.one();
  const Scalar i = field.from_int(index);
  for (std::uint32_t j : indices) {
    if (j == index) continue;
    const Scalar sj = field.from_int(j);
    num = field.mul(num, sj);
    den = field.mul(den, field.sub(sj, i));
  }
  return field.mul(num, field.inverse(den));
}

std::string render_text(const AccessTree& tree) {
  std::ostringstream out;
  std::function<void(NodeId, int)> walk = [&](NodeId id, int depth) {
    const TreeNode& n = tree.node(id);
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ');
    if (n.is_leaf()) {
      out << n.attribute;
    } else if (n.threshold == n.children.size()) {
      out << "AND";
    } else if (n.threshold == 1) {
      out << "OR";
    } else {
      out << n.threshold << "-of-" << n.children.size();
    }
    if (n.key_for) out << "  [key (" << n.key_for->to_string() << ")]";
    out << '\n';
    for (NodeId c : n.children) walk(c, depth + 1);
  };
  walk(0, 0);
  return out.str();
}

std::string render_dot(const AccessTree& tree) {
  std::ostringstream out;
  out << "digraph access_tree {\n";
  for (const auto& n : tree.nodes()) {
    out << "  n" << n.id << " [label=\"";
    if (n.is_leaf()) {
      out << n.attribute << "\", shape=box";
    } else {
      out << n.threshold << "/" << n.children.size();
      if (n.key_for) out << "\\nkey (" << n.key_for->to_string() << ")";
      out << "\"";
      if (n.key_for) out << ", style=bold, color=red";
    }
    out << "];\n";
  }
  for (const auto& n : tree.nodes()) {
    for (NodeId c : n.children) out << "  n" << n.id << " -> n" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json tree_to_json(const AccessTree& tree) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : tree.nodes()) {
    nlohmann::json j;
    j["id"] = n.id;
    if (n.is_leaf()) {
      j["kind"] = "leaf";
      j["attribute"] = n.attribute;
    } else {
      j["kind"] = "gate";
      j["threshold"] = n.threshold;
      j["children"] = n.children;
    }
    if (n.key_for) j["key"] = n.key_for->to_string();
    nodes.push_back(std::move(j));
  }
  return nlohmann::json{{"dims", tree.dims().sizes()}, {"nodes", std::move(nodes)}};
}

AccessTree tree_from_json(const nlohmann::json& j) {
  try {
    Dimensions dims(j.at("dims").get<std::vector<int>>());
    std::vector<TreeNode> nodes;
    for (const auto& jn : j.at("nodes")) {
      TreeNode n;
      n.id = jn.at("id").get<NodeId>();
      const auto kind = jn.at("kind").get<std::string>();
      if (kind == "leaf") {
        n.attribute = jn.at("attribute").get<std::string>();
        if (n.attribute.empty()) throw FormatError("access tree: empty leaf label");
      } else if (kind == "gate") {
        n.threshold = jn.at("threshold").get<std::uint32_t>();
        n.children = jn.at("children").get<std::vector<NodeId>>();
        if (n.threshold == 0) throw FormatError("access tree: zero threshold");
      } else {
        throw FormatError("access tree: unknown node kind '" + kind + "'");
      }
      if (jn.contains("key")) n.key_for = LayerCoord::parse(jn.at("key").get<std::string>());
      nodes.push_back(std::move(n));
    }
    // Parent links and indices follow from the child lists.
    for (const auto& n : nodes) {
      for (std::size_t k = 0; k < n.children.size(); ++k) {
        NodeId c = n.children[k];
        if (c >= nodes.size() || nodes[c].parent) {
          throw FormatError("access tree: bad child reference");
        }
        nodes[c].parent = n.id;
        nodes[c].index = static_cast<std::uint32_t>(k + 1);
      }
    }
    return AccessTree(std::move(dims), std::move(nodes));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("access tree: ") + e.what());
  } catch (const ValidationError& e) {
    throw FormatError(std::string("access tree: ") + e.what());
  }
}

}  // namespace scpabe
