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

#ifndef SCPABE_SCHEME_H_
#define SCPABE_SCHEME_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "scpabe/access_tree.h"
#include "scpabe/errors.h"
#include "scpabe/group.h"
#include "scpabe/policy_lattice.h"
#include "scpabe/random.h"

namespace scpabe {

// PK = (g, h = g^beta, f = g^{1/beta}, e(g,g)^alpha).
template <PairingGroup G>
struct PublicKey {
  GroupDescriptor descriptor;
  typename G::G0 g;
  typename G::G0 h;
  typename G::G0 f;
  typename G::G1 egg_alpha;
};

// MK = (beta, g^alpha).
template <PairingGroup G>
struct MasterKey {
  GroupDescriptor descriptor;
  Scalar beta;
  typename G::G0 g_alpha;
};

// D_i = g^r * H(attr)^{r_i}, D_i' = g^{r_i}.
template <PairingGroup G>
struct KeyComponent {
  typename G::G0 d;
  typename G::G0 d_prime;
};

template <PairingGroup G>
struct UserKey {
  GroupDescriptor descriptor;
  // Layer grid whose structural attributes the key was issued with.
  Dimensions dims;
  // D = g^{(alpha + r) / beta}.
  typename G::G0 d;
  std::map<Attribute, KeyComponent<G>> components;

  AttributeSet attributes() const {
    AttributeSet out;
    for (const auto& [a, c] : components) out.insert(a);
    return out;
  }
};

// E = g^{p(0)}, E' = H(attr)^{p(0)} for one leaf.
template <PairingGroup G>
struct LeafComponent {
  typename G::G0 e;
  typename G::G0 e_prime;
};

// C~ = m * e(g,g)^{alpha (p_R(0) + s)}, C = h^{p_R(0) + s} for one key node.
template <PairingGroup G>
struct KeyNodeComponent {
  typename G::G1 c_tilde;
  typename G::G0 c;
};

template <PairingGroup G>
struct Ciphertext {
  GroupDescriptor descriptor;
  AccessTree tree;
  std::map<NodeId, LeafComponent<G>> leaves;
  std::map<LayerCoord, KeyNodeComponent<G>> key_nodes;
};

// Multi-message ciphertext-policy ABE over a layered access tree: one
// ciphertext carries a G1 message per layer, and a key over attribute set S
// recovers exactly the layers whose policies S satisfies.
template <PairingGroup G>
class Scheme {
 public:
  using G0 = typename G::G0;
  using G1 = typename G::G1;

  struct Keys {
    PublicKey<G> pk;
    MasterKey<G> mk;
  };

  explicit Scheme(const G& group) : group_(group) {}

  const G& group() const { return group_; }

  // Draws alpha, then a nonzero beta.
  Keys setup(RandomSource& rng) const {
    const ScalarField& zp = group_.scalars();
    Scalar alpha = zp.random(rng);
    Scalar beta = zp.random_nonzero(rng);
    return setup_with(alpha, beta);
  }

  Keys setup_with(const Scalar& alpha, const Scalar& beta) const {
    const ScalarField& zp = group_.scalars();
    const G0 g = group_.generator();
    const G0 g_alpha = group_.exp(g, alpha);
    PublicKey<G> pk{group_.descriptor(), g, group_.exp(g, beta),
                    group_.exp(g, zp.inverse(beta)), group_.pair(g, g_alpha)};
    MasterKey<G> mk{group_.descriptor(), beta, g_alpha};
    return Keys{std::move(pk), std::move(mk)};
  }

  // Issues a key for attrs plus every structural attribute of dims. Draws r,
  // then one r_i per attribute in canonical order.
  UserKey<G> keygen(const PublicKey<G>& pk, const MasterKey<G>& mk,
                    const AttributeSet& attrs, const Dimensions& dims,
                    RandomSource& rng) const {
    require_same_group(group_.descriptor(), pk.descriptor, "public key");
    require_same_group(group_.descriptor(), mk.descriptor, "master key");
    for (const auto& a : attrs) {
      if (a.empty()) throw ValidationError("attribute labels must be nonempty");
      if (is_reserved(a)) {
        throw ValidationError("attribute '" + a + "' uses the reserved prefix");
      }
    }
    const ScalarField& zp = group_.scalars();
    const Scalar r = zp.random(rng);
    const G0 g_r = group_.exp(pk.g, r);
    UserKey<G> uk{group_.descriptor(), dims,
                  group_.exp(group_.mul(mk.g_alpha, g_r), zp.inverse(mk.beta)),
                  {}};
    for (const auto& a : unite(attrs, structural_attributes(dims).all())) {
      const Scalar ri = zp.random(rng);
      uk.components.emplace(
          a, KeyComponent<G>{group_.mul(g_r, group_.exp(group_.hash_to_g0(a), ri)),
                             group_.exp(pk.g, ri)});
    }
    return uk;
  }

  // Draws s, then the polynomial coefficients gate by gate in preorder.
  Ciphertext<G> encrypt(const PublicKey<G>& pk, const PolicyLattice& lat,
                        const std::map<LayerCoord, G1>& messages,
                        RandomSource& rng) const {
    require_same_group(group_.descriptor(), pk.descriptor, "public key");
    AccessTree tree = build_tree(lat);
    for (const auto& c : lat.dims().coords()) {
      if (!messages.contains(c)) {
        throw ValidationError("no message for layer (" + c.to_string() + ")");
      }
    }
    if (messages.size() != lat.dims().layer_count()) {
      throw ValidationError("messages given for layers outside the lattice");
    }
    const ScalarField& zp = group_.scalars();
    const Scalar s = zp.random(rng);
    const ShareAssignment shares = assign_shares(tree, zp, s, rng);

    Ciphertext<G> ct{group_.descriptor(), tree, {}, {}};
    for (NodeId id : tree.leaves()) {
      const Scalar& share = shares.shares[id];
      ct.leaves.emplace(
          id, LeafComponent<G>{group_.exp(pk.g, share),
                               group_.exp(group_.hash_to_g0(tree.node(id).attribute),
                                          share)});
    }
    for (const auto& [coord, id] : tree.key_nodes()) {
      const Scalar t = zp.add(shares.shares[id], s);
      ct.key_nodes.emplace(
          coord, KeyNodeComponent<G>{
                     group_.gt_mul(messages.at(coord), group_.gt_exp(pk.egg_alpha, t)),
                     group_.exp(pk.h, t)});
    }
    return ct;
  }

  // e(D_i, E) / e(D_i', E') = e(g,g)^{r p(0)}.
  G1 leaf_value(const KeyComponent<G>& key, const LeafComponent<G>& leaf) const {
    return group_.gt_div(group_.pair(key.d, leaf.e),
                         group_.pair(key.d_prime, leaf.e_prime));
  }

  // Throws KeyMismatchError if the key has no component for the leaf's
  // attribute.
  G1 decrypt_leaf(const UserKey<G>& uk, const Ciphertext<G>& ct, NodeId leaf) const {
    const TreeNode& node = ct.tree.node(leaf);
    if (!node.is_leaf()) throw ValidationError("decrypt_leaf: node is a gate");
    auto key = uk.components.find(node.attribute);
    if (key == uk.components.end()) {
      throw KeyMismatchError("key has no component for '" + node.attribute + "'");
    }
    auto comp = ct.leaves.find(leaf);
    if (comp == ct.leaves.end()) throw FormatError("ciphertext lacks a leaf component");
    return leaf_value(key->second, comp->second);
  }

  // Lagrange recombination at 0 over the `threshold` lowest-indexed values.
  G1 interpolate_gate(std::span<const std::pair<std::uint32_t, G1>> children,
                      std::uint32_t threshold) const {
    if (threshold == 0 || children.size() < threshold) {
      throw ValidationError("interpolate_gate: fewer children than threshold");
    }
    std::vector<std::pair<std::uint32_t, G1>> chosen(children.begin(),
                                                     children.end());
    std::sort(chosen.begin(), chosen.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    chosen.resize(threshold);
    std::vector<std::uint32_t> indices;
    for (const auto& [i, v] : chosen) indices.push_back(i);
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
      throw ValidationError("interpolate_gate: duplicate child index");
    }
    G1 acc = group_.gt_one();
    for (const auto& [i, v] : chosen) {
      acc = group_.gt_mul(
          acc, group_.gt_exp(v, lagrange_at_zero(group_.scalars(), i, indices)));
    }
    return acc;
  }

  // Recovers the message of every layer the key is entitled to; an empty
  // map when it satisfies nothing.
  std::map<LayerCoord, G1> decrypt(const PublicKey<G>& pk, const UserKey<G>& uk,
                                   const Ciphertext<G>& ct) const {
    require_same_group(group_.descriptor(), pk.descriptor, "public key");
    require_same_group(group_.descriptor(), uk.descriptor, "user key");
    require_same_group(group_.descriptor(), ct.descriptor, "ciphertext");
    const AttributeSet held = uk.attributes();
    if (!is_subset(ct.tree.structural().all(), held)) {
      throw KeyMismatchError("key lacks the structural attributes of this ciphertext");
    }
    check_components(ct);

    std::map<LayerCoord, G1> out;
    const std::set<LayerCoord> entitled = satisfied_key_nodes(ct.tree, held);
    if (entitled.empty()) return out;

    const std::vector<bool> sat = ct.tree.evaluate(held);
    std::vector<std::optional<G1>> memo(ct.tree.nodes().size());
    auto leaf = [&](NodeId id) { return decrypt_leaf(uk, ct, id); };
    const G1 f_root = evaluate_node(ct.tree, sat, memo, 0, leaf);
    for (const auto& coord : entitled) {
      const G1 f_key =
          evaluate_node(ct.tree, sat, memo, ct.tree.key_nodes().at(coord), leaf);
      out.emplace(coord, recover(ct.key_nodes.at(coord), uk.d, f_key, f_root));
    }
    return out;
  }

  // m = C~ / (e(C, D) / (F_R * F_root)).
  G1 recover(const KeyNodeComponent<G>& comp, const G0& d, const G1& f_key,
             const G1& f_root) const {
    const G1 blind = group_.gt_div(group_.pair(comp.c, d), group_.gt_mul(f_key, f_root));
    return group_.gt_div(comp.c_tilde, blind);
  }

  // Bottom-up evaluation of node `id` from caller-supplied leaf values (for
  // example, values computed under different keys). nullopt when the
  // supplied leaves do not satisfy the node.
  std::optional<G1> evaluate_subtree(const AccessTree& tree, NodeId id,
                                     const std::map<NodeId, G1>& leaf_values) const {
    std::vector<bool> sat(tree.nodes().size(), false);
    for (std::size_t i = tree.nodes().size(); i-- > 0;) {
      const TreeNode& n = tree.node(static_cast<NodeId>(i));
      if (n.is_leaf()) {
        sat[i] = leaf_values.contains(n.id);
      } else {
        std::uint32_t count = 0;
        for (NodeId c : n.children) count += sat[c] ? 1 : 0;
        sat[i] = count >= n.threshold;
      }
    }
    if (!sat.at(id)) return std::nullopt;
    std::vector<std::optional<G1>> memo(tree.nodes().size());
    auto leaf = [&](NodeId l) { return leaf_values.at(l); };
    return evaluate_node(tree, sat, memo, id, leaf);
  }

  // Re-randomised key over subset plus the structural attributes. Draws
  // r~, then one r~_i per retained attribute in canonical order.
  UserKey<G> delegate(const PublicKey<G>& pk, const UserKey<G>& uk,
                      const AttributeSet& subset, RandomSource& rng) const {
    require_same_group(group_.descriptor(), pk.descriptor, "public key");
    require_same_group(group_.descriptor(), uk.descriptor, "user key");
    for (const auto& a : subset) {
      if (!uk.components.contains(a)) {
        throw ValidationError("cannot delegate attribute '" + a +
                              "' that the key does not hold");
      }
    }
    const ScalarField& zp = group_.scalars();
    const Scalar r = zp.random(rng);
    const G0 g_r = group_.exp(pk.g, r);
    UserKey<G> out{uk.descriptor, uk.dims, group_.mul(uk.d, group_.exp(pk.f, r)), {}};
    for (const auto& a : unite(subset, structural_attributes(uk.dims).all())) {
      const KeyComponent<G>& old = uk.components.at(a);
      const Scalar ri = zp.random(rng);
      out.components.emplace(
          a, KeyComponent<G>{
                 group_.mul(group_.mul(old.d, g_r),
                            group_.exp(group_.hash_to_g0(a), ri)),
                 group_.mul(old.d_prime, group_.exp(pk.g, ri))});
    }
    return out;
  }

 private:
  void check_components(const Ciphertext<G>& ct) const {
    for (NodeId id : ct.tree.leaves()) {
      if (!ct.leaves.contains(id)) throw FormatError("ciphertext lacks a leaf component");
    }
    if (ct.leaves.size() != ct.tree.leaf_count()) {
      throw FormatError("ciphertext has components for unknown leaves");
    }
    for (const auto& [coord, id] : ct.tree.key_nodes()) {
      if (!ct.key_nodes.contains(coord)) {
        throw FormatError("ciphertext lacks a key-node component");
      }
    }
    if (ct.key_nodes.size() != ct.tree.key_nodes().size()) {
      throw FormatError("ciphertext has components for unknown key nodes");
    }
  }

  template <class LeafFn>
  G1 evaluate_node(const AccessTree& tree, const std::vector<bool>& sat,
                   std::vector<std::optional<G1>>& memo, NodeId id,
                   LeafFn& leaf) const {
    if (memo[id]) return *memo[id];
    const TreeNode& node = tree.node(id);
    G1 value = group_.gt_one();
    if (node.is_leaf()) {
      value = leaf(id);
    } else {
      std::vector<std::pair<std::uint32_t, G1>> kids;
      for (NodeId c : node.children) {
        if (kids.size() == node.threshold) break;
        if (sat[c]) {
          kids.emplace_back(tree.node(c).index,
                            evaluate_node(tree, sat, memo, c, leaf));
        }
      }
      value = interpolate_gate(kids, node.threshold);
    }
    memo[id] = value;
    return value;
  }

  const G& group_;
};

}  // namespace scpabe

#endif  // SCPABE_SCHEME_H_
