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

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "oracles.h"
#include "scpabe/access_tree.h"
#include "scpabe/errors.h"
#include "scpabe/random.h"
#include "scpabe/transparent_group.h"

namespace scpabe {
namespace {

using testing::containment_oracle;
using testing::eval_poly;
using testing::expected_leaf_count;
using testing::random_lattice;
using testing::subsets_to_check;

PolicyLattice lattice_2x3() {
  return PolicyLattice({2, 3}, {{{1, 1}, AccessPolicy{"a"}},
                                {{1, 2}, AccessPolicy{"a", "b", "x"}},
                                {{1, 3}, AccessPolicy{"a", "b", "x", "c"}},
                                {{2, 1}, AccessPolicy{"a", "b", "y"}},
                                {{2, 2}, AccessPolicy{"a", "b", "x", "y", "z"}},
                                {{2, 3}, AccessPolicy{"a", "b", "c", "x", "y", "z", "w"}}});
}

AttributeSet with_structure(const AttributeSet& attrs, const Dimensions& dims) {
  return unite(attrs, structural_attributes(dims).all());
}

TEST(StructuralAttributesTest, TwoByThree) {
  const StructuralAttributes s = structural_attributes({2, 3});
  EXPECT_EQ(s.escapes, (std::vector<Attribute>{"!grp:1", "!grp:2", "!grp:3"}));
  EXPECT_EQ(s.uniqueness,
            (std::vector<Attribute>{"!key:1,2", "!key:1,3", "!key:2,1", "!key:2,2", "!key:2,3"}));
}

TEST(StructuralAttributesTest, SingleLayerHasNone) {
  const StructuralAttributes s = structural_attributes({1, 1});
  EXPECT_TRUE(s.escapes.empty());
  EXPECT_TRUE(s.uniqueness.empty());
}

TEST(StructuralAttributesTest, ThreeDimensionalCounts) {
  const StructuralAttributes s = structural_attributes({2, 3, 2});
  EXPECT_EQ(s.escapes.size(), 4u);
  EXPECT_EQ(s.uniqueness.size(), 11u);
  for (const auto& a : s.all()) EXPECT_TRUE(is_reserved(a));
}

TEST(BuildTreeTest, TwoByThreeShape) {
  const AccessTree tree = build_tree(lattice_2x3());
  EXPECT_EQ(tree.key_nodes().size(), 6u);
  EXPECT_FALSE(tree.root().is_leaf());
  EXPECT_EQ(tree.root().threshold, tree.root().children.size());
  EXPECT_EQ(tree.key_nodes().at({1, 1}), 0u + tree.root().children[0]);

  // V_12 and V_21 hang under the same 1-of-2 gate.
  const TreeNode& v12 = tree.node(*tree.node(tree.key_nodes().at({1, 2})).parent);
  const TreeNode& v21 = tree.node(*tree.node(tree.key_nodes().at({2, 1})).parent);
  ASSERT_TRUE(v12.parent && v21.parent);
  EXPECT_EQ(*v12.parent, *v21.parent);
  const TreeNode& group_gate = tree.node(*v12.parent);
  EXPECT_EQ(group_gate.threshold, 1u);
  EXPECT_EQ(group_gate.children.size(), 2u);
}

TEST(BuildTreeTest, KeyNodesSitUnderUniquenessGates) {
  const AccessTree tree = build_tree(lattice_2x3());
  for (const auto& [coord, id] : tree.key_nodes()) {
    if (coord == LayerCoord{1, 1}) continue;
    const TreeNode& key = tree.node(id);
    EXPECT_EQ(key.index, 1u);
    const TreeNode& v = tree.node(*key.parent);
    EXPECT_EQ(v.threshold, 2u);
    ASSERT_EQ(v.children.size(), 2u);
    const TreeNode& unique = tree.node(v.children[1]);
    EXPECT_TRUE(unique.is_leaf());
    EXPECT_EQ(unique.attribute, uniqueness_attribute(coord));
    EXPECT_EQ(unique.index, 2u);
  }
}

TEST(BuildTreeTest, SingleLayerIsOneAndGate) {
  const PolicyLattice lat({1, 1}, {{{1, 1}, AccessPolicy{"x", "y"}}});
  const AccessTree tree = build_tree(lat);
  EXPECT_EQ(tree.nodes().size(), 3u);
  EXPECT_EQ(tree.root().threshold, 2u);
  EXPECT_EQ(tree.key_nodes().at({1, 1}), 0u);
}

TEST(BuildTreeTest, OneByNIsAChain) {
  std::size_t last_depth = 0;
  for (int n = 2; n <= 6; ++n) {
    std::map<LayerCoord, AccessPolicy> layers;
    AttributeSet acc{"base"};
    for (int j = 1; j <= n; ++j) {
      if (j > 1) acc.insert("q" + std::to_string(j));
      layers.emplace(LayerCoord{1, j}, AccessPolicy(acc));
    }
    const AccessTree tree = build_tree(PolicyLattice({1, n}, layers));
    EXPECT_EQ(tree.key_nodes().size(), static_cast<std::size_t>(n));
    std::size_t depth = 0;
    for (NodeId id = tree.key_nodes().at({1, n}); tree.node(id).parent;
         id = *tree.node(id).parent) {
      ++depth;
    }
    EXPECT_GT(depth, last_depth);
    last_depth = depth;
  }
}

TEST(BuildTreeTest, RejectsInvalidLattice) {
  const PolicyLattice lat({2, 1}, {{{1, 1}, AccessPolicy{"a"}}, {{2, 1}, AccessPolicy{"a"}}});
  EXPECT_THROW(build_tree(lat), ValidationError);
}

TEST(BuildTreeTest, IsDeterministic) {
  std::mt19937_64 gen(1);
  const PolicyLattice lat = random_lattice({2, 3, 2}, 12, gen);
  EXPECT_EQ(build_tree(lat), build_tree(lat));
  EXPECT_EQ(tree_to_json(build_tree(lat)).dump(), tree_to_json(build_tree(lat)).dump());
}

TEST(BuildTreeTest, LeafCountMatchesIndependentCount) {
  std::mt19937_64 gen(2);
  for (const Dimensions& d : {Dimensions{1, 1}, Dimensions{1, 4}, Dimensions{2, 3},
                              Dimensions{2, 3, 2}, Dimensions{3, 3, 2}}) {
    for (int i = 0; i < 20; ++i) {
      const PolicyLattice lat = random_lattice(d, 12, gen);
      EXPECT_EQ(build_tree(lat).leaf_count(), expected_leaf_count(lat)) << d.to_string();
    }
  }
}

TEST(BuildTreeTest, EveryLeafIsALatticeOrStructuralAttribute) {
  std::mt19937_64 gen(3);
  const PolicyLattice lat = random_lattice({3, 3, 2}, 12, gen);
  const AccessTree tree = build_tree(lat);
  const AttributeSet allowed = unite(lat.alphabet(), tree.structural().all());
  for (NodeId id : tree.leaves()) EXPECT_TRUE(allowed.contains(tree.node(id).attribute));
}

TEST(SatisfiedKeyNodesTest, WorkedExamples) {
  const PolicyLattice lat = lattice_2x3();
  const AccessTree tree = build_tree(lat);
  const Dimensions& d = lat.dims();
  EXPECT_EQ(satisfied_key_nodes(tree, with_structure(lat.policy({2, 3}).attributes(), d)).size(),
            6u);
  EXPECT_EQ(satisfied_key_nodes(tree, with_structure(lat.policy({1, 3}).attributes(), d)),
            (std::set<LayerCoord>{{1, 1}, {1, 2}, {1, 3}}));
  EXPECT_EQ(satisfied_key_nodes(tree, with_structure(lat.policy({1, 1}).attributes(), d)),
            (std::set<LayerCoord>{{1, 1}}));
  EXPECT_TRUE(satisfied_key_nodes(tree, with_structure({"b", "x"}, d)).empty());
}

TEST(SatisfiedKeyNodesTest, IncomparableMaximaAreBothReturned) {
  const PolicyLattice lat = lattice_2x3();
  const AccessTree tree = build_tree(lat);
  const AttributeSet held = unite(lat.policy({1, 3}).attributes(), lat.policy({2, 1}).attributes());
  // {a, b, c, x, y} covers P_13 and P_21 but not P_22 (needs z).
  EXPECT_EQ(satisfied_key_nodes(tree, with_structure(held, lat.dims())),
            (std::set<LayerCoord>{{1, 1}, {1, 2}, {1, 3}, {2, 1}}));
}

TEST(SatisfiedKeyNodesTest, KeyNodeWithoutBasePolicyUnlocksNothing) {
  const PolicyLattice lat = lattice_2x3();
  const AccessTree tree = build_tree(lat);
  // Everything R_23 needs plus every escape, but not the base attribute.
  const AttributeSet held = with_structure({"b", "c", "w", "x", "y", "z"}, lat.dims());
  EXPECT_TRUE(tree.evaluate(held)[tree.key_nodes().at({2, 3})]);
  EXPECT_TRUE(satisfied_key_nodes(tree, held).empty());
}

TEST(SatisfiedKeyNodesTest, AgreesWithContainmentOracle) {
  std::mt19937_64 gen(4);
  for (const Dimensions& d : {Dimensions{1, 1}, Dimensions{1, 4}, Dimensions{2, 3},
                              Dimensions{2, 3, 2}, Dimensions{3, 3, 2}}) {
    for (int i = 0; i < 10; ++i) {
      const PolicyLattice lat = random_lattice(d, 12, gen);
      const AccessTree tree = build_tree(lat);
      std::vector<AttributeSet> anchors;
      for (const auto& [c, p] : lat.policies()) anchors.push_back(p.attributes());
      for (const auto& s : subsets_to_check(lat.alphabet(), 8, 200, gen, anchors)) {
        const auto got = satisfied_key_nodes(tree, with_structure(s, d));
        ASSERT_EQ(got, containment_oracle(lat, s)) << d.to_string();
        // Downward closed.
        for (const auto& c : got) {
          for (const auto& r : referees(c)) EXPECT_TRUE(got.contains(r));
        }
      }
    }
  }
}

class SharesTest : public ::testing::Test {
 protected:
  const TransparentGroup grp_;
  const ScalarField& zp_ = grp_.scalars();
};

TEST_F(SharesTest, RootCarriesSecretAndGatesRecombine) {
  SeededRandom rng(5);
  std::mt19937_64 gen(5);
  const AccessTree tree = build_tree(random_lattice({2, 3, 2}, 12, gen));
  const Scalar s = zp_.random(rng);
  const ShareAssignment a = assign_shares(tree, zp_, s, rng);
  EXPECT_EQ(a.shares[0].value, s.value);
  for (const auto& n : tree.nodes()) {
    if (n.is_leaf()) continue;
    if (n.threshold == 1) {
      for (NodeId c : n.children) EXPECT_EQ(a.shares[c].value, a.shares[n.id].value);
    }
    // Every threshold-sized window of children recombines to the gate share.
    for (std::size_t start = 0; start + n.threshold <= n.children.size(); ++start) {
      std::vector<std::uint32_t> idx;
      for (std::size_t k = 0; k < n.threshold; ++k) {
        idx.push_back(tree.node(n.children[start + k]).index);
      }
      Scalar acc = zp_.zero();
      for (std::size_t k = 0; k < n.threshold; ++k) {
        const NodeId c = n.children[start + k];
        acc = zp_.add(acc, zp_.mul(a.shares[c], lagrange_at_zero(zp_, idx[k], idx)));
      }
      EXPECT_EQ(acc.value, a.shares[n.id].value);
    }
  }
}

TEST_F(SharesTest, SiblingKeyNodesGetDistinctShares) {
  SeededRandom rng(6);
  const AccessTree tree = build_tree(lattice_2x3());
  for (int i = 0; i < 20; ++i) {
    const ShareAssignment a = assign_shares(tree, zp_, zp_.random(rng), rng);
    EXPECT_NE(a.shares[tree.key_nodes().at({1, 2})].value,
              a.shares[tree.key_nodes().at({2, 1})].value);
  }
}

TEST_F(SharesTest, LagrangeCoefficientsForTwoPoints) {
  EXPECT_EQ(lagrange_at_zero(zp_, 1, {1, 2}).value, 2);
  EXPECT_EQ(lagrange_at_zero(zp_, 2, {1, 2}).value, zp_.order() - 1);
}

TEST_F(SharesTest, LagrangeRecoversDegreeTwoPolynomial) {
  SeededRandom rng(7);
  for (int i = 0; i < 50; ++i) {
    const std::vector<mpz_class> q = {zp_.random(rng).value, zp_.random(rng).value,
                                      zp_.random(rng).value};
    const std::vector<std::uint32_t> idx{1, 2, 3};
    Scalar acc = zp_.zero();
    for (std::uint32_t x : idx) {
      acc = zp_.add(acc, zp_.mul(zp_.from(eval_poly(q, x, zp_.order())),
                                 lagrange_at_zero(zp_, x, idx)));
    }
    EXPECT_EQ(acc.value, q[0]);
  }
}

TEST(TreeSerializationTest, JsonRoundTrip) {
  const AccessTree tree = build_tree(lattice_2x3());
  EXPECT_EQ(tree_from_json(tree_to_json(tree)), tree);
}

TEST(TreeSerializationTest, RejectsMalformedTrees) {
  const nlohmann::json good = tree_to_json(build_tree(lattice_2x3()));
  nlohmann::json bad = good;
  bad["nodes"][0]["kind"] = "xor";
  EXPECT_THROW(tree_from_json(bad), FormatError);
  bad = good;
  bad["nodes"][0]["children"][0] = 999;
  EXPECT_THROW(tree_from_json(bad), FormatError);
  bad = good;
  bad["nodes"][0].erase("key");
  bad["nodes"][1].erase("key");
  EXPECT_THROW(tree_from_json(bad), FormatError);
  bad = good;
  bad["dims"] = "2x3";
  EXPECT_THROW(tree_from_json(bad), FormatError);
}

TEST(RenderTest, TextMarksEveryKeyNodeAndDotIsAGraph) {
  const AccessTree tree = build_tree(lattice_2x3());
  const std::string text = render_text(tree);
  std::size_t markers = 0;
  for (std::size_t pos = text.find("[key"); pos != std::string::npos;
       pos = text.find("[key", pos + 1)) {
    ++markers;
  }
  EXPECT_EQ(markers, 6u);
  const std::string dot = render_dot(tree);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("n0 -> n1;"), std::string::npos);
}

}  // namespace
}  // namespace scpabe
