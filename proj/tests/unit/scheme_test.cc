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

#include "collusion.h"
#include "oracles.h"
#include "scripted_random.h"
#include "scpabe/errors.h"
#include "scpabe/scheme.h"
#include "scpabe/transparent_group.h"
#include "scpabe/type_a_group.h"

namespace scpabe {
namespace {

using testing::containment_oracle;
using testing::random_lattice;
using testing::ScriptedRandom;
using testing::subsets_to_check;
using TG = TransparentGroup;

PolicyLattice lattice_2x3() {
  return PolicyLattice({2, 3}, {{{1, 1}, AccessPolicy{"a"}},
                                {{1, 2}, AccessPolicy{"a", "b", "x"}},
                                {{1, 3}, AccessPolicy{"a", "b", "x", "c"}},
                                {{2, 1}, AccessPolicy{"a", "b", "y"}},
                                {{2, 2}, AccessPolicy{"a", "b", "x", "y", "z"}},
                                {{2, 3}, AccessPolicy{"a", "b", "c", "x", "y", "z", "w"}}});
}

template <PairingGroup G>
std::map<LayerCoord, typename G::G1> random_messages(const G& grp, const Dimensions& d,
                                                     RandomSource& rng) {
  std::map<LayerCoord, typename G::G1> out;
  for (const auto& c : d.coords()) out.emplace(c, grp.random_gt(rng));
  return out;
}

class TransparentSchemeTest : public ::testing::Test {
 protected:
  const TG grp_;
  const ScalarField& zp_ = grp_.scalars();
  const Scheme<TG> scheme_{grp_};
};

TEST_F(TransparentSchemeTest, SetupExponents) {
  ScriptedRandom rng;
  rng.push_scalar(zp_, 5);
  rng.push_scalar(zp_, 3);
  const auto keys = scheme_.setup(rng);
  EXPECT_EQ(keys.pk.g.log, 1);
  EXPECT_EQ(keys.pk.h.log, 3);
  EXPECT_EQ(keys.pk.f.log, zp_.inverse(zp_.from_int(3)).value);
  EXPECT_EQ(keys.pk.egg_alpha.log, 5);
  EXPECT_EQ(keys.mk.beta.value, 3);
  EXPECT_EQ(keys.mk.g_alpha.log, 5);
}

TEST_F(TransparentSchemeTest, SetupRedrawsZeroBeta) {
  ScriptedRandom rng;
  rng.push_scalar(zp_, 5);
  rng.push_scalar(zp_, 0);
  rng.push_scalar(zp_, 7);
  EXPECT_EQ(scheme_.setup(rng).mk.beta.value, 7);
}

TEST_F(TransparentSchemeTest, DifferentSeedsGiveDifferentKeys) {
  SeededRandom a(1), b(2);
  EXPECT_FALSE(scheme_.setup(a).pk.h == scheme_.setup(b).pk.h);
}

TEST_F(TransparentSchemeTest, KeygenExponents) {
  ScriptedRandom rng;
  rng.push_scalar(zp_, 5);   // alpha
  rng.push_scalar(zp_, 3);   // beta
  const auto keys = scheme_.setup(rng);
  rng.push_scalar(zp_, 11);  // r
  rng.push_scalar(zp_, 13);  // r_x
  rng.push_scalar(zp_, 17);  // r_y
  const auto uk = scheme_.keygen(keys.pk, keys.mk, {"x", "y"}, {1, 1}, rng);
  EXPECT_EQ(rng.remaining(), 0u);
  EXPECT_EQ(uk.d.log, zp_.mul(zp_.from_int(16), zp_.inverse(zp_.from_int(3))).value);
  const mpz_class hx = grp_.hash_to_g0("x").log;
  const mpz_class hy = grp_.hash_to_g0("y").log;
  EXPECT_EQ(uk.components.at("x").d.log, zp_.from(11 + hx * 13).value);
  EXPECT_EQ(uk.components.at("x").d_prime.log, 13);
  EXPECT_EQ(uk.components.at("y").d.log, zp_.from(11 + hy * 17).value);
  EXPECT_EQ(uk.components.at("y").d_prime.log, 17);
}

TEST_F(TransparentSchemeTest, KeygenAddsStructuralAttributesAndFreshRandomness) {
  SeededRandom rng(3);
  const auto keys = scheme_.setup(rng);
  const Dimensions dims{2, 3};
  const auto k1 = scheme_.keygen(keys.pk, keys.mk, {"a"}, dims, rng);
  const auto k2 = scheme_.keygen(keys.pk, keys.mk, {"a"}, dims, rng);
  EXPECT_TRUE(is_subset(structural_attributes(dims).all(), k1.attributes()));
  EXPECT_EQ(k1.attributes(), k2.attributes());
  EXPECT_FALSE(k1.d == k2.d);
}

TEST_F(TransparentSchemeTest, KeygenRejectsReservedAttributes) {
  SeededRandom rng(4);
  const auto keys = scheme_.setup(rng);
  EXPECT_THROW(scheme_.keygen(keys.pk, keys.mk, {"!grp:1"}, {2, 3}, rng), ValidationError);
  EXPECT_THROW(scheme_.keygen(keys.pk, keys.mk, {""}, {2, 3}, rng), ValidationError);
}

TEST_F(TransparentSchemeTest, SingleLayerCiphertextExponents) {
  ScriptedRandom rng;
  rng.push_scalar(zp_, 5);
  rng.push_scalar(zp_, 3);
  const auto keys = scheme_.setup(rng);
  const PolicyLattice lat({1, 1}, {{{1, 1}, AccessPolicy{"x"}}});
  rng.push_scalar(zp_, 19);  // s; the 1-of-1 root draws no coefficients
  const auto ct = scheme_.encrypt(keys.pk, lat, {{{1, 1}, grp_.gt_element(1000)}}, rng);
  EXPECT_EQ(rng.remaining(), 0u);
  const auto& comp = ct.key_nodes.at({1, 1});
  // p_R(0) = s because the root is the key node.
  EXPECT_EQ(comp.c_tilde.log, 1000 + 5 * (19 + 19));
  EXPECT_EQ(comp.c.log, 3 * (19 + 19));
  const auto& leaf = ct.leaves.at(ct.tree.leaves().front());
  EXPECT_EQ(leaf.e.log, 19);
  EXPECT_EQ(leaf.e_prime.log, zp_.from(grp_.hash_to_g0("x").log * 19).value);
}

TEST_F(TransparentSchemeTest, EncryptRequiresEveryMessage) {
  SeededRandom rng(5);
  const auto keys = scheme_.setup(rng);
  auto messages = random_messages(grp_, {2, 3}, rng);
  messages.erase(LayerCoord{2, 2});
  EXPECT_THROW(scheme_.encrypt(keys.pk, lattice_2x3(), messages, rng), ValidationError);
  messages = random_messages(grp_, {2, 3}, rng);
  messages.emplace(LayerCoord{3, 3}, grp_.gt_one());
  EXPECT_THROW(scheme_.encrypt(keys.pk, lattice_2x3(), messages, rng), ValidationError);
}

TEST_F(TransparentSchemeTest, ReEncryptionChangesComponentsNotTopology) {
  SeededRandom rng(6);
  const auto keys = scheme_.setup(rng);
  const auto messages = random_messages(grp_, {2, 3}, rng);
  SeededRandom r1(100), r2(200);
  const auto c1 = scheme_.encrypt(keys.pk, lattice_2x3(), messages, r1);
  const auto c2 = scheme_.encrypt(keys.pk, lattice_2x3(), messages, r2);
  EXPECT_EQ(c1.tree, c2.tree);
  EXPECT_FALSE(c1.key_nodes.at({1, 1}).c == c2.key_nodes.at({1, 1}).c);
}

TEST_F(TransparentSchemeTest, LeafValueHandExample) {
  // r = 2, r_x = 4, H(att) = 6, p_x(0) = 9.
  const KeyComponent<TG> key{grp_.element(2 + 6 * 4), grp_.element(4)};
  const LeafComponent<TG> leaf{grp_.element(9), grp_.element(6 * 9)};
  EXPECT_EQ(scheme_.leaf_value(key, leaf).log, 18);
}

TEST_F(TransparentSchemeTest, DecryptLeafNeedsTheAttribute) {
  SeededRandom rng(7);
  const auto keys = scheme_.setup(rng);
  const auto ct = scheme_.encrypt(keys.pk, lattice_2x3(), random_messages(grp_, {2, 3}, rng), rng);
  const auto uk = scheme_.keygen(keys.pk, keys.mk, {"b"}, {2, 3}, rng);
  for (NodeId id : ct.tree.leaves()) {
    if (ct.tree.node(id).attribute == "a") {
      EXPECT_THROW(scheme_.decrypt_leaf(uk, ct, id), KeyMismatchError);
    }
  }
}

TEST_F(TransparentSchemeTest, LeafValuesDifferBetweenUsers) {
  SeededRandom rng(8);
  const auto keys = scheme_.setup(rng);
  const auto ct = scheme_.encrypt(keys.pk, lattice_2x3(), random_messages(grp_, {2, 3}, rng), rng);
  const auto u1 = scheme_.keygen(keys.pk, keys.mk, {"a"}, {2, 3}, rng);
  const auto u2 = scheme_.keygen(keys.pk, keys.mk, {"a"}, {2, 3}, rng);
  const NodeId leaf = ct.tree.leaves().front();
  EXPECT_FALSE(scheme_.decrypt_leaf(u1, ct, leaf) == scheme_.decrypt_leaf(u2, ct, leaf));
}

TEST_F(TransparentSchemeTest, InterpolateGate) {
  const auto v = grp_.gt_element(77);
  const std::vector<std::pair<std::uint32_t, TG::G1>> one{{3, v}};
  EXPECT_EQ(scheme_.interpolate_gate(one, 1), v);

  // q(x) = 10 + 4x, r = 3: children carry r*q(1) = 42 and r*q(2) = 54.
  const std::vector<std::pair<std::uint32_t, TG::G1>> two{{2, grp_.gt_element(54)},
                                                          {1, grp_.gt_element(42)}};
  EXPECT_EQ(scheme_.interpolate_gate(two, 2).log, 30);
  EXPECT_THROW(scheme_.interpolate_gate(one, 2), ValidationError);

  // q(x) = 7 + 5x + 2x^2 with r = 1, supplied at 1..4; the lowest three are used.
  std::vector<std::pair<std::uint32_t, TG::G1>> three;
  for (std::uint32_t x = 4; x >= 1; --x) {
    three.emplace_back(x, grp_.gt_element(7 + 5 * x + 2 * x * x));
  }
  three[0].second = grp_.gt_element(0);  // index 4 is ignored
  EXPECT_EQ(scheme_.interpolate_gate(three, 3).log, 7);
}

TEST_F(TransparentSchemeTest, TelescopingQuotientRecoversMessage) {
  SeededRandom rng(9);
  for (int i = 0; i < 200; ++i) {
    const Scalar alpha = zp_.random(rng);
    const Scalar beta = zp_.random_nonzero(rng);
    const Scalar r = zp_.random(rng);
    const Scalar p = zp_.random(rng);
    const Scalar s = zp_.random(rng);
    const Scalar m = zp_.random(rng);
    const auto keys = scheme_.setup_with(alpha, beta);
    const Scalar t = zp_.add(p, s);
    const KeyNodeComponent<TG> comp{grp_.gt_element(zp_.add(m, zp_.mul(alpha, t)).value),
                                    grp_.exp(keys.pk.h, t)};
    const auto d = grp_.exp(grp_.mul(keys.mk.g_alpha, grp_.exp(keys.pk.g, r)),
                            zp_.inverse(beta));
    const auto out = scheme_.recover(comp, d, grp_.gt_element(zp_.mul(r, p).value),
                                     grp_.gt_element(zp_.mul(r, s).value));
    EXPECT_EQ(out.log, m.value);
  }
}

TEST_F(TransparentSchemeTest, DecryptMatchesContainmentOracle) {
  std::mt19937_64 gen(10);
  SeededRandom rng(10);
  const auto keys = scheme_.setup(rng);
  for (const Dimensions& d : {Dimensions{1, 1}, Dimensions{2, 3}, Dimensions{2, 3, 2}}) {
    for (int i = 0; i < 4; ++i) {
      const PolicyLattice lat = random_lattice(d, 10, gen);
      const auto messages = random_messages(grp_, d, rng);
      const auto ct = scheme_.encrypt(keys.pk, lat, messages, rng);
      std::vector<AttributeSet> anchors;
      for (const auto& [c, p] : lat.policies()) anchors.push_back(p.attributes());
      for (const auto& s : subsets_to_check(lat.alphabet(), 6, 40, gen, anchors)) {
        const auto uk = scheme_.keygen(keys.pk, keys.mk, s, d, rng);
        const auto out = scheme_.decrypt(keys.pk, uk, ct);
        std::set<LayerCoord> got;
        for (const auto& [c, m] : out) {
          got.insert(c);
          EXPECT_EQ(m, messages.at(c));
        }
        EXPECT_EQ(got, containment_oracle(lat, s));
      }
    }
  }
}

TEST_F(TransparentSchemeTest, BaseOnlyAndEmptyKeys) {
  SeededRandom rng(11);
  const auto keys = scheme_.setup(rng);
  const auto messages = random_messages(grp_, {2, 3}, rng);
  const auto ct = scheme_.encrypt(keys.pk, lattice_2x3(), messages, rng);
  const auto base = scheme_.keygen(keys.pk, keys.mk, {"a"}, {2, 3}, rng);
  const auto out = scheme_.decrypt(keys.pk, base, ct);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.at({1, 1}), messages.at({1, 1}));
  const auto none = scheme_.keygen(keys.pk, keys.mk, {"q"}, {2, 3}, rng);
  EXPECT_TRUE(scheme_.decrypt(keys.pk, none, ct).empty());
}

TEST_F(TransparentSchemeTest, DecryptRejectsKeyForOtherStructure) {
  SeededRandom rng(12);
  const auto keys = scheme_.setup(rng);
  const auto ct = scheme_.encrypt(keys.pk, lattice_2x3(), random_messages(grp_, {2, 3}, rng), rng);
  const auto uk = scheme_.keygen(keys.pk, keys.mk, {"a", "b", "x"}, {1, 2}, rng);
  EXPECT_THROW(scheme_.decrypt(keys.pk, uk, ct), KeyMismatchError);
}

TEST_F(TransparentSchemeTest, DecryptRejectsObjectsFromAnotherGroup) {
  const TG other_grp(mpz_class(1000003));
  const Scheme<TG> other(other_grp);
  SeededRandom rng(13);
  const auto keys = scheme_.setup(rng);
  const auto foreign = other.setup(rng);
  const auto ct = scheme_.encrypt(keys.pk, lattice_2x3(), random_messages(grp_, {2, 3}, rng), rng);
  const auto uk = scheme_.keygen(keys.pk, keys.mk, {"a"}, {2, 3}, rng);
  EXPECT_THROW(scheme_.decrypt(foreign.pk, uk, ct), ProviderMismatchError);
  EXPECT_THROW(other.decrypt(foreign.pk, uk, ct), ProviderMismatchError);
}

TEST_F(TransparentSchemeTest, DelegationMatchesFreshKeys) {
  std::mt19937_64 gen(14);
  SeededRandom rng(14);
  const auto keys = scheme_.setup(rng);
  for (int i = 0; i < 10; ++i) {
    const PolicyLattice lat = random_lattice({2, 3}, 10, gen);
    const auto messages = random_messages(grp_, {2, 3}, rng);
    const auto ct = scheme_.encrypt(keys.pk, lat, messages, rng);
    const AttributeSet full = lat.alphabet();
    AttributeSet subset;
    for (const auto& a : full) {
      if (gen() % 3 != 0) subset.insert(a);
    }
    const auto parent = scheme_.keygen(keys.pk, keys.mk, full, {2, 3}, rng);
    const auto delegated = scheme_.delegate(keys.pk, parent, subset, rng);
    const auto fresh = scheme_.keygen(keys.pk, keys.mk, subset, {2, 3}, rng);
    EXPECT_EQ(delegated.attributes(), fresh.attributes());
    EXPECT_EQ(scheme_.decrypt(keys.pk, delegated, ct), scheme_.decrypt(keys.pk, fresh, ct));
  }
}

TEST_F(TransparentSchemeTest, DelegationRerandomisesAndRejectsNonSubsets) {
  SeededRandom rng(15);
  const auto keys = scheme_.setup(rng);
  const auto uk = scheme_.keygen(keys.pk, keys.mk, {"a", "b"}, {2, 3}, rng);
  const auto same = scheme_.delegate(keys.pk, uk, {"a", "b"}, rng);
  EXPECT_EQ(same.attributes(), uk.attributes());
  EXPECT_FALSE(same.d == uk.d);
  EXPECT_THROW(scheme_.delegate(keys.pk, uk, {"a", "zz"}, rng), ValidationError);
  // Structural attributes survive even when not requested.
  const auto narrow = scheme_.delegate(keys.pk, uk, {}, rng);
  EXPECT_EQ(narrow.attributes(), structural_attributes({2, 3}).all());
}

TEST_F(TransparentSchemeTest, CrossGroupCollusionFails) {
  std::mt19937_64 gen(16);
  SeededRandom rng(16);
  const auto keys = scheme_.setup(rng);
  for (int i = 0; i < 10; ++i) {
    const PolicyLattice lat = testing::cross_group_lattice(10, gen);
    const auto messages = random_messages(grp_, {2, 3}, rng);
    const auto ct = scheme_.encrypt(keys.pk, lat, messages, rng);
    const auto ua = scheme_.keygen(keys.pk, keys.mk, lat.policy({1, 3}).attributes(), {2, 3}, rng);
    const auto ub = scheme_.keygen(keys.pk, keys.mk, lat.policy({2, 1}).attributes(), {2, 3}, rng);
    for (const LayerCoord& target : {LayerCoord{2, 2}, LayerCoord{2, 3}}) {
      const auto tally = testing::try_collusion(scheme_, keys.pk, ct, ua, ub, target,
                                                messages.at(target));
      EXPECT_GT(tally.attempts, 0);
      EXPECT_EQ(tally.successes, 0);
    }
  }
}

TEST_F(TransparentSchemeTest, SplitConjunctionDoesNotRecombine) {
  SeededRandom rng(17);
  const auto keys = scheme_.setup(rng);
  const PolicyLattice lat({1, 1}, {{{1, 1}, AccessPolicy{"b0", "b1"}}});
  for (int i = 0; i < 20; ++i) {
    const auto messages = random_messages(grp_, {1, 1}, rng);
    const auto ct = scheme_.encrypt(keys.pk, lat, messages, rng);
    const auto ua = scheme_.keygen(keys.pk, keys.mk, {"b0"}, {1, 1}, rng);
    const auto ub = scheme_.keygen(keys.pk, keys.mk, {"b1"}, {1, 1}, rng);
    const auto tally = testing::try_collusion(scheme_, keys.pk, ct, ua, ub, {1, 1},
                                              messages.at({1, 1}));
    EXPECT_EQ(tally.successes, 0);
  }
}

TEST(TypeASchemeTest, PublicKeyConsistencyAndRoundTrip) {
  const TypeAGroup grp;
  const Scheme<TypeAGroup> scheme(grp);
  SeededRandom rng(18);
  const auto keys = scheme.setup(rng);
  EXPECT_EQ(grp.pair(keys.pk.h, keys.pk.f), grp.pair(keys.pk.g, keys.pk.g));
  EXPECT_EQ(grp.pair(keys.mk.g_alpha, keys.pk.g), keys.pk.egg_alpha);
  EXPECT_EQ(grp.exp(keys.pk.g, keys.mk.beta), keys.pk.h);

  const PolicyLattice lat = lattice_2x3();
  const auto messages = random_messages(grp, {2, 3}, rng);
  const auto ct = scheme.encrypt(keys.pk, lat, messages, rng);
  for (const AttributeSet& s : {AttributeSet{"a", "b", "x", "c"}, AttributeSet{"a", "b", "y"},
                                lat.alphabet(), AttributeSet{"b"}}) {
    const auto uk = scheme.keygen(keys.pk, keys.mk, s, {2, 3}, rng);
    const auto out = scheme.decrypt(keys.pk, uk, ct);
    std::set<LayerCoord> got;
    for (const auto& [c, m] : out) {
      got.insert(c);
      EXPECT_EQ(m, messages.at(c));
    }
    EXPECT_EQ(got, containment_oracle(lat, s));
  }
}

}  // namespace
}  // namespace scpabe
