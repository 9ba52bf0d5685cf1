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

#include "scpabe/errors.h"
#include "scpabe/random.h"
#include "scpabe/scheme.h"
#include "scpabe/serialization.h"
#include "scpabe/transparent_group.h"
#include "scpabe/type_a_group.h"

namespace scpabe {
namespace {

PolicyLattice lattice_1x2() {
  return PolicyLattice({1, 2}, {{{1, 1}, AccessPolicy{"a", "b"}},
                                {{1, 2}, AccessPolicy{"a", "b", "c"}}});
}

template <class G>
class SerializationTest : public ::testing::Test {
 protected:
  SerializationTest() : rng_(42), keys_(scheme_.setup(rng_)) {}

  Ciphertext<G> encrypt() {
    std::map<LayerCoord, typename G::G1> messages;
    for (const auto& c : Dimensions{1, 2}.coords()) messages.emplace(c, grp_.random_gt(rng_));
    return scheme_.encrypt(keys_.pk, lattice_1x2(), messages, rng_);
  }

  const G grp_;
  const Scheme<G> scheme_{grp_};
  SeededRandom rng_;
  typename Scheme<G>::Keys keys_;
};

using Providers = ::testing::Types<TransparentGroup, TypeAGroup>;
TYPED_TEST_SUITE(SerializationTest, Providers);

TYPED_TEST(SerializationTest, PublicKeyRoundTrip) {
  const auto j = to_json(this->grp_, this->keys_.pk);
  const auto back = public_key_from_json(this->grp_, parse_json(dump_json(j)));
  EXPECT_EQ(back.g, this->keys_.pk.g);
  EXPECT_EQ(back.h, this->keys_.pk.h);
  EXPECT_EQ(back.f, this->keys_.pk.f);
  EXPECT_EQ(back.egg_alpha, this->keys_.pk.egg_alpha);
  EXPECT_EQ(to_json(this->grp_, back), j);
}

TYPED_TEST(SerializationTest, MasterKeyRoundTrip) {
  const auto j = to_json(this->grp_, this->keys_.mk);
  const auto back = master_key_from_json(this->grp_, parse_json(dump_json(j)));
  EXPECT_EQ(back.beta, this->keys_.mk.beta);
  EXPECT_EQ(back.g_alpha, this->keys_.mk.g_alpha);
}

TYPED_TEST(SerializationTest, UserKeyRoundTrip) {
  const auto uk = this->scheme_.keygen(this->keys_.pk, this->keys_.mk, {"a", "b"}, {1, 2},
                                       this->rng_);
  const auto j = to_json(this->grp_, uk);
  const auto back = user_key_from_json(this->grp_, parse_json(dump_json(j)));
  EXPECT_EQ(back.dims, uk.dims);
  EXPECT_EQ(back.attributes(), uk.attributes());
  EXPECT_EQ(to_json(this->grp_, back), j);
}

TYPED_TEST(SerializationTest, CiphertextRoundTripDecrypts) {
  const auto ct = this->encrypt();
  const auto j = to_json(this->grp_, ct);
  const auto back = ciphertext_from_json(this->grp_, parse_json(dump_json(j)));
  EXPECT_EQ(back.tree, ct.tree);
  EXPECT_EQ(to_json(this->grp_, back), j);
  const auto uk = this->scheme_.keygen(this->keys_.pk, this->keys_.mk, {"a", "b", "c"},
                                       {1, 2}, this->rng_);
  EXPECT_EQ(this->scheme_.decrypt(this->keys_.pk, uk, back),
            this->scheme_.decrypt(this->keys_.pk, uk, ct));
}

TYPED_TEST(SerializationTest, DumpIsDeterministic) {
  const auto ct = this->encrypt();
  EXPECT_EQ(dump_json(to_json(this->grp_, ct)), dump_json(to_json(this->grp_, ct)));
}

TYPED_TEST(SerializationTest, WrongRoleIsRejected) {
  const auto j = to_json(this->grp_, this->keys_.pk);
  EXPECT_THROW(master_key_from_json(this->grp_, j), FormatError);
  EXPECT_THROW(user_key_from_json(this->grp_, j), FormatError);
  EXPECT_THROW(ciphertext_from_json(this->grp_, j), FormatError);
}

TYPED_TEST(SerializationTest, HeaderChecks) {
  auto j = to_json(this->grp_, this->keys_.pk);
  auto bad = j;
  bad["version"] = 2;
  EXPECT_THROW(public_key_from_json(this->grp_, bad), FormatError);
  bad = j;
  bad["format"] = "other";
  EXPECT_THROW(public_key_from_json(this->grp_, bad), FormatError);
  bad = j;
  bad["role"] = "zz";
  EXPECT_THROW(public_key_from_json(this->grp_, bad), FormatError);
  bad = j;
  bad["body"].erase("h");
  EXPECT_THROW(public_key_from_json(this->grp_, bad), FormatError);
  bad = j;
  bad["body"]["h"] = "!!";
  EXPECT_THROW(public_key_from_json(this->grp_, bad), FormatError);
  bad = j;
  bad["body"]["h"] = 17;
  EXPECT_THROW(public_key_from_json(this->grp_, bad), FormatError);
  EXPECT_THROW(parse_json("{not json"), FormatError);
}

TYPED_TEST(SerializationTest, CiphertextStructureChecks) {
  const auto j = to_json(this->grp_, this->encrypt());
  auto bad = j;
  bad["body"]["leaves"].erase(0);
  EXPECT_THROW(ciphertext_from_json(this->grp_, bad), FormatError);
  bad = j;
  bad["body"]["key_nodes"].erase("1,2");
  EXPECT_THROW(ciphertext_from_json(this->grp_, bad), FormatError);
  bad = j;
  bad["body"]["key_nodes"]["9,9"] = bad["body"]["key_nodes"]["1,1"];
  EXPECT_THROW(ciphertext_from_json(this->grp_, bad), FormatError);
  bad = j;
  bad["body"]["leaves"].push_back(bad["body"]["leaves"][0]);
  EXPECT_THROW(ciphertext_from_json(this->grp_, bad), FormatError);
}

TEST(DescriptorTest, RoundTripAndMismatch) {
  const TransparentGroup t;
  const TypeAGroup a;
  EXPECT_EQ(descriptor_from_json(descriptor_to_json(t.descriptor())), t.descriptor());
  EXPECT_EQ(descriptor_from_json(descriptor_to_json(a.descriptor())), a.descriptor());
  EXPECT_FALSE(t.descriptor() == a.descriptor());

  const Scheme<TypeAGroup> scheme(a);
  SeededRandom rng(1);
  const auto keys = scheme.setup(rng);
  EXPECT_THROW(public_key_from_json(t, to_json(a, keys.pk)), ProviderMismatchError);

  const TransparentGroup small(mpz_class(1000003));
  const Scheme<TransparentGroup> s2(small);
  const auto k2 = s2.setup(rng);
  EXPECT_THROW(public_key_from_json(t, to_json(small, k2.pk)), ProviderMismatchError);
}

TEST(DescriptorTest, MalformedDescriptor) {
  auto j = descriptor_to_json(TransparentGroup().descriptor());
  auto bad = j;
  bad["provider"] = "nope";
  EXPECT_THROW(descriptor_from_json(bad), FormatError);
  bad = j;
  bad["order"] = "xyz";
  EXPECT_THROW(descriptor_from_json(bad), FormatError);
  bad = j;
  bad["g0_bytes"] = -1;
  EXPECT_THROW(descriptor_from_json(bad), FormatError);
}

}  // namespace
}  // namespace scpabe
