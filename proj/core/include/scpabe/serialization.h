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

#ifndef SCPABE_SERIALIZATION_H_
#define SCPABE_SERIALIZATION_H_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "scpabe/access_tree.h"
#include "scpabe/codec.h"
#include "scpabe/errors.h"
#include "scpabe/group.h"
#include "scpabe/scheme.h"

namespace scpabe {

// Every serialized object is an envelope
//   {"format": "scpabe", "version": 1, "role": ..., "group": {...}, "body": {...}}
// with group elements as base64 of their canonical encodings.
inline constexpr std::string_view kFormatName = "scpabe";
inline constexpr int kFormatVersion = 1;

enum class Role { kPublicKey, kMasterKey, kUserKey, kCiphertext };

std::string_view role_name(Role role);

nlohmann::json descriptor_to_json(const GroupDescriptor& d);
// Throws FormatError.
GroupDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json make_envelope(Role role, const GroupDescriptor& d,
                             nlohmann::json body);

// Checks format, version and role; returns the embedded descriptor. Throws
// FormatError.
GroupDescriptor envelope_descriptor(const nlohmann::json& envelope, Role role);

// As above, then requires the descriptor to equal `expected`
// (ProviderMismatchError) and returns the body.
const nlohmann::json& open_envelope(const nlohmann::json& envelope, Role role,
                                    const GroupDescriptor& expected);

// Parses JSON text; throws FormatError.
nlohmann::json parse_json(std::string_view text);

// Deterministic text form (sorted keys, two-space indent, trailing newline).
std::string dump_json(const nlohmann::json& j);

namespace detail {

std::string get_string(const nlohmann::json& j, std::string_view key);
const nlohmann::json& get_field(const nlohmann::json& j, std::string_view key);

template <PairingGroup G>
std::string put(const G& grp, const typename G::G0& a) {
  return base64_encode(grp.encode(a));
}

template <PairingGroup G>
std::string put_gt(const G& grp, const typename G::G1& a) {
  return base64_encode(grp.encode(a));
}

template <PairingGroup G>
typename G::G0 get_g0(const G& grp, const nlohmann::json& j, std::string_view key) {
  return grp.decode_g0(base64_decode(get_string(j, key)));
}

template <PairingGroup G>
typename G::G1 get_g1(const G& grp, const nlohmann::json& j, std::string_view key) {
  return grp.decode_g1(base64_decode(get_string(j, key)));
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed object: ") + e.what());
  }
}

}  // namespace detail

template <PairingGroup G>
nlohmann::json to_json(const G& grp, const PublicKey<G>& pk) {
  return make_envelope(Role::kPublicKey, pk.descriptor,
                       {{"g", detail::put(grp, pk.g)},
                        {"h", detail::put(grp, pk.h)},
                        {"f", detail::put(grp, pk.f)},
                        {"egg_alpha", detail::put_gt(grp, pk.egg_alpha)}});
}

template <PairingGroup G>
PublicKey<G> public_key_from_json(const G& grp, const nlohmann::json& j) {
  return detail::guarded([&] {
    const nlohmann::json& b = open_envelope(j, Role::kPublicKey, grp.descriptor());
    return PublicKey<G>{grp.descriptor(), detail::get_g0(grp, b, "g"),
                        detail::get_g0(grp, b, "h"), detail::get_g0(grp, b, "f"),
                        detail::get_g1(grp, b, "egg_alpha")};
  });
}

template <PairingGroup G>
nlohmann::json to_json(const G& grp, const MasterKey<G>& mk) {
  return make_envelope(
      Role::kMasterKey, mk.descriptor,
      {{"beta", base64_encode(grp.scalars().encode(mk.beta))},
       {"g_alpha", detail::put(grp, mk.g_alpha)}});
}

template <PairingGroup G>
MasterKey<G> master_key_from_json(const G& grp, const nlohmann::json& j) {
  return detail::guarded([&] {
    const nlohmann::json& b = open_envelope(j, Role::kMasterKey, grp.descriptor());
    Scalar beta = grp.scalars().decode(base64_decode(detail::get_string(b, "beta")));
    if (beta.value == 0) throw FormatError("master key has beta = 0");
    return MasterKey<G>{grp.descriptor(), std::move(beta),
                        detail::get_g0(grp, b, "g_alpha")};
  });
}

template <PairingGroup G>
nlohmann::json to_json(const G& grp, const UserKey<G>& uk) {
  nlohmann::json comps = nlohmann::json::object();
  for (const auto& [a, c] : uk.components) {
    comps[a] = {{"d", detail::put(grp, c.d)}, {"d_prime", detail::put(grp, c.d_prime)}};
  }
  return make_envelope(Role::kUserKey, uk.descriptor,
                       {{"dims", uk.dims.sizes()},
                        {"d", detail::put(grp, uk.d)},
                        {"components", std::move(comps)}});
}

template <PairingGroup G>
UserKey<G> user_key_from_json(const G& grp, const nlohmann::json& j) {
  return detail::guarded([&] {
    const nlohmann::json& b = open_envelope(j, Role::kUserKey, grp.descriptor());
    Dimensions dims = [&] {
      try {
        return Dimensions(detail::get_field(b, "dims").get<std::vector<int>>());
      } catch (const ValidationError& e) {
        throw FormatError(std::string("user key: ") + e.what());
      }
    }();
    UserKey<G> uk{grp.descriptor(), std::move(dims), detail::get_g0(grp, b, "d"), {}};
    const nlohmann::json& comps = detail::get_field(b, "components");
    if (!comps.is_object()) throw FormatError("user key: components must be an object");
    for (const auto& [a, c] : comps.items()) {
      if (a.empty()) throw FormatError("user key: empty attribute label");
      uk.components.emplace(a, KeyComponent<G>{detail::get_g0(grp, c, "d"),
                                               detail::get_g0(grp, c, "d_prime")});
    }
    if (!is_subset(structural_attributes(uk.dims).all(), uk.attributes())) {
      throw FormatError("user key: missing structural components");
    }
    return uk;
  });
}

template <PairingGroup G>
nlohmann::json to_json(const G& grp, const Ciphertext<G>& ct) {
  nlohmann::json leaves = nlohmann::json::array();
  for (const auto& [id, c] : ct.leaves) {
    leaves.push_back({{"node", id},
                      {"e", detail::put(grp, c.e)},
                      {"e_prime", detail::put(grp, c.e_prime)}});
  }
  nlohmann::json keys = nlohmann::json::object();
  for (const auto& [coord, c] : ct.key_nodes) {
    keys[coord.to_string()] = {{"c_tilde", detail::put_gt(grp, c.c_tilde)},
                               {"c", detail::put(grp, c.c)}};
  }
  return make_envelope(Role::kCiphertext, ct.descriptor,
                       {{"tree", tree_to_json(ct.tree)},
                        {"leaves", std::move(leaves)},
                        {"key_nodes", std::move(keys)}});
}

template <PairingGroup G>
Ciphertext<G> ciphertext_from_json(const G& grp, const nlohmann::json& j) {
  return detail::guarded([&] {
    const nlohmann::json& b = open_envelope(j, Role::kCiphertext, grp.descriptor());
    Ciphertext<G> ct{grp.descriptor(), tree_from_json(detail::get_field(b, "tree")),
                     {}, {}};
    for (const auto& leaf : detail::get_field(b, "leaves")) {
      const NodeId id = detail::get_field(leaf, "node").get<NodeId>();
      if (id >= ct.tree.nodes().size() || !ct.tree.node(id).is_leaf()) {
        throw FormatError("ciphertext: leaf component for a non-leaf node");
      }
      if (!ct.leaves.emplace(id, LeafComponent<G>{detail::get_g0(grp, leaf, "e"),
                                                  detail::get_g0(grp, leaf, "e_prime")})
               .second) {
        throw FormatError("ciphertext: duplicate leaf component");
      }
    }
    if (ct.leaves.size() != ct.tree.leaf_count()) {
      throw FormatError("ciphertext: leaf components do not match the tree");
    }
    const nlohmann::json& keys = detail::get_field(b, "key_nodes");
    if (!keys.is_object()) throw FormatError("ciphertext: key_nodes must be an object");
    for (const auto& [name, c] : keys.items()) {
      LayerCoord coord = [&] {
        try {
          return LayerCoord::parse(name);
        } catch (const ValidationError& e) {
          throw FormatError(std::string("ciphertext: ") + e.what());
        }
      }();
      if (!ct.tree.key_nodes().contains(coord)) {
        throw FormatError("ciphertext: component for unknown layer " + name);
      }
      ct.key_nodes.emplace(coord, KeyNodeComponent<G>{detail::get_g1(grp, c, "c_tilde"),
                                                      detail::get_g0(grp, c, "c")});
    }
    if (ct.key_nodes.size() != ct.tree.key_nodes().size()) {
      throw FormatError("ciphertext: key-node components do not match the tree");
    }
    return ct;
  });
}

}  // namespace scpabe

#endif  // SCPABE_SERIALIZATION_H_
