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

#ifndef SCPABE_MEDIA_VAULT_H_
#define SCPABE_MEDIA_VAULT_H_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "scpabe/codec.h"
#include "scpabe/errors.h"
#include "scpabe/file_io.h"
#include "scpabe/policy_document.h"
#include "scpabe/policy_lattice.h"
#include "scpabe/random.h"
#include "scpabe/scheme.h"
#include "scpabe/serialization.h"
#include "scpabe/symmetric.h"

namespace scpabe {

inline constexpr std::string_view kPackageFormat = "scpabe-media";
inline constexpr int kPackageVersion = 1;
inline constexpr std::string_view kContentKeyInfo = "scpabe/content-key/v1";
inline constexpr std::string_view kManifestName = "manifest";

// AEAD output for one layer. On disk: nonce (12) || ciphertext || tag (16).
struct SealedLayer {
  Nonce nonce{};
  Bytes ciphertext;
  Tag tag{};

  Bytes to_bytes() const;
  // Throws FormatError when shorter than nonce + tag.
  static SealedLayer from_bytes(std::span<const std::uint8_t> bytes);
  friend bool operator==(const SealedLayer&, const SealedLayer&) = default;
};

// "layer-1_2".
std::string layer_file_name(const LayerCoord& c);

// Associated data binding a record to its layer and to the exact ciphertext
// that wraps its key, so no manifest byte can change undetected.
Bytes layer_aad(std::string_view canonical_ciphertext, const LayerCoord& c);

// HKDF-SHA256 over the canonical G1 encoding.
ContentKey content_key_from_encoding(std::span<const std::uint8_t> encoding);

template <PairingGroup G>
ContentKey derive_content_key(const G& grp, const typename G::G1& m) {
  return content_key_from_encoding(grp.encode(m));
}

template <PairingGroup G>
struct MediaPackage {
  PolicyLattice policy;
  Ciphertext<G> ciphertext;
  std::map<LayerCoord, SealedLayer> records;
};

struct UnpackResult {
  std::map<LayerCoord, Bytes> layers;
  // Layers the key is entitled to whose records failed authentication.
  std::vector<LayerCoord> tampered;
};

template <PairingGroup G>
std::string canonical_ciphertext(const G& grp, const Ciphertext<G>& ct) {
  return to_json(grp, ct).dump();
}

// Requires exactly one payload per lattice coordinate. Draws one G1 element
// per layer in coordinate order, then the ciphertext randomness, then the
// nonces.
template <PairingGroup G>
MediaPackage<G> package(const Scheme<G>& scheme, const PublicKey<G>& pk,
                        const PolicyLattice& lat,
                        const std::map<LayerCoord, Bytes>& payloads,
                        RandomSource& rng) {
  require_valid(lat);
  for (const auto& c : lat.dims().coords()) {
    if (!payloads.contains(c)) {
      throw ValidationError("no payload for layer (" + c.to_string() + ")");
    }
  }
  if (payloads.size() != lat.dims().layer_count()) {
    throw ValidationError("payload given for a layer outside the lattice");
  }
  const G& grp = scheme.group();
  std::map<LayerCoord, typename G::G1> messages;
  for (const auto& c : lat.dims().coords()) messages.emplace(c, grp.random_gt(rng));
  MediaPackage<G> pkg{lat, scheme.encrypt(pk, lat, messages, rng), {}};

  const std::string ct_text = canonical_ciphertext(grp, pkg.ciphertext);
  std::set<Nonce> used;
  for (const auto& [c, m] : messages) {
    Nonce nonce;
    do {
      rng.fill(nonce);
    } while (!used.insert(nonce).second);
    Sealed sealed = aead_seal(derive_content_key(grp, m), nonce,
                              layer_aad(ct_text, c), payloads.at(c));
    pkg.records.emplace(c, SealedLayer{nonce, std::move(sealed.ciphertext), sealed.tag});
  }
  return pkg;
}

// Convenience overload for callers holding a payload list; rejects
// duplicate coordinates.
template <PairingGroup G>
MediaPackage<G> package(const Scheme<G>& scheme, const PublicKey<G>& pk,
                        const PolicyLattice& lat,
                        const std::vector<std::pair<LayerCoord, Bytes>>& payloads,
                        RandomSource& rng) {
  std::map<LayerCoord, Bytes> by_coord;
  for (const auto& [c, bytes] : payloads) {
    if (!by_coord.emplace(c, bytes).second) {
      throw ValidationError("duplicate payload for layer (" + c.to_string() + ")");
    }
  }
  return package(scheme, pk, lat, by_coord, rng);
}

// Opens every layer the key is entitled to. Records that fail
// authentication are listed in `tampered` rather than returned.
template <PairingGroup G>
UnpackResult unpackage(const Scheme<G>& scheme, const PublicKey<G>& pk,
                       const UserKey<G>& uk, const MediaPackage<G>& pkg) {
  const G& grp = scheme.group();
  UnpackResult out;
  const auto messages = scheme.decrypt(pk, uk, pkg.ciphertext);
  if (messages.empty()) return out;
  const std::string ct_text = canonical_ciphertext(grp, pkg.ciphertext);
  for (const auto& [c, m] : messages) {
    auto rec = pkg.records.find(c);
    if (rec == pkg.records.end()) {
      out.tampered.push_back(c);
      continue;
    }
    try {
      out.layers.emplace(c, aead_open(derive_content_key(grp, m), rec->second.nonce,
                                      layer_aad(ct_text, c), rec->second.ciphertext,
                                      rec->second.tag));
    } catch (const AuthenticationError&) {
      out.tampered.push_back(c);
    }
  }
  return out;
}

nlohmann::json make_manifest(const PolicyLattice& lat, nlohmann::json ciphertext);

// Checks the manifest header and returns the policy and the embedded
// ciphertext envelope. Throws FormatError.
std::pair<PolicyLattice, nlohmann::json> parse_manifest(const nlohmann::json& manifest);

// Reads the group descriptor from a package's manifest.
GroupDescriptor package_descriptor(const std::filesystem::path& dir);

// Layer records first, manifest last. Throws IoError.
template <PairingGroup G>
void write_package(const std::filesystem::path& dir, const G& grp,
                   const MediaPackage<G>& pkg) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  for (const auto& [c, rec] : pkg.records) {
    write_file_atomic(dir / layer_file_name(c), rec.to_bytes());
  }
  write_file_atomic(dir / kManifestName,
                    dump_json(make_manifest(pkg.policy, to_json(grp, pkg.ciphertext))));
}

// Throws IoError, FormatError or ProviderMismatchError.
template <PairingGroup G>
MediaPackage<G> read_package(const std::filesystem::path& dir, const G& grp) {
  auto [policy, ct_json] = parse_manifest(parse_json(read_file(dir / kManifestName)));
  Ciphertext<G> ct = ciphertext_from_json(grp, ct_json);
  if (!(ct.tree == build_tree(policy))) {
    throw FormatError("package: ciphertext tree does not match the manifest policy");
  }
  MediaPackage<G> pkg{std::move(policy), std::move(ct), {}};
  for (const auto& c : pkg.policy.dims().coords()) {
    const std::string raw = read_file(dir / layer_file_name(c));
    pkg.records.emplace(c, SealedLayer::from_bytes(as_bytes(raw)));
  }
  return pkg;
}

}  // namespace scpabe

#endif  // SCPABE_MEDIA_VAULT_H_
