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

#include "scpabe/media_vault.h"

#include <algorithm>

namespace scpabe {

Bytes SealedLayer::to_bytes() const {
  Bytes out(nonce.begin(), nonce.end());
  out.insert(out.end(), ciphertext.begin(), ciphertext.end());
  out.insert(out.end(), tag.begin(), tag.end());
  return out;
}

SealedLayer SealedLayer::from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < sizeof(Nonce) + sizeof(Tag)) {
    throw FormatError("layer record too short");
  }
  SealedLayer rec;
  std::copy_n(bytes.begin(), rec.nonce.size(), rec.nonce.begin());
  rec.ciphertext.assign(bytes.begin() + rec.nonce.size(),
                        bytes.end() - rec.tag.size());
  std::copy(bytes.end() - rec.tag.size(), bytes.end(), rec.tag.begin());
  return rec;
}

std::string layer_file_name(const LayerCoord& c) { return "layer-" + c.file_tag(); }

Bytes layer_aad(std::string_view canonical_ciphertext, const LayerCoord& c) {
  const std::string text = "scpabe/layer/v1|" +
                           hex_encode(sha256(canonical_ciphertext)) + "|" +
                           c.to_string();
  return Bytes(text.begin(), text.end());
}

ContentKey content_key_from_encoding(std::span<const std::uint8_t> encoding) {
  return hkdf_sha256(encoding, kContentKeyInfo);
}

nlohmann::json make_manifest(const PolicyLattice& lat, nlohmann::json ciphertext) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& c : lat.dims().coords()) layers.push_back(layer_file_name(c));
  return {{"format", std::string(kPackageFormat)},
          {"version", kPackageVersion},
          {"kdf", std::string(kKdfName)},
          {"aead", std::string(kAeadName)},
          {"dims", lat.dims().sizes()},
          {"policy", policy_to_json(lat)},
          {"ciphertext", std::move(ciphertext)},
          {"layers", std::move(layers)}};
}

std::pair<PolicyLattice, nlohmann::json> parse_manifest(const nlohmann::json& m) {
  if (detail::get_string(m, "format") != kPackageFormat) {
    throw FormatError("not a media package manifest");
  }
  const nlohmann::json& version = detail::get_field(m, "version");
  if (!version.is_number_integer() || version.get<long long>() != kPackageVersion) {
    throw FormatError("unsupported package version " + version.dump());
  }
  if (detail::get_string(m, "kdf") != kKdfName) {
    throw FormatError("unsupported KDF '" + detail::get_string(m, "kdf") + "'");
  }
  if (detail::get_string(m, "aead") != kAeadName) {
    throw FormatError("unsupported AEAD '" + detail::get_string(m, "aead") + "'");
  }
  PolicyLattice lat = [&] {
    try {
      return policy_from_json(detail::get_field(m, "policy"));
    } catch (const ValidationError& e) {
      throw FormatError(std::string("manifest policy: ") + e.what());
    }
  }();
  try {
    if (detail::get_field(m, "dims").get<std::vector<int>>() != lat.dims().sizes()) {
      throw FormatError("manifest dims disagree with its policy");
    }
    std::vector<std::string> expect;
    for (const auto& c : lat.dims().coords()) expect.push_back(layer_file_name(c));
    if (detail::get_field(m, "layers").get<std::vector<std::string>>() != expect) {
      throw FormatError("manifest layer list disagrees with its policy");
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("manifest: ") + e.what());
  }
  return {std::move(lat), detail::get_field(m, "ciphertext")};
}

GroupDescriptor package_descriptor(const std::filesystem::path& dir) {
  const nlohmann::json m = parse_json(read_file(dir / kManifestName));
  return envelope_descriptor(parse_manifest(m).second, Role::kCiphertext);
}

}  // namespace scpabe
