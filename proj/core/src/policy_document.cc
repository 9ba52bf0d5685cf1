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

#include "scpabe/policy_document.h"

#include "scpabe/errors.h"
#include "scpabe/file_io.h"

namespace scpabe {

PolicyLattice policy_from_json(const nlohmann::json& j) {
  std::vector<int> sizes;
  std::map<LayerCoord, AccessPolicy> layers;
  try {
    sizes = j.at("dims").get<std::vector<int>>();
    for (const auto& [key, attrs] : j.at("layers").items()) {
      LayerCoord c = LayerCoord::parse(key);
      auto list = attrs.get<std::vector<std::string>>();
      AttributeSet set(list.begin(), list.end());
      if (!layers.emplace(c, AccessPolicy(std::move(set))).second) {
        throw ValidationError("duplicate layer (" + c.to_string() + ")");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("policy document: ") + e.what());
  }
  PolicyLattice lat(Dimensions(std::move(sizes)), std::move(layers));
  require_valid(lat);
  return lat;
}

PolicyLattice parse_policy_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("policy document: ") + e.what());
  }
  return policy_from_json(j);
}

PolicyLattice load_policy_document(const std::filesystem::path& path) {
  return parse_policy_document(read_file(path));
}

nlohmann::json policy_to_json(const PolicyLattice& lat) {
  nlohmann::json layers = nlohmann::json::object();
  for (const auto& [c, p] : lat.policies()) {
    layers[c.to_string()] = std::vector<std::string>(p.attributes().begin(),
                                                     p.attributes().end());
  }
  return nlohmann::json{{"dims", lat.dims().sizes()}, {"layers", std::move(layers)}};
}

std::string dump_policy_document(const PolicyLattice& lat) {
  return policy_to_json(lat).dump(2) + "\n";
}

}  // namespace scpabe
