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

#ifndef SCPABE_POLICY_DOCUMENT_H_
#define SCPABE_POLICY_DOCUMENT_H_

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "scpabe/policy_lattice.h"

namespace scpabe {

// Policy document: {"dims": [n_1, ..., n_k],
//                   "layers": {"c_1,...,c_k": [attribute, ...], ...}}
// Parsing validates the lattice; failures raise ValidationError carrying the
// violation report. Structural problems (bad JSON, wrong field types) raise
// FormatError.
PolicyLattice parse_policy_document(std::string_view text);
PolicyLattice policy_from_json(const nlohmann::json& j);
PolicyLattice load_policy_document(const std::filesystem::path& path);

nlohmann::json policy_to_json(const PolicyLattice& lat);
std::string dump_policy_document(const PolicyLattice& lat);

}  // namespace scpabe

#endif  // SCPABE_POLICY_DOCUMENT_H_
