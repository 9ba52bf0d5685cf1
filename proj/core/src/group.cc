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

#include "scpabe/group.h"

#include <string>

#include "scpabe/errors.h"

namespace scpabe {

std::string_view provider_name(ProviderId id) {
  switch (id) {
    case ProviderId::kTypeA:
      return "type-a";
    case ProviderId::kTransparent:
      return "transparent";
  }
  return "unknown";
}

ProviderId parse_provider(std::string_view name) {
  if (name == "type-a") return ProviderId::kTypeA;
  if (name == "transparent") return ProviderId::kTransparent;
  throw ValidationError("unknown provider '" + std::string(name) + "'");
}

void require_same_group(const GroupDescriptor& expected,
                        const GroupDescriptor& actual, std::string_view what) {
  if (!(expected == actual)) {
    throw ProviderMismatchError(std::string(what) + ": group mismatch (" +
                                std::string(provider_name(expected.provider)) +
                                " vs " +
                                std::string(provider_name(actual.provider)) + ")");
  }
}

}  // namespace scpabe
