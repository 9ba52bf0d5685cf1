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

#include "scpabe/serialization.h"

#include <string>

#include "scpabe/errors.h"

namespace scpabe {

namespace {

constexpr Role kRoles[] = {Role::kPublicKey, Role::kMasterKey, Role::kUserKey,
                           Role::kCiphertext};

std::size_t get_size(const nlohmann::json& j, std::string_view key) {
  const nlohmann::json& v = detail::get_field(j, key);
  if (!v.is_number_unsigned()) {
    throw FormatError("field '" + std::string(key) + "' must be an unsigned integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

std::string_view role_name(Role role) {
  switch (role) {
    case Role::kPublicKey:
      return "pk";
    case Role::kMasterKey:
      return "mk";
    case Role::kUserKey:
      return "sk";
    case Role::kCiphertext:
      return "ct";
  }
  return "?";
}

namespace detail {

const nlohmann::json& get_field(const nlohmann::json& j, std::string_view key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError("missing field '" + std::string(key) + "'");
  return *it;
}

std::string get_string(const nlohmann::json& j, std::string_view key) {
  const nlohmann::json& v = get_field(j, key);
  if (!v.is_string()) {
    throw FormatError("field '" + std::string(key) + "' must be a string");
  }
  return v.get<std::string>();
}

}  // namespace detail

nlohmann::json descriptor_to_json(const GroupDescriptor& d) {
  return {{"provider", std::string(provider_name(d.provider))},
          {"order", d.order.get_str(16)},
          {"parameters", d.parameters},
          {"generator", base64_encode(d.generator)},
          {"scalar_bytes", d.scalar_bytes},
          {"g0_bytes", d.g0_bytes},
          {"g1_bytes", d.g1_bytes}};
}

GroupDescriptor descriptor_from_json(const nlohmann::json& j) {
  GroupDescriptor d;
  try {
    d.provider = parse_provider(detail::get_string(j, "provider"));
  } catch (const ValidationError& e) {
    throw FormatError(e.what());
  }
  const std::string order = detail::get_string(j, "order");
  if (order.empty() || d.order.set_str(order, 16) != 0 || d.order <= 1) {
    throw FormatError("group descriptor: malformed order");
  }
  d.parameters = detail::get_string(j, "parameters");
  d.generator = base64_decode(detail::get_string(j, "generator"));
  d.scalar_bytes = get_size(j, "scalar_bytes");
  d.g0_bytes = get_size(j, "g0_bytes");
  d.g1_bytes = get_size(j, "g1_bytes");
  return d;
}

nlohmann::json make_envelope(Role role, const GroupDescriptor& d,
                             nlohmann::json body) {
  return {{"format", std::string(kFormatName)},
          {"version", kFormatVersion},
          {"role", std::string(role_name(role))},
          {"group", descriptor_to_json(d)},
          {"body", std::move(body)}};
}

GroupDescriptor envelope_descriptor(const nlohmann::json& envelope, Role role) {
  if (detail::get_string(envelope, "format") != kFormatName) {
    throw FormatError("not an scpabe object");
  }
  const nlohmann::json& version = detail::get_field(envelope, "version");
  if (!version.is_number_integer() || version.get<long long>() != kFormatVersion) {
    throw FormatError("unsupported format version " + version.dump());
  }
  const std::string found = detail::get_string(envelope, "role");
  if (found != role_name(role)) {
    bool known = false;
    for (Role r : kRoles) known = known || found == role_name(r);
    throw FormatError(known ? "expected a '" + std::string(role_name(role)) +
                                  "' object, found '" + found + "'"
                            : "unknown object role '" + found + "'");
  }
  return descriptor_from_json(detail::get_field(envelope, "group"));
}

const nlohmann::json& open_envelope(const nlohmann::json& envelope, Role role,
                                    const GroupDescriptor& expected) {
  require_same_group(expected, envelope_descriptor(envelope, role),
                     role_name(role));
  const nlohmann::json& body = detail::get_field(envelope, "body");
  if (!body.is_object()) throw FormatError("body must be an object");
  return body;
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace scpabe
