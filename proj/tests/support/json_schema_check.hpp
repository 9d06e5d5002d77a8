// Minimal structural JSON-schema checker covering the subset used by the
// shipped schemas: type (string or list), enum, required, properties, items.
#pragma once

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace mholo_test {

using nlohmann::json;

inline bool type_matches(const json& instance, const std::string& type) {
  if (type == "object") return instance.is_object();
  if (type == "array") return instance.is_array();
  if (type == "string") return instance.is_string();
  if (type == "integer") return instance.is_number_integer();
  if (type == "number") return instance.is_number();
  if (type == "boolean") return instance.is_boolean();
  if (type == "null") return instance.is_null();
  return false;
}

inline void schema_check(const json& instance, const json& schema,
                         const std::string& path,
                         std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const json& type = schema["type"];
    bool ok = false;
    if (type.is_string()) {
      ok = type_matches(instance, type.get<std::string>());
    } else {
      for (const auto& t : type) {
        ok = ok || type_matches(instance, t.get<std::string>());
      }
    }
    if (!ok) {
      errors.push_back(path + ": type mismatch, got " +
                       std::string(instance.type_name()));
      return;
    }
  }
  if (instance.is_null()) return;  // nullable fields carry no structure
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& v : schema["enum"]) ok = ok || v == instance;
    if (!ok) errors.push_back(path + ": value not in enum");
  }
  if (instance.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!instance.contains(key.get<std::string>())) {
          errors.push_back(path + ": missing required key " +
                           key.get<std::string>());
        }
      }
    }
    if (schema.contains("properties")) {
      for (const auto& [key, sub] : schema["properties"].items()) {
        if (instance.contains(key)) {
          schema_check(instance[key], sub, path + "/" + key, errors);
        }
      }
    }
  }
  if (instance.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < instance.size(); ++i) {
      schema_check(instance[i], schema["items"],
                   path + "[" + std::to_string(i) + "]", errors);
    }
  }
}

inline std::vector<std::string> validate_against_schema_file(
    const json& instance, const std::string& schema_path) {
  std::ifstream in(schema_path);
  std::vector<std::string> errors;
  if (!in) {
    errors.push_back("cannot open schema file " + schema_path);
    return errors;
  }
  json schema = json::parse(in);
  schema_check(instance, schema, "$", errors);
  return errors;
}

}  // namespace mholo_test
