#include "schema_check.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <stdexcept>

namespace cmod::testkit {

using nlohmann::json;

namespace {

bool has_type(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  throw std::invalid_argument("unknown type " + t);
}

const std::set<std::string> kKnown = {"$schema", "$id", "title", "type", "const", "enum", "properties",
                                      "required", "additionalProperties", "items", "minItems", "maxItems",
                                      "minimum", "exclusiveMinimum", "pattern", "anyOf", "allOf", "if",
                                      "then", "else", "$ref", "definitions"};

}  // namespace

SchemaCheck::SchemaCheck(json schema) : root_(std::move(schema)) {}

SchemaCheck SchemaCheck::from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return SchemaCheck(json::parse(f));
}

std::vector<std::string> SchemaCheck::validate(const json& instance) const {
  std::vector<std::string> out;
  check(root_, instance, "$", out);
  return out;
}

const json& SchemaCheck::resolve(const std::string& ref) const {
  const std::string prefix = "#/definitions/";
  if (ref.rfind(prefix, 0) != 0) throw std::invalid_argument("unsupported $ref " + ref);
  return root_.at("definitions").at(ref.substr(prefix.size()));
}

void SchemaCheck::check(const json& s, const json& v, const std::string& at, std::vector<std::string>& out) const {
  for (const auto& [key, _] : s.items())
    if (!kKnown.count(key)) out.push_back(at + ": unsupported schema keyword " + key);
  auto fail = [&](const std::string& m) { out.push_back(at + ": " + m); };

  if (s.contains("$ref")) check(resolve(s["$ref"]), v, at, out);
  if (s.contains("type") && !has_type(v, s["type"])) {
    fail("expected " + s["type"].get<std::string>());
    return;
  }
  if (s.contains("const") && v != s["const"]) fail("expected constant " + s["const"].dump());
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) fail("value " + v.dump() + " not in enum");
  }
  if (v.is_number()) {
    double x = v.get<double>();
    if (s.contains("minimum") && x < s["minimum"].get<double>()) fail("below minimum");
    if (s.contains("exclusiveMinimum") && x <= s["exclusiveMinimum"].get<double>()) fail("not above minimum");
  }
  if (v.is_string() && s.contains("pattern") &&
      !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
    fail("string '" + v.get<std::string>() + "' does not match " + s["pattern"].get<std::string>());
  if (v.is_array()) {
    if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) fail("too few items");
    if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) fail("too many items");
    if (s.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i) check(s["items"], v[i], at + "[" + std::to_string(i) + "]", out);
  }
  if (v.is_object()) {
    if (s.contains("required"))
      for (const auto& r : s["required"])
        if (!v.contains(r.get<std::string>())) fail("missing " + r.get<std::string>());
    const json* props = s.contains("properties") ? &s["properties"] : nullptr;
    for (const auto& [key, val] : v.items()) {
      if (props && props->contains(key)) {
        check((*props)[key], val, at + "." + key, out);
      } else if (s.contains("additionalProperties")) {
        const json& ap = s["additionalProperties"];
        if (ap.is_boolean()) {
          if (!ap.get<bool>()) fail("unexpected property " + key);
        } else {
          check(ap, val, at + "." + key, out);
        }
      }
    }
  }
  if (s.contains("allOf"))
    for (const auto& sub : s["allOf"]) check(sub, v, at, out);
  if (s.contains("anyOf")) {
    bool any = false;
    for (const auto& sub : s["anyOf"]) {
      std::vector<std::string> tmp;
      check(sub, v, at, tmp);
      any = any || tmp.empty();
    }
    if (!any) fail("no anyOf branch matches");
  }
  if (s.contains("if")) {
    std::vector<std::string> tmp;
    check(s["if"], v, at, tmp);
    if (tmp.empty()) {
      if (s.contains("then")) check(s["then"], v, at, out);
    } else if (s.contains("else")) {
      check(s["else"], v, at, out);
    }
  }
}

}  // namespace cmod::testkit
