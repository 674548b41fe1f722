#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace cmod::testkit {

/// Validator for the draft-07 subset used by the shipped report schema. Unknown
/// keywords are reported as errors so the subset cannot silently drift.
class SchemaCheck {
 public:
  explicit SchemaCheck(nlohmann::json schema);
  static SchemaCheck from_file(const std::string& path);

  /// Empty when the instance validates; otherwise one message per violation.
  std::vector<std::string> validate(const nlohmann::json& instance) const;

 private:
  void check(const nlohmann::json& s, const nlohmann::json& v, const std::string& at,
             std::vector<std::string>& out) const;
  const nlohmann::json& resolve(const std::string& ref) const;

  nlohmann::json root_;
};

}  // namespace cmod::testkit
