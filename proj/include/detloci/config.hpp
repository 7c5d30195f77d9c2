#pragma once

#include "detloci/invariants.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace detloci {

/// Declarative description of one instance. Fields of the JSON document:
///
///   name          optional string label
///   ambient       {"kind": "projective_space" | "product", "dims": [...]}
///   E, F          lists of multidegree vectors, one per line-bundle summand
///   polarization  optional multidegree vector for H_M
///   flags         optional {"assume_general": bool, "allow_non_cy_c2": bool}
///
/// Unknown keys are rejected.
struct InstanceConfig {
  std::string name;
  std::string ambient_kind = "projective_space";
  std::vector<int> dims;
  std::vector<std::vector<int>> e;
  std::vector<std::vector<int>> f;
  std::optional<std::vector<int>> polarization;
  bool assume_general = true;
  bool allow_non_cy_c2 = false;

  friend bool operator==(const InstanceConfig&, const InstanceConfig&) = default;
};

/// Schema violation, carrying the offending field path.
class ConfigError : public InputError {
 public:
  ConfigError(const std::string& path, const std::string& message)
      : InputError(path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

InstanceConfig parse_config(const nlohmann::json& doc);
InstanceConfig parse_config_text(const std::string& text);
InstanceConfig load_config(const std::filesystem::path& file);
nlohmann::json to_json(const InstanceConfig& config);

Ambient build_ambient(const InstanceConfig& config);
Instance build_instance(const InstanceConfig& config);

/// Evaluates a config: guard checks on the flags, then compute_report.
InvariantReport evaluate(const InstanceConfig& config);

nlohmann::json to_json(const InvariantReport& report);
std::string render_report(const InvariantReport& report,
                          const InstanceConfig& config);

/// Integers as JSON numbers when they fit in 64 bits, strings otherwise.
nlohmann::json integer_json(const Integer& value);

}  // namespace detloci
