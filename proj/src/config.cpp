#include "detloci/config.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

namespace detloci {

using nlohmann::json;

namespace {

void reject_unknown(const json& object, const std::string& path,
                    const std::set<std::string>& allowed) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.count(key)) throw ConfigError(path + "." + key, "unknown field");
  }
}

const json& require(const json& object, const std::string& path,
                    const std::string& key) {
  auto it = object.find(key);
  if (it == object.end()) throw ConfigError(path + "." + key, "missing field");
  return *it;
}

int parse_int(const json& value, const std::string& path) {
  if (!value.is_number_integer()) throw ConfigError(path, "expected an integer");
  const auto v = value.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ConfigError(path, "integer out of range");
  }
  return static_cast<int>(v);
}

std::vector<int> parse_int_list(const json& value, const std::string& path) {
  if (!value.is_array()) throw ConfigError(path, "expected an array of integers");
  std::vector<int> out;
  for (size_t i = 0; i < value.size(); ++i) {
    out.push_back(parse_int(value[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::vector<int>> parse_bundle(const json& value,
                                           const std::string& path,
                                           size_t factors) {
  if (!value.is_array() || value.empty()) {
    throw ConfigError(path, "expected a nonempty array of multidegrees");
  }
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < value.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    std::vector<int> degree = parse_int_list(value[i], at);
    if (degree.size() != factors) {
      throw ConfigError(at, "multidegree needs " + std::to_string(factors) +
                                " entries, one per projective factor");
    }
    out.push_back(std::move(degree));
  }
  return out;
}

bool parse_bool(const json& value, const std::string& path) {
  if (!value.is_boolean()) throw ConfigError(path, "expected a boolean");
  return value.get<bool>();
}

}  // namespace

InstanceConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("$", "expected an object");
  reject_unknown(doc, "$", {"name", "ambient", "E", "F", "polarization", "flags"});
  InstanceConfig config;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ConfigError("$.name", "expected a string");
    config.name = it->get<std::string>();
  }

  const json& ambient = require(doc, "$", "ambient");
  if (!ambient.is_object()) throw ConfigError("$.ambient", "expected an object");
  reject_unknown(ambient, "$.ambient", {"kind", "dims"});
  const json& kind = require(ambient, "$.ambient", "kind");
  if (!kind.is_string()) throw ConfigError("$.ambient.kind", "expected a string");
  config.ambient_kind = kind.get<std::string>();
  if (config.ambient_kind != "projective_space" &&
      config.ambient_kind != "product") {
    throw ConfigError("$.ambient.kind",
                      "must be \"projective_space\" or \"product\"");
  }
  config.dims = parse_int_list(require(ambient, "$.ambient", "dims"),
                               "$.ambient.dims");
  if (config.dims.empty()) throw ConfigError("$.ambient.dims", "must be nonempty");
  if (config.ambient_kind == "projective_space" && config.dims.size() != 1) {
    throw ConfigError("$.ambient.dims",
                      "projective_space takes exactly one dimension");
  }
  int total = 0;
  for (size_t i = 0; i < config.dims.size(); ++i) {
    if (config.dims[i] < 1) {
      throw ConfigError("$.ambient.dims[" + std::to_string(i) + "]",
                        "dimension must be positive");
    }
    total += config.dims[i];
  }
  if (total < 4) {
    throw ConfigError("$.ambient.dims", "total dimension must be at least 4");
  }

  const size_t factors = config.dims.size();
  config.e = parse_bundle(require(doc, "$", "E"), "$.E", factors);
  config.f = parse_bundle(require(doc, "$", "F"), "$.F", factors);
  if (config.e.size() != config.f.size()) {
    throw ConfigError("$.F", "E and F need the same number of summands");
  }
  if (config.e.size() < 2) {
    throw ConfigError("$.E", "rank must be at least 2");
  }
  if (auto it = doc.find("polarization"); it != doc.end()) {
    std::vector<int> h = parse_int_list(*it, "$.polarization");
    if (h.size() != factors) {
      throw ConfigError("$.polarization", "multidegree needs " +
                                              std::to_string(factors) +
                                              " entries");
    }
    config.polarization = std::move(h);
  }
  if (auto it = doc.find("flags"); it != doc.end()) {
    if (!it->is_object()) throw ConfigError("$.flags", "expected an object");
    reject_unknown(*it, "$.flags", {"assume_general", "allow_non_cy_c2"});
    if (auto g = it->find("assume_general"); g != it->end()) {
      config.assume_general = parse_bool(*g, "$.flags.assume_general");
    }
    if (auto c = it->find("allow_non_cy_c2"); c != it->end()) {
      config.allow_non_cy_c2 = parse_bool(*c, "$.flags.allow_non_cy_c2");
    }
  }
  return config;
}

InstanceConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("$", std::string("not valid JSON: ") + e.what());
  }
  return parse_config(doc);
}

InstanceConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("$", "cannot open " + file.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

json to_json(const InstanceConfig& config) {
  json doc = json::object();
  if (!config.name.empty()) doc["name"] = config.name;
  doc["ambient"] = {{"kind", config.ambient_kind}, {"dims", config.dims}};
  doc["E"] = config.e;
  doc["F"] = config.f;
  if (config.polarization) doc["polarization"] = *config.polarization;
  doc["flags"] = {{"assume_general", config.assume_general},
                  {"allow_non_cy_c2", config.allow_non_cy_c2}};
  return doc;
}

Ambient build_ambient(const InstanceConfig& config) {
  if (config.ambient_kind == "projective_space") {
    return make_projective_space(config.dims.at(0));
  }
  return make_product(config.dims);
}

Instance build_instance(const InstanceConfig& config) {
  const Ambient space = build_ambient(config);
  VirtualPair pair(BundleSpec::from_multidegrees(space, config.e),
                   BundleSpec::from_multidegrees(space, config.f));
  std::optional<ChowClass> h;
  if (config.polarization) h = space->divisor(*config.polarization);
  return Instance(std::move(pair), std::move(h));
}

InvariantReport evaluate(const InstanceConfig& config) {
  if (!config.assume_general) {
    throw GuardError("every invariant assumes an n-general morphism; set "
                     "flags.assume_general to true");
  }
  ReportOptions options;
  options.allow_non_cy_c2 = config.allow_non_cy_c2;
  return compute_report(build_instance(config), options);
}

json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<long long>::min() &&
      value <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(value);
  }
  return value.str();
}

json to_json(const InvariantReport& r) {
  json doc = json::object();
  doc["dimension"] = r.dimension;
  doc["n"] = r.n;
  doc["deg_sing"] = integer_json(r.deg_sing);
  doc["mu_IH"] = integer_json(r.mu_ih);
  doc["mu_IH_corollary"] =
      r.mu_ih_corollary ? integer_json(*r.mu_ih_corollary) : json(nullptr);
  doc["chi_smooth"] = integer_json(r.chi_smooth);
  doc["chi_IH"] = integer_json(r.chi_ih);
  doc["chi_Z"] = integer_json(r.chi_z);
  doc["odp_count"] = r.odp_count ? integer_json(*r.odp_count) : json(nullptr);
  if (r.intersection_numbers) {
    json table = json::array();
    const int d = r.dimension;
    for (int k = 0; k < static_cast<int>(r.intersection_numbers->size()); ++k) {
      table.push_back({{"H", k},
                       {"L", d - 1 - k},
                       {"value", integer_json((*r.intersection_numbers)[
                                     static_cast<size_t>(k)])}});
    }
    doc["intersection_numbers"] = std::move(table);
  } else {
    doc["intersection_numbers"] = nullptr;
  }
  if (r.c2_numbers) {
    doc["c2_numbers"] = {{"c2.H", integer_json(r.c2_numbers->with_h)},
                         {"c2.L", integer_json(r.c2_numbers->with_l)},
                         {"general_formula", r.c2_extension}};
  } else {
    doc["c2_numbers"] = nullptr;
  }
  doc["cy_condition"] = r.cy_condition;
  doc["warnings"] = r.warnings;
  return doc;
}

namespace {

std::string monomial_label(const char* symbol, int power) {
  if (power == 0) return "";
  std::string s = symbol;
  if (power > 1) s += "^" + std::to_string(power);
  return s;
}

std::string bundle_label(const std::vector<std::vector<int>>& summands) {
  std::ostringstream os;
  os << "O(";
  for (size_t i = 0; i < summands.size(); ++i) {
    if (i) os << ", ";
    if (summands[i].size() == 1) {
      os << summands[i][0];
    } else {
      os << '[';
      for (size_t j = 0; j < summands[i].size(); ++j) {
        if (j) os << ',';
        os << summands[i][j];
      }
      os << ']';
    }
  }
  os << ')';
  return os.str();
}

}  // namespace

std::string render_report(const InvariantReport& r, const InstanceConfig& config) {
  std::ostringstream os;
  auto row = [&os](const std::string& label, const std::string& value) {
    os << "  " << std::left << std::setw(28) << label << value << '\n';
  };
  os << (config.name.empty() ? "instance" : config.name) << '\n';
  std::ostringstream ambient;
  for (size_t i = 0; i < config.dims.size(); ++i) {
    if (i) ambient << " x ";
    ambient << "P^" << config.dims[i];
  }
  row("M", ambient.str());
  row("sigma", bundle_label(config.e) + " -> " + bundle_label(config.f));
  row("dim M, n", std::to_string(r.dimension) + ", " + std::to_string(r.n));
  row("Calabi-Yau condition", r.cy_condition ? "yes" : "no");
  row("int c_{d-4}(T_M)[D_{n-1}]", r.deg_sing.str());
  if (r.odp_count) row("# of ODPs", r.odp_count->str());
  row("mu_IH", r.mu_ih.str());
  if (r.mu_ih_corollary) row("mu_IH (corollary)", r.mu_ih_corollary->str());
  row("chi(M|L)", r.chi_smooth.str());
  row("chi_IH(D)", r.chi_ih.str());
  row("chi(Z)", r.chi_z.str());
  if (r.intersection_numbers) {
    const int d = r.dimension;
    for (int k = 0; k < d; ++k) {
      std::string label = monomial_label("L", d - 1 - k);
      const std::string hk = monomial_label("H", k);
      if (!label.empty() && !hk.empty()) label += ".";
      label += hk;
      row(label, (*r.intersection_numbers)[static_cast<size_t>(k)].str());
    }
  }
  if (r.c2_numbers) {
    row("L.c2(T_Z)", r.c2_numbers->with_l.str());
    row("H.c2(T_Z)", r.c2_numbers->with_h.str());
  }
  for (const std::string& w : r.warnings) os << "  note: " << w << '\n';
  return os.str();
}

}  // namespace detloci
