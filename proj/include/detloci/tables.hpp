#pragma once

#include "detloci/config.hpp"

#include <string>
#include <vector>

namespace detloci {

struct TableCell {
  std::string column;
  Integer expected;
  Integer computed;
  bool matches() const { return expected == computed; }
};

struct TableRow {
  std::string label;
  std::string note;
  InstanceConfig config;
  std::vector<TableCell> cells;
};

struct TableResult {
  std::string name;
  std::string caption;
  std::vector<TableRow> rows;
  int mismatches() const;
};

std::vector<std::string> table_names();

/// Evaluates every built-in row of a published table. Throws InputError for
/// an unknown name.
TableResult evaluate_table(const std::string& name);

std::string render_table(const TableResult& table);
nlohmann::json to_json(const TableResult& table);

}  // namespace detloci
