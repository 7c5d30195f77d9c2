#include "detloci/tables.hpp"

#include <functional>
#include <future>
#include <iomanip>
#include <sstream>

namespace detloci {

namespace {

struct GoldenRow {
  std::string label;
  std::string note;
  InstanceConfig config;
  std::vector<std::pair<std::string, long long>> expected;
};

struct GoldenTable {
  std::string caption;
  std::function<std::vector<TableCell>(const InvariantReport&,
                                       const GoldenRow&)> extract;
  std::vector<GoldenRow> rows;
};

InstanceConfig p4_config(std::string name, std::vector<int> e,
                         std::vector<int> f, bool polarized) {
  InstanceConfig c;
  c.name = std::move(name);
  c.ambient_kind = "projective_space";
  c.dims = {4};
  for (int a : e) c.e.push_back({a});
  for (int b : f) c.f.push_back({b});
  if (polarized) c.polarization = std::vector<int>{1};
  return c;
}

Integer lookup(const InvariantReport& r, const std::string& column) {
  const auto& in = *r.intersection_numbers;
  if (column == "L^3") return in.at(0);
  if (column == "L^2.H") return in.at(1);
  if (column == "L.H^2") return in.at(2);
  if (column == "H^3") return in.at(3);
  if (column == "L.c2(T_Z)") return r.c2_numbers->with_l;
  if (column == "H.c2(T_Z)") return r.c2_numbers->with_h;
  if (column == "# of ODPs") return *r.odp_count;
  throw InternalError("unknown table column " + column);
}

std::vector<TableCell> golden_cells(const InvariantReport& r,
                                    const GoldenRow& row) {
  std::vector<TableCell> cells;
  for (const auto& [column, value] : row.expected) {
    cells.push_back({column, Integer(value), lookup(r, column)});
  }
  return cells;
}

GoldenTable table1() {
  // Quintic in P^4 from O(-1)^3 + O(-2) -> O^4, H the hyperplane class.
  // Expected: L^3, L^2.H, L.H^2, H^3, L.c2, H.c2, nodes.
  GoldenRow row{"O(-1,-1,-1,-2) -> O(0,0,0,0)", "quintic",
                p4_config("table1", {-1, -1, -1, -2}, {0, 0, 0, 0}, true),
                {{"L^3", 2},
                 {"L^2.H", 7},
                 {"L.H^2", 9},
                 {"H^3", 5},
                 {"L.c2(T_Z)", 44},
                 {"H.c2(T_Z)", 50},
                 {"# of ODPs", 46}}};
  return {"Intersection numbers on Z for the 46-nodal quintic", golden_cells,
          {row}};
}

GoldenTable table2() {
  // Nodal quartics in P^4, one row per special surface.
  std::vector<GoldenRow> rows = {
      {"O(0, 0) -> O(1, 3)", "a plane",
       p4_config("table2 row 1", {0, 0}, {1, 3}, false), {{"# of ODPs", 9}}},
      {"O(-1, 0) -> O(1, 2)", "a quadric surface",
       p4_config("table2 row 2", {-1, 0}, {1, 2}, false), {{"# of ODPs", 12}}},
      {"O(0, 0, 0) -> O(1, 1, 2)", "a cubic scroll surface",
       p4_config("table2 row 3", {0, 0, 0}, {1, 1, 2}, false),
       {{"# of ODPs", 17}}},
      {"O(0, 0) -> O(2, 2)", "a c.i. of two quadrics",
       p4_config("table2 row 4", {0, 0}, {2, 2}, false), {{"# of ODPs", 16}}},
      {"O(0, 0, 0, 0) -> O(1, 1, 1, 1)", "a Bordiga surface",
       p4_config("table2 row 5", {0, 0, 0, 0}, {1, 1, 1, 1}, false),
       {{"# of ODPs", 20}}},
  };
  return {"Nodal quartics in P^4 and the surface they contain", golden_cells,
          std::move(rows)};
}

GoldenTable golden(const std::string& name) {
  if (name == "table1") return table1();
  if (name == "table2") return table2();
  throw InputError("unknown table \"" + name + "\" (known: table1, table2)");
}

}  // namespace

int TableResult::mismatches() const {
  int count = 0;
  for (const TableRow& row : rows) {
    for (const TableCell& cell : row.cells) count += cell.matches() ? 0 : 1;
  }
  return count;
}

std::vector<std::string> table_names() { return {"table1", "table2"}; }

TableResult evaluate_table(const std::string& name) {
  const GoldenTable table = golden(name);
  // Rows share no state, so each is evaluated on its own thread.
  std::vector<std::future<InvariantReport>> pending;
  for (const GoldenRow& row : table.rows) {
    pending.push_back(std::async(std::launch::async,
                                 [&row] { return evaluate(row.config); }));
  }
  TableResult result{name, table.caption, {}};
  for (size_t i = 0; i < table.rows.size(); ++i) {
    const GoldenRow& row = table.rows[i];
    const InvariantReport report = pending[i].get();
    result.rows.push_back(
        {row.label, row.note, row.config, table.extract(report, row)});
  }
  return result;
}

std::string render_table(const TableResult& table) {
  std::ostringstream os;
  os << table.caption << '\n';
  if (table.rows.empty()) return os.str();
  const bool labelled = table.rows.size() > 1;
  std::vector<size_t> widths;
  for (const TableCell& cell : table.rows.front().cells) {
    widths.push_back(std::max<size_t>(cell.column.size(), 4));
  }
  size_t label_width = 0, note_width = 0;
  for (const TableRow& row : table.rows) {
    label_width = std::max(label_width, row.label.size());
    note_width = std::max(note_width, row.note.size());
  }
  label_width = std::max<size_t>(label_width, 16);
  note_width = std::max<size_t>(note_width, 15);
  if (labelled) {
    os << std::left << std::setw(static_cast<int>(label_width) + 2)
       << "Morphism sigma" << std::setw(static_cast<int>(note_width) + 2)
       << "Special surface";
  }
  for (size_t c = 0; c < widths.size(); ++c) {
    os << std::right << std::setw(static_cast<int>(widths[c]) + 2)
       << table.rows.front().cells[c].column;
  }
  os << '\n';
  for (const TableRow& row : table.rows) {
    if (labelled) {
      os << std::left << std::setw(static_cast<int>(label_width) + 2)
         << row.label << std::setw(static_cast<int>(note_width) + 2)
         << row.note;
    }
    for (size_t c = 0; c < row.cells.size(); ++c) {
      const TableCell& cell = row.cells[c];
      std::string value = cell.computed.str();
      if (!cell.matches()) value += "!=" + cell.expected.str();
      os << std::right << std::setw(static_cast<int>(widths[c]) + 2) << value;
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const TableResult& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TableRow& row : table.rows) {
    nlohmann::json cells = nlohmann::json::object();
    for (const TableCell& cell : row.cells) {
      cells[cell.column] = {{"computed", integer_json(cell.computed)},
                            {"expected", integer_json(cell.expected)},
                            {"match", cell.matches()}};
    }
    rows.push_back({{"morphism", row.label},
                    {"note", row.note},
                    {"config", to_json(row.config)},
                    {"cells", std::move(cells)}});
  }
  return {{"table", table.name},
          {"caption", table.caption},
          {"rows", std::move(rows)},
          {"mismatches", table.mismatches()}};
}

}  // namespace detloci
