#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "escrate/experiments.hpp"

namespace escrate {

namespace {

using nlohmann::json;

struct RowSpec {
  std::string name;
  std::vector<std::string> variants;
  std::optional<RationalFunction> r;
  std::map<int, double> cells;
};

struct SectionSpec {
  std::string base;
  std::vector<RowSpec> rows;
};

struct TableSpec {
  int id = 0;
  std::string label;
  std::vector<int> q_values;
  std::vector<SectionSpec> sections;
};

struct ErratumSpec {
  int table = 0;
  std::string row;
  int q = 0;
  std::string note;
};

struct TablesData {
  double default_tolerance = 5e-4;
  std::vector<TableSpec> tables;
  std::vector<ErratumSpec> errata;
};

IntPolynomial poly_from_json(const json& j) {
  std::map<long, BigInt> m;
  for (auto it = j.begin(); it != j.end(); ++it)
    m[std::stol(it.key())] = BigInt(it.value().get<std::string>());
  return IntPolynomial::from_map(m);
}

TablesData load_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise("DataFileNotFound", "cannot open table data at " + path);
  json j = json::parse(in);
  TablesData data;
  data.default_tolerance = j.value("default_tolerance", 5e-4);
  for (const auto& jt : j.at("tables")) {
    TableSpec t;
    t.id = jt.at("id").get<int>();
    t.label = jt.value("label", "");
    for (const auto& q : jt.at("q_values")) t.q_values.push_back(q.get<int>());
    for (const auto& js : jt.at("sections")) {
      SectionSpec s;
      s.base = js.value("base", "");
      for (const auto& jr : js.at("rows")) {
        RowSpec r;
        r.name = jr.at("name").get<std::string>();
        for (const auto& v : jr.at("variants")) r.variants.push_back(v.get<std::string>());
        if (jr.contains("r"))
          r.r = RationalFunction(poly_from_json(jr.at("r").at("num")),
                                 poly_from_json(jr.at("r").at("den")));
        for (auto it = jr.at("cells").begin(); it != jr.at("cells").end(); ++it)
          r.cells[std::stoi(it.key())] = std::stod(it.value().get<std::string>());
        s.rows.push_back(std::move(r));
      }
      t.sections.push_back(std::move(s));
    }
    data.tables.push_back(std::move(t));
  }
  if (j.contains("errata"))
    for (const auto& je : j.at("errata"))
      data.errata.push_back({je.at("table").get<int>(), je.at("row").get<std::string>(),
                             je.at("q").get<int>(), je.value("note", "")});
  return data;
}

const TablesData& tables_data() {
  static TablesData data = load_data(tables_data_path());
  return data;
}

}  // namespace

std::string tables_data_path() {
  if (const char* f = std::getenv("ESCRATE_TABLES_FILE")) return f;
  std::vector<std::string> candidates;
  if (const char* d = std::getenv("ESCRATE_DATA_DIR"))
    candidates.push_back(std::string(d) + "/tables.json");
  candidates.push_back("data/tables.json");
  candidates.push_back("core/data/tables.json");
#ifdef ESCRATE_SOURCE_DATA_DIR
  candidates.push_back(std::string(ESCRATE_SOURCE_DATA_DIR) + "/tables.json");
#endif
#ifdef ESCRATE_INSTALL_DATA_DIR
  candidates.push_back(std::string(ESCRATE_INSTALL_DATA_DIR) + "/tables.json");
#endif
  for (const auto& c : candidates)
    if (std::filesystem::exists(c)) return c;
  raise("DataFileNotFound", "tables.json not found; set ESCRATE_TABLES_FILE");
}

std::string cell_status_str(CellStatus s) {
  switch (s) {
    case CellStatus::Pass:
      return "PASS";
    case CellStatus::Fail:
      return "FAIL";
    case CellStatus::Erratum:
      return "ERRATUM";
    default:
      return "IMPOSSIBLE";
  }
}

std::vector<int> available_table_ids() {
  std::vector<int> ids;
  for (const auto& t : tables_data().tables) ids.push_back(t.id);
  return ids;
}

std::vector<TableRow> reproduce_table(int id, double tolerance) {
  const TablesData& data = tables_data();
  const TableSpec* table = nullptr;
  for (const auto& t : data.tables)
    if (t.id == id) table = &t;
  if (!table) raise("BadArgument", "no table with id " + std::to_string(id));

  auto is_erratum = [&](const std::string& row, int q) {
    for (const auto& e : data.errata)
      if (e.table == id && e.row == row && e.q == q) return true;
    return false;
  };
  auto erratum_note = [&](const std::string& row, int q) -> std::string {
    for (const auto& e : data.errata)
      if (e.table == id && e.row == row && e.q == q) return e.note;
    return "";
  };

  std::vector<TableRow> out;
  for (const auto& section : table->sections) {
    for (const auto& row : section.rows) {
      for (int q : table->q_values) {
        TableRow cell;
        cell.table_id = id;
        cell.row_name = row.name;
        cell.q = q;
        cell.base = section.base;
        auto it = row.cells.find(q);
        if (it != row.cells.end()) cell.expected = it->second;

        // First variant that fits the alphabet (the printed "..." cells are
        // exactly the ones where none does).
        std::optional<HoleSpec> hole;
        for (const auto& variant : row.variants) {
          try {
            std::optional<WordCollection> base;
            if (!section.base.empty())
              base = WordCollection::parse(section.base, q, ParseMode::Abstract);
            WordCollection g = WordCollection::parse(variant, q, ParseMode::Abstract);
            hole.emplace(q, std::move(g), std::move(base));
            cell.collection = variant;
            break;
          } catch (const Error& e) {
            if (std::string(e.name()) != "InsufficientAlphabet") throw;
          }
        }

        if (!hole) {
          cell.status = CellStatus::Impossible;
          if (cell.expected)
            cell.note = "printed value present but the collection does not fit the alphabet";
          out.push_back(std::move(cell));
          continue;
        }

        EscapeRateResult r = escape_rate(*hole);
        cell.computed = r.rho;

        // Row-level cross-check of the reduced r-form when the data records it.
        if (row.r) {
          RFunction rf = r_function(hole->hole);
          if (!rf.reduced.equivalent(*row.r)) {
            cell.status = CellStatus::Fail;
            cell.note = "reduced r(z) mismatch: computed " + rf.reduced.canonical().str();
            out.push_back(std::move(cell));
            continue;
          }
        }

        if (!cell.expected) {
          cell.status = CellStatus::Pass;
          cell.note = "no printed value";
          out.push_back(std::move(cell));
          continue;
        }
        cell.abs_error = std::fabs(*cell.computed - *cell.expected);
        if (*cell.abs_error <= tolerance) {
          cell.status = CellStatus::Pass;
        } else if (is_erratum(row.name, q)) {
          cell.status = CellStatus::Erratum;
          cell.note = erratum_note(row.name, q);
        } else {
          cell.status = CellStatus::Fail;
          if (*cell.abs_error >= 10 * tolerance)
            cell.note = "off by >= 10x tolerance: candidate erratum";
        }
        out.push_back(std::move(cell));
      }
    }
  }
  return out;
}

}  // namespace escrate
