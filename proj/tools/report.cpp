#include "report.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace wsqrt::cli {

namespace {

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << text;
  if (!out) {
    throw std::runtime_error("write failed for '" + path.string() + "'");
  }
}

}  // namespace

json Check::to_json() const {
  return {
      {"expected", expected},
      {"name", name},
      {"observed", observed},
      {"status", passed ? "pass" : "fail"},
      {"tolerance", tolerance},
  };
}

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

json Report::to_json() const {
  json checks_json = json::array();
  for (const Check& c : checks) checks_json.push_back(c.to_json());
  return {
      {"checks", checks_json},
      {"command", command},
      {"config", config},
      {"timing", {{"elapsed_seconds", elapsed_seconds}, {"workers", workers_used}}},
  };
}

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out += table.columns[c];
    out += c + 1 < table.columns.size() ? "," : "\n";
  }
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      out += c + 1 < row.size() ? "," : "\n";
    }
  }
  return out;
}

json render_json(const Table& table) {
  return {{"columns", table.columns}, {"rows", table.rows}};
}

std::filesystem::path write_table(const std::filesystem::path& dir, const std::string& stem,
                                  const std::string& format, const Table& table) {
  if (format == "csv") {
    const auto path = dir / (stem + ".csv");
    write_text_file(path, render_csv(table));
    return path;
  }
  if (format == "json") {
    const auto path = dir / (stem + ".json");
    write_text_file(path, render_json(table).dump(2) + "\n");
    return path;
  }
  throw std::invalid_argument("unknown table format '" + format + "'");
}

std::filesystem::path write_report(const Report& report, const std::filesystem::path& dir) {
  std::string stem = report.command;
  std::replace(stem.begin(), stem.end(), ' ', '_');
  const auto path = dir / ("report_" + stem + ".json");
  write_text_file(path, report.to_json().dump(2) + "\n");
  return path;
}

}  // namespace wsqrt::cli
