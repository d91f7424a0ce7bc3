#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace wsqrt::cli {

using json = nlohmann::json;

struct Check {
  std::string name;
  bool passed = false;
  json observed;
  json expected;
  json tolerance;

  json to_json() const;
};

/// One verification run. Serialized shape:
///   {"checks": [...], "command": ..., "config": {...},
///    "timing": {"elapsed_seconds": ..., "workers": ...}}
/// Everything except "timing" is a pure function of the configuration, so
/// reruns and different worker counts reproduce it byte for byte.
struct Report {
  std::string command;
  json config = json::object();
  std::vector<Check> checks;
  double elapsed_seconds = 0.0;
  unsigned workers_used = 1;

  bool all_passed() const;
  json to_json() const;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const Table& table);
json render_json(const Table& table);

/// Writes <dir>/<stem>.csv or .json depending on format; returns the path.
std::filesystem::path write_table(const std::filesystem::path& dir, const std::string& stem,
                                  const std::string& format, const Table& table);

/// Writes <dir>/report_<command>.json (subcommand spaces become '_').
std::filesystem::path write_report(const Report& report, const std::filesystem::path& dir);

}  // namespace wsqrt::cli
