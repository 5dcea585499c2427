#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cyclocode/params.hpp"

namespace cyclocode {

enum class ReportFormat { text, csv, json };

/// Bumped whenever a JSON field changes meaning or disappears.
inline constexpr int kSchemaVersion = 1;

using Value = std::variant<std::monostate, bool, std::int64_t, Natural, std::string>;

struct Field {
  std::string key;
  Value value;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

/// Command output before formatting. CSV shows a single table: `csv_table`
/// (or the scalar fields as one row when it is negative).
struct Report {
  std::string command;
  std::vector<Field> fields;
  std::vector<Table> tables;
  int csv_table = 0;

  void add(std::string key, Value v) { fields.push_back({std::move(key), std::move(v)}); }
};

/// Deterministic rendering. JSON integers beyond 2^53 become decimal strings
/// with a companion `<key>_as_string: true`.
std::string render(const Report& report, ReportFormat format);

ReportFormat parse_format(const std::string& name);

/// RFC 4180 quoting for one CSV cell.
std::string csv_escape(const std::string& cell);

}  // namespace cyclocode
