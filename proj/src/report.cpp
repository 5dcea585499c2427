#include "cyclocode/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "cyclocode/error.hpp"

namespace cyclocode {

namespace {

using ojson = nlohmann::ordered_json;

const Natural kJsonSafe = Natural(1) << 53;

std::string to_text(const Value& v) {
  struct Visit {
    std::string operator()(std::monostate) const { return "-"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(const Natural& x) const { return x.str(); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visit{}, v);
}

std::string to_csv(const Value& v) {
  if (std::holds_alternative<std::monostate>(v)) return "";
  return csv_escape(to_text(v));
}

void put_json(ojson& obj, const std::string& key, const Value& v) {
  if (std::holds_alternative<std::monostate>(v)) {
    obj[key] = nullptr;
  } else if (const auto* b = std::get_if<bool>(&v)) {
    obj[key] = *b;
  } else if (const auto* i = std::get_if<std::int64_t>(&v)) {
    obj[key] = *i;
  } else if (const auto* n = std::get_if<Natural>(&v)) {
    if (abs(*n) <= kJsonSafe) {
      obj[key] = static_cast<std::int64_t>(*n);
    } else {
      obj[key] = n->str();
      obj[key + "_as_string"] = true;
    }
  } else {
    obj[key] = std::get<std::string>(v);
  }
}

void render_text(std::ostream& os, const Report& r) {
  std::size_t width = 0;
  for (const auto& f : r.fields) width = std::max(width, f.key.size());
  for (const auto& f : r.fields) {
    os << f.key << ':' << std::string(width - f.key.size() + 1, ' ') << to_text(f.value) << '\n';
  }
  for (const auto& t : r.tables) {
    if (!r.fields.empty() || &t != &r.tables.front()) os << '\n';
    os << t.name << " (" << t.rows.size() << (t.rows.size() == 1 ? " row" : " rows") << ")\n";
    std::vector<std::size_t> w(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) w[c] = t.columns[c].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : t.rows) {
      auto& out = cells.emplace_back();
      for (std::size_t c = 0; c < row.size(); ++c) {
        out.push_back(to_text(row[c]));
        w[c] = std::max(w[c], out.back().size());
      }
    }
    auto line = [&](const std::vector<std::string>& items) {
      std::string s;
      for (std::size_t c = 0; c < items.size(); ++c) {
        if (c) s += "  ";
        s += std::string(w[c] - items[c].size(), ' ') + items[c];
      }
      os << s << '\n';
    };
    line(t.columns);
    for (const auto& row : cells) line(row);
  }
}

void render_csv(std::ostream& os, const Report& r) {
  if (r.csv_table < 0 || r.tables.empty()) {
    for (std::size_t i = 0; i < r.fields.size(); ++i) os << (i ? "," : "") << csv_escape(r.fields[i].key);
    os << '\n';
    for (std::size_t i = 0; i < r.fields.size(); ++i) os << (i ? "," : "") << to_csv(r.fields[i].value);
    os << '\n';
    return;
  }
  const auto& t = r.tables.at(static_cast<std::size_t>(r.csv_table));
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_escape(t.columns[i]);
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << to_csv(row[i]);
    os << '\n';
  }
}

void render_json(std::ostream& os, const Report& r) {
  ojson doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = r.command;
  for (const auto& f : r.fields) put_json(doc, f.key, f.value);
  for (const auto& t : r.tables) {
    ojson rows = ojson::array();
    for (const auto& row : t.rows) {
      ojson obj = ojson::object();
      for (std::size_t c = 0; c < row.size(); ++c) put_json(obj, t.columns[c], row[c]);
      rows.push_back(std::move(obj));
    }
    doc[t.name] = std::move(rows);
  }
  os << doc.dump(2) << '\n';
}

}  // namespace

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

ReportFormat parse_format(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw ParameterError("unknown format '" + name + "' (text, csv, json)");
}

std::string render(const Report& report, ReportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::text: render_text(os, report); break;
    case ReportFormat::csv: render_csv(os, report); break;
    case ReportFormat::json: render_json(os, report); break;
  }
  return os.str();
}

}  // namespace cyclocode
