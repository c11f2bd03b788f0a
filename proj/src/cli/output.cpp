#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace periodlab::cli {
namespace {

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string md_escape(const std::string& s) {
  std::string e;
  for (char c : s) {
    if (c == '|') e += '\\';
    e += c;
  }
  return e;
}

// Column order: first appearance across rows.
std::vector<std::string> columns(const std::vector<Json>& rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows) {
    for (const auto& [k, _] : r.items()) {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
  }
  return cols;
}

void write_json(const Report& r, std::ostream& out) {
  Json env = Json::object();
  env["command"] = r.command;
  env["params"] = r.params;
  Json rows = Json::array();
  if (r.tables.size() == 1) {
    for (const auto& row : r.tables[0].rows) rows.push_back(row);
  } else if (!r.tables.empty()) {
    Json obj = Json::object();
    for (const auto& t : r.tables) obj[t.name] = t.rows;
    rows.push_back(std::move(obj));
  }
  env["rows"] = std::move(rows);
  env["errors"] = r.errors;
  env["version"] = PERIODLAB_VERSION;
  out << env.dump(2) << "\n";
}

void write_csv(const Report& r, std::ostream& out) {
  const bool sectioned = r.tables.size() > 1;
  std::vector<Json> all;
  std::vector<std::string> section;
  for (const auto& t : r.tables) {
    for (const auto& row : t.rows) {
      all.push_back(row);
      section.push_back(t.name);
    }
  }
  const auto cols = columns(all);
  std::string line = sectioned ? "section" : "";
  for (std::size_t i = 0; i < cols.size(); ++i) line += (i || sectioned ? "," : "") + csv_quote(cols[i]);
  out << line << "\n";
  for (std::size_t j = 0; j < all.size(); ++j) {
    line = sectioned ? csv_quote(section[j]) : "";
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const auto it = all[j].find(cols[i]);
      line += (i || sectioned ? "," : "") + (it == all[j].end() ? std::string() : csv_quote(cell_text(*it)));
    }
    out << line << "\n";
  }
}

void write_md(const Report& r, std::ostream& out) {
  out << "# " << r.command << "\n\n";
  if (!r.params.empty()) {
    out << "params:";
    for (const auto& [k, v] : r.params.items()) out << " " << k << "=" << cell_text(v);
    out << "\n\n";
  }
  for (const auto& t : r.tables) {
    if (r.tables.size() > 1) out << "## " << t.name << "\n\n";
    if (t.rows.empty()) {
      out << "(none)\n\n";
      continue;
    }
    const auto cols = columns(t.rows);
    out << "|";
    for (const auto& c : cols) out << " " << md_escape(c) << " |";
    out << "\n|";
    for (std::size_t i = 0; i < cols.size(); ++i) out << " --- |";
    out << "\n";
    for (const auto& row : t.rows) {
      out << "|";
      for (const auto& c : cols) {
        const auto it = row.find(c);
        out << " " << (it == row.end() ? std::string() : md_escape(cell_text(*it))) << " |";
      }
      out << "\n";
    }
    out << "\n";
  }
  out << "periodlab " << PERIODLAB_VERSION << "\n";
}

}  // namespace

Json number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no "-0.0"
}

void write(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: write_json(report, out); break;
    case Format::csv: write_csv(report, out); break;
    case Format::md: write_md(report, out); break;
  }
}

}  // namespace periodlab::cli
