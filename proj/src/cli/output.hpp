#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace periodlab::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, md };

struct Table {
  std::string name;
  std::vector<Json> rows;
};

/// Everything one command prints. A single table becomes the `rows` array;
/// several tables become one row object keyed by table name.
struct Report {
  std::string command;
  Json params = Json::object();
  std::vector<Table> tables;
  std::vector<std::string> errors;
};

/// Rounded to 15 significant digits; infinities become "inf" / "-inf".
Json number(double x);

void write(const Report& report, Format format, std::ostream& out);

}  // namespace periodlab::cli
