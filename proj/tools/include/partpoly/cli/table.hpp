#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "partpoly/numeric.hpp"

namespace partpoly::cli {

using Json = nlohmann::ordered_json;

/// Empty cells are gaps and render as null / an empty CSV field.
using Cell = std::variant<std::monostate, BigInt, double, bool, std::string, Json>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Appends a row; cells are matched to `columns` by position.
  void add(std::vector<Cell> row);
};

struct Document {
  std::string command;
  Table table;
  Json extra = Json::object();  ///< additional top-level JSON members
};

/// Integers that fit in 64 bits become JSON numbers, wider ones decimal strings.
Json to_json(const Cell& cell);
Json to_json(const BigInt& value);

/// {"command", "tool_version", "rows": [{column: value}], ...extra}
std::string emit_json(const Document& doc);

/// Header row then one line per row. JSON-object cells are flattened into
/// "column.key" columns; fields holding commas or quotes are quoted.
std::string emit_csv(const Document& doc);

/// RFC 4180 reader used to re-parse emitted CSV.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

/// Shortest decimal that reads back to the same double.
std::string format_double(double value);

}  // namespace partpoly::cli
