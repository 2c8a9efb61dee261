#include "partpoly/cli/table.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "partpoly/version.hpp"

namespace partpoly::cli {

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::logic_error("row has " + std::to_string(row.size()) + " cells for " +
                           std::to_string(columns.size()) + " columns");
  rows.push_back(std::move(row));
}

Json to_json(const BigInt& value) {
  if (value.fits_slong_p() && sizeof(long) == 8) return Json(static_cast<std::int64_t>(value.get_si()));
  return Json(value.get_str());
}

Json to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, BigInt>) return to_json(v);
        else return Json(v);
      },
      cell);
}

std::string emit_json(const Document& doc) {
  Json out;
  out["command"] = doc.command;
  out["tool_version"] = kVersion;
  out["rows"] = Json::array();
  for (const auto& row : doc.table.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[doc.table.columns[i]] = to_json(row[i]);
    out["rows"].push_back(std::move(obj));
  }
  for (const auto& [key, value] : doc.extra.items()) out[key] = value;
  return out.dump(2) + "\n";
}

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "";
        else if constexpr (std::is_same_v<T, BigInt>) return v.get_str();
        else if constexpr (std::is_same_v<T, double>) return format_double(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>) return quote(v);
        else {
          if (v.is_null()) return "";
          if (v.is_string()) return quote(v.template get<std::string>());
          return quote(v.dump());
        }
      },
      cell);
}

}  // namespace

std::string emit_csv(const Document& doc) {
  const auto& t = doc.table;
  // Object-valued columns expand into one column per key, in first-seen order.
  std::vector<std::vector<std::string>> subkeys(t.columns.size());
  std::vector<bool> expand(t.columns.size(), false);
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    for (const auto& row : t.rows) {
      const auto* obj = std::get_if<Json>(&row[c]);
      if (!obj || !obj->is_object()) continue;
      expand[c] = true;
      for (const auto& [key, value] : obj->items())
        if (std::find(subkeys[c].begin(), subkeys[c].end(), key) == subkeys[c].end()) subkeys[c].push_back(key);
    }
  }
  std::string out;
  bool first = true;
  auto field = [&](const std::string& text) {
    if (!first) out += ',';
    out += text;
    first = false;
  };
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (!expand[c]) field(quote(t.columns[c]));
    else
      for (const auto& key : subkeys[c]) field(quote(t.columns[c] + "." + key));
  }
  out += '\n';
  for (const auto& row : t.rows) {
    first = true;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (!expand[c]) {
        field(render(row[c]));
        continue;
      }
      const auto* obj = std::get_if<Json>(&row[c]);
      for (const auto& key : subkeys[c]) {
        if (obj && obj->is_object() && obj->contains(key)) {
          const auto& v = (*obj)[key];
          field(v.is_string() ? quote(v.get<std::string>()) : v.is_null() ? "" : quote(v.dump()));
        } else {
          field("");
        }
      }
    }
    out += '\n';
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace partpoly::cli
