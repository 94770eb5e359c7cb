#pragma once

// Tabular documents rendered as markdown, CSV, or JSON.
//
// JSON output is an array with one object per row. Real-valued fields are
// decimal strings at their printed precision, exact rationals are "p/q"
// strings, integers and booleans use native JSON types.

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dirac_lt {

struct Cell {
  enum class Kind { text, decimal, integer, boolean, null };

  Kind kind = Kind::null;
  std::string text;

  static Cell str(std::string s) { return {Kind::text, std::move(s)}; }
  static Cell decimal(std::string s) { return {Kind::decimal, std::move(s)}; }
  static Cell integer(long long v) { return {Kind::integer, std::to_string(v)}; }
  static Cell integer(std::string digits) { return {Kind::integer, std::move(digits)}; }
  static Cell boolean(bool b) { return {Kind::boolean, b ? "true" : "false"}; }
  static Cell null() { return {Kind::null, ""}; }
};

struct Document {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("row width does not match columns");
    rows.push_back(std::move(row));
  }
};

enum class Format { md, csv, json };

inline Format parse_format(std::string_view s) {
  if (s == "md" || s == "markdown") return Format::md;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("unknown format: " + std::string(s));
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string md_cell(const Cell& c) {
  if (c.kind == Cell::Kind::null) return "n/a";
  return c.text;
}

inline nlohmann::ordered_json json_cell(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::text:
    case Cell::Kind::decimal: return c.text;
    case Cell::Kind::integer: {
      // Integers beyond 64 bits stay exact as strings.
      if (c.text.size() < 18) return std::stoll(c.text);
      return c.text;
    }
    case Cell::Kind::boolean: return c.text == "true";
    case Cell::Kind::null: return nullptr;
  }
  return nullptr;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const Document& doc) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < doc.columns.size(); ++i) obj[doc.columns[i]] = detail::json_cell(row[i]);
    arr.push_back(std::move(obj));
  }
  return arr;
}

inline std::string render(const Document& doc, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::md: {
      if (!doc.title.empty()) os << "## " << doc.title << "\n\n";
      os << '|';
      for (const auto& c : doc.columns) os << ' ' << c << " |";
      os << "\n|";
      for (std::size_t i = 0; i < doc.columns.size(); ++i) os << "---|";
      os << '\n';
      for (const auto& row : doc.rows) {
        os << '|';
        for (const auto& cell : row) os << ' ' << detail::md_cell(cell) << " |";
        os << '\n';
      }
      if (!doc.notes.empty()) {
        os << '\n';
        for (const auto& note : doc.notes) os << "- " << note << '\n';
      }
      break;
    }
    case Format::csv: {
      for (std::size_t i = 0; i < doc.columns.size(); ++i)
        os << (i ? "," : "") << detail::csv_escape(doc.columns[i]);
      os << '\n';
      for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << detail::csv_escape(row[i].text);
        os << '\n';
      }
      break;
    }
    case Format::json: os << to_json(doc).dump(2) << '\n'; break;
  }
  return os.str();
}

}  // namespace dirac_lt
