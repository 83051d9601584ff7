#pragma once

// Matrix file formats and number formatting.
//
//   CSV:  n lines, n comma-separated decimals per line, no header.
//   JSON: {"n": <int>, "P": [[...], ...]}
//
// Numbers are written with 17 significant digits so a written matrix parses
// back bit-for-bit.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trajent/dense.hpp"
#include "trajent/error.hpp"
#include "trajent/stochastic_matrix.hpp"

namespace trajent::io {

using RawRows = std::vector<std::vector<double>>;

inline std::string format_number(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline double parse_double(std::string_view token, std::size_t line) {
  const std::string text(trim(token));
  if (text.empty()) throw ChainError(ErrorKind::ParseError, "empty field on line " + std::to_string(line));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ChainError(ErrorKind::ParseError, "bad number '" + text + "' on line " + std::to_string(line));
  }
  if (used != text.size())
    throw ChainError(ErrorKind::ParseError, "bad number '" + text + "' on line " + std::to_string(line));
  return v;
}

}  // namespace detail

inline RawRows parse_csv(std::string_view text) {
  RawRows rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const auto line = detail::trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      row.push_back(detail::parse_double(line.substr(start, comma - start), line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ChainError(ErrorKind::ParseError, "ragged row on line " + std::to_string(line_no));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ChainError(ErrorKind::ParseError, "no matrix rows found");
  return rows;
}

inline RawRows parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ChainError(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("P") || !doc["P"].is_array())
    throw ChainError(ErrorKind::ParseError, "expected an object with an array field \"P\"");
  RawRows rows;
  for (const auto& r : doc["P"]) {
    if (!r.is_array()) throw ChainError(ErrorKind::ParseError, "each row of \"P\" must be an array");
    std::vector<double> row;
    for (const auto& v : r) {
      if (!v.is_number()) throw ChainError(ErrorKind::ParseError, "matrix entries must be numbers");
      row.push_back(v.get<double>());
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ChainError(ErrorKind::ParseError, "ragged row " + std::to_string(rows.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ChainError(ErrorKind::ParseError, "no matrix rows found");
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() != static_cast<long long>(rows.size()))
      throw ChainError(ErrorKind::ParseError, "\"n\" does not match the number of rows");
  }
  return rows;
}

/// JSON when the first non-blank character is '{', CSV otherwise.
inline RawRows parse_matrix_text(std::string_view text) {
  const auto body = detail::trim(text);
  return !body.empty() && body.front() == '{' ? parse_json(body) : parse_csv(body);
}

inline RawRows read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ChainError(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix_text(ss.str());
}

inline StochasticMatrix load_matrix(const std::string& path, double row_tol = kDefaultRowTol) {
  return validate_matrix(read_matrix_file(path), row_tol);
}

inline std::string to_csv(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += format_number(m(i, j));
    }
    out += '\n';
  }
  return out;
}

// JSON writer over nlohmann's ordered tree; doubles go through format_number
// instead of the library's shortest-round-trip printer.
inline void dump_json(const nlohmann::ordered_json& j, std::string& out, int indent, int depth = 0) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += nlohmann::json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_json(it.value(), out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const auto& v) { return v.is_structured(); });
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        dump_json(v, out, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_number(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

inline std::string dump_json(const nlohmann::ordered_json& j, int indent = 2) {
  std::string out;
  dump_json(j, out, indent);
  out += '\n';
  return out;
}

inline nlohmann::ordered_json matrix_json(const Matrix& m, double scale = 1.0) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (double v : m.row(i)) row.push_back(v * scale);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string to_json(const Matrix& m) {
  nlohmann::ordered_json doc;
  doc["n"] = m.rows();
  doc["P"] = matrix_json(m);
  return dump_json(doc);
}

}  // namespace trajent::io
