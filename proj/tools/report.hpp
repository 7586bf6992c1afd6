// Copyright 2026 The hct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Deterministic report serialization for the hct CLI.
//
// Reports are flat ordered field lists; tables are header + rows.  Both
// serialize to JSON (objects / arrays of objects) and to RFC-4180-style CSV
// with LF line endings.  Numbers are printed with printf's %.*g at the
// configured precision so identical invocations produce byte-identical
// output; JSON and CSV use the same field names.

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace hct::cli {

/// One serializable cell: a number, a string, a boolean, or null
/// (rendered as JSON null and CSV "n/a" — used for not-applicable values).
struct Value {
  enum class Kind { Number, Text, Boolean, Null };

  Kind kind = Kind::Null;
  double number = 0.0;
  std::string text;
  bool boolean = false;

  static Value num(double v) { return {Kind::Number, v, {}, false}; }
  static Value str(std::string s) {
    return {Kind::Text, 0.0, std::move(s), false};
  }
  static Value yes_no(bool b) { return {Kind::Boolean, 0.0, {}, b}; }
  static Value null() { return {}; }
};

/// A single-record report: ordered (field, value) pairs.
struct Report {
  std::vector<std::pair<std::string, Value>> fields;

  void add(std::string name, Value v) {
    fields.emplace_back(std::move(name), std::move(v));
  }
};

/// A multi-row report with a fixed column layout.
struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<Value>> rows;
};

/// %.*g rendering shared by both formats; +0 replaces -0 so that equal
/// values print identically.
inline std::string format_number(double v, int precision) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

inline std::string json_value(const Value& v, int precision) {
  switch (v.kind) {
    case Value::Kind::Number:
      // JSON has no literal for non-finite numbers; degrade to null.
      if (!std::isfinite(v.number)) return "null";
      return format_number(v.number, precision);
    case Value::Kind::Text:
      return "\"" + json_escape(v.text) + "\"";
    case Value::Kind::Boolean:
      return v.boolean ? "true" : "false";
    case Value::Kind::Null:
      return "null";
  }
  return "null";
}

inline std::string csv_cell(const Value& v, int precision) {
  std::string raw;
  switch (v.kind) {
    case Value::Kind::Number:
      raw = format_number(v.number, precision);
      break;
    case Value::Kind::Text:
      raw = v.text;
      break;
    case Value::Kind::Boolean:
      raw = v.boolean ? "true" : "false";
      break;
    case Value::Kind::Null:
      raw = "n/a";
      break;
  }
  const bool needs_quotes =
      raw.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quotes) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted += "\"";
  return quoted;
}

inline std::string to_json(const Report& r, int precision) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : r.fields) {
    if (!first) out += ",";
    first = false;
    out += "\"" + json_escape(name) + "\":" + json_value(value, precision);
  }
  out += "}\n";
  return out;
}

inline std::string to_csv(const Report& r, int precision) {
  std::string header;
  std::string row;
  bool first = true;
  for (const auto& [name, value] : r.fields) {
    if (!first) {
      header += ",";
      row += ",";
    }
    first = false;
    header += csv_cell(Value::str(name), precision);
    row += csv_cell(value, precision);
  }
  return header + "\n" + row + "\n";
}

inline std::string to_json(const Table& t, int precision) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out += (i == 0) ? "\n" : ",\n";
    out += "{";
    for (std::size_t c = 0; c < t.headers.size(); ++c) {
      if (c > 0) out += ",";
      out += "\"" + json_escape(t.headers[c]) +
             "\":" + json_value(t.rows[i][c], precision);
    }
    out += "}";
  }
  out += t.rows.empty() ? "]\n" : "\n]\n";
  return out;
}

inline std::string to_csv(const Table& t, int precision) {
  std::string out;
  for (std::size_t c = 0; c < t.headers.size(); ++c) {
    if (c > 0) out += ",";
    out += csv_cell(Value::str(t.headers[c]), precision);
  }
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ",";
      out += csv_cell(row[c], precision);
    }
    out += "\n";
  }
  return out;
}

}  // namespace hct::cli
