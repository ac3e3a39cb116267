// Copyright 2026 The reachcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "reach/chaitin_vm.hpp"
#include "reach/errors.hpp"
#include "reach/reachability.hpp"
#include "reach/search.hpp"

namespace reach::io {

enum class Format { Table, Records, Csv };

inline Format parse_format(std::string_view s) {
  if (s == "table") return Format::Table;
  if (s == "records") return Format::Records;
  if (s == "csv") return Format::Csv;
  throw DomainError("unknown output format '" + std::string(s) + "'");
}

/// Twelve significant digits, shortest form.
inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// A cell is either a number (unquoted in records), text, or missing.
struct Cell {
  enum class Kind { Number, Text, Missing };
  Kind kind = Kind::Missing;
  std::string text;

  static Cell number(double v) { return {Kind::Number, format_number(v)}; }
  static Cell integer(long long v) { return {Kind::Number, std::to_string(v)}; }
  static Cell str(std::string s) { return {Kind::Text, std::move(s)}; }
  static Cell boolean(bool b) { return {Kind::Number, b ? "true" : "false"}; }
  static Cell missing() { return {}; }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

namespace detail {

inline std::string json_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string csv_field(const Cell& c) {
  if (c.kind == Cell::Kind::Missing) return "";
  if (c.text.find_first_of(",\"\n") == std::string::npos) return c.text;
  std::string out = "\"";
  for (char ch : c.text) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  return out + "\"";
}

}  // namespace detail

inline void write_records(std::ostream& os, const Table& t) {
  for (const auto& row : t.rows) {
    os << '{';
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      if (i) os << ',';
      os << '"' << t.columns[i] << "\":";
      const Cell& c = row[i];
      switch (c.kind) {
        case Cell::Kind::Number: os << c.text; break;
        case Cell::Kind::Text: os << '"' << detail::json_escape(c.text) << '"'; break;
        case Cell::Kind::Missing: os << "null"; break;
      }
    }
    os << "}\n";
  }
}

inline void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << detail::csv_field(row[i]);
    os << '\n';
  }
}

inline void write_aligned(std::ostream& os, const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  auto shown = [](const Cell& c) {
    if (c.kind == Cell::Kind::Missing) return std::string("-");
    return c.text.empty() ? std::string("\"\"") : c.text;
  };
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], shown(row[i]).size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
    }
    os << s << '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(shown(c));
    line(cells);
  }
}

inline void write(std::ostream& os, const Table& t, Format f) {
  switch (f) {
    case Format::Table: write_aligned(os, t); break;
    case Format::Records: write_records(os, t); break;
    case Format::Csv: write_csv(os, t); break;
  }
}

/// One row per record: program, length, p, variation, reachability, energy,
/// normalized.
inline Table records_table(std::span<const ReachabilityRecord> records) {
  Table t{{"program", "length", "p", "variation", "reachability", "energy", "normalized"}, {}};
  for (const auto& r : records) {
    t.rows.push_back({Cell::str(r.program_id),
                      Cell::integer(static_cast<long long>(r.program_id.size())),
                      Cell::number(r.p_i), Cell::number(r.variation),
                      Cell::number(r.reachability), Cell::number(r.energy),
                      Cell::number(r.normalized)});
  }
  return t;
}

/// One row per examined program; `accepted_only` keeps just the improvements.
inline Table trace_table(const SearchTrace& trace, bool accepted_only) {
  Table t{{"step", "program", "length", "outcome", "energy"}, {}};
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const SearchStep& s = trace.steps[i];
    if (accepted_only && s.outcome != StepOutcome::Accepted) continue;
    t.rows.push_back({Cell::integer(static_cast<long long>(i + 1)), Cell::str(s.program.bits()),
                      Cell::integer(static_cast<long long>(s.program.length())),
                      Cell::str(std::string(outcome_name(s.outcome))),
                      Cell::number(s.energy_charged)});
  }
  return t;
}

inline Table trace_summary(const SearchTrace& trace) {
  Table t{{"policy", "status", "programs_run", "energy_charged", "bits_reduced", "best_found",
           "best_length", "temperature", "max_len"},
          {}};
  t.rows.push_back(
      {Cell::str(std::string(policy_name(trace.policy))),
       Cell::str(std::string(status_name(trace.status))),
       Cell::integer(static_cast<long long>(trace.programs_run)), Cell::number(trace.energy_charged),
       Cell::integer(static_cast<long long>(trace.bits_reduced)),
       trace.best_found ? Cell::str(trace.best_found->bits()) : Cell::missing(),
       trace.best_found ? Cell::integer(static_cast<long long>(trace.best_found->length()))
                        : Cell::missing(),
       Cell::number(trace.temperature), Cell::integer(trace.max_len)});
  return t;
}

/// Splits CSV text into rows of fields (RFC 4180 quoting).
inline std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field.push_back(c);
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
      field.push_back(c);
    }
  }
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace reach::io
