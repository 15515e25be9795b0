// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#pragma once

#include <charconv>
#include <cstdint>
#include <string>

namespace eepc {

/// Shortest decimal representation that round-trips the double exactly.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_u64(std::uint64_t v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

/// Line-oriented CSV assembly with '#'-prefixed comment rows. All content
/// is accumulated in memory so a run writes its file in one shot.
class CsvBuilder {
 public:
  void comment(const std::string& text) {
    out_ += "# ";
    out_ += text;
    out_ += '\n';
  }
  void raw_line(const std::string& line) {
    out_ += line;
    out_ += '\n';
  }
  template <typename... Cols>
  void row(const Cols&... cols) {
    bool first = true;
    ((append_cell(cols, first), first = false), ...);
    out_ += '\n';
  }
  const std::string& str() const { return out_; }

 private:
  void append_cell(double v, bool first) {
    if (!first) out_ += ',';
    out_ += format_double(v);
  }
  void append_cell(const std::string& v, bool first) {
    if (!first) out_ += ',';
    out_ += v;
  }
  void append_cell(const char* v, bool first) {
    if (!first) out_ += ',';
    out_ += v;
  }
  std::string out_;
};

}  // namespace eepc
