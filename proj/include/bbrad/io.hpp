// io.hpp - fixed-format number, JSON and CSV emission
//
// Copyright (C) 2026 The bbrad authors.
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cassert>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace bbrad::io {

// 17 significant digits round-trip an IEEE double exactly, so emitted files
// are bit-stable across runs.
inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// Minimal insertion-ordered JSON writer.  Key order and number formatting
// are fully under caller control, which golden-file tests rely on.
class JsonWriter {
 public:
  JsonWriter& begin_object() { open('{', '}'); return *this; }
  JsonWriter& end_object() { close('}'); return *this; }
  JsonWriter& begin_array() { open('[', ']'); return *this; }
  JsonWriter& end_array() { close(']'); return *this; }

  JsonWriter& key(std::string_view k) {
    separate();
    out_ += '"';
    out_ += json_escape(k);
    out_ += "\": ";
    pending_value_ = true;
    return *this;
  }

  JsonWriter& value(double v) { return raw(format_real(v)); }
  JsonWriter& value(int v) { return raw(std::to_string(v)); }
  JsonWriter& value(std::int64_t v) { return raw(std::to_string(v)); }
  JsonWriter& value(std::uint64_t v) { return raw(std::to_string(v)); }
  JsonWriter& value(bool v) { return raw(v ? "true" : "false"); }
  JsonWriter& value(std::string_view v) {
    return raw('"' + json_escape(v) + '"');
  }

  // Finished document, newline-terminated.
  std::string str() const {
    assert(stack_.empty());
    return out_ + "\n";
  }

 private:
  void indent() {
    for (size_t i = 0; i < stack_.size(); ++i) out_ += "  ";
  }

  void separate() {
    if (pending_value_) return;
    if (!first_in_scope_) out_ += ',';
    if (!stack_.empty()) out_ += '\n';
    indent();
    first_in_scope_ = false;
  }

  JsonWriter& raw(std::string_view text) {
    separate();
    out_ += text;
    pending_value_ = false;
    return *this;
  }

  void open(char c, char) {
    separate();
    out_ += c;
    stack_.push_back(c);
    first_in_scope_ = true;
    pending_value_ = false;
  }

  void close(char c) {
    assert(!stack_.empty());
    stack_.pop_back();
    if (!first_in_scope_) {
      out_ += '\n';
      indent();
    }
    out_ += c;
    first_in_scope_ = false;
    pending_value_ = false;
  }

  std::string out_;
  std::vector<char> stack_;
  bool first_in_scope_ = true;
  bool pending_value_ = false;
};

// CSV with comma separator, '.' decimal point, LF line endings.  Field
// values never contain commas here, so no quoting is required.
class CsvWriter {
 public:
  CsvWriter& row(const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ += ',';
      out_ += fields[i];
    }
    out_ += '\n';
    return *this;
  }
  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

}  // namespace bbrad::io
