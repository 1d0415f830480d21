// Copyright 2026 The tlqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tlqc/jsonio.hpp"

#include <cstdio>

namespace tlqc {

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return std::string(buf);
}

std::string json_escape(const std::string& s) {
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
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
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

void JsonWriter::comma() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!wrote_element_.empty()) {
    if (wrote_element_.back()) out_ += ',';
    wrote_element_.back() = true;
  }
}

void JsonWriter::begin_object() {
  comma();
  out_ += '{';
  wrote_element_.push_back(false);
}

void JsonWriter::end_object() {
  out_ += '}';
  wrote_element_.pop_back();
}

void JsonWriter::begin_array() {
  comma();
  out_ += '[';
  wrote_element_.push_back(false);
}

void JsonWriter::end_array() {
  out_ += ']';
  wrote_element_.pop_back();
}

void JsonWriter::key(const std::string& name) {
  comma();
  out_ += '"';
  out_ += json_escape(name);
  out_ += "\":";
  pending_key_ = true;
}

void JsonWriter::value_string(const std::string& s) {
  comma();
  out_ += '"';
  out_ += json_escape(s);
  out_ += '"';
}

void JsonWriter::value_number(double v) {
  comma();
  out_ += format_double(v);
}

void JsonWriter::value_int(long long v) {
  comma();
  out_ += std::to_string(v);
}

void JsonWriter::value_bool(bool v) {
  comma();
  out_ += v ? "true" : "false";
}

void JsonWriter::value_raw(const std::string& json) {
  comma();
  out_ += json;
}

void JsonWriter::value_complex(const Complex& c) {
  begin_object();
  key("re");
  value_number(c.real());
  key("im");
  value_number(c.imag());
  end_object();
}

}  // namespace tlqc
