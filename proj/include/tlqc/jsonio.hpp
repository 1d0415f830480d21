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

#pragma once

#include <string>

#include "tlqc/numerics.hpp"

namespace tlqc {

// Emission goes through this writer so that repeated runs produce identical
// bytes: fixed "%.15g" floats, insertion-ordered keys, no locale effects.
class JsonWriter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(const std::string& name);
  void value_string(const std::string& s);
  void value_number(double v);
  void value_int(long long v);
  void value_bool(bool v);
  void value_complex(const Complex& c);  // {"re": ..., "im": ...}
  // Splices a pre-rendered JSON value verbatim. The caller is responsible
  // for `json` being a complete, valid value.
  void value_raw(const std::string& json);

  const std::string& str() const { return out_; }

 private:
  void comma();
  std::string out_;
  // One entry per open container: true once the first element was written.
  std::vector<bool> wrote_element_;
  bool pending_key_ = false;
};

std::string format_double(double v);
std::string json_escape(const std::string& s);

}  // namespace tlqc
