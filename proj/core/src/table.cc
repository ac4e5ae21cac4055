// Copyright 2026 The rocdp Authors
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

#include "rocdp/table.h"

#include <cstdio>
#include <cstdlib>

namespace rocdp {

double Round12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string FormatNumber(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string ToCsv(const CurvePointTable& table) {
  std::string out;
  if (!table.meta.empty()) {
    out += "# ";
    bool first = true;
    for (const auto& [key, value] : table.meta) {
      if (!first) out += ",";
      out += key;
      out += "=";
      out += value;
      first = false;
    }
    out += "\n";
  }
  for (const auto& [x, y] : table.rows) {
    out += FormatNumber(x);
    out += ",";
    out += FormatNumber(y);
    out += "\n";
  }
  return out;
}

}  // namespace rocdp
