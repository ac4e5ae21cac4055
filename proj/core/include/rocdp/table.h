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

#ifndef ROCDP_TABLE_H_
#define ROCDP_TABLE_H_

#include <string>
#include <utility>
#include <vector>

namespace rocdp {

// Two-column numeric table with ordered key-value metadata, the common
// exchange shape for curve and profile output.
struct CurvePointTable {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::pair<double, double>> rows;
};

// Rounds through the shortest decimal representation with 12 significant
// digits, so equal printed values compare equal as doubles.
double Round12(double v);

// Shortest decimal form with 12 significant digits (printf %.12g).
std::string FormatNumber(double v);

// CSV with one `# key=value,...` header comment line followed by bare
// `x,y` rows.
std::string ToCsv(const CurvePointTable& table);

}  // namespace rocdp

#endif  // ROCDP_TABLE_H_
