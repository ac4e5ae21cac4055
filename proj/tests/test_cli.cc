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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "rocdp/conversion.h"
#include "rocdp/trade_off.h"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

// Runs the installed binary once and captures both streams and the exit code.
CliResult RunCli(const std::string& args) {
  static int sequence = 0;
  const std::string err_path =
      "/tmp/rocdp_cli_stderr_" + std::to_string(getpid()) + "_" + std::to_string(sequence++);
  const std::string command = std::string(ROCDP_CLI_PATH) + " " + args + " 2>" + err_path;
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err_file(err_path);
  std::stringstream err_text;
  err_text << err_file.rdbuf();
  result.err = err_text.str();
  std::remove(err_path.c_str());
  return result;
}

std::vector<std::string> SplitLines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) lines.push_back(line);
  return lines;
}

std::vector<std::pair<double, double>> CsvRows(const std::string& text) {
  std::vector<std::pair<double, double>> rows;
  for (const std::string& line : SplitLines(text)) {
    if (line.empty() || line[0] == '#') continue;
    const size_t comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    rows.emplace_back(std::strtod(line.substr(0, comma).c_str(), nullptr),
                      std::strtod(line.substr(comma + 1).c_str(), nullptr));
  }
  return rows;
}

// Key-value pairs from the `# k=v,...` comment header.
std::vector<std::pair<std::string, std::string>> CsvMeta(const std::string& header) {
  REQUIRE(header.rfind("# ", 0) == 0);
  std::vector<std::pair<std::string, std::string>> meta;
  std::stringstream stream(header.substr(2));
  std::string item;
  while (std::getline(stream, item, ',')) {
    const size_t eq = item.find('=');
    REQUIRE(eq != std::string::npos);
    meta.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return meta;
}

TEST_CASE("roc emits exact endpoints") {
  const CliResult r = RunCli("roc --points 2");
  CHECK(r.code == 0);
  const auto lines = SplitLines(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "# kind=glrt-sym,sensitivity=1,sigma2=1,dim=1,rounds=1");
  CHECK(lines[1] == "0,0");
  CHECK(lines[2] == "1,1");
}

TEST_CASE("roc respects a zero-sensitivity mechanism") {
  const CliResult r = RunCli("roc --sensitivity 0 --points 9");
  CHECK(r.code == 0);
  for (const auto& [x, y] : CsvRows(r.out)) {
    CHECK(y == x);
  }
}

TEST_CASE("roc output is deterministic and matches the library") {
  const std::string args = "roc --sigma2 36 --rounds 70 --adversary glrt --points 65";
  const CliResult a = RunCli(args);
  const CliResult b = RunCli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto rows = CsvRows(a.out);
  REQUIRE(rows.size() == 65);
  const rocdp::MechanismParams params{1.0, 36.0, 1, 70};
  for (const auto& [x, y] : rows) {
    CHECK(std::fabs(y - rocdp::GlrtRoc(params, x)) <= 1e-11);
  }
}

TEST_CASE("roc CSV and JSON carry identical numeric content") {
  const std::string args = "roc --sigma2 4 --dim 3 --points 33 --adversary glrt-sym";
  const CliResult csv = RunCli(args + " --format csv");
  const CliResult json = RunCli(args + " --format json");
  REQUIRE(csv.code == 0);
  REQUIRE(json.code == 0);
  const auto parsed = nlohmann::json::parse(json.out);
  const auto rows = CsvRows(csv.out);
  const auto& points = parsed.at("points");
  REQUIRE(points.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(points[i][0].get<double>() == rows[i].first);
    CHECK(points[i][1].get<double>() == rows[i].second);
  }
  const auto meta = CsvMeta(SplitLines(csv.out).front());
  REQUIRE(meta.size() == parsed.at("meta").size());
  for (const auto& [key, value] : meta) {
    const auto& jv = parsed.at("meta").at(key);
    if (jv.is_number()) {
      CHECK(jv.get<double>() == std::strtod(value.c_str(), nullptr));
    } else {
      CHECK(jv.get<std::string>() == value);
    }
  }
}

TEST_CASE("roc reports the asymptotic curve with its limit parameter") {
  const CliResult r =
      RunCli("roc --adversary gdp-asymptotic --sigma2 100 --dim 300 --rounds 1000 --points 3");
  CHECK(r.code == 0);
  const auto meta = CsvMeta(SplitLines(r.out).front());
  bool saw_mu = false;
  bool saw_sup = false;
  for (const auto& [key, value] : meta) {
    if (key == "mu") {
      saw_mu = true;
      CHECK(std::strtod(value.c_str(), nullptr) ==
            doctest::Approx(10.0 / std::sqrt(600.0)).epsilon(1e-11));
    }
    if (key == "clt_sup_distance") {
      saw_sup = true;
      CHECK(std::strtod(value.c_str(), nullptr) < 0.02);
    }
  }
  CHECK(saw_mu);
  CHECK(saw_sup);
}

TEST_CASE("profile reproduces the conversion reference value") {
  const CliResult r =
      RunCli("profile --sensitivity 0.5 --eps-min 0.37 --eps-max 1 --eps-points 2");
  CHECK(r.code == 0);
  const auto rows = CsvRows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].first == 0.37);
  CHECK(rows[0].second == doctest::Approx(7.813741200236e-3).epsilon(1e-9));
}

TEST_CASE("profile with the oracle adversary matches the analytic profile") {
  const CliResult r = RunCli("profile --adversary npo --eps-min 0 --eps-max 3 --eps-points 24");
  CHECK(r.code == 0);
  const auto rows = CsvRows(r.out);
  REQUIRE(rows.size() == 24);
  for (const auto& [eps, delta] : rows) {
    CHECK(std::fabs(delta - rocdp::AnalyticGaussianProfileDelta(1.0, eps)) <= 1e-6);
  }
}

TEST_CASE("profile treats full sampling the same as no sampling flag") {
  const std::string base = "profile --eps-points 16 --eps-max 2";
  const CliResult plain = RunCli(base);
  const CliResult full = RunCli(base + " --gamma 1");
  CHECK(plain.code == 0);
  CHECK(full.code == 0);
  CHECK(plain.out == full.out);
}

TEST_CASE("profile applies subsampling to every grid point") {
  const CliResult r = RunCli("profile --gamma 0.2 --eps-points 3 --eps-max 1");
  CHECK(r.code == 0);
  const auto meta = CsvMeta(SplitLines(r.out).front());
  CHECK(meta.back().first == "gamma");
  const auto rows = CsvRows(r.out);
  REQUIRE(rows.size() == 3);
  // log(1 + 0.2 (e^1 - 1)) at the top of the grid.
  CHECK(rows[2].first == doctest::Approx(0.2953945291203476).epsilon(1e-11));
}

TEST_CASE("audit at a pinned seed meets the tolerance and verifies parity") {
  const std::string args =
      "audit --sigma2 36 --rounds 70 --trials 1000 --cutoffs 100 --seed 146";
  const CliResult csv = RunCli(args);
  CHECK(csv.code == 0);
  const CliResult json = RunCli(args + " --format json");
  CHECK(json.code == 0);
  const auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed.at("meta").at("sup_distance").get<double>() <= 0.04);
  CHECK(parsed.at("meta").at("eps_at_delta_1e-2").get<double>() ==
        doctest::Approx(2.94365950).epsilon(1e-6));

  // The four CSV table sections mirror the JSON arrays.
  const char* names[] = {"empirical_null_zero", "empirical_null_delta",
                         "theory_null_zero", "theory_null_delta"};
  std::vector<std::string> sections;
  std::string current;
  for (const std::string& line : SplitLines(csv.out)) {
    if (line.empty()) {
      if (!current.empty()) sections.push_back(current);
      current.clear();
    } else {
      current += line + "\n";
    }
  }
  if (!current.empty()) sections.push_back(current);
  REQUIRE(sections.size() == 5);
  for (int t = 0; t < 4; ++t) {
    const auto rows = CsvRows(sections[t + 1]);
    const auto& arr = parsed.at(names[t]);
    REQUIRE(rows.size() == arr.size());
    for (size_t i = 0; i < rows.size(); ++i) {
      CHECK(arr[i][0].get<double>() == rows[i].first);
      CHECK(arr[i][1].get<double>() == rows[i].second);
    }
  }
}

TEST_CASE("audit warns when a class is starved") {
  const CliResult r = RunCli("audit --trials 1 --cutoffs 2 --seed 1");
  CHECK((r.code == 0 || r.code == 3));
  CHECK(r.err.find("warning:") != std::string::npos);
}

TEST_CASE("audit fails closed when the tolerance is exceeded") {
  // An unlucky seed with few trials cannot meet a needle-thin tolerance.
  const CliResult r =
      RunCli("audit --trials 50 --cutoffs 10 --seed 2 --tolerance 0.001");
  CHECK(r.code == 3);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(RunCli("").code == 2);
  CHECK(RunCli("roc --bogus-flag").code == 2);
  CHECK(RunCli("roc --points 1").code == 2);
  CHECK(RunCli("profile --sigma2 0").code == 2);
  CHECK(RunCli("audit --cutoffs 1").code == 2);
  CHECK(RunCli("frobnicate").code == 2);
}

}  // namespace
