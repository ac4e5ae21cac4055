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
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rocdp/amplification.h"
#include "rocdp/attack_sim.h"
#include "rocdp/composition.h"
#include "rocdp/conversion.h"
#include "rocdp/table.h"
#include "rocdp/trade_off.h"

namespace {

using nlohmann::ordered_json;
using rocdp::CurvePointTable;
using rocdp::FormatNumber;
using rocdp::MechanismParams;
using rocdp::RocCurve;
using rocdp::Round12;

constexpr int kExitUsage = 2;
constexpr int kExitTolerance = 3;

// Metadata assembled once and rendered into both the CSV comment header and
// the JSON meta object, so the two formats carry identical numeric content.
class Meta {
 public:
  void Add(const std::string& key, const std::string& value) {
    csv_.emplace_back(key, value);
    json_[key] = value;
  }
  void AddNumber(const std::string& key, double value) {
    const double r = Round12(value);
    csv_.emplace_back(key, FormatNumber(r));
    json_[key] = r;
  }
  void AddInt(const std::string& key, long long value) {
    csv_.emplace_back(key, std::to_string(value));
    json_[key] = value;
  }
  const std::vector<std::pair<std::string, std::string>>& csv() const { return csv_; }
  const ordered_json& json() const { return json_; }

 private:
  std::vector<std::pair<std::string, std::string>> csv_;
  ordered_json json_;
};

struct MechanismFlags {
  double sensitivity = 1.0;
  double sigma2 = 1.0;
  int dim = 1;
  int rounds = 1;

  MechanismParams ToParams() const { return {sensitivity, sigma2, dim, rounds}; }
};

void AddMechanismOptions(CLI::App* cmd, MechanismFlags* m) {
  cmd->add_option("--sensitivity", m->sensitivity, "L2 sensitivity of the query")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--sigma2", m->sigma2, "Gaussian noise variance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--dim", m->dim, "Query dimension")->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--rounds", m->rounds, "Composition rounds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

RocCurve SymmetrizedGlrt(const MechanismParams& p) {
  return rocdp::Symmetrize(rocdp::MakeGlrtCurve(p), rocdp::MakeGlrtPrimeCurve(p));
}

// Sup distance between the GDP asymptotic curve and the exact composed GLRT
// curve, sampled on an interior grid; emitted as a diagnostic only.
double CltSupDistance(const MechanismParams& p) {
  double sup = 0.0;
  for (int i = 1; i < 101; ++i) {
    const double x = i / 101.0;
    const double gap = std::fabs(rocdp::AsymptoticRocGdp(p, x) - rocdp::GlrtRoc(p, x));
    if (gap > sup) sup = gap;
  }
  return sup;
}

void AddMechanismMeta(Meta* meta, const MechanismParams& p) {
  meta->AddNumber("sensitivity", p.sensitivity);
  meta->AddNumber("sigma2", p.noise_variance);
  meta->AddInt("dim", p.dim);
  meta->AddInt("rounds", p.rounds);
}

std::string RenderCsv(const Meta& meta, const std::vector<std::pair<double, double>>& rows) {
  CurvePointTable t;
  t.meta = meta.csv();
  t.rows = rows;
  return rocdp::ToCsv(t);
}

ordered_json RowsToJson(const std::vector<std::pair<double, double>>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& [x, y] : rows) {
    arr.push_back({x, y});
  }
  return arr;
}

std::vector<std::pair<double, double>> RoundRows(
    const std::vector<std::pair<double, double>>& rows) {
  std::vector<std::pair<double, double>> out;
  out.reserve(rows.size());
  for (const auto& [x, y] : rows) {
    out.emplace_back(Round12(x), Round12(y));
  }
  return out;
}

int RunRoc(const MechanismFlags& mech, const std::string& adversary, int points,
           const std::string& format) {
  const MechanismParams p = mech.ToParams();
  RocCurve curve = [&]() {
    if (adversary == "glrt") return rocdp::MakeGlrtCurve(p);
    if (adversary == "glrt-sym") return SymmetrizedGlrt(p);
    if (adversary == "npo") return rocdp::MakeNpoCurve(p);
    return rocdp::MakeAsymptoticGdpCurve(p);
  }();

  Meta meta;
  meta.Add("kind", rocdp::CurveKindName(curve.kind()));
  AddMechanismMeta(&meta, p);
  if (curve.kind() == rocdp::CurveKind::kAsymptoticGdp) {
    meta.AddNumber("mu", rocdp::AsymptoticGdpMu(p).mu);
    meta.AddNumber("clt_sup_distance", CltSupDistance(p));
  }

  std::vector<std::pair<double, double>> rows;
  rows.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double x = static_cast<double>(i) / (points - 1);
    rows.emplace_back(x, curve.Eval(x));
  }
  rows = RoundRows(rows);

  if (format == "json") {
    ordered_json out;
    out["meta"] = meta.json();
    out["points"] = RowsToJson(rows);
    std::fputs((out.dump() + "\n").c_str(), stdout);
  } else {
    std::fputs(RenderCsv(meta, rows).c_str(), stdout);
  }
  return 0;
}

int RunProfile(const MechanismFlags& mech, const std::string& adversary, double eps_min,
               double eps_max, int eps_points, bool has_gamma, double gamma,
               const std::string& format) {
  const MechanismParams p = mech.ToParams();
  RocCurve curve = [&]() {
    // Conjugation requires a symmetric curve, so glrt means glrt-sym here.
    if (adversary == "glrt" || adversary == "glrt-sym") return SymmetrizedGlrt(p);
    if (adversary == "npo") return rocdp::MakeNpoCurve(p);
    return rocdp::MakeAsymptoticGdpCurve(p);
  }();

  Meta meta;
  meta.Add("kind", rocdp::CurveKindName(curve.kind()));
  AddMechanismMeta(&meta, p);
  if (curve.kind() == rocdp::CurveKind::kAsymptoticGdp) {
    meta.AddNumber("mu", rocdp::AsymptoticGdpMu(p).mu);
    meta.AddNumber("clt_sup_distance", CltSupDistance(p));
  }

  const rocdp::PrivacyProfile profile(curve);
  std::vector<rocdp::ProfilePoint> grid = profile.Grid(eps_min, eps_max, eps_points);
  const bool amplify = has_gamma && gamma != 1.0;
  if (amplify) {
    meta.AddNumber("gamma", gamma);
    grid = rocdp::AmplifyProfile(grid, gamma);
  }

  std::vector<std::pair<double, double>> rows;
  rows.reserve(grid.size());
  for (const rocdp::ProfilePoint& pt : grid) {
    rows.emplace_back(pt.epsilon, pt.delta);
  }
  rows = RoundRows(rows);

  if (format == "json") {
    ordered_json out;
    out["meta"] = meta.json();
    out["points"] = RowsToJson(rows);
    std::fputs((out.dump() + "\n").c_str(), stdout);
  } else {
    std::fputs(RenderCsv(meta, rows).c_str(), stdout);
  }
  return 0;
}

std::vector<std::pair<double, double>> EmpiricalRows(const rocdp::EmpiricalRoc& roc) {
  std::vector<std::pair<double, double>> rows;
  rows.reserve(roc.points.size());
  for (const rocdp::EmpiricalRocPoint& pt : roc.points) {
    rows.emplace_back(pt.p_f, pt.p_d);
  }
  return rows;
}

std::vector<std::pair<double, double>> TheoryRows(const rocdp::EmpiricalRoc& roc,
                                                 const RocCurve& curve) {
  std::vector<std::pair<double, double>> rows;
  rows.reserve(roc.points.size());
  for (const rocdp::EmpiricalRocPoint& pt : roc.points) {
    rows.emplace_back(pt.p_f, curve.Eval(pt.p_f));
  }
  return rows;
}

int RunAudit(const MechanismFlags& mech, const std::string& adversary, int trials, int cutoffs,
             std::uint64_t seed, double tolerance, const std::string& format) {
  const MechanismParams p = mech.ToParams();
  rocdp::AuditConfig config;
  config.params = p;
  config.trials = trials;
  config.cutoffs = cutoffs;
  config.seed = seed;
  config.adversary = adversary == "npo" ? rocdp::Adversary::kNpoLikelihood
                                        : rocdp::Adversary::kGlrtMagnitude;

  const bool glrt = config.adversary == rocdp::Adversary::kGlrtMagnitude;
  const RocCurve theory_zero = glrt ? rocdp::MakeGlrtCurve(p) : rocdp::MakeNpoCurve(p);
  const RocCurve theory_delta = glrt ? rocdp::MakeGlrtPrimeCurve(p) : rocdp::MakeNpoCurve(p);

  const auto [emp_zero, emp_delta] = rocdp::RunGame(config);
  const double sup_zero = rocdp::CompareToTheory(emp_zero, theory_zero);
  const double sup_delta = rocdp::CompareToTheory(emp_delta, theory_delta);
  const double sup = sup_zero > sup_delta ? sup_zero : sup_delta;
  const rocdp::EstimationError err = rocdp::EstimateError(emp_zero);
  const rocdp::EstimationError err_delta = rocdp::EstimateError(emp_delta);
  const int min_class =
      err.min_class_count < err_delta.min_class_count ? err.min_class_count
                                                      : err_delta.min_class_count;
  const double band = err.standard_error > err_delta.standard_error ? err.standard_error
                                                                    : err_delta.standard_error;

  Meta meta;
  meta.Add("kind", "audit");
  meta.Add("adversary", glrt ? "glrt" : "npo");
  AddMechanismMeta(&meta, p);
  meta.AddInt("trials", trials);
  meta.AddInt("cutoffs", cutoffs);
  meta.AddInt("seed", static_cast<long long>(seed));
  meta.AddNumber("tolerance", tolerance);
  meta.AddNumber("sup_null_zero", sup_zero);
  meta.AddNumber("sup_null_delta", sup_delta);
  meta.AddNumber("sup_distance", sup);
  meta.AddInt("min_class_count", min_class);
  meta.AddNumber("standard_error", band);
  try {
    const RocCurve sym = glrt ? SymmetrizedGlrt(p) : rocdp::MakeNpoCurve(p);
    meta.AddNumber("eps_at_delta_1e-2",
                   rocdp::PrivacyProfile(sym).EpsilonAtDelta(1e-2).epsilon);
  } catch (const std::range_error&) {
    // Unreachable at epsilon <= 50; omit the summary field.
  }

  const auto rows_emp_zero = RoundRows(EmpiricalRows(emp_zero));
  const auto rows_emp_delta = RoundRows(EmpiricalRows(emp_delta));
  const auto rows_thy_zero = RoundRows(TheoryRows(emp_zero, theory_zero));
  const auto rows_thy_delta = RoundRows(TheoryRows(emp_delta, theory_delta));

  if (min_class < 30) {
    std::fprintf(stderr,
                 "warning: fewest trials in a class is %d; the binomial confidence band "
                 "(+/- %.3g) is wide\n",
                 min_class, 2.0 * band);
  }

  std::string out_text;
  if (format == "json") {
    ordered_json out;
    out["meta"] = meta.json();
    out["empirical_null_zero"] = RowsToJson(rows_emp_zero);
    out["empirical_null_delta"] = RowsToJson(rows_emp_delta);
    out["theory_null_zero"] = RowsToJson(rows_thy_zero);
    out["theory_null_delta"] = RowsToJson(rows_thy_delta);
    out_text = out.dump() + "\n";
  } else {
    CurvePointTable header;
    header.meta = meta.csv();
    out_text = rocdp::ToCsv(header);
    const std::pair<std::string, std::vector<std::pair<double, double>>> tables[] = {
        {"empirical-null-zero", rows_emp_zero},
        {"empirical-null-delta", rows_emp_delta},
        {"theory-null-zero", rows_thy_zero},
        {"theory-null-delta", rows_thy_delta},
    };
    for (const auto& [name, rows] : tables) {
      CurvePointTable t;
      t.meta = {{"table", name}};
      t.rows = rows;
      out_text += "\n" + rocdp::ToCsv(t);
    }
  }
  std::fputs(out_text.c_str(), stdout);
  return sup <= tolerance ? 0 : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ROC-based differential privacy accounting for the Gaussian mechanism"};
  app.require_subcommand(1);

  MechanismFlags roc_mech;
  std::string roc_adversary = "glrt-sym";
  int roc_points = 512;
  std::string roc_format = "csv";
  CLI::App* roc = app.add_subcommand("roc", "Sample a trade-off (ROC) curve");
  AddMechanismOptions(roc, &roc_mech);
  roc->add_option("--adversary", roc_adversary, "Curve family")
      ->check(CLI::IsMember({"glrt", "glrt-sym", "npo", "gdp-asymptotic"}))
      ->capture_default_str();
  roc->add_option("--points", roc_points, "Number of sample points")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  roc->add_option("--format", roc_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  MechanismFlags prof_mech;
  std::string prof_adversary = "glrt-sym";
  double eps_min = 0.0;
  double eps_max = 5.0;
  int eps_points = 128;
  double gamma = 1.0;
  std::string prof_format = "csv";
  CLI::App* prof = app.add_subcommand("profile", "Convert a curve to an (epsilon, delta) profile");
  AddMechanismOptions(prof, &prof_mech);
  prof->add_option("--adversary", prof_adversary,
                   "Curve family (glrt is conjugated via its symmetrization, same as glrt-sym)")
      ->check(CLI::IsMember({"glrt", "glrt-sym", "npo", "gdp-asymptotic"}))
      ->capture_default_str();
  prof->add_option("--eps-min", eps_min, "Smallest epsilon")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  prof->add_option("--eps-max", eps_max, "Largest epsilon")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  prof->add_option("--eps-points", eps_points, "Grid size")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  CLI::Option* gamma_opt =
      prof->add_option("--gamma", gamma, "Poisson subsampling rate for amplification")
          ->check(CLI::Range(1e-12, 1.0));
  prof->add_option("--format", prof_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  MechanismFlags audit_mech;
  std::string audit_adversary = "glrt";
  int trials = 1000;
  int cutoffs = 100;
  std::uint64_t seed = 0;
  double tolerance = 0.04;
  std::string audit_format = "csv";
  CLI::App* audit = app.add_subcommand("audit", "Monte Carlo membership-inference audit");
  AddMechanismOptions(audit, &audit_mech);
  audit->add_option("--adversary", audit_adversary, "Attack statistic")
      ->check(CLI::IsMember({"glrt", "npo"}))
      ->capture_default_str();
  audit->add_option("--trials", trials, "Game repetitions per direction")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  audit->add_option("--cutoffs", cutoffs, "Threshold grid size")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  audit->add_option("--seed", seed, "Random seed")->capture_default_str();
  audit->add_option("--tolerance", tolerance, "Largest acceptable sup distance to theory")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  audit->add_option("--format", audit_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (roc->parsed()) {
      return RunRoc(roc_mech, roc_adversary, roc_points, roc_format);
    }
    if (prof->parsed()) {
      return RunProfile(prof_mech, prof_adversary, eps_min, eps_max, eps_points,
                        gamma_opt->count() > 0, gamma, prof_format);
    }
    return RunAudit(audit_mech, audit_adversary, trials, cutoffs, seed, tolerance, audit_format);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
