// Copyright 2026 The qlsi Authors
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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <span>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlsi/applications.hpp"
#include "qlsi/errors.hpp"
#include "qlsi/harness.hpp"
#include "qlsi/hyperc.hpp"
#include "qlsi/io.hpp"
#include "qlsi/report.hpp"
#include "qlsi/sobolev.hpp"
#include "qlsi/spectral.hpp"
#include "qlsi/svg.hpp"
#include "qlsi/version.hpp"

namespace qlsi::cli {
namespace {

using nlohmann::json;

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_file_atomic(path, content);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json bundle_header(const std::string& command) {
  return json{{"tool", "qlsi"}, {"version", kVersion}, {"command", command}};
}

int status_of(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; })
             ? kOk
             : kCheckFailed;
}

json summary_json(const std::vector<CheckReport>& reports) {
  json out = json::array();
  for (const CheckSummary& s : summarize(reports)) {
    out.push_back({{"name", s.name}, {"passed", s.passed}, {"failed", s.failed},
                   {"worst_gap", s.worst_gap}});
  }
  return out;
}

std::vector<double> uniform_grid(double hi, int points) {
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = i + 1 == points ? hi : hi * i / (points - 1);
  return grid;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

void validate(const CliConfig& c) {
  require(c.tol > 0.0, "--tol must be positive");
  require(c.step > 0.0, "--step must be positive");
  require(c.horizon > 0.0, "--horizon must be positive");
  require(c.trials >= 1, "--trials must be at least 1");
  require(c.grid >= 2, "--grid must be at least 2");
  require(c.max_n >= 1 && c.max_n <= kMaxQubits, "--max-n must be in [1, 12]");
  require(c.p0 > 1.0, "--p0 must exceed 1");
}

}  // namespace

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  require(!config.input.empty(), "verify needs --input");
  require(!config.format || *config.format == Format::kJson, "verify writes JSON only");
  const DenseOperator x = parse_operator_json(read_text_file(config.input));

  json bundle = bundle_header("verify");
  bundle["input"] = config.input;
  bundle["n"] = x.qubits();
  bundle["tol"] = config.tol;
  bundle["p0"] = config.p0;

  std::vector<CheckReport> reports;
  json skipped = json::array();
  if (is_psd(x)) {
    const LsiReport lsi = lsi_check(x, config.tol);
    reports.push_back(lsi.as_check());
    bundle["lsi"] = {{"xi", lsi.xi},
                     {"alpha_xi", lsi.alpha_xi},
                     {"entropy_sq", lsi.entropy_sq},
                     {"lhs", lsi.lhs},
                     {"rhs", lsi.rhs},
                     {"gap", lsi.gap},
                     {"classical_lhs", lsi.classical_lhs}};
    reports.push_back(faber_krahn_check(x, config.tol));
    if (numerical_rank(x) == x.dim()) {
      const ModifiedLsiReport mlsi = modified_lsi_check(x, config.tol);
      reports.push_back(mlsi.inequality);
      reports.push_back(mlsi.stroock_varopoulos);
    } else {
      skipped.push_back({{"name", "modified_lsi"}, {"reason", "operator is singular"}});
    }
  } else {
    for (const char* name : {"theorem1_lsi", "theorem3_faber_krahn", "modified_lsi"}) {
      skipped.push_back({{"name", name}, {"reason", "operator is not positive semidefinite"}});
    }
  }
  const DegreeRankReport sz = sz_check(x, config.tol);
  reports.push_back(sz.as_check());
  bundle["degree_rank"] = sz;
  const std::vector<double> grid = uniform_grid(config.horizon, config.grid);
  for (CheckReport& r : hc_check(x, config.p0, grid, config.tol, config.step)) {
    reports.push_back(std::move(r));
  }

  const int status = status_of(reports);
  bundle["checks"] = reports;
  bundle["skipped"] = skipped;
  bundle["summary"] = summary_json(reports);
  bundle["verdict"] = status == kOk ? "pass" : "fail";
  emit(config.out, dump(bundle), out);
  if (status != kOk) {
    for (const CheckReport& r : reports) {
      if (!r.passed) err << "check failed: " << r.name << " gap=" << format_g17(r.gap) << "\n";
    }
  }
  return status;
}

int cmd_fuzz(const CliConfig& config, std::ostream& out, std::ostream& err) {
  require(!config.format || *config.format == Format::kJson, "fuzz writes JSON only");
  const SuiteTolerances tol{config.tol, SuiteTolerances{}.finite_difference};

  if (!config.replay.empty()) {
    const std::vector<CheckReport> reports = replay(config.replay, tol);
    json bundle = bundle_header("fuzz");
    bundle["replay"] = config.replay;
    bundle["generator"] = Rng::kName;
    bundle["reports"] = reports;
    emit(config.out, dump(bundle), out);
    return status_of(reports);
  }

  std::vector<CheckReport> reports = run_lemma_suite(config.seed, config.trials, config.max_n, tol);
  for (CheckReport& r : run_theorem_suite(config.seed, config.trials, config.max_n, tol)) {
    reports.push_back(std::move(r));
  }
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    return a.name != b.name ? a.name < b.name : a.trial < b.trial;
  });

  const std::vector<CheckSummary> summary = summarize(reports);
  for (const CheckSummary& s : summary) {
    out << s.name << " pass=" << s.passed << " fail=" << s.failed
        << " worst_gap=" << format_g17(s.worst_gap) << "\n";
  }
  if (!config.out.empty()) {
    json bundle = bundle_header("fuzz");
    bundle["seed"] = config.seed;
    bundle["trials"] = config.trials;
    bundle["max_n"] = config.max_n;
    bundle["tolerances"] = {{"algebraic", tol.algebraic},
                            {"finite_difference", tol.finite_difference}};
    bundle["generator"] = Rng::kName;
    bundle["summary"] = summary_json(reports);
    bundle["reports"] = reports;
    write_file_atomic(config.out, dump(bundle));
  }

  const auto failure =
      std::find_if(reports.begin(), reports.end(), [](const CheckReport& r) { return !r.passed; });
  if (failure != reports.end()) {
    err << "first failure: " << failure->name << " seed=" << failure->instance_seed
        << "\nreplay with: --replay '"
        << failure->instance_descriptor.substr(0, failure->instance_descriptor.find('|')) << "'\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_figure1(const CliConfig& config, std::ostream& out, std::ostream& /*err*/) {
  const Format format = config.format.value_or(Format::kCsv);
  require(format != Format::kJson, "figure1 writes CSV or SVG");
  const std::filesystem::path dir = config.out.empty() ? "." : config.out;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!std::filesystem::is_directory(dir)) throw IoError("cannot create directory " + dir.string());

  const Figure1Data data = figure1_data(config.grid);
  const auto write = [&](const std::string& name, const std::string& content) {
    write_file_atomic(dir / name, content);
    out << (dir / name).string() << "\n";
  };
  write("figure1a.csv", data.alpha_curve.to_csv());
  write("figure1b.csv", data.mixture_bounds.to_csv());
  if (format == Format::kSvg) {
    const auto column = [](const Table& t, std::size_t k) {
      std::vector<double> v;
      for (const auto& row : t.rows) v.push_back(row[k]);
      return v;
    };
    const Table& a = data.alpha_curve;
    write("figure1a.svg",
          render_svg("alpha(xi)", "xi", "alpha", {{"alpha", column(a, 0), column(a, 1)}}));
    const Table& b = data.mixture_bounds;
    std::vector<SvgSeries> series;
    for (std::size_t k = 1; k < b.columns.size(); ++k) {
      series.push_back({b.columns[k], column(b, 0), column(b, k)});
    }
    write("figure1b.svg", render_svg("bounds / tau(X_s^2)", "s", "value", series));
  }
  return kOk;
}

int cmd_exponent(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const Format format = config.format.value_or(Format::kCsv);
  require(format != Format::kSvg, "exponent writes CSV or JSON");
  require(config.r0.has_value() != !config.input.empty(), "exponent needs exactly one of --r0 or --input");

  HcParams params;
  params.p0 = config.p0;
  params.step = config.step;
  params.horizon = config.horizon;
  params.r0 = config.r0 ? *config.r0
                        : max_r0(parse_operator_json(read_text_file(config.input)), config.p0);
  const ExponentPath path = solve_exponent(params);
  if (path.max_clamp_excess() > 1e-9) {
    err << "warning: alpha argument exceeded ln 2 by " << format_g17(path.max_clamp_excess())
        << " before clamping\n";
  }

  Table table;
  table.columns = {"t", "u", "p", "p_weak", "p_standard"};
  for (const ExponentSample& s : path.samples()) {
    table.rows.push_back({s.t, s.u, s.p, weak_exponent(params.p0, params.r0, s.t),
                          standard_exponent(params.p0, s.t)});
  }
  if (format == Format::kCsv) {
    emit(config.out, table.to_csv(), out);
    return kOk;
  }
  json bundle = bundle_header("exponent");
  bundle["p0"] = params.p0;
  bundle["r0"] = params.r0;
  bundle["step"] = params.step;
  bundle["horizon"] = params.horizon;
  bundle["max_clamp_excess"] = path.max_clamp_excess();
  json rows = json::array();
  for (const auto& row : table.rows) {
    json item;
    for (std::size_t k = 0; k < table.columns.size(); ++k) item[table.columns[k]] = row[k];
    rows.push_back(std::move(item));
  }
  bundle["samples"] = std::move(rows);
  emit(config.out, dump(bundle), out);
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig config;
  std::string format;
  double r0 = 0.0;

  CLI::App app{"Numerical checks for log-Sobolev and hypercontractive inequalities on qubits",
               "qlsi-cli"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "TOML config file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input", config.input, "Operator JSON file");
  app.add_option("--out", config.out, "Output file (figure1: output directory)");
  app.add_option("--tol", config.tol, "Relative tolerance for algebraic checks");
  app.add_option("--step", config.step, "RK4 step in u-time");
  app.add_option("--horizon", config.horizon, "Largest t");
  app.add_option("--p0", config.p0, "Initial exponent p0 > 1");
  CLI::Option* r0_opt = app.add_option("--r0", r0, "Exponent gain r0 in [0, (1 - 1/p0) ln 2]");
  app.add_option("--seed", config.seed, "Fuzzing seed");
  app.add_option("--trials", config.trials, "Fuzzing trials per check");
  app.add_option("--grid", config.grid, "Grid points");
  app.add_option("--max-n", config.max_n, "Largest qubit count for fuzzing");
  app.add_option("--format", format, "csv, json or svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  app.add_option("--replay", config.replay, "Re-run one fuzz instance from its descriptor");

  app.add_subcommand("verify", "Run every applicable check on an operator file")
      ->callback([&] { config.command = "verify"; });
  app.add_subcommand("fuzz", "Run the seeded lemma and theorem suites")
      ->callback([&] { config.command = "fuzz"; });
  app.add_subcommand("figure1", "Write the alpha curve and mixture-bound tables")
      ->callback([&] { config.command = "figure1"; });
  app.add_subcommand("exponent", "Solve the exponent ODE and compare with simpler schedules")
      ->callback([&] { config.command = "exponent"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  if (r0_opt->count() > 0) config.r0 = r0;
  if (format == "csv") config.format = Format::kCsv;
  if (format == "json") config.format = Format::kJson;
  if (format == "svg") config.format = Format::kSvg;

  try {
    validate(config);
    if (config.command == "verify") return cmd_verify(config, out, err);
    if (config.command == "fuzz") return cmd_fuzz(config, out, err);
    if (config.command == "figure1") return cmd_figure1(config, out, err);
    return cmd_exponent(config, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  }
}

}  // namespace qlsi::cli
