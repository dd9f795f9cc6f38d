// Copyright 2026 The barne-kit Authors
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

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "barne/endorsement/classify.hpp"
#include "barne/endorsement/params.hpp"
#include "barne/game/errors.hpp"
#include "barne/report/compare.hpp"
#include "barne/report/serialize.hpp"
#include "barne/report/svg.hpp"
#include "barne/sim/simulator.hpp"

namespace barne::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string config;
  std::string out_csv, out_json, out_svg, trace;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> rounds;
  std::optional<int> f, g;
  std::string base, fines, traps;
  std::string fixture, concept_name;
  std::vector<std::string> check_args;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path);
  return ss.str();
}

json read_json(const std::string& path) {
  const std::string text = read_file(path);
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw endorsement::ConfigError({path + ": not valid JSON"});
  if (!j.is_object()) throw endorsement::ConfigError({path + ": expected a JSON object"});
  return j;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("error while writing " + path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit_json(const Options& o, const json& j, std::ostream& out) {
  if (o.out_json.empty())
    out << dump(j);
  else
    write_file(o.out_json, dump(j));
}

void warn_advisories(const endorsement::ProtocolParams& p, std::ostream& err) {
  for (const auto& a : p.advisories()) err << "warning: " << a << "\n";
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  json cfg = read_json(o.config);
  const auto params = endorsement::params_from_json(cfg);
  int f = 0, g = 0;
  if (auto it = cfg.find("point"); it != cfg.end() && it->is_object()) {
    f = it->value("f", 0);
    g = it->value("g", 0);
  }
  if (o.f) f = *o.f;
  if (o.g) g = *o.g;
  if (!o.f && !cfg.contains("point")) throw UsageError("classify needs --f/--g or a point in the config");
  warn_advisories(params, err);
  const auto verdict = endorsement::classify_point(params, f, g);
  json special = json::array();
  for (const auto& s : endorsement::special_areas(params, f, g).names()) special.push_back(s);
  emit_json(o,
            {{"params", endorsement::to_json(params)},
             {"point", {{"f", f}, {"g", g}, {"h", params.n - f - g}}},
             {"special_areas", special},
             {"verdict", report::to_json(verdict)}},
            out);
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const auto params = endorsement::params_from_json(read_json(o.config));
  warn_advisories(params, err);
  const auto map = endorsement::simplex_scan(params);
  if (!o.out_csv.empty()) write_file(o.out_csv, report::to_csv(map));
  if (!o.out_svg.empty()) write_file(o.out_svg, report::render_svg(map));
  if (!o.out_json.empty() || (o.out_csv.empty() && o.out_svg.empty()))
    emit_json(o, report::to_json(map), out);
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  json cfg = read_json(o.config);
  if (o.seed) cfg["seed"] = *o.seed;
  if (o.rounds) cfg["rounds"] = *o.rounds;
  if (!cfg.contains("seed"))
    throw endorsement::ConfigError({"simulate needs an explicit seed (config field seed or --seed)"});
  const auto config = sim::sim_config_from_json(cfg);
  warn_advisories(config.params, err);

  sim::SimResult result;
  if (o.trace.empty()) {
    result = sim::run_simulation(config);
  } else {
    std::ofstream trace(o.trace, std::ios::binary | std::ios::trunc);
    if (!trace) throw IoError("cannot write " + o.trace);
    sim::write_trace_header(trace);
    result = sim::run_simulation(config, [&](const sim::RoundRecord& r) {
      sim::write_trace_row(trace, r);
    });
    trace.flush();
    if (!trace) throw IoError("error while writing " + o.trace);
  }
  emit_json(o, sim::to_json(result), out);
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream&) {
  if (o.fixture.empty() || o.concept_name.empty())
    throw UsageError("usage: barne-kit check <fixture> <concept> [key=value ...]");
  emit_json(o, run_check(o.fixture, o.concept_name, parse_check_args(o.check_args)), out);
  return kOk;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<endorsement::SimplexMap> maps;
  const bool from_scans = !o.base.empty() || !o.fines.empty() || !o.traps.empty();
  if (from_scans) {
    if (!o.config.empty()) throw UsageError("compare takes either --config or scan files, not both");
    for (const std::string* path : {&o.base, &o.fines, &o.traps}) {
      if (path->empty()) continue;
      try {
        maps.push_back(report::simplex_map_from_json(read_json(*path)));
      } catch (const json::exception& e) {
        throw endorsement::ConfigError({*path + ": not a scan: " + e.what()});
      }
    }
    if (maps.size() < 2) throw UsageError("compare needs at least two of --base/--fines/--traps");
  } else {
    if (o.config.empty()) throw UsageError("compare needs --config or --base/--fines/--traps");
    json cfg = read_json(o.config);
    for (const char* level : {"base", "fines", "fines_and_traps"}) {
      cfg["amendments"] = level;
      maps.push_back(endorsement::simplex_scan(endorsement::params_from_json(cfg)));
    }
  }
  const auto report = report::compare_scans(maps);
  if (!report.honest_monotone) err << "warning: honest region is not monotone across levels\n";
  if (!report.blind_vanishes) err << "warning: sigma_e region is not empty at the last level\n";
  emit_json(o, report::to_json(report), out);
  return kOk;
}

void add_outputs(CLI::App* cmd, Options& o, bool csv_svg) {
  cmd->add_option("--out-json", o.out_json, "Write the JSON result here instead of stdout");
  if (csv_svg) {
    cmd->add_option("--out-csv", o.out_csv, "Write the per-point CSV table");
    cmd->add_option("--out-svg", o.out_svg, "Write the simplex SVG");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"BAR Nash equilibrium toolkit for quorum endorsement games", "barne-kit"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "Classify one (f, g) point");
  classify->add_option("--config", o.config, "Protocol parameters (JSON)")->required();
  classify->add_option("--f", o.f, "Byzantine count");
  classify->add_option("--g", o.g, "Rational count");
  add_outputs(classify, o, false);

  auto* scan = app.add_subcommand("scan", "Classify every point of the simplex");
  scan->add_option("--config", o.config, "Protocol parameters (JSON)")->required();
  add_outputs(scan, o, true);

  auto* simulate = app.add_subcommand("simulate", "Run the round-based protocol simulator");
  simulate->add_option("--config", o.config, "Simulation config (JSON)")->required();
  simulate->add_option("--seed", o.seed, "RNG seed (overrides the config)");
  simulate->add_option("--rounds", o.rounds, "Number of rounds (overrides the config)");
  simulate->add_option("--trace", o.trace, "Write a per-round CSV trace");
  add_outputs(simulate, o, false);

  auto* check = app.add_subcommand("check", "Run an equilibrium checker on a fixture game");
  check->add_option("fixture", o.fixture, "congestion | pd | endorsement-small");
  check->add_option("concept", o.concept_name,
                    "barne | bar_strong | globally_stable | delta_stable | mixed | inclusion-chain");
  check->add_option("args", o.check_args, "key=value arguments");
  add_outputs(check, o, false);

  auto* compare = app.add_subcommand("compare", "Diff scans across amendment levels");
  compare->add_option("--config", o.config, "Parameters; scanned at all three levels");
  compare->add_option("--base", o.base, "Base scan (JSON from scan --out-json)");
  compare->add_option("--fines", o.fines, "Fines scan");
  compare->add_option("--traps", o.traps, "FinesAndTraps scan");
  add_outputs(compare, o, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidation;
  }

  try {
    if (classify->parsed()) return cmd_classify(o, out, err);
    if (scan->parsed()) return cmd_scan(o, out, err);
    if (simulate->parsed()) return cmd_simulate(o, out, err);
    if (check->parsed()) return cmd_check(o, out, err);
    if (compare->parsed()) return cmd_compare(o, out, err);
  } catch (const endorsement::ConfigError& e) {
    err << "error: invalid configuration\n";
    for (const auto& v : e.violations()) err << "  - " << v << "\n";
    return kValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kValidation;
}

}  // namespace barne::cli
