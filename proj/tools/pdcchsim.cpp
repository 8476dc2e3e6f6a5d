/*
 * Copyright 2026 The pdcchsim Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pdcch/error.hpp"
#include "pdcch/planner.hpp"
#include "pdcch/scenario_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace pdcch;

namespace {

constexpr int exit_ok            = 0;
constexpr int exit_invalid_input = 1;
constexpr int exit_runtime_error = 2;

struct common_flags {
  std::string                  input;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned>      iterations;
  std::string                  out;
  std::string                  format = "csv";
  unsigned                     workers = 0;
};

void add_common(CLI::App& cmd, common_flags& f, const char* input_help)
{
  cmd.add_option("input", f.input, input_help)->required()->check(CLI::ExistingFile);
  cmd.add_option("--seed", f.seed, "Override the master seed");
  cmd.add_option("--iterations", f.iterations, "Override the Monte Carlo iteration count")->check(CLI::PositiveNumber);
  cmd.add_option("--out", f.out, "Output file (default: stdout, or $PDCCH_OUTPUT_DIR/<name>.<format>)");
  cmd.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--workers", f.workers, "Worker threads (0 = all cores)");
}

void write_output(const std::string& text, const std::string& stem, const common_flags& f)
{
  const output_format format = *parse_output_format(f.format);
  std::optional<std::filesystem::path> path;
  if (!f.out.empty()) {
    path = f.out;
  } else {
    path = default_output_path(stem, format);
  }
  if (!path) {
    std::cout << text;
    return;
  }
  if (path->has_parent_path()) {
    std::filesystem::create_directories(path->parent_path());
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) {
    throw std::runtime_error("cannot write " + path->string());
  }
  std::cerr << "wrote " << path->string() << "\n";
}

scenario_file load_scenario(const common_flags& f)
{
  scenario_file file = parse_scenario(f.input);
  if (f.seed) {
    file.base.master_seed = *f.seed;
  }
  if (f.iterations) {
    file.base.iterations = *f.iterations;
  }
  validate(file.base);
  return file;
}

int run_simulate(const common_flags& f, bool as_sweep)
{
  scenario_file file = load_scenario(f);
  if (as_sweep && !file.sweep && !file.series) {
    throw config_error(f.input + ": scenario has no sweep or series section");
  }
  if (!as_sweep) {
    file.sweep.reset();
    file.series.reset();
  }
  std::vector<std::string> errors;
  const auto records = run_scenario_file(file, run_options{f.workers}, &errors);
  for (const auto& e : errors) {
    std::cerr << "error: " << e << "\n";
  }
  if (records.empty()) {
    throw std::runtime_error("no point of " + file.name() + " could be evaluated");
  }
  write_output(format_results(records, *parse_output_format(f.format)), file.name(), f);
  return errors.empty() ? exit_ok : exit_runtime_error;
}

int run_plan(const common_flags& f)
{
  planning_request req = parse_plan_request(f.input);
  if (f.seed) {
    req.master_seed = *f.seed;
  }
  if (f.iterations) {
    req.iterations = *f.iterations;
  }
  validate(req);
  const planning_result res = plan_min_coreset(req, run_options{f.workers});
  write_output(format_plan(req, res, *parse_output_format(f.format)), req.name, f);
  if (res.min_cces) {
    std::cerr << req.name << ": minimum CORESET " << *res.min_cces << " CCEs (blocking "
              << res.achieved_blocking << ")\n";
  } else {
    std::cerr << req.name << ": no CORESET size in [" << req.cce_min << ", " << req.cce_max
              << "] meets the target\n";
  }
  return exit_ok;
}

int run_validate_limits(const common_flags& f, unsigned rnti, std::optional<unsigned> scs)
{
  const scenario_file     file   = load_scenario(f);
  const monitoring_limits limits = monitoring_limits::for_scs(scs.value_or(file.scs_khz));
  const ue_identity       ue{rnti};
  const limits_report     rep    = validate_limits(file.base.search_space, file.base.coreset, ue, limits);

  std::string text;
  if (*parse_output_format(f.format) == output_format::json) {
    nlohmann::json j{{"scenario", file.name()},
                     {"c_rnti", rnti},
                     {"scs_khz", limits.scs_khz},
                     {"blind_decodes", rep.blind_decodes},
                     {"max_blind_decodes", limits.max_blind_decodes},
                     {"distinct_cces", rep.distinct_cces},
                     {"max_nonoverlap_cces", limits.max_nonoverlap_cces},
                     {"bd_exceeded", rep.bd_exceeded},
                     {"cce_exceeded", rep.cce_exceeded}};
    text = j.dump(2) + "\n";
  } else {
    text = "scenario,c_rnti,scs_khz,blind_decodes,max_blind_decodes,distinct_cces,max_nonoverlap_cces,bd_exceeded,"
           "cce_exceeded\n" +
           file.name() + "," + std::to_string(rnti) + "," + std::to_string(limits.scs_khz) + "," +
           std::to_string(rep.blind_decodes) + "," + std::to_string(limits.max_blind_decodes) + "," +
           std::to_string(rep.distinct_cces) + "," + std::to_string(limits.max_nonoverlap_cces) + "," +
           (rep.bd_exceeded ? "true" : "false") + "," + (rep.cce_exceeded ? "true" : "false") + "\n";
  }
  write_output(text, file.name() + "_limits", f);
  if (!rep.within_limits()) {
    std::cerr << file.name() << ": UE monitoring exceeds the " << limits.scs_khz << " kHz limits\n";
  }
  return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"PDCCH blocking probability simulator and CORESET planner"};
  app.require_subcommand(1);

  common_flags simulate_flags;
  auto*        simulate = app.add_subcommand("simulate", "Estimate blocking for the base scenario of a file");
  add_common(*simulate, simulate_flags, "Scenario file");

  common_flags sweep_flags;
  auto*        sweep = app.add_subcommand("sweep", "Run the parameter sweep of a scenario file");
  add_common(*sweep, sweep_flags, "Scenario file");

  common_flags plan_flags;
  auto*        plan = app.add_subcommand("plan", "Find the minimum CORESET size for a blocking target");
  add_common(*plan, plan_flags, "Planning request file");

  common_flags            limits_flags;
  unsigned                rnti = 1;
  std::optional<unsigned> scs;
  limits_flags.format = "json";
  auto* limits = app.add_subcommand("validate-limits", "Check blind-decode and CCE monitoring limits for one UE");
  add_common(*limits, limits_flags, "Scenario file");
  limits->add_option("--rnti", rnti, "C-RNTI of the UE")->check(CLI::Range(1, 65535));
  limits->add_option("--scs", scs, "Subcarrier spacing in kHz")->check(CLI::IsMember({15, 30, 60, 120}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_invalid_input;
  }

  try {
    if (*simulate) {
      return run_simulate(simulate_flags, false);
    }
    if (*sweep) {
      return run_simulate(sweep_flags, true);
    }
    if (*plan) {
      return run_plan(plan_flags);
    }
    return run_validate_limits(limits_flags, rnti, scs);
  } catch (const config_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_runtime_error;
  }
}
