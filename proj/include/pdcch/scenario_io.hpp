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

#pragma once

#include "pdcch/monte_carlo.hpp"
#include "pdcch/planner.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdcch {

/// Contents of a scenario file: a base scenario, optionally swept along one axis and repeated
/// for each value of a second ("series") axis.
struct scenario_file {
  std::string               description;
  scenario_config           base;
  std::optional<sweep_spec> sweep;
  std::optional<sweep_spec> series;
  /// Subcarrier spacing used by validate-limits.
  unsigned scs_khz = 15;

  const std::string& name() const { return base.name; }

  bool operator==(const scenario_file&) const = default;
};

/// Strict parse: unknown keys, wrong types and invariant violations are rejected. Syntax and
/// key errors throw parse_error with line or key context; invariant violations throw config_error.
scenario_file parse_scenario(const std::filesystem::path& path);
scenario_file parse_scenario_text(std::string_view text, std::string_view origin = "<text>");

/// Normalized JSON with every default written out. parse_scenario_text(dump_scenario(f)) == f.
std::string dump_scenario(const scenario_file& file);

planning_request parse_plan_request(const std::filesystem::path& path);
planning_request parse_plan_request_text(std::string_view text, std::string_view origin = "<text>");
std::string      dump_plan_request(const planning_request& req);

/// One output row.
struct result_record {
  std::string   scenario;
  std::string   point;
  double        blocking_probability = 0.0;
  double        standard_error       = 0.0;
  std::uint64_t blocked_total        = 0;
  std::uint64_t scheduled_total      = 0;
  std::uint64_t seed                 = 0;
  unsigned      iterations           = 0;

  bool operator==(const result_record&) const = default;
};

result_record make_record(const scenario_config& cfg, std::string point, const simulation_result& res);

enum class output_format { csv, json };

std::optional<output_format> parse_output_format(std::string_view text);
std::string_view             file_extension(output_format format);

/// CSV: header plus one row per record, columns
/// scenario,point,blocking_probability,stderr,blocked_total,scheduled_total,seed,iterations.
/// JSON: array of objects with the same keys. Reals use the shortest round-trip representation.
/// Throws std::invalid_argument for an empty record list.
std::string format_results(std::span<const result_record> records, output_format format);

/// Inverse of format_results(). Throws parse_error on malformed input.
std::vector<result_record> parse_results(std::string_view text, output_format format);

/// Writes format_results() to `path`. Throws std::runtime_error (io error) on write failure.
void emit_results(std::span<const result_record> records, output_format format, const std::filesystem::path& path);

/// Runs the file's sweep (or the base scenario when the file has none) for every series value.
/// Scenario labels carry the series point, e.g. "name[strategy=high_to_low]". Failed points are
/// appended to `errors` when given and skipped.
std::vector<result_record> run_scenario_file(const scenario_file&      file,
                                             const run_options&        opts   = {},
                                             std::vector<std::string>* errors = nullptr);

std::string format_plan(const planning_request& req, const planning_result& res, output_format format);

/// Environment variable naming the directory outputs go to when no explicit path is given.
inline constexpr const char* output_dir_env = "PDCCH_OUTPUT_DIR";

/// `<$PDCCH_OUTPUT_DIR>/<stem>.<ext>` when the variable is set, nullopt otherwise.
std::optional<std::filesystem::path> default_output_path(std::string_view stem, output_format format);

} // namespace pdcch
