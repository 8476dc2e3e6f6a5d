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

#include "pdcch/scheduler.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pdcch {

/// Probability of each aggregation level among the UEs of a cell.
class al_distribution
{
public:
  al_distribution() = delete;

  /// Throws config_error if any probability is negative or the sum differs from 1 by more than 1e-9.
  explicit al_distribution(const per_al<double>& probabilities);

  /// All UEs use `level`.
  static al_distribution single(aggregation_level level);

  double                 probability(aggregation_level al) const { return p_[to_index(al)]; }
  const per_al<double>&  probabilities() const { return p_; }
  aggregation_level      sample(rng_stream& rng) const;

  bool operator==(const al_distribution&) const = default;

private:
  per_al<double> p_;
};

inline constexpr unsigned default_iterations = 10000;

/// One Monte Carlo experiment: U UEs contending for one CORESET opportunity.
struct scenario_config {
  std::string         name = "scenario";
  unsigned            ue_count = 1;
  coreset_config      coreset{6, 1, 0};
  search_space_config search_space;
  al_distribution     al_dist = al_distribution::single(aggregation_level::al1);
  scheduling_strategy strategy  = scheduling_strategy::low_to_high_al;
  candidate_selection selection = default_candidate_selection;
  unsigned            iterations  = default_iterations;
  std::uint64_t       master_seed = 1;
  /// C-RNTIs are drawn uniformly from [rnti_min, rnti_max].
  std::uint32_t rnti_min = 1;
  std::uint32_t rnti_max = 0xffff;
  /// Redraw C-RNTIs that repeat within an iteration.
  bool unique_rnti = false;
  /// Keep the blocked count of every iteration in the result.
  bool keep_per_iteration = false;

  bool operator==(const scenario_config&) const = default;
};

/// Throws config_error naming the first violated invariant.
void validate(const scenario_config& cfg);

struct simulation_result {
  double        blocking_probability = 0.0;
  std::uint64_t blocked_total        = 0;
  /// UEs that received a candidate.
  std::uint64_t scheduled_total = 0;
  /// U * iterations.
  std::uint64_t trials = 0;
  /// Binomial approximation sqrt(B(1-B)/trials); indicative only since UEs of one iteration are
  /// not independent.
  double                     standard_error = 0.0;
  std::vector<std::uint32_t> per_iteration_blocked;
};

struct run_options {
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned workers = 0;
};

/// Draws the UEs of iteration `iteration`: aggregation level, then C-RNTI, per UE.
std::vector<ue_context> draw_ues(const scenario_config& cfg, rng_stream& rng);

/// Number of UEs blocked in one iteration. Deterministic in (cfg, iteration).
std::uint32_t simulate_iteration(const scenario_config& cfg, std::uint64_t iteration);

/// Runs every iteration and aggregates. Results are bit-identical for any worker count.
simulation_result run_scenario(const scenario_config& cfg, const run_options& opts = {});

enum class sweep_axis {
  ue_count,
  coreset_size,
  candidate_count,
  al_fixed,
  al_distribution,
  strategy,
  candidate_profile,
};

std::string_view           to_string(sweep_axis axis);
std::optional<sweep_axis>  parse_sweep_axis(std::string_view text);

struct named_distribution {
  std::string     label;
  al_distribution distribution;

  bool operator==(const named_distribution&) const = default;
};

struct named_profile {
  std::string      label;
  per_al<unsigned> candidates;

  bool operator==(const named_profile&) const = default;
};

using sweep_value = std::variant<unsigned, named_distribution, scheduling_strategy, named_profile>;

struct sweep_spec {
  sweep_axis axis = sweep_axis::ue_count;
  /// Level whose candidate count varies on the candidate_count axis.
  aggregation_level        level = aggregation_level::al1;
  std::vector<sweep_value> points;

  bool operator==(const sweep_spec&) const = default;
};

std::string point_label(const sweep_value& value);

/// Base scenario with one axis value substituted. Throws config_error if the value does not
/// belong to the axis or yields an invalid scenario.
scenario_config apply_point(const scenario_config& base, const sweep_spec& sweep, const sweep_value& value);

struct sweep_entry {
  std::string                      point;
  std::optional<simulation_result> result;
  /// Set when the point could not be evaluated.
  std::string error;
};

/// One run_scenario() per point, in input order, all under the base master seed. A failing point
/// is reported in its entry and the sweep continues.
std::vector<sweep_entry> run_sweep(const scenario_config& base, const sweep_spec& sweep, const run_options& opts = {});

} // namespace pdcch
