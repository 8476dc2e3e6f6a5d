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

#include <optional>
#include <vector>

namespace pdcch {

/// Minimum-CORESET search: smallest CCE count whose estimated blocking meets a target.
struct planning_request {
  std::string         name = "plan";
  unsigned            ue_count        = 1;
  double              target_blocking = 0.1;
  al_distribution     al_dist         = al_distribution::single(aggregation_level::al1);
  search_space_config search_space;
  scheduling_strategy strategy    = scheduling_strategy::low_to_high_al;
  candidate_selection selection   = default_candidate_selection;
  unsigned            iterations  = default_iterations;
  unsigned            cce_min     = 1;
  unsigned            cce_max     = 200;
  std::uint64_t       master_seed = 1;
  unsigned            coreset_index = 0;
  /// Require B + 2 * stderr <= target instead of the point estimate.
  bool require_confidence = false;

  bool operator==(const planning_request&) const = default;
};

/// Throws config_error naming the violated invariant.
void validate(const planning_request& req);

struct planning_evaluation {
  unsigned          cce_count = 0;
  simulation_result result;
  bool              meets_target = false;
};

struct planning_result {
  std::optional<unsigned> min_cces;
  /// Estimate at min_cces, or at cce_max when nothing in range meets the target.
  double achieved_blocking = 1.0;
  /// Every CCE count evaluated, in evaluation order, each at most once.
  std::vector<planning_evaluation> evaluations;
  /// Single-symbol CORESET realising min_cces.
  std::optional<coreset_config> coreset;
};

/// Scenario evaluated for a candidate CCE count.
scenario_config scenario_for(const planning_request& req, unsigned cces);

/// Bisection on the CCE count, then a downward scan from the bisection answer that keeps going
/// while any of the 4 sizes below the current answer meets the target. On return, when min_cces
/// is above cce_min, min_cces - 1 has been evaluated and missed the target.
planning_result plan_min_coreset(const planning_request& req, const run_options& opts = {});

} // namespace pdcch
