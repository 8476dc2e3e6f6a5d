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

#include "pdcch/planner.hpp"
#include "pdcch/error.hpp"

#include <map>

using namespace pdcch;

static constexpr unsigned confirmation_window = 4;

void pdcch::validate(const planning_request& req)
{
  if (req.ue_count == 0) {
    throw config_error("ue_count must be at least 1");
  }
  if (!(req.target_blocking > 0.0 && req.target_blocking < 1.0)) {
    throw config_error("target_blocking must lie in (0, 1)");
  }
  if (req.cce_min == 0 || req.cce_max < req.cce_min) {
    throw config_error("CCE search range must satisfy 1 <= min <= max");
  }
  if (req.iterations == 0) {
    throw config_error("iterations must be at least 1");
  }
  validate(scenario_for(req, req.cce_min));
}

scenario_config pdcch::scenario_for(const planning_request& req, unsigned cces)
{
  scenario_config cfg;
  cfg.name         = req.name;
  cfg.ue_count     = req.ue_count;
  cfg.coreset      = coreset_from_cce_count(cces, req.coreset_index);
  cfg.search_space = req.search_space;
  cfg.al_dist      = req.al_dist;
  cfg.strategy     = req.strategy;
  cfg.selection    = req.selection;
  cfg.iterations   = req.iterations;
  cfg.master_seed  = req.master_seed;
  return cfg;
}

planning_result pdcch::plan_min_coreset(const planning_request& req, const run_options& opts)
{
  validate(req);

  planning_result                out;
  std::map<unsigned, std::size_t> seen;

  auto evaluate = [&](unsigned cces) -> const planning_evaluation& {
    if (auto it = seen.find(cces); it != seen.end()) {
      return out.evaluations[it->second];
    }
    planning_evaluation ev;
    ev.cce_count = cces;
    ev.result    = run_scenario(scenario_for(req, cces), opts);
    const double score =
        ev.result.blocking_probability + (req.require_confidence ? 2.0 * ev.result.standard_error : 0.0);
    ev.meets_target = score <= req.target_blocking;
    seen.emplace(cces, out.evaluations.size());
    out.evaluations.push_back(std::move(ev));
    return out.evaluations.back();
  };

  const planning_evaluation& top = evaluate(req.cce_max);
  if (!top.meets_target) {
    out.achieved_blocking = top.result.blocking_probability;
    return out;
  }

  unsigned answer = req.cce_max;
  if (evaluate(req.cce_min).meets_target) {
    answer = req.cce_min;
  } else {
    unsigned lo = req.cce_min; // misses
    unsigned hi = req.cce_max; // meets
    while (hi - lo > 1) {
      const unsigned mid = lo + (hi - lo) / 2;
      if (evaluate(mid).meets_target) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    answer = hi;

    // Blocking is only roughly monotone in C; look a few sizes further down.
    unsigned misses = 0;
    for (unsigned c = answer - 1; c >= req.cce_min && misses < confirmation_window; --c) {
      if (evaluate(c).meets_target) {
        answer = c;
        misses = 0;
      } else {
        ++misses;
      }
      if (c == req.cce_min) {
        break;
      }
    }
  }

  out.min_cces          = answer;
  out.achieved_blocking = out.evaluations[seen.at(answer)].result.blocking_probability;
  out.coreset           = coreset_from_cce_count(answer, req.coreset_index);
  return out;
}
