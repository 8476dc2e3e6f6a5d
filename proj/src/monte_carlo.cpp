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

#include "pdcch/monte_carlo.hpp"
#include "pdcch/error.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

using namespace pdcch;

static constexpr double probability_sum_tolerance = 1e-9;

al_distribution::al_distribution(const per_al<double>& probabilities) : p_(probabilities)
{
  double sum = 0.0;
  for (double p : p_) {
    if (!(p >= 0.0) || p > 1.0) {
      throw config_error("aggregation level probability " + std::to_string(p) + " outside [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > probability_sum_tolerance) {
    throw config_error("aggregation level probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

al_distribution al_distribution::single(aggregation_level level)
{
  per_al<double> p{};
  p[to_index(level)] = 1.0;
  return al_distribution(p);
}

aggregation_level al_distribution::sample(rng_stream& rng) const
{
  const double u   = rng.uniform_real();
  double       acc = 0.0;
  std::size_t  last_positive = 0;
  for (std::size_t i = 0; i != p_.size(); ++i) {
    if (p_[i] <= 0.0) {
      continue;
    }
    last_positive = i;
    acc += p_[i];
    if (u < acc) {
      return from_index(i);
    }
  }
  // Rounding left the cumulative sum a hair below one.
  return from_index(last_positive);
}

void pdcch::validate(const scenario_config& cfg)
{
  if (cfg.ue_count == 0) {
    throw config_error("ue_count must be at least 1");
  }
  if (cfg.iterations == 0) {
    throw config_error("iterations must be at least 1");
  }
  validate(cfg.coreset);
  validate(cfg.search_space);
  if (cfg.rnti_min == 0 || cfg.rnti_max > 0xffffU || cfg.rnti_min > cfg.rnti_max) {
    throw config_error("C-RNTI range must lie within [1, 65535] with min <= max");
  }
  if (cfg.unique_rnti && cfg.rnti_max - cfg.rnti_min + 1 < cfg.ue_count) {
    throw config_error("C-RNTI range too small for unique identities of every UE");
  }
  for (aggregation_level al : all_aggregation_levels) {
    if (cfg.al_dist.probability(al) > 0.0 && cfg.search_space.candidates_for(al) == 0) {
      throw config_error(to_string(al) + " has nonzero probability but no configured candidates");
    }
  }
}

std::vector<ue_context> pdcch::draw_ues(const scenario_config& cfg, rng_stream& rng)
{
  const unsigned c = cce_count(cfg.coreset);

  std::vector<ue_context>    ues;
  std::vector<std::uint16_t> rntis;
  ues.reserve(cfg.ue_count);
  rntis.reserve(cfg.ue_count);
  for (unsigned u = 0; u != cfg.ue_count; ++u) {
    const aggregation_level level = cfg.al_dist.sample(rng);
    auto                    rnti  = static_cast<std::uint16_t>(rng.uniform_int(cfg.rnti_min, cfg.rnti_max));
    if (cfg.unique_rnti) {
      while (std::find(rntis.begin(), rntis.end(), rnti) != rntis.end()) {
        rnti = static_cast<std::uint16_t>(rng.uniform_int(cfg.rnti_min, cfg.rnti_max));
      }
    }
    rntis.push_back(rnti);

    const ue_identity   id{rnti};
    const std::uint32_t y     = y_value(id, cfg.coreset.coreset_index, cfg.search_space.slot_index, cfg.search_space.type);
    auto                cands = candidates_for_level(level, cfg.search_space.candidates_for(level), c, y);
    ues.push_back(ue_context{id, level, cands ? std::move(*cands) : std::vector<candidate>{}});
  }
  return ues;
}

std::uint32_t pdcch::simulate_iteration(const scenario_config& cfg, std::uint64_t iteration)
{
  rng_stream rng     = rng_stream::for_iteration(cfg.master_seed, iteration);
  const auto ues     = draw_ues(cfg, rng);
  const auto outcome = allocate(ues, cfg.coreset, cfg.strategy, rng, cfg.selection);
  return static_cast<std::uint32_t>(outcome.blocked_count());
}

simulation_result pdcch::run_scenario(const scenario_config& cfg, const run_options& opts)
{
  validate(cfg);

  std::vector<std::uint32_t> blocked(cfg.iterations, 0);

  unsigned workers = opts.workers != 0 ? opts.workers : std::max(1U, std::thread::hardware_concurrency());
  workers          = std::min(workers, cfg.iterations);

  auto run_chunk = [&](unsigned first, unsigned last) {
    for (unsigned it = first; it != last; ++it) {
      blocked[it] = simulate_iteration(cfg, it);
    }
  };

  if (workers <= 1) {
    run_chunk(0, cfg.iterations);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      const unsigned chunk = (cfg.iterations + workers - 1) / workers;
      for (unsigned w = 0; w != workers; ++w) {
        const unsigned first = std::min(cfg.iterations, w * chunk);
        const unsigned last  = std::min(cfg.iterations, first + chunk);
        pool.emplace_back([&, w, first, last] {
          try {
            run_chunk(first, last);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

  simulation_result res;
  res.trials          = std::uint64_t{cfg.ue_count} * cfg.iterations;
  res.blocked_total   = std::accumulate(blocked.begin(), blocked.end(), std::uint64_t{0});
  res.scheduled_total = res.trials - res.blocked_total;
  const double b      = static_cast<double>(res.blocked_total) / static_cast<double>(res.trials);
  res.blocking_probability = b;
  res.standard_error       = std::sqrt(b * (1.0 - b) / static_cast<double>(res.trials));
  if (cfg.keep_per_iteration) {
    res.per_iteration_blocked = std::move(blocked);
  }
  return res;
}

std::string_view pdcch::to_string(sweep_axis axis)
{
  switch (axis) {
    case sweep_axis::ue_count:
      return "ue_count";
    case sweep_axis::coreset_size:
      return "coreset_size";
    case sweep_axis::candidate_count:
      return "candidate_count";
    case sweep_axis::al_fixed:
      return "al_fixed";
    case sweep_axis::al_distribution:
      return "al_distribution";
    case sweep_axis::strategy:
      return "strategy";
    case sweep_axis::candidate_profile:
      return "candidate_profile";
  }
  return "unknown";
}

std::optional<sweep_axis> pdcch::parse_sweep_axis(std::string_view text)
{
  for (auto axis : {sweep_axis::ue_count,
                    sweep_axis::coreset_size,
                    sweep_axis::candidate_count,
                    sweep_axis::al_fixed,
                    sweep_axis::al_distribution,
                    sweep_axis::strategy,
                    sweep_axis::candidate_profile}) {
    if (text == to_string(axis)) {
      return axis;
    }
  }
  return std::nullopt;
}

std::string pdcch::point_label(const sweep_value& value)
{
  struct visitor {
    std::string operator()(unsigned v) const { return std::to_string(v); }
    std::string operator()(const named_distribution& d) const { return d.label; }
    std::string operator()(scheduling_strategy s) const { return std::string(to_string(s)); }
    std::string operator()(const named_profile& p) const { return p.label; }
  };
  return std::visit(visitor{}, value);
}

namespace {

template <typename T>
const T& expect_value(const sweep_spec& sweep, const sweep_value& value)
{
  if (const T* v = std::get_if<T>(&value)) {
    return *v;
  }
  throw config_error("point '" + point_label(value) + "' does not belong to sweep axis " +
                     std::string(to_string(sweep.axis)));
}

} // namespace

scenario_config pdcch::apply_point(const scenario_config& base, const sweep_spec& sweep, const sweep_value& value)
{
  scenario_config cfg = base;
  switch (sweep.axis) {
    case sweep_axis::ue_count:
      cfg.ue_count = expect_value<unsigned>(sweep, value);
      break;
    case sweep_axis::coreset_size:
      cfg.coreset = coreset_from_cce_count(expect_value<unsigned>(sweep, value), base.coreset.coreset_index);
      break;
    case sweep_axis::candidate_count:
      cfg.search_space.candidates[to_index(sweep.level)] = expect_value<unsigned>(sweep, value);
      break;
    case sweep_axis::al_fixed: {
      const unsigned nof_cces = expect_value<unsigned>(sweep, value);
      auto           level    = to_aggregation_level(nof_cces);
      if (!level) {
        throw config_error("al_fixed point " + std::to_string(nof_cces) + " is not an aggregation level");
      }
      cfg.al_dist = al_distribution::single(*level);
      break;
    }
    case sweep_axis::al_distribution:
      cfg.al_dist = expect_value<named_distribution>(sweep, value).distribution;
      break;
    case sweep_axis::strategy:
      cfg.strategy = expect_value<scheduling_strategy>(sweep, value);
      break;
    case sweep_axis::candidate_profile:
      cfg.search_space.candidates = expect_value<named_profile>(sweep, value).candidates;
      break;
  }
  validate(cfg);
  return cfg;
}

std::vector<sweep_entry> pdcch::run_sweep(const scenario_config& base, const sweep_spec& sweep, const run_options& opts)
{
  if (sweep.points.empty()) {
    throw config_error("sweep has no points");
  }
  std::vector<sweep_entry> out;
  out.reserve(sweep.points.size());
  for (const sweep_value& value : sweep.points) {
    sweep_entry entry;
    entry.point = point_label(value);
    try {
      entry.result = run_scenario(apply_point(base, sweep, value), opts);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}
