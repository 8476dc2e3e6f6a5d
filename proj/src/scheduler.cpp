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

#include "pdcch/scheduler.hpp"
#include "pdcch/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

using namespace pdcch;

std::string_view pdcch::to_string(scheduling_strategy s)
{
  switch (s) {
    case scheduling_strategy::low_to_high_al:
      return "low_to_high";
    case scheduling_strategy::high_to_low_al:
      return "high_to_low";
  }
  return "unknown";
}

std::string_view pdcch::to_string(candidate_selection s)
{
  switch (s) {
    case candidate_selection::lowest_index:
      return "lowest_index";
    case candidate_selection::least_conflict:
      return "least_conflict";
    case candidate_selection::protect_larger_al:
      return "protect_larger_al";
  }
  return "unknown";
}

std::optional<scheduling_strategy> pdcch::parse_scheduling_strategy(std::string_view text)
{
  for (auto s : {scheduling_strategy::low_to_high_al, scheduling_strategy::high_to_low_al}) {
    if (text == to_string(s)) {
      return s;
    }
  }
  return std::nullopt;
}

std::optional<candidate_selection> pdcch::parse_candidate_selection(std::string_view text)
{
  for (auto s : {candidate_selection::lowest_index,
                 candidate_selection::least_conflict,
                 candidate_selection::protect_larger_al}) {
    if (text == to_string(s)) {
      return s;
    }
  }
  return std::nullopt;
}

ue_context pdcch::make_ue_context(ue_identity                ue,
                                  aggregation_level          level,
                                  const search_space_config& search_space,
                                  const coreset_config&      coreset)
{
  auto cands = ue_candidate_set(ue, search_space, coreset, level);
  return ue_context{ue, level, cands ? std::move(*cands) : std::vector<candidate>{}};
}

std::vector<std::size_t>
pdcch::serving_order(std::span<const ue_context> ues, scheduling_strategy strategy, rng_stream& rng)
{
  std::vector<std::size_t> order(ues.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(std::span<std::size_t>(order));
  auto by_level = [&](std::size_t a, std::size_t b) {
    const unsigned la = to_nof_cces(ues[a].level);
    const unsigned lb = to_nof_cces(ues[b].level);
    return strategy == scheduling_strategy::low_to_high_al ? la < lb : la > lb;
  };
  std::stable_sort(order.begin(), order.end(), by_level);
  return order;
}

namespace {

bool is_free(const std::vector<std::uint8_t>& used, const candidate& c)
{
  return std::none_of(used.begin() + c.first_cce, used.begin() + c.end_cce(), [](std::uint8_t u) { return u != 0; });
}

/// Number of distinct candidate positions of `waiting` UEs that overlap `c`.
unsigned conflicts(const candidate&                  c,
                   std::span<const ue_context>       ues,
                   std::span<const std::size_t>      waiting,
                   const ue_context&                 current,
                   candidate_selection               selection)
{
  unsigned count = 0;
  for (std::size_t pos : waiting) {
    const ue_context& other = ues[pos];
    if (selection == candidate_selection::protect_larger_al &&
        to_nof_cces(other.level) <= to_nof_cces(current.level)) {
      continue;
    }
    for (std::size_t i = 0; i != other.candidates.size(); ++i) {
      const candidate& oc = other.candidates[i];
      // Collapsed hashes (floor(C/L) < M) repeat positions; count each position once.
      auto first = other.candidates.begin();
      if (std::any_of(first, first + i, [&](const candidate& p) { return p.first_cce == oc.first_cce; })) {
        continue;
      }
      if (c.overlaps(oc)) {
        ++count;
      }
    }
  }
  return count;
}

} // namespace

allocation_outcome pdcch::allocate_in_order(std::span<const ue_context>  ues,
                                            unsigned                     cce_count,
                                            std::span<const std::size_t> order,
                                            candidate_selection          selection)
{
  if (order.size() != ues.size()) {
    throw std::invalid_argument("serving order does not cover every UE");
  }
  {
    std::vector<std::uint8_t> seen(ues.size(), 0);
    for (std::size_t pos : order) {
      if (pos >= ues.size() || seen[pos] != 0) {
        throw std::invalid_argument("serving order is not a permutation of the UEs");
      }
      seen[pos] = 1;
    }
  }
  for (const ue_context& ue : ues) {
    for (const candidate& c : ue.candidates) {
      if (c.end_cce() > cce_count || c.level != ue.level) {
        throw std::invalid_argument("UE candidate outside the CORESET or at a foreign aggregation level");
      }
    }
  }

  allocation_outcome out;
  out.assignments.resize(ues.size());
  out.order.assign(order.begin(), order.end());
  std::vector<std::uint8_t> used(cce_count, 0);
  std::vector<unsigned>     assigned_cces;

  for (std::size_t step = 0; step != order.size(); ++step) {
    const ue_context& ue = ues[order[step]];

    const candidate* chosen    = nullptr;
    unsigned         best_cost = 0;
    for (const candidate& c : ue.candidates) {
      if (!is_free(used, c)) {
        continue;
      }
      if (selection == candidate_selection::lowest_index) {
        chosen = &c;
        break;
      }
      unsigned cost = conflicts(c, ues, order.subspan(step + 1), ue, selection);
      if (chosen == nullptr || cost < best_cost) {
        chosen    = &c;
        best_cost = cost;
      }
    }

    if (chosen == nullptr) {
      out.blocked_ues.push_back(order[step]);
      continue;
    }
    std::fill(used.begin() + chosen->first_cce, used.begin() + chosen->end_cce(), std::uint8_t{1});
    for (unsigned cce = chosen->first_cce; cce != chosen->end_cce(); ++cce) {
      assigned_cces.push_back(cce);
    }
    out.assignments[order[step]] = *chosen;
  }

  std::sort(out.blocked_ues.begin(), out.blocked_ues.end());
  out.used_cces = cce_set(assigned_cces, cce_count);
  return out;
}

allocation_outcome pdcch::allocate(std::span<const ue_context> ues,
                                   const coreset_config&       coreset,
                                   scheduling_strategy         strategy,
                                   rng_stream&                 rng,
                                   candidate_selection         selection)
{
  const std::vector<std::size_t> order = serving_order(ues, strategy, rng);
  return allocate_in_order(ues, cce_count(coreset), order, selection);
}

double pdcch::blocking_ratio(const allocation_outcome& outcome, std::size_t total_ues)
{
  if (total_ues == 0) {
    throw std::invalid_argument("blocking ratio needs at least one UE");
  }
  if (outcome.blocked_count() > total_ues) {
    throw std::invalid_argument("more blocked UEs than UEs");
  }
  return static_cast<double>(outcome.blocked_count()) / static_cast<double>(total_ues);
}

monitoring_limits monitoring_limits::for_scs(unsigned scs_khz)
{
  switch (scs_khz) {
    case 15:
      return {44, 56, 15};
    case 30:
      return {36, 56, 30};
    case 60:
      return {22, 48, 60};
    case 120:
      return {20, 32, 120};
    default:
      throw config_error("subcarrier spacing " + std::to_string(scs_khz) + " kHz has no monitoring limits");
  }
}

limits_report pdcch::validate_limits(const search_space_config& search_space,
                                     const coreset_config&      coreset,
                                     ue_identity                ue,
                                     const monitoring_limits&   limits)
{
  const unsigned c = cce_count(coreset);

  limits_report report;
  report.limits        = limits;
  report.blind_decodes = search_space.total_candidates();

  std::vector<std::uint8_t> covered(c, 0);
  for (aggregation_level al : all_aggregation_levels) {
    if (search_space.candidates_for(al) == 0) {
      continue;
    }
    auto cands = ue_candidate_set(ue, search_space, coreset, al);
    if (!cands) {
      continue;
    }
    for (const candidate& cand : *cands) {
      std::fill(covered.begin() + cand.first_cce, covered.begin() + cand.end_cce(), std::uint8_t{1});
    }
  }
  report.distinct_cces = static_cast<unsigned>(std::count(covered.begin(), covered.end(), std::uint8_t{1}));
  report.bd_exceeded   = report.blind_decodes > limits.max_blind_decodes;
  report.cce_exceeded  = report.distinct_cces > limits.max_nonoverlap_cces;
  return report;
}
