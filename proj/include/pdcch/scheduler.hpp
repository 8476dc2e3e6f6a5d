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

#include "pdcch/hash.hpp"
#include "pdcch/rng.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace pdcch {

/// Order in which the gNB serves UEs in one PDCCH opportunity.
enum class scheduling_strategy {
  /// UEs with the lowest aggregation level first.
  low_to_high_al,
  /// UEs with the highest aggregation level first.
  high_to_low_al,
};

/// Rule for picking one of a UE's free candidates.
enum class candidate_selection {
  /// Lowest candidate index k whose CCEs are free.
  lowest_index,
  /// Free candidate overlapping the fewest candidates of every UE still waiting to be served.
  least_conflict,
  /// Free candidate overlapping the fewest candidates of waiting UEs with a higher aggregation
  /// level than the current UE. Falls back to lowest index on ties.
  protect_larger_al,
};

inline constexpr candidate_selection default_candidate_selection = candidate_selection::protect_larger_al;

std::string_view to_string(scheduling_strategy s);
std::string_view to_string(candidate_selection s);
std::optional<scheduling_strategy> parse_scheduling_strategy(std::string_view text);
std::optional<candidate_selection> parse_candidate_selection(std::string_view text);

/// UE waiting for a DCI in the current opportunity.
struct ue_context {
  ue_identity       identity;
  aggregation_level level;
  /// Candidates at `level`, increasing k. Empty when the level does not fit the CORESET.
  std::vector<candidate> candidates;
};

/// Resolves the UE's candidates at `level` through the search space hash.
ue_context make_ue_context(ue_identity                ue,
                           aggregation_level          level,
                           const search_space_config& search_space,
                           const coreset_config&      coreset);

struct allocation_outcome {
  /// Chosen candidate per input UE; nullopt when the UE is blocked.
  std::vector<std::optional<candidate>> assignments;
  /// Input positions of blocked UEs, ascending.
  std::vector<std::size_t> blocked_ues;
  cce_set                  used_cces;
  /// Input positions in the order they were served.
  std::vector<std::size_t> order;

  std::size_t blocked_count() const { return blocked_ues.size(); }
};

/// Serving order for the strategy. UEs of equal aggregation level are ordered by a random
/// permutation drawn from `rng`.
std::vector<std::size_t> serving_order(std::span<const ue_context> ues, scheduling_strategy strategy, rng_stream& rng);

/// Greedy allocation in a fixed serving order. Each UE takes one free candidate picked by
/// `selection` or is blocked; a blocked UE consumes no CCEs.
/// Throws std::invalid_argument if a candidate lies outside the CORESET or `order` is not a
/// permutation of the UE positions.
allocation_outcome allocate_in_order(std::span<const ue_context>  ues,
                                     unsigned                     cce_count,
                                     std::span<const std::size_t> order,
                                     candidate_selection          selection = default_candidate_selection);

/// serving_order() followed by allocate_in_order().
allocation_outcome allocate(std::span<const ue_context> ues,
                            const coreset_config&       coreset,
                            scheduling_strategy         strategy,
                            rng_stream&                 rng,
                            candidate_selection         selection = default_candidate_selection);

/// Blocked UEs over total UEs. Throws std::invalid_argument for total_ues == 0 or more blocked
/// UEs than total.
double blocking_ratio(const allocation_outcome& outcome, std::size_t total_ues);

/// Per-slot UE monitoring capability.
struct monitoring_limits {
  unsigned max_blind_decodes   = 44;
  unsigned max_nonoverlap_cces = 56;
  unsigned scs_khz             = 15;

  /// Non-carrier-aggregation limits for 15/30/60/120 kHz. Throws config_error for other spacings.
  static monitoring_limits for_scs(unsigned scs_khz);
};

struct limits_report {
  unsigned          blind_decodes  = 0;
  unsigned          distinct_cces  = 0;
  monitoring_limits limits;
  bool              bd_exceeded  = false;
  bool              cce_exceeded = false;

  bool within_limits() const { return !bd_exceeded && !cce_exceeded; }
};

/// Blind decodes (one per configured candidate, single DCI size) and distinct CCEs covered by
/// all of the UE's candidates, checked against `limits`.
limits_report validate_limits(const search_space_config& search_space,
                              const coreset_config&      coreset,
                              ue_identity                ue,
                              const monitoring_limits&   limits);

} // namespace pdcch
