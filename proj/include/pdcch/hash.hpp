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

#include "pdcch/aggregation_level.hpp"
#include "pdcch/coreset.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pdcch {

enum class search_space_type { common, ue_specific };

/// Modulus D of the Y recursion.
inline constexpr std::uint32_t hash_modulus = 65537;

/// Candidate counts allowed per aggregation level in a UE-specific search space.
inline constexpr std::array<unsigned, 8> allowed_candidate_counts = {0, 1, 2, 3, 4, 5, 6, 8};

/// Search space set monitored in a CORESET: candidate count M_L per aggregation level, type and slot.
struct search_space_config {
  per_al<unsigned>  candidates = {0, 0, 0, 0, 0};
  search_space_type type       = search_space_type::ue_specific;
  unsigned          slot_index = 0;

  unsigned candidates_for(aggregation_level al) const { return candidates[to_index(al)]; }
  unsigned total_candidates() const;

  bool operator==(const search_space_config&) const = default;
};

/// Throws config_error if any M_L is outside {0,1,2,3,4,5,6,8} or all of them are zero.
void validate(const search_space_config& cfg);

/// C-RNTI of a UE. Always in [1, 65535].
class ue_identity
{
public:
  /// Throws config_error for 0 or values wider than 16 bits.
  explicit ue_identity(std::uint32_t c_rnti);

  std::uint16_t c_rnti() const { return rnti_; }

  bool operator==(const ue_identity&) const = default;

private:
  std::uint16_t rnti_;
};

/// One PDCCH candidate: L contiguous CCEs starting at a multiple of L.
struct candidate {
  aggregation_level level     = aggregation_level::al1;
  unsigned          index     = 0;
  unsigned          first_cce = 0;

  unsigned nof_cces() const { return to_nof_cces(level); }
  /// One past the last CCE.
  unsigned end_cce() const { return first_cce + nof_cces(); }
  bool     overlaps(const candidate& other) const
  {
    return first_cce < other.end_cce() && other.first_cce < end_cce();
  }
  cce_set cces(unsigned cce_count) const { return cce_set::contiguous(first_cce, nof_cces(), cce_count); }

  bool operator==(const candidate&) const = default;
};

/// A_p multiplier selected by p mod 3.
std::uint32_t hash_multiplier(unsigned coreset_index);

/// Y_{p,t}: zero for a common search space, otherwise the recursion
/// Y_{p,s} = (A_p * Y_{p,s-1}) mod 65537 iterated from Y_{p,-1} = C-RNTI up to s = slot_index.
std::uint32_t y_value(ue_identity ue, unsigned coreset_index, unsigned slot_index, search_space_type type);

/// First CCE of candidate k, L * ((Y + floor(k*C/(L*M))) mod floor(C/L)).
/// Returns nullopt when floor(C/L) == 0, i.e. the aggregation level does not fit the CORESET.
/// Throws std::invalid_argument if k >= M or C == 0.
std::optional<unsigned>
candidate_first_cce(aggregation_level al, unsigned k, unsigned cce_count, unsigned nof_candidates, std::uint32_t y);

/// CCE indices l_{k,0} .. l_{k,L-1} of candidate k. Same error convention as candidate_first_cce().
std::optional<cce_set>
candidate_cces(aggregation_level al, unsigned k, unsigned cce_count, unsigned nof_candidates, std::uint32_t y);

/// All M_L candidates of the UE at the given aggregation level, in increasing k. Candidates may
/// overlap each other. Returns nullopt if the aggregation level does not fit the CORESET.
/// Throws std::invalid_argument if M_L is zero.
std::optional<std::vector<candidate>> ue_candidate_set(ue_identity                ue,
                                                       const search_space_config& cfg,
                                                       const coreset_config&      coreset,
                                                       aggregation_level          al);

/// Same as ue_candidate_set() but with C and Y already resolved; used on the simulation hot path.
std::optional<std::vector<candidate>>
candidates_for_level(aggregation_level al, unsigned nof_candidates, unsigned cce_count, std::uint32_t y);

} // namespace pdcch
