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

#include "pdcch/hash.hpp"
#include "pdcch/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

using namespace pdcch;

unsigned search_space_config::total_candidates() const
{
  return std::accumulate(candidates.begin(), candidates.end(), 0U);
}

void pdcch::validate(const search_space_config& cfg)
{
  for (aggregation_level al : all_aggregation_levels) {
    unsigned m = cfg.candidates_for(al);
    if (std::find(allowed_candidate_counts.begin(), allowed_candidate_counts.end(), m) ==
        allowed_candidate_counts.end()) {
      throw config_error("candidate count " + std::to_string(m) + " for " + to_string(al) +
                         " is not one of {0,1,2,3,4,5,6,8}");
    }
  }
  if (cfg.total_candidates() == 0) {
    throw config_error("search space has no candidates at any aggregation level");
  }
}

ue_identity::ue_identity(std::uint32_t c_rnti)
{
  if (c_rnti == 0 || c_rnti > 0xffffU) {
    throw config_error("C-RNTI " + std::to_string(c_rnti) + " outside [1, 65535]");
  }
  rnti_ = static_cast<std::uint16_t>(c_rnti);
}

std::uint32_t pdcch::hash_multiplier(unsigned coreset_index)
{
  static constexpr std::array<std::uint32_t, 3> multipliers = {39827, 39829, 39839};
  return multipliers[coreset_index % 3];
}

std::uint32_t pdcch::y_value(ue_identity ue, unsigned coreset_index, unsigned slot_index, search_space_type type)
{
  if (type == search_space_type::common) {
    return 0;
  }
  // A_p * Y needs 32 bits only barely; keep the product in 64.
  const std::uint64_t a = hash_multiplier(coreset_index);
  std::uint64_t       y = ue.c_rnti();
  for (unsigned s = 0; s <= slot_index; ++s) {
    y = (a * y) % hash_modulus;
  }
  return static_cast<std::uint32_t>(y);
}

std::optional<unsigned> pdcch::candidate_first_cce(aggregation_level al,
                                                   unsigned          k,
                                                   unsigned          cce_count,
                                                   unsigned          nof_candidates,
                                                   std::uint32_t     y)
{
  if (cce_count == 0) {
    throw std::invalid_argument("CORESET has no CCEs");
  }
  if (k >= nof_candidates) {
    throw std::invalid_argument("candidate index " + std::to_string(k) + " not below M=" +
                                std::to_string(nof_candidates));
  }
  const std::uint64_t l          = to_nof_cces(al);
  const std::uint64_t nof_starts = cce_count / l;
  if (nof_starts == 0) {
    return std::nullopt;
  }
  const std::uint64_t offset = (std::uint64_t{k} * cce_count) / (l * nof_candidates);
  return static_cast<unsigned>(l * ((y + offset) % nof_starts));
}

std::optional<cce_set> pdcch::candidate_cces(aggregation_level al,
                                             unsigned          k,
                                             unsigned          cce_count,
                                             unsigned          nof_candidates,
                                             std::uint32_t     y)
{
  auto first = candidate_first_cce(al, k, cce_count, nof_candidates, y);
  if (!first) {
    return std::nullopt;
  }
  return cce_set::contiguous(*first, to_nof_cces(al), cce_count);
}

std::optional<std::vector<candidate>>
pdcch::candidates_for_level(aggregation_level al, unsigned nof_candidates, unsigned cce_count, std::uint32_t y)
{
  if (nof_candidates == 0) {
    throw std::invalid_argument("no candidates configured for " + to_string(al));
  }
  std::vector<candidate> out;
  out.reserve(nof_candidates);
  for (unsigned k = 0; k != nof_candidates; ++k) {
    auto first = candidate_first_cce(al, k, cce_count, nof_candidates, y);
    if (!first) {
      return std::nullopt;
    }
    out.push_back(candidate{al, k, *first});
  }
  return out;
}

std::optional<std::vector<candidate>> pdcch::ue_candidate_set(ue_identity                ue,
                                                              const search_space_config& cfg,
                                                              const coreset_config&      coreset,
                                                              aggregation_level          al)
{
  const std::uint32_t y = y_value(ue, coreset.coreset_index, cfg.slot_index, cfg.type);
  return candidates_for_level(al, cfg.candidates_for(al), cce_count(coreset), y);
}
