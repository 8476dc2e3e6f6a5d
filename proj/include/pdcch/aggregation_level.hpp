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

#include <array>
#include <cstddef>
#include <optional>
#include <string>

namespace pdcch {

/// Number of CCEs forming one PDCCH candidate.
enum class aggregation_level : unsigned { al1 = 1, al2 = 2, al4 = 4, al8 = 8, al16 = 16 };

inline constexpr std::size_t nof_aggregation_levels = 5;

inline constexpr std::array<aggregation_level, nof_aggregation_levels> all_aggregation_levels = {
    aggregation_level::al1,
    aggregation_level::al2,
    aggregation_level::al4,
    aggregation_level::al8,
    aggregation_level::al16};

constexpr unsigned to_nof_cces(aggregation_level al)
{
  return static_cast<unsigned>(al);
}

/// Position of the level in {1, 2, 4, 8, 16}.
constexpr std::size_t to_index(aggregation_level al)
{
  switch (al) {
    case aggregation_level::al1:
      return 0;
    case aggregation_level::al2:
      return 1;
    case aggregation_level::al4:
      return 2;
    case aggregation_level::al8:
      return 3;
    case aggregation_level::al16:
      return 4;
  }
  return 0;
}

constexpr aggregation_level from_index(std::size_t idx)
{
  return all_aggregation_levels.at(idx);
}

/// Returns nullopt unless nof_cces is one of 1, 2, 4, 8, 16.
constexpr std::optional<aggregation_level> to_aggregation_level(unsigned nof_cces)
{
  for (aggregation_level al : all_aggregation_levels) {
    if (to_nof_cces(al) == nof_cces) {
      return al;
    }
  }
  return std::nullopt;
}

inline std::string to_string(aggregation_level al)
{
  return "AL" + std::to_string(to_nof_cces(al));
}

/// Per-aggregation-level value, indexed through to_index().
template <typename T>
using per_al = std::array<T, nof_aggregation_levels>;

} // namespace pdcch
