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

#include "pdcch/rng.hpp"

#include <limits>

using namespace pdcch;

std::uint64_t pdcch::mix_seed(std::uint64_t value)
{
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

rng_stream rng_stream::for_iteration(std::uint64_t master_seed, std::uint64_t iteration)
{
  return rng_stream(mix_seed(mix_seed(master_seed) ^ mix_seed(iteration + 0x632be59bd9b4e019ULL)));
}

std::uint64_t rng_stream::uniform_int(std::uint64_t lo, std::uint64_t hi)
{
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    return next();
  }
  const std::uint64_t range = span + 1;
  // Reject the top partial bucket so every value is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t       draw  = next();
  while (draw >= limit) {
    draw = next();
  }
  return lo + draw % range;
}
