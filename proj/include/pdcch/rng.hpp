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

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace pdcch {

/// Deterministic random stream for one Monte Carlo iteration.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the standard. Integer and
/// real conversions are done here rather than through <random> distributions, which are
/// implementation-defined, so a given seed produces the same draws on every toolchain.
class rng_stream
{
public:
  explicit rng_stream(std::uint64_t seed) : engine_(seed) {}

  /// Stream of iteration `iteration` under `master_seed`. Independent of the order in which
  /// iterations are executed.
  static rng_stream for_iteration(std::uint64_t master_seed, std::uint64_t iteration);

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi], unbiased.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::span<T> values)
  {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = uniform_int(0, i - 1);
      std::swap(values[i - 1], values[j]);
    }
  }

private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix_seed(std::uint64_t value);

} // namespace pdcch
