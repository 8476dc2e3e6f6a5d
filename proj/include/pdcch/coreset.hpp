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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pdcch {

inline constexpr unsigned nof_rbs_per_cce         = 6;
inline constexpr unsigned max_coreset_duration    = 3;

/// CORESET geometry: q resource blocks over d OFDM symbols, with CORESET index p.
struct coreset_config {
  unsigned rb_count        = 0;
  unsigned symbol_duration = 1;
  unsigned coreset_index   = 0;

  bool operator==(const coreset_config&) const = default;
};

/// Throws config_error (invalid geometry) unless rb_count is a positive multiple of 6 and
/// symbol_duration is 1, 2 or 3.
void validate(const coreset_config& cfg);

/// Number of CCEs in the CORESET, C = q * d / 6.
unsigned cce_count(const coreset_config& cfg);

/// Builds a CORESET holding exactly `cces` CCEs as a single-symbol region of 6 * cces RBs.
coreset_config coreset_from_cce_count(unsigned cces, unsigned coreset_index = 0);

/// Sorted set of unique CCE indices within a CORESET of a known size.
class cce_set
{
public:
  cce_set() = default;

  /// Throws config_error if an index repeats or falls outside [0, cce_count).
  cce_set(std::span<const unsigned> indices, unsigned cce_count);
  cce_set(std::initializer_list<unsigned> indices, unsigned cce_count);

  /// Contiguous run [first, first + length).
  static cce_set contiguous(unsigned first, unsigned length, unsigned cce_count);

  std::size_t size() const { return indices_.size(); }
  bool        empty() const { return indices_.empty(); }
  unsigned    coreset_size() const { return coreset_size_; }

  bool contains(unsigned cce) const;
  bool intersects(const cce_set& other) const;

  /// Adds every index of `other`. Both sets must describe the same CORESET.
  void merge(const cce_set& other);

  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  const std::vector<unsigned>& indices() const { return indices_; }

  bool operator==(const cce_set& other) const { return indices_ == other.indices_; }

private:
  std::vector<unsigned> indices_;
  unsigned              coreset_size_ = 0;
};

} // namespace pdcch
