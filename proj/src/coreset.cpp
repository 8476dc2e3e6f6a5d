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

#include "pdcch/coreset.hpp"
#include "pdcch/error.hpp"

#include <algorithm>
#include <iterator>
#include <string>

using namespace pdcch;

void pdcch::validate(const coreset_config& cfg)
{
  if (cfg.rb_count == 0 || cfg.rb_count % nof_rbs_per_cce != 0) {
    throw config_error("invalid CORESET geometry: rb_count " + std::to_string(cfg.rb_count) +
                       " is not a positive multiple of 6");
  }
  if (cfg.symbol_duration < 1 || cfg.symbol_duration > max_coreset_duration) {
    throw config_error("invalid CORESET geometry: symbol_duration " + std::to_string(cfg.symbol_duration) +
                       " is not 1, 2 or 3");
  }
}

unsigned pdcch::cce_count(const coreset_config& cfg)
{
  validate(cfg);
  return cfg.rb_count * cfg.symbol_duration / nof_rbs_per_cce;
}

coreset_config pdcch::coreset_from_cce_count(unsigned cces, unsigned coreset_index)
{
  if (cces == 0) {
    throw config_error("invalid CORESET geometry: CCE count must be positive");
  }
  return coreset_config{nof_rbs_per_cce * cces, 1, coreset_index};
}

cce_set::cce_set(std::span<const unsigned> indices, unsigned cce_count) :
  indices_(indices.begin(), indices.end()), coreset_size_(cce_count)
{
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw config_error("CCE set contains a repeated index");
  }
  if (!indices_.empty() && indices_.back() >= cce_count) {
    throw config_error("CCE index " + std::to_string(indices_.back()) + " outside CORESET of " +
                       std::to_string(cce_count) + " CCEs");
  }
}

cce_set::cce_set(std::initializer_list<unsigned> indices, unsigned cce_count) :
  cce_set(std::span<const unsigned>(indices.begin(), indices.size()), cce_count)
{
}

cce_set cce_set::contiguous(unsigned first, unsigned length, unsigned cce_count)
{
  std::vector<unsigned> idx(length);
  for (unsigned i = 0; i != length; ++i) {
    idx[i] = first + i;
  }
  return cce_set(idx, cce_count);
}

bool cce_set::contains(unsigned cce) const
{
  return std::binary_search(indices_.begin(), indices_.end(), cce);
}

bool cce_set::intersects(const cce_set& other) const
{
  auto a = indices_.begin();
  auto b = other.indices_.begin();
  while (a != indices_.end() && b != other.indices_.end()) {
    if (*a == *b) {
      return true;
    }
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

void cce_set::merge(const cce_set& other)
{
  if (coreset_size_ != 0 && other.coreset_size_ != 0 && coreset_size_ != other.coreset_size_) {
    throw config_error("cannot merge CCE sets of different CORESETs");
  }
  std::vector<unsigned> out;
  out.reserve(indices_.size() + other.indices_.size());
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                 std::back_inserter(out));
  indices_ = std::move(out);
  coreset_size_ = std::max(coreset_size_, other.coreset_size_);
}
