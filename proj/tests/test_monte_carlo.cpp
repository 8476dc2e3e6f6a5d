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

#include "pdcch/error.hpp"
#include "pdcch/monte_carlo.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace pdcch;

namespace {

scenario_config reference_scenario(unsigned ues, unsigned cces, unsigned iterations = 2000)
{
  scenario_config cfg;
  cfg.name                    = "reference";
  cfg.ue_count                = ues;
  cfg.coreset                 = coreset_from_cce_count(cces);
  cfg.search_space.candidates = {6, 6, 4, 2, 1};
  cfg.al_dist                 = al_distribution({0.4, 0.3, 0.2, 0.05, 0.05});
  cfg.iterations              = iterations;
  cfg.master_seed             = 11;
  return cfg;
}

/// a <= b up to twice the combined standard error.
bool not_above(const simulation_result& a, const simulation_result& b)
{
  const double margin = 2.0 * std::hypot(a.standard_error, b.standard_error);
  return a.blocking_probability <= b.blocking_probability + margin;
}

} // namespace

TEST_CASE("rng_stream engine output is the standard mt19937_64 sequence")
{
  rng_stream rng(5489);
  std::uint64_t v = 0;
  for (int i = 0; i != 10000; ++i) {
    v = rng.next();
  }
  CHECK(v == 9981545732273789042ULL);
}

TEST_CASE("iteration streams are reproducible and distinct")
{
  auto a = rng_stream::for_iteration(3, 17);
  auto b = rng_stream::for_iteration(3, 17);
  auto c = rng_stream::for_iteration(3, 18);
  auto d = rng_stream::for_iteration(4, 17);
  const auto va = a.next();
  CHECK(va == b.next());
  CHECK(va != c.next());
  CHECK(va != d.next());

  rng_stream r(1);
  for (int i = 0; i != 2000; ++i) {
    auto x = r.uniform_int(1, 6);
    CHECK(x >= 1);
    CHECK(x <= 6);
    double u = r.uniform_real();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("al_distribution validation and sampling")
{
  CHECK_THROWS_AS(al_distribution({0.4, 0.3, 0.1, 0.05, 0.05}), config_error);
  CHECK_THROWS_AS(al_distribution({1.1, -0.1, 0.0, 0.0, 0.0}), config_error);
  CHECK_NOTHROW(al_distribution({0.5, 0.4, 0.07, 0.02, 0.01}));

  const al_distribution d({0.4, 0.3, 0.2, 0.05, 0.05});
  rng_stream            rng(77);
  per_al<unsigned>      counts{};
  const unsigned        n = 200000;
  for (unsigned i = 0; i != n; ++i) {
    ++counts[to_index(d.sample(rng))];
  }
  for (aggregation_level al : all_aggregation_levels) {
    const double p     = d.probability(al);
    const double sigma = std::sqrt(p * (1 - p) / n);
    CHECK(std::abs(counts[to_index(al)] / double(n) - p) < 5 * sigma);
  }

  const auto single = al_distribution::single(aggregation_level::al8);
  for (int i = 0; i != 100; ++i) {
    CHECK(single.sample(rng) == aggregation_level::al8);
  }
}

TEST_CASE("scenario validation")
{
  auto cfg = reference_scenario(10, 54);
  CHECK_NOTHROW(validate(cfg));

  auto bad     = cfg;
  bad.ue_count = 0;
  CHECK_THROWS_AS(validate(bad), config_error);

  bad            = cfg;
  bad.iterations = 0;
  CHECK_THROWS_AS(validate(bad), config_error);

  bad          = cfg;
  bad.rnti_min = 0;
  CHECK_THROWS_AS(validate(bad), config_error);

  bad             = cfg;
  bad.rnti_min    = 100;
  bad.rnti_max    = 104;
  bad.unique_rnti = true;
  CHECK_THROWS_AS(validate(bad), config_error);

  bad                         = cfg;
  bad.search_space.candidates = {6, 6, 4, 2, 0};
  CHECK_THROWS_AS(validate(bad), config_error);
}

TEST_CASE("draw_ues honours the C-RNTI settings")
{
  auto cfg        = reference_scenario(20, 54);
  cfg.rnti_min    = 500;
  cfg.rnti_max    = 520;
  cfg.unique_rnti = true;
  for (std::uint64_t it = 0; it != 50; ++it) {
    auto                    rng = rng_stream::for_iteration(cfg.master_seed, it);
    auto                    ues = draw_ues(cfg, rng);
    std::set<std::uint16_t> seen;
    for (const auto& ue : ues) {
      CHECK(ue.identity.c_rnti() >= 500);
      CHECK(ue.identity.c_rnti() <= 520);
      seen.insert(ue.identity.c_rnti());
      for (const auto& c : ue.candidates) {
        CHECK(c.level == ue.level);
        CHECK(c.end_cce() <= 54);
      }
    }
    CHECK(seen.size() == ues.size());
  }
}

TEST_CASE("a lone UE is never blocked")
{
  auto cfg = reference_scenario(1, 16, 3000);
  auto res = run_scenario(cfg, {1});
  CHECK(res.blocked_total == 0);
  CHECK(res.blocking_probability == 0.0);
  CHECK(res.standard_error == 0.0);
  CHECK(res.scheduled_total == 3000);
}

TEST_CASE("AL16 only with one candidate in 16 CCEs blocks U-1 UEs every iteration")
{
  for (unsigned u : {1U, 2U, 7U, 20U}) {
    scenario_config cfg;
    cfg.ue_count                = u;
    cfg.coreset                 = coreset_from_cce_count(16);
    cfg.search_space.candidates = {0, 0, 0, 0, 1};
    cfg.al_dist                 = al_distribution::single(aggregation_level::al16);
    cfg.iterations              = 500;
    cfg.keep_per_iteration      = true;
    auto res                    = run_scenario(cfg);
    REQUIRE(res.per_iteration_blocked.size() == 500);
    CHECK(std::all_of(res.per_iteration_blocked.begin(), res.per_iteration_blocked.end(),
                      [&](std::uint32_t b) { return b == u - 1; }));
    CHECK(res.blocking_probability == doctest::Approx(double(u - 1) / u));
  }
}

TEST_CASE("aggregates are consistent")
{
  auto cfg               = reference_scenario(20, 54, 1500);
  cfg.keep_per_iteration = true;
  auto res               = run_scenario(cfg, {2});
  CHECK(res.trials == 20ULL * 1500);
  CHECK(res.blocked_total + res.scheduled_total == res.trials);
  std::uint64_t sum = 0;
  for (auto b : res.per_iteration_blocked) {
    CHECK(b <= 20);
    sum += b;
  }
  CHECK(sum == res.blocked_total);
  const double b = double(res.blocked_total) / double(res.trials);
  CHECK(res.blocking_probability == b);
  CHECK(res.standard_error == doctest::Approx(std::sqrt(b * (1 - b) / res.trials)));
  CHECK(res.blocking_probability >= 0.0);
  CHECK(res.blocking_probability <= 1.0);
}

TEST_CASE("results do not depend on the worker count")
{
  auto cfg = reference_scenario(25, 48, 997);
  cfg.keep_per_iteration = true;
  auto one   = run_scenario(cfg, {1});
  auto three = run_scenario(cfg, {3});
  auto many  = run_scenario(cfg, {16});
  CHECK(one.blocked_total == three.blocked_total);
  CHECK(one.blocked_total == many.blocked_total);
  CHECK(one.per_iteration_blocked == many.per_iteration_blocked);

  auto other        = cfg;
  other.master_seed = 12;
  CHECK(run_scenario(other, {1}).per_iteration_blocked != one.per_iteration_blocked);
}

TEST_CASE("common search space collapses every UE onto the same candidates")
{
  auto cfg              = reference_scenario(2, 54, 2000);
  cfg.al_dist           = al_distribution::single(aggregation_level::al16);
  cfg.search_space.type = search_space_type::common;
  // Both UEs hash to the same single AL16 candidate.
  CHECK(run_scenario(cfg, {1}).blocking_probability == doctest::Approx(0.5));
}

TEST_CASE("blocking trends with 10000 iterations")
{
  SUBCASE("nondecreasing in the number of UEs")
  {
    std::optional<simulation_result> prev;
    for (unsigned u = 5; u <= 40; u += 5) {
      auto res = run_scenario(reference_scenario(u, 54, 10000));
      if (prev) {
        CHECK(not_above(*prev, res));
      }
      prev = res;
    }
  }
  SUBCASE("nonincreasing in CORESET size")
  {
    std::optional<simulation_result> prev;
    for (unsigned c = 24; c <= 84; c += 12) {
      auto res = run_scenario(reference_scenario(20, c, 10000));
      if (prev) {
        CHECK(not_above(res, *prev));
      }
      prev = res;
    }
  }
  SUBCASE("nonincreasing in candidate count per level")
  {
    for (std::size_t idx : {0U, 1U, 2U}) {
      std::optional<simulation_result> prev;
      for (unsigned m : {1U, 2U, 3U, 4U, 5U, 6U}) {
        auto cfg                         = reference_scenario(20, 54, 10000);
        cfg.search_space.candidates      = {1, 1, 1, 1, 1};
        cfg.search_space.candidates[idx] = m;
        auto res                         = run_scenario(cfg);
        if (prev) {
          CHECK(not_above(res, *prev));
        }
        prev = res;
      }
    }
  }
  SUBCASE("higher fixed level blocks more")
  {
    std::optional<simulation_result> prev;
    for (aggregation_level al : all_aggregation_levels) {
      auto cfg    = reference_scenario(6, 54, 10000);
      cfg.al_dist = al_distribution::single(al);
      auto res    = run_scenario(cfg);
      if (prev) {
        CHECK(not_above(*prev, res));
      }
      prev = res;
    }
  }
}

TEST_CASE("apply_point substitutes one axis")
{
  const auto base = reference_scenario(20, 54);

  sweep_spec s{sweep_axis::coreset_size, aggregation_level::al1, {}};
  CHECK(cce_count(apply_point(base, s, sweep_value{30U}).coreset) == 30);
  CHECK_THROWS_AS(apply_point(base, s, sweep_value{scheduling_strategy::high_to_low_al}), config_error);

  s.axis = sweep_axis::al_fixed;
  CHECK(apply_point(base, s, sweep_value{8U}).al_dist == al_distribution::single(aggregation_level::al8));
  CHECK_THROWS_AS(apply_point(base, s, sweep_value{3U}), config_error);

  s.axis  = sweep_axis::candidate_count;
  s.level = aggregation_level::al2;
  CHECK(apply_point(base, s, sweep_value{3U}).search_space.candidates == per_al<unsigned>{6, 3, 4, 2, 1});
  CHECK_THROWS_AS(apply_point(base, s, sweep_value{7U}), config_error);

  s.axis = sweep_axis::candidate_profile;
  CHECK(apply_point(base, s, sweep_value{named_profile{"b", {1, 1, 1, 1, 1}}}).search_space.candidates ==
        per_al<unsigned>{1, 1, 1, 1, 1});

  s.axis = sweep_axis::strategy;
  CHECK(apply_point(base, s, sweep_value{scheduling_strategy::high_to_low_al}).strategy ==
        scheduling_strategy::high_to_low_al);
}

TEST_CASE("run_sweep keeps input order and reports failing points")
{
  auto       base = reference_scenario(10, 54, 300);
  sweep_spec s{sweep_axis::candidate_count, aggregation_level::al1, {sweep_value{2U}, sweep_value{7U}, sweep_value{6U}}};
  auto       out = run_sweep(base, s, {1});
  REQUIRE(out.size() == 3);
  CHECK(out[0].point == "2");
  CHECK(out[1].point == "7");
  CHECK(out[2].point == "6");
  CHECK(out[0].result.has_value());
  CHECK_FALSE(out[1].result.has_value());
  CHECK_FALSE(out[1].error.empty());
  CHECK(out[2].result.has_value());

  // Each point runs under the base seed.
  auto direct = run_scenario(apply_point(base, s, sweep_value{6U}), {1});
  CHECK(direct.blocked_total == out[2].result->blocked_total);

  CHECK_THROWS_AS(run_sweep(base, sweep_spec{}, {1}), config_error);
}
