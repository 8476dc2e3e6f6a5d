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
#include "pdcch/scenario_io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

using namespace pdcch;
namespace fs = std::filesystem;

namespace {

const char* minimal = R"({
  "name": "tiny",
  "ue_count": 4,
  "coreset": {"cce_count": 24},
  "search_space": {"candidates": [6, 6, 4, 2, 1]},
  "al_distribution": [0.4, 0.3, 0.2, 0.05, 0.05]
})";

std::vector<fs::path> bundled_files(std::string_view suffix_filter, bool plans)
{
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(PDCCH_SCENARIO_DIR)) {
    const std::string name = e.path().filename().string();
    const bool        plan = name.ends_with(".plan.json");
    if (name.ends_with(suffix_filter) && plan == plans) {
      out.push_back(e.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string replace(std::string text, std::string_view what, std::string_view with)
{
  auto pos = text.find(what);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, what.size(), with);
}

} // namespace

TEST_CASE("minimal scenario gets documented defaults")
{
  auto f = parse_scenario_text(minimal);
  CHECK(f.name() == "tiny");
  CHECK(f.base.ue_count == 4);
  CHECK(cce_count(f.base.coreset) == 24);
  CHECK(f.base.search_space.type == search_space_type::ue_specific);
  CHECK(f.base.strategy == scheduling_strategy::low_to_high_al);
  CHECK(f.base.selection == default_candidate_selection);
  CHECK(f.base.iterations == default_iterations);
  CHECK(f.base.master_seed == 1);
  CHECK(f.base.rnti_min == 1);
  CHECK(f.base.rnti_max == 65535);
  CHECK_FALSE(f.sweep.has_value());
  CHECK(f.scs_khz == 15);
}

TEST_CASE("strict parsing")
{
  SUBCASE("unknown top-level key")
  {
    auto text = replace(minimal, "\"ue_count\"", "\"ue_cuont\": 3, \"ue_count\"");
    CHECK_THROWS_WITH_AS(parse_scenario_text(text), doctest::Contains("ue_cuont"), parse_error);
  }
  SUBCASE("unknown nested key")
  {
    auto text = replace(minimal, "\"cce_count\": 24", "\"cce_count\": 24, \"symbols\": 2");
    CHECK_THROWS_WITH_AS(parse_scenario_text(text), doctest::Contains("symbols"), parse_error);
  }
  SUBCASE("syntax error reports the line")
  {
    auto text = replace(minimal, "\"coreset\": {", "\"coreset\": {,");
    CHECK_THROWS_WITH_AS(parse_scenario_text(text, "bad.json"), doctest::Contains("bad.json:4"), parse_error);
  }
  SUBCASE("missing required key")
  {
    auto text = replace(minimal, "\"ue_count\": 4,", "");
    CHECK_THROWS_WITH_AS(parse_scenario_text(text), doctest::Contains("ue_count"), parse_error);
  }
  SUBCASE("wrong type")
  {
    auto text = replace(minimal, "\"ue_count\": 4", "\"ue_count\": \"four\"");
    CHECK_THROWS_AS(parse_scenario_text(text), parse_error);
  }
  SUBCASE("wrong candidate array length")
  {
    auto text = replace(minimal, "[6, 6, 4, 2, 1]", "[6, 6, 4, 2]");
    CHECK_THROWS_AS(parse_scenario_text(text), parse_error);
  }
  SUBCASE("unknown sweep axis")
  {
    auto text = replace(minimal, "\"ue_count\": 4", "\"ue_count\": 4, \"sweep\": {\"axis\": \"bandwidth\", \"points\": [1]}");
    CHECK_THROWS_WITH_AS(parse_scenario_text(text), doctest::Contains("bandwidth"), parse_error);
  }
  SUBCASE("candidate sweep needs a level")
  {
    auto text =
        replace(minimal, "\"ue_count\": 4", "\"ue_count\": 4, \"sweep\": {\"axis\": \"candidate_count\", \"points\": [1]}");
    CHECK_THROWS_AS(parse_scenario_text(text), parse_error);
  }
}

TEST_CASE("invariant violations are config errors")
{
  CHECK_THROWS_AS(parse_scenario_text(replace(minimal, "0.05, 0.05]", "0.05, 0.0]")), config_error);
  CHECK_THROWS_AS(parse_scenario_text(replace(minimal, "[6, 6, 4, 2, 1]", "[6, 6, 4, 2, 7]")), config_error);
  CHECK_THROWS_AS(parse_scenario_text(replace(minimal, "\"ue_count\": 4", "\"ue_count\": 0")), config_error);
  CHECK_THROWS_AS(parse_scenario_text(replace(minimal, "\"cce_count\": 24", "\"cce_count\": 0")), config_error);
  CHECK_THROWS_AS(parse_scenario_text(replace(minimal, "{\"cce_count\": 24}", "{\"rb_count\": 10, \"symbol_duration\": 1}")),
                  config_error);
  CHECK_NOTHROW(parse_scenario_text(replace(minimal, "{\"cce_count\": 24}", "{\"rb_count\": 48, \"symbol_duration\": 3}")));
}

TEST_CASE("every bundled scenario parses and round-trips")
{
  const auto files = bundled_files(".json", false);
  REQUIRE(files.size() >= 8);
  for (const auto& path : files) {
    CAPTURE(path.string());
    const auto f = parse_scenario(path);
    CHECK(f.name() == path.stem().string());
    CHECK_FALSE(f.description.empty());
    CHECK((f.sweep || f.series));
    const auto dumped = dump_scenario(f);
    const auto again  = parse_scenario_text(dumped);
    CHECK(again == f);
    CHECK(dump_scenario(again) == dumped);
  }
}

TEST_CASE("bundled planning requests parse and round-trip")
{
  const auto files = bundled_files(".plan.json", true);
  REQUIRE(files.size() == 2);
  for (const auto& path : files) {
    CAPTURE(path.string());
    const auto req = parse_plan_request(path);
    CHECK(parse_plan_request_text(dump_plan_request(req)) == req);
  }
  CHECK_THROWS_AS(parse_scenario(files.front()), parse_error);
}

TEST_CASE("plan request validation")
{
  const char* text = R"({"ue_count": 5, "target_blocking": 0.2, "al_distribution": [0.05, 0.2, 0.5, 0.2, 0.05],
                         "search_space": {"candidates": [6, 6, 4, 2, 1]}, "cce_range": [1, 200]})";
  CHECK(parse_plan_request_text(text).cce_max == 200);
  CHECK_THROWS_AS(parse_plan_request_text(replace(text, "0.2, \"al", "1.5, \"al")), config_error);
  CHECK_THROWS_AS(parse_plan_request_text(replace(text, "[1, 200]", "[200]")), parse_error);
  CHECK_THROWS_AS(parse_plan_request_text(replace(text, "[1, 200]", "[50, 10]")), config_error);
}

TEST_CASE("two records give a header plus two CSV rows")
{
  std::vector<result_record> recs{{"s", "5", 0.25, 0.01, 10, 30, 1, 2}, {"s", "10", 0.5, 0.02, 20, 20, 1, 2}};
  const auto                 csv = format_results(recs, output_format::csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.starts_with("scenario,point,blocking_probability,stderr,blocked_total,scheduled_total,seed,iterations\n"));
  CHECK(csv.find("s,5,0.25,0.01,10,30,1,2\n") != std::string::npos);
  CHECK_THROWS_AS(format_results({}, output_format::csv), std::invalid_argument);
  CHECK_THROWS_AS(format_results({}, output_format::json), std::invalid_argument);
}

TEST_CASE("result records survive CSV and JSON round trips")
{
  std::mt19937_64                         gen(2024);
  std::uniform_int_distribution<int>      len(0, 12);
  std::uniform_int_distribution<int>      ch(0, 9);
  std::uniform_real_distribution<double>  real(0.0, 1.0);
  std::uniform_int_distribution<unsigned> small(0, 1000000);
  const char                              alphabet[] = {'a', 'Z', '0', ',', '"', '\n', ' ', '[', '=', '\r'};
  auto                                    word       = [&] {
    std::string s(static_cast<std::size_t>(len(gen)), 'x');
    for (auto& c : s) {
      c = alphabet[ch(gen)];
    }
    return s;
  };
  for (int round = 0; round != 200; ++round) {
    std::vector<result_record> recs(1 + round % 5);
    for (auto& r : recs) {
      r = {word(), word(), real(gen), std::ldexp(real(gen), -30), small(gen), small(gen), gen(), small(gen)};
    }
    for (auto fmt : {output_format::csv, output_format::json}) {
      CHECK(parse_results(format_results(recs, fmt), fmt) == recs);
    }
  }
}

TEST_CASE("malformed result text is rejected")
{
  CHECK_THROWS_AS(parse_results("", output_format::csv), parse_error);
  CHECK_THROWS_AS(parse_results("a,b\n", output_format::csv), parse_error);
  CHECK_THROWS_AS(parse_results("scenario,point,blocking_probability,stderr,blocked_total,scheduled_total,seed,"
                                "iterations\ns,p,x,0,0,0,0,0\n",
                                output_format::csv),
                  parse_error);
  CHECK_THROWS_AS(parse_results("{}", output_format::json), parse_error);
}

TEST_CASE("emit_results writes files and reports io errors")
{
  const auto dir = fs::temp_directory_path() / "pdcch_io_test";
  fs::create_directories(dir);
  std::vector<result_record> recs{{"s", "p", 0.5, 0.1, 1, 1, 7, 2}};
  emit_results(recs, output_format::json, dir / "out.json");
  std::ifstream in(dir / "out.json");
  std::string   text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(parse_results(text, output_format::json) == recs);
  emit_results(recs, output_format::csv, dir / "nested" / "out.csv");
  CHECK(fs::exists(dir / "nested" / "out.csv"));
  // A regular file where a directory is expected.
  CHECK_THROWS_AS(emit_results(recs, output_format::csv, dir / "out.json" / "out.csv"), std::runtime_error);
  fs::remove_all(dir);
}

TEST_CASE("default output path follows the environment")
{
  ::unsetenv(output_dir_env);
  CHECK_FALSE(default_output_path("x", output_format::csv).has_value());
  ::setenv(output_dir_env, "/tmp/pdcch_out", 1);
  CHECK(default_output_path("x", output_format::csv) == fs::path("/tmp/pdcch_out/x.csv"));
  CHECK(default_output_path("y", output_format::json) == fs::path("/tmp/pdcch_out/y.json"));
  ::unsetenv(output_dir_env);
}

TEST_CASE("scenario files run every series and sweep point")
{
  auto f            = parse_scenario(fs::path(PDCCH_SCENARIO_DIR) / "strategy_sweep.json");
  f.base.iterations = 50;
  auto recs         = run_scenario_file(f, {1});
  REQUIRE(recs.size() == 2 * f.sweep->points.size());
  CHECK(recs.front().scenario == "strategy_sweep[strategy=low_to_high]");
  CHECK(recs.front().point == "10");
  CHECK(recs.back().scenario == "strategy_sweep[strategy=high_to_low]");
  CHECK(recs.back().point == "40");
  for (const auto& r : recs) {
    CHECK(r.iterations == 50);
    CHECK(r.blocked_total + r.scheduled_total == 50ULL * std::stoul(r.point));
  }

  auto base = parse_scenario_text(minimal);
  base.base.iterations = 20;
  auto one  = run_scenario_file(base, {1});
  REQUIRE(one.size() == 1);
  CHECK(one[0].point == "base");
  CHECK(one[0].scenario == "tiny");

  std::vector<std::string> errors;
  base.sweep = sweep_spec{sweep_axis::al_fixed, aggregation_level::al1, {sweep_value{2U}, sweep_value{3U}}};
  auto some  = run_scenario_file(base, {1}, &errors);
  CHECK(some.size() == 1);
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].find("3") != std::string::npos);
}

TEST_CASE("plan output")
{
  planning_request req;
  req.ue_count                = 1;
  req.target_blocking         = 0.1;
  req.search_space.candidates = {1, 0, 0, 0, 0};
  req.iterations              = 10;
  req.cce_min                 = 2;
  req.cce_max                 = 8;
  const auto res              = plan_min_coreset(req);
  const auto json             = format_plan(req, res, output_format::json);
  CHECK(json.find("\"min_cces\": 2") != std::string::npos);
  const auto csv = format_plan(req, res, output_format::csv);
  const auto rows = parse_results(csv, output_format::csv);
  REQUIRE(rows.size() == res.evaluations.size());
  CHECK(rows[0].point == std::to_string(res.evaluations[0].cce_count));
}
