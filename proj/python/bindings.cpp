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
#include "pdcch/planner.hpp"
#include "pdcch/scenario_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pdcch;

namespace {

aggregation_level level_of(unsigned al)
{
  auto level = to_aggregation_level(al);
  if (!level) {
    throw config_error("aggregation level must be one of 1, 2, 4, 8, 16");
  }
  return *level;
}

search_space_config make_search_space(const per_al<unsigned>& candidates, bool common, unsigned slot)
{
  search_space_config ss;
  ss.candidates = candidates;
  ss.type       = common ? search_space_type::common : search_space_type::ue_specific;
  ss.slot_index = slot;
  validate(ss);
  return ss;
}

std::vector<unsigned> to_list(const cce_set& s)
{
  return {s.indices().begin(), s.indices().end()};
}

py::dict to_dict(const result_record& r)
{
  py::dict d;
  d["scenario"]             = r.scenario;
  d["point"]                = r.point;
  d["blocking_probability"] = r.blocking_probability;
  d["stderr"]               = r.standard_error;
  d["blocked_total"]        = r.blocked_total;
  d["scheduled_total"]      = r.scheduled_total;
  d["seed"]                 = r.seed;
  d["iterations"]           = r.iterations;
  return d;
}

result_record from_dict(const py::dict& d)
{
  return result_record{d["scenario"].cast<std::string>(),
                       d["point"].cast<std::string>(),
                       d["blocking_probability"].cast<double>(),
                       d["stderr"].cast<double>(),
                       d["blocked_total"].cast<std::uint64_t>(),
                       d["scheduled_total"].cast<std::uint64_t>(),
                       d["seed"].cast<std::uint64_t>(),
                       d["iterations"].cast<unsigned>()};
}

output_format format_of(const std::string& name)
{
  auto f = parse_output_format(name);
  if (!f) {
    throw config_error("format must be \"csv\" or \"json\"");
  }
  return *f;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "PDCCH blocking probability simulator core";

  py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

  m.def(
      "cce_count",
      [](unsigned rb_count, unsigned symbol_duration) {
        return cce_count(coreset_config{rb_count, symbol_duration, 0});
      },
      py::arg("rb_count"), py::arg("symbol_duration") = 1);

  m.def(
      "y_value",
      [](std::uint32_t c_rnti, unsigned coreset_index, unsigned slot, bool common) {
        return y_value(ue_identity{c_rnti}, coreset_index, slot,
                       common ? search_space_type::common : search_space_type::ue_specific);
      },
      py::arg("c_rnti"), py::arg("coreset_index") = 0, py::arg("slot") = 0, py::arg("common") = false);

  m.def(
      "candidate_cces",
      [](unsigned al, unsigned k, unsigned cces, unsigned nof_candidates, std::uint32_t y) -> std::optional<std::vector<unsigned>> {
        auto s = candidate_cces(level_of(al), k, cces, nof_candidates, y);
        if (!s) {
          return std::nullopt;
        }
        return to_list(*s);
      },
      py::arg("al"), py::arg("k"), py::arg("cce_count"), py::arg("nof_candidates"), py::arg("y"));

  m.def(
      "ue_candidate_set",
      [](std::uint32_t c_rnti, const per_al<unsigned>& candidates, unsigned cces, unsigned al, bool common,
         unsigned slot, unsigned coreset_index) -> std::optional<std::vector<std::vector<unsigned>>> {
        auto set = ue_candidate_set(ue_identity{c_rnti}, make_search_space(candidates, common, slot),
                                    coreset_from_cce_count(cces, coreset_index), level_of(al));
        if (!set) {
          return std::nullopt;
        }
        std::vector<std::vector<unsigned>> out;
        for (const auto& c : *set) {
          out.push_back(to_list(c.cces(cces)));
        }
        return out;
      },
      py::arg("c_rnti"), py::arg("candidates"), py::arg("cce_count"), py::arg("al"), py::arg("common") = false,
      py::arg("slot") = 0, py::arg("coreset_index") = 0);

  m.def(
      "allocate",
      [](const std::vector<std::pair<std::uint32_t, unsigned>>& ues, const per_al<unsigned>& candidates,
         unsigned cces, const std::string& strategy, const std::string& selection, std::uint64_t seed) {
        auto strat = parse_scheduling_strategy(strategy);
        auto sel   = parse_candidate_selection(selection);
        if (!strat || !sel) {
          throw config_error("unknown strategy or candidate selection");
        }
        const auto              ss      = make_search_space(candidates, false, 0);
        const auto              coreset = coreset_from_cce_count(cces);
        std::vector<ue_context> contexts;
        for (const auto& [rnti, al] : ues) {
          contexts.push_back(make_ue_context(ue_identity{rnti}, level_of(al), ss, coreset));
        }
        rng_stream rng(seed);
        const auto out = allocate(contexts, coreset, *strat, rng, *sel);

        py::list assignments;
        for (const auto& a : out.assignments) {
          if (a) {
            assignments.append(py::cast(to_list(a->cces(cces))));
          } else {
            assignments.append(py::none());
          }
        }
        py::dict d;
        d["assignments"]    = assignments;
        d["blocked"]        = out.blocked_ues;
        d["order"]          = out.order;
        d["blocking_ratio"] = contexts.empty() ? 0.0 : blocking_ratio(out, contexts.size());
        return d;
      },
      py::arg("ues"), py::arg("candidates"), py::arg("cce_count"), py::arg("strategy") = "low_to_high",
      py::arg("selection") = std::string(to_string(default_candidate_selection)), py::arg("seed") = 1);

  m.def(
      "validate_limits",
      [](const per_al<unsigned>& candidates, unsigned cces, std::uint32_t c_rnti, unsigned scs_khz, bool common,
         unsigned slot) {
        const auto limits = monitoring_limits::for_scs(scs_khz);
        const auto rep    = validate_limits(make_search_space(candidates, common, slot), coreset_from_cce_count(cces),
                                         ue_identity{c_rnti}, limits);
        py::dict d;
        d["blind_decodes"]       = rep.blind_decodes;
        d["distinct_cces"]       = rep.distinct_cces;
        d["max_blind_decodes"]   = limits.max_blind_decodes;
        d["max_nonoverlap_cces"] = limits.max_nonoverlap_cces;
        d["bd_exceeded"]         = rep.bd_exceeded;
        d["cce_exceeded"]        = rep.cce_exceeded;
        d["within_limits"]       = rep.within_limits();
        return d;
      },
      py::arg("candidates"), py::arg("cce_count"), py::arg("c_rnti") = 1, py::arg("scs_khz") = 15,
      py::arg("common") = false, py::arg("slot") = 0);

  m.def(
      "normalize_scenario", [](const std::string& text) { return dump_scenario(parse_scenario_text(text, "<python>")); },
      py::arg("text"));

  m.def(
      "run_scenario_text",
      [](const std::string& text, std::optional<unsigned> iterations, std::optional<std::uint64_t> seed,
         unsigned workers, bool sweep) {
        auto file = parse_scenario_text(text, "<python>");
        if (iterations) {
          file.base.iterations = *iterations;
        }
        if (seed) {
          file.base.master_seed = *seed;
        }
        validate(file.base);
        if (!sweep) {
          file.sweep.reset();
          file.series.reset();
        }
        std::vector<std::string>   errors;
        std::vector<result_record> records;
        {
          py::gil_scoped_release release;
          records = run_scenario_file(file, run_options{workers}, &errors);
        }
        py::list out;
        for (const auto& r : records) {
          out.append(to_dict(r));
        }
        return py::make_tuple(out, errors);
      },
      py::arg("text"), py::arg("iterations") = py::none(), py::arg("seed") = py::none(), py::arg("workers") = 0,
      py::arg("sweep") = true);

  m.def(
      "plan_text",
      [](const std::string& text, std::optional<unsigned> iterations, std::optional<std::uint64_t> seed,
         unsigned workers) {
        auto req = parse_plan_request_text(text, "<python>");
        if (iterations) {
          req.iterations = *iterations;
        }
        if (seed) {
          req.master_seed = *seed;
        }
        validate(req);
        planning_result res;
        {
          py::gil_scoped_release release;
          res = plan_min_coreset(req, run_options{workers});
        }
        py::list evals;
        for (const auto& ev : res.evaluations) {
          py::dict e;
          e["cce_count"]            = ev.cce_count;
          e["blocking_probability"] = ev.result.blocking_probability;
          e["stderr"]               = ev.result.standard_error;
          e["meets_target"]         = ev.meets_target;
          evals.append(e);
        }
        py::dict d;
        d["name"]              = req.name;
        d["min_cces"]          = res.min_cces;
        d["achieved_blocking"] = res.achieved_blocking;
        d["evaluations"]       = evals;
        return d;
      },
      py::arg("text"), py::arg("iterations") = py::none(), py::arg("seed") = py::none(), py::arg("workers") = 0);

  m.def(
      "format_results",
      [](const std::vector<py::dict>& records, const std::string& fmt) {
        std::vector<result_record> recs;
        for (const auto& d : records) {
          recs.push_back(from_dict(d));
        }
        return format_results(recs, format_of(fmt));
      },
      py::arg("records"), py::arg("format") = "csv");

  m.def(
      "parse_results",
      [](const std::string& text, const std::string& fmt) {
        py::list out;
        for (const auto& r : parse_results(text, format_of(fmt))) {
          out.append(to_dict(r));
        }
        return out;
      },
      py::arg("text"), py::arg("format") = "csv");
}
