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

#include "pdcch/scenario_io.hpp"
#include "pdcch/error.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

using namespace pdcch;
using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw parse_error(path.string() + ": cannot open file");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text, std::string_view origin)
{
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    const auto        line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n');
    throw parse_error(std::string(origin) + ":" + std::to_string(line) + ": " + e.what());
  }
}

/// Strict accessor over one JSON object: every key read is recorded, and finish() rejects the rest.
class object_reader
{
public:
  object_reader(const json& obj, std::string context, std::string_view origin) :
    obj_(obj), context_(std::move(context)), origin_(origin)
  {
    if (!obj_.is_object()) {
      fail("expected an object");
    }
  }

  bool has(const std::string& key)
  {
    known_.insert(key);
    return obj_.contains(key);
  }

  const json& at(const std::string& key)
  {
    if (!has(key)) {
      fail("missing required key '" + key + "'");
    }
    return obj_.at(key);
  }

  std::uint64_t get_uint(const std::string& key)
  {
    const json& v = at(key);
    if (!v.is_number_unsigned()) {
      fail_key(key, "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
  }

  unsigned get_unsigned(const std::string& key)
  {
    std::uint64_t v = get_uint(key);
    if (v > 0xffffffffULL) {
      fail_key(key, "value too large");
    }
    return static_cast<unsigned>(v);
  }

  double get_double(const std::string& key)
  {
    const json& v = at(key);
    if (!v.is_number()) {
      fail_key(key, "expected a number");
    }
    return v.get<double>();
  }

  std::string get_string(const std::string& key)
  {
    const json& v = at(key);
    if (!v.is_string()) {
      fail_key(key, "expected a string");
    }
    return v.get<std::string>();
  }

  bool get_bool(const std::string& key)
  {
    const json& v = at(key);
    if (!v.is_boolean()) {
      fail_key(key, "expected true or false");
    }
    return v.get<bool>();
  }

  template <typename T, typename Getter>
  T optional(const std::string& key, T fallback, Getter get)
  {
    return has(key) ? (this->*get)(key) : fallback;
  }

  object_reader child(const std::string& key) { return object_reader(at(key), path_of(key), origin_); }

  void finish() const
  {
    for (const auto& [key, _] : obj_.items()) {
      if (known_.count(key) == 0) {
        fail("unknown key '" + key + "'");
      }
    }
  }

  std::string path_of(const std::string& key) const { return context_.empty() ? key : context_ + "." + key; }

  [[noreturn]] void fail(const std::string& what) const
  {
    throw parse_error(std::string(origin_) + ": " + (context_.empty() ? "" : "'" + context_ + "': ") + what);
  }

  [[noreturn]] void fail_key(const std::string& key, const std::string& what) const
  {
    throw parse_error(std::string(origin_) + ": '" + path_of(key) + "': " + what);
  }

private:
  const json&           obj_;
  std::string           context_;
  std::string_view      origin_;
  std::set<std::string> known_;
};

template <typename T>
per_al<T> read_per_al(const json& v, const std::string& context, std::string_view origin)
{
  if (!v.is_array() || v.size() != nof_aggregation_levels) {
    throw parse_error(std::string(origin) + ": '" + context + "': expected 5 values for ALs [1, 2, 4, 8, 16]");
  }
  per_al<T> out{};
  for (std::size_t i = 0; i != nof_aggregation_levels; ++i) {
    if constexpr (std::is_same_v<T, double>) {
      if (!v[i].is_number()) {
        throw parse_error(std::string(origin) + ": '" + context + "': expected numbers");
      }
    } else {
      if (!v[i].is_number_unsigned()) {
        throw parse_error(std::string(origin) + ": '" + context + "': expected non-negative integers");
      }
    }
    out[i] = v[i].get<T>();
  }
  return out;
}

search_space_config read_search_space(object_reader r, std::string_view origin)
{
  search_space_config ss;
  ss.candidates = read_per_al<unsigned>(r.at("candidates"), r.path_of("candidates"), origin);
  if (r.has("type")) {
    const std::string type = r.get_string("type");
    if (type == "uss") {
      ss.type = search_space_type::ue_specific;
    } else if (type == "css") {
      ss.type = search_space_type::common;
    } else {
      r.fail_key("type", "expected \"uss\" or \"css\"");
    }
  }
  ss.slot_index = r.optional("slot", 0U, &object_reader::get_unsigned);
  r.finish();
  return ss;
}

json write_search_space(const search_space_config& ss)
{
  return json{{"candidates", ss.candidates},
              {"type", ss.type == search_space_type::common ? "css" : "uss"},
              {"slot", ss.slot_index}};
}

scheduling_strategy read_strategy(object_reader& r, const std::string& key)
{
  auto s = parse_scheduling_strategy(r.get_string(key));
  if (!s) {
    r.fail_key(key, "expected \"low_to_high\" or \"high_to_low\"");
  }
  return *s;
}

candidate_selection read_selection(object_reader& r, const std::string& key)
{
  auto s = parse_candidate_selection(r.get_string(key));
  if (!s) {
    r.fail_key(key, "expected \"lowest_index\", \"least_conflict\" or \"protect_larger_al\"");
  }
  return *s;
}

sweep_value read_point(const json& v, sweep_axis axis, const std::string& context, std::string_view origin)
{
  auto fail = [&](const std::string& what) -> sweep_value {
    throw parse_error(std::string(origin) + ": '" + context + "': " + what);
  };
  switch (axis) {
    case sweep_axis::ue_count:
    case sweep_axis::coreset_size:
    case sweep_axis::candidate_count:
    case sweep_axis::al_fixed:
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xffffffffULL) {
        return fail("expected a non-negative integer point");
      }
      return v.get<unsigned>();
    case sweep_axis::strategy: {
      if (!v.is_string()) {
        return fail("expected a strategy name");
      }
      auto s = parse_scheduling_strategy(v.get<std::string>());
      if (!s) {
        return fail("unknown strategy '" + v.get<std::string>() + "'");
      }
      return *s;
    }
    case sweep_axis::al_distribution: {
      object_reader r(v, context, origin);
      std::string   label = r.get_string("label");
      auto          p     = read_per_al<double>(r.at("p"), r.path_of("p"), origin);
      r.finish();
      return named_distribution{std::move(label), al_distribution(p)};
    }
    case sweep_axis::candidate_profile: {
      object_reader r(v, context, origin);
      std::string   label = r.get_string("label");
      auto          m     = read_per_al<unsigned>(r.at("candidates"), r.path_of("candidates"), origin);
      r.finish();
      return named_profile{std::move(label), m};
    }
  }
  return fail("unsupported axis");
}

json write_point(const sweep_value& value)
{
  struct visitor {
    json operator()(unsigned v) const { return v; }
    json operator()(const named_distribution& d) const
    {
      return json{{"label", d.label}, {"p", d.distribution.probabilities()}};
    }
    json operator()(scheduling_strategy s) const { return std::string(to_string(s)); }
    json operator()(const named_profile& p) const { return json{{"label", p.label}, {"candidates", p.candidates}}; }
  };
  return std::visit(visitor{}, value);
}

sweep_spec read_sweep(object_reader r, std::string_view origin)
{
  sweep_spec  spec;
  std::string axis_name = r.get_string("axis");
  auto        axis      = parse_sweep_axis(axis_name);
  if (!axis) {
    r.fail_key("axis", "unknown sweep axis '" + axis_name + "'");
  }
  spec.axis = *axis;
  if (spec.axis == sweep_axis::candidate_count) {
    auto level = to_aggregation_level(r.get_unsigned("level"));
    if (!level) {
      r.fail_key("level", "expected one of 1, 2, 4, 8, 16");
    }
    spec.level = *level;
  }
  const json& points = r.at("points");
  if (!points.is_array() || points.empty()) {
    r.fail_key("points", "expected a non-empty array");
  }
  for (std::size_t i = 0; i != points.size(); ++i) {
    spec.points.push_back(read_point(points[i], spec.axis, r.path_of("points") + "[" + std::to_string(i) + "]", origin));
  }
  r.finish();
  return spec;
}

json write_sweep(const sweep_spec& spec)
{
  json j{{"axis", std::string(to_string(spec.axis))}};
  if (spec.axis == sweep_axis::candidate_count) {
    j["level"] = to_nof_cces(spec.level);
  }
  json points = json::array();
  for (const auto& p : spec.points) {
    points.push_back(write_point(p));
  }
  j["points"] = std::move(points);
  return j;
}

coreset_config read_coreset(object_reader r)
{
  coreset_config cfg;
  const unsigned index = r.optional("index", 0U, &object_reader::get_unsigned);
  if (r.has("cce_count")) {
    if (r.has("rb_count") || r.has("symbol_duration")) {
      r.fail("give either cce_count or rb_count/symbol_duration, not both");
    }
    cfg = coreset_from_cce_count(r.get_unsigned("cce_count"), index);
  } else {
    cfg.rb_count        = r.get_unsigned("rb_count");
    cfg.symbol_duration = r.get_unsigned("symbol_duration");
    cfg.coreset_index   = index;
  }
  r.finish();
  validate(cfg);
  return cfg;
}

json write_coreset(const coreset_config& cfg)
{
  return json{{"rb_count", cfg.rb_count}, {"symbol_duration", cfg.symbol_duration}, {"index", cfg.coreset_index}};
}

std::string format_double(double v)
{
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) {
    throw std::runtime_error("cannot format number");
  }
  return std::string(buf, end);
}

std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\r\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no)
{
  std::vector<std::string> fields;
  std::string              cur;
  bool                     quoted = false;
  for (std::size_t i = 0; i != line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) {
    throw parse_error("line " + std::to_string(line_no) + ": unterminated quoted field");
  }
  fields.push_back(std::move(cur));
  return fields;
}

template <typename T>
T parse_number(const std::string& s, std::size_t line_no, const char* column)
{
  T    value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw parse_error("line " + std::to_string(line_no) + ": bad " + column + " '" + s + "'");
  }
  return value;
}

constexpr const char* csv_header = "scenario,point,blocking_probability,stderr,blocked_total,scheduled_total,seed,iterations";

json record_to_json(const result_record& r)
{
  return json{{"scenario", r.scenario},
              {"point", r.point},
              {"blocking_probability", r.blocking_probability},
              {"stderr", r.standard_error},
              {"blocked_total", r.blocked_total},
              {"scheduled_total", r.scheduled_total},
              {"seed", r.seed},
              {"iterations", r.iterations}};
}

} // namespace

scenario_file pdcch::parse_scenario_text(std::string_view text, std::string_view origin)
{
  const json    root = parse_json(text, origin);
  object_reader r(root, "", origin);

  scenario_file file;
  file.base.name   = r.get_string("name");
  file.description = r.optional("description", std::string{}, &object_reader::get_string);
  file.base.ue_count = r.get_unsigned("ue_count");
  file.base.coreset  = read_coreset(r.child("coreset"));
  file.base.search_space = read_search_space(r.child("search_space"), origin);
  file.base.al_dist =
      al_distribution(read_per_al<double>(r.at("al_distribution"), "al_distribution", origin));
  if (r.has("strategy")) {
    file.base.strategy = read_strategy(r, "strategy");
  }
  if (r.has("candidate_selection")) {
    file.base.selection = read_selection(r, "candidate_selection");
  }
  file.base.iterations  = r.optional("iterations", default_iterations, &object_reader::get_unsigned);
  file.base.master_seed = r.optional("seed", std::uint64_t{1}, &object_reader::get_uint);
  if (r.has("rnti")) {
    object_reader rr          = r.child("rnti");
    file.base.rnti_min        = rr.optional("min", 1U, &object_reader::get_unsigned);
    file.base.rnti_max        = rr.optional("max", 0xffffU, &object_reader::get_unsigned);
    file.base.unique_rnti     = rr.optional("unique", false, &object_reader::get_bool);
    rr.finish();
  }
  file.base.keep_per_iteration = r.optional("keep_per_iteration", false, &object_reader::get_bool);
  file.scs_khz = r.optional("scs_khz", 15U, &object_reader::get_unsigned);
  monitoring_limits::for_scs(file.scs_khz);
  if (r.has("sweep")) {
    file.sweep = read_sweep(r.child("sweep"), origin);
  }
  if (r.has("series")) {
    file.series = read_sweep(r.child("series"), origin);
  }
  r.finish();

  validate(file.base);
  return file;
}

scenario_file pdcch::parse_scenario(const std::filesystem::path& path)
{
  return parse_scenario_text(read_file(path), path.string());
}

std::string pdcch::dump_scenario(const scenario_file& file)
{
  const scenario_config& b = file.base;
  json                   j;
  j["name"]                = b.name;
  j["description"]         = file.description;
  j["ue_count"]            = b.ue_count;
  j["coreset"]             = write_coreset(b.coreset);
  j["search_space"]        = write_search_space(b.search_space);
  j["al_distribution"]     = b.al_dist.probabilities();
  j["strategy"]            = std::string(to_string(b.strategy));
  j["candidate_selection"] = std::string(to_string(b.selection));
  j["iterations"]          = b.iterations;
  j["seed"]                = b.master_seed;
  j["rnti"]                = json{{"min", b.rnti_min}, {"max", b.rnti_max}, {"unique", b.unique_rnti}};
  j["keep_per_iteration"]  = b.keep_per_iteration;
  j["scs_khz"]             = file.scs_khz;
  if (file.sweep) {
    j["sweep"] = write_sweep(*file.sweep);
  }
  if (file.series) {
    j["series"] = write_sweep(*file.series);
  }
  return j.dump(2) + "\n";
}

planning_request pdcch::parse_plan_request_text(std::string_view text, std::string_view origin)
{
  const json    root = parse_json(text, origin);
  object_reader r(root, "", origin);

  planning_request req;
  req.name            = r.optional("name", std::string{"plan"}, &object_reader::get_string);
  r.optional("description", std::string{}, &object_reader::get_string);
  req.ue_count        = r.get_unsigned("ue_count");
  req.target_blocking = r.get_double("target_blocking");
  req.al_dist         = al_distribution(read_per_al<double>(r.at("al_distribution"), "al_distribution", origin));
  req.search_space    = read_search_space(r.child("search_space"), origin);
  if (r.has("strategy")) {
    req.strategy = read_strategy(r, "strategy");
  }
  if (r.has("candidate_selection")) {
    req.selection = read_selection(r, "candidate_selection");
  }
  req.iterations    = r.optional("iterations", default_iterations, &object_reader::get_unsigned);
  req.master_seed   = r.optional("seed", std::uint64_t{1}, &object_reader::get_uint);
  req.coreset_index = r.optional("coreset_index", 0U, &object_reader::get_unsigned);
  req.require_confidence = r.optional("require_confidence", false, &object_reader::get_bool);
  {
    const json& range = r.at("cce_range");
    if (!range.is_array() || range.size() != 2 || !range[0].is_number_unsigned() || !range[1].is_number_unsigned()) {
      r.fail_key("cce_range", "expected [min, max]");
    }
    req.cce_min = range[0].get<unsigned>();
    req.cce_max = range[1].get<unsigned>();
  }
  r.finish();

  validate(req);
  return req;
}

planning_request pdcch::parse_plan_request(const std::filesystem::path& path)
{
  return parse_plan_request_text(read_file(path), path.string());
}

std::string pdcch::dump_plan_request(const planning_request& req)
{
  json j;
  j["name"]                = req.name;
  j["ue_count"]            = req.ue_count;
  j["target_blocking"]     = req.target_blocking;
  j["al_distribution"]     = req.al_dist.probabilities();
  j["search_space"]        = write_search_space(req.search_space);
  j["strategy"]            = std::string(to_string(req.strategy));
  j["candidate_selection"] = std::string(to_string(req.selection));
  j["iterations"]          = req.iterations;
  j["seed"]                = req.master_seed;
  j["coreset_index"]       = req.coreset_index;
  j["require_confidence"]  = req.require_confidence;
  j["cce_range"]           = json::array({req.cce_min, req.cce_max});
  return j.dump(2) + "\n";
}

result_record pdcch::make_record(const scenario_config& cfg, std::string point, const simulation_result& res)
{
  return result_record{cfg.name,
                       std::move(point),
                       res.blocking_probability,
                       res.standard_error,
                       res.blocked_total,
                       res.scheduled_total,
                       cfg.master_seed,
                       cfg.iterations};
}

std::optional<output_format> pdcch::parse_output_format(std::string_view text)
{
  if (text == "csv") {
    return output_format::csv;
  }
  if (text == "json") {
    return output_format::json;
  }
  return std::nullopt;
}

std::string_view pdcch::file_extension(output_format format)
{
  return format == output_format::csv ? "csv" : "json";
}

std::string pdcch::format_results(std::span<const result_record> records, output_format format)
{
  if (records.empty()) {
    throw std::invalid_argument("no result records to emit");
  }
  if (format == output_format::json) {
    json arr = json::array();
    for (const auto& r : records) {
      arr.push_back(record_to_json(r));
    }
    return arr.dump(2) + "\n";
  }
  std::string out = std::string(csv_header) + "\n";
  for (const auto& r : records) {
    out += csv_field(r.scenario) + "," + csv_field(r.point) + "," + format_double(r.blocking_probability) + "," +
           format_double(r.standard_error) + "," + std::to_string(r.blocked_total) + "," +
           std::to_string(r.scheduled_total) + "," + std::to_string(r.seed) + "," + std::to_string(r.iterations) +
           "\n";
  }
  return out;
}

std::vector<result_record> pdcch::parse_results(std::string_view text, output_format format)
{
  std::vector<result_record> out;
  if (format == output_format::json) {
    const json root = parse_json(text, "<results>");
    if (!root.is_array()) {
      throw parse_error("<results>: expected an array of records");
    }
    for (std::size_t i = 0; i != root.size(); ++i) {
      object_reader r(root[i], "[" + std::to_string(i) + "]", "<results>");
      result_record rec;
      rec.scenario             = r.get_string("scenario");
      rec.point                = r.get_string("point");
      rec.blocking_probability = r.get_double("blocking_probability");
      rec.standard_error       = r.get_double("stderr");
      rec.blocked_total        = r.get_uint("blocked_total");
      rec.scheduled_total      = r.get_uint("scheduled_total");
      rec.seed                 = r.get_uint("seed");
      rec.iterations           = r.get_unsigned("iterations");
      r.finish();
      out.push_back(std::move(rec));
    }
    return out;
  }

  // Records end at a newline outside quotes; quoted fields may span lines.
  std::size_t pos     = 0;
  std::size_t line_no = 0;
  std::size_t next_line = 1;
  while (pos < text.size()) {
    bool        quoted = false;
    std::size_t end    = pos;
    for (; end < text.size() && (quoted || text[end] != '\n'); ++end) {
      if (text[end] == '"') {
        quoted = !quoted;
      }
    }
    std::string line(text.substr(pos, end - pos));
    line_no = next_line;
    next_line += 1 + static_cast<std::size_t>(std::count(line.begin(), line.end(), '\n'));
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line_no == 1) {
      if (line != csv_header) {
        throw parse_error("line 1: unexpected CSV header");
      }
      continue;
    }
    if (line.empty()) {
      continue;
    }
    auto f = split_csv_line(line, line_no);
    if (f.size() != 8) {
      throw parse_error("line " + std::to_string(line_no) + ": expected 8 columns");
    }
    result_record rec;
    rec.scenario             = f[0];
    rec.point                = f[1];
    rec.blocking_probability = parse_number<double>(f[2], line_no, "blocking_probability");
    rec.standard_error       = parse_number<double>(f[3], line_no, "stderr");
    rec.blocked_total        = parse_number<std::uint64_t>(f[4], line_no, "blocked_total");
    rec.scheduled_total      = parse_number<std::uint64_t>(f[5], line_no, "scheduled_total");
    rec.seed                 = parse_number<std::uint64_t>(f[6], line_no, "seed");
    rec.iterations           = parse_number<unsigned>(f[7], line_no, "iterations");
    out.push_back(std::move(rec));
  }
  if (line_no == 0) {
    throw parse_error("empty CSV");
  }
  return out;
}

void pdcch::emit_results(std::span<const result_record> records, output_format format, const std::filesystem::path& path)
{
  const std::string text = format_results(records, format);
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw std::runtime_error("write to " + path.string() + " failed");
  }
}

std::vector<result_record>
pdcch::run_scenario_file(const scenario_file& file, const run_options& opts, std::vector<std::string>* errors)
{
  std::vector<std::pair<scenario_config, std::string>> bases;
  if (file.series) {
    for (const sweep_value& v : file.series->points) {
      const std::string label = std::string(to_string(file.series->axis)) + "=" + point_label(v);
      try {
        scenario_config cfg = apply_point(file.base, *file.series, v);
        cfg.name            = file.base.name + "[" + label + "]";
        bases.emplace_back(std::move(cfg), label);
      } catch (const std::exception& e) {
        if (errors != nullptr) {
          errors->push_back(file.base.name + "[" + label + "]: " + e.what());
        }
      }
    }
  } else {
    bases.emplace_back(file.base, "");
  }

  std::vector<result_record> out;
  for (const auto& [base, _] : bases) {
    if (!file.sweep) {
      out.push_back(make_record(base, "base", run_scenario(base, opts)));
      continue;
    }
    for (const sweep_entry& e : run_sweep(base, *file.sweep, opts)) {
      if (e.result) {
        out.push_back(make_record(base, e.point, *e.result));
      } else if (errors != nullptr) {
        errors->push_back(base.name + " @ " + e.point + ": " + e.error);
      }
    }
  }
  return out;
}

std::string pdcch::format_plan(const planning_request& req, const planning_result& res, output_format format)
{
  std::vector<result_record> records;
  for (const auto& ev : res.evaluations) {
    records.push_back(make_record(scenario_for(req, ev.cce_count), std::to_string(ev.cce_count), ev.result));
  }
  if (format == output_format::csv) {
    return format_results(records, format);
  }
  json j;
  j["name"]              = req.name;
  j["ue_count"]          = req.ue_count;
  j["target_blocking"]   = req.target_blocking;
  j["min_cces"]          = res.min_cces ? json(*res.min_cces) : json(nullptr);
  j["achieved_blocking"] = res.achieved_blocking;
  j["coreset"]           = res.coreset ? write_coreset(*res.coreset) : json(nullptr);
  json evals             = json::array();
  for (std::size_t i = 0; i != records.size(); ++i) {
    json e            = record_to_json(records[i]);
    e["meets_target"] = res.evaluations[i].meets_target;
    evals.push_back(std::move(e));
  }
  j["evaluations"] = std::move(evals);
  return j.dump(2) + "\n";
}

std::optional<std::filesystem::path> pdcch::default_output_path(std::string_view stem, output_format format)
{
  const char* dir = std::getenv(output_dir_env);
  if (dir == nullptr || *dir == '\0') {
    return std::nullopt;
  }
  return std::filesystem::path(dir) / (std::string(stem) + "." + std::string(file_extension(format)));
}
