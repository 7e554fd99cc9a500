// Copyright 2026 The lcgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lc/record.hpp"

#include <stdexcept>

#include "json.hpp"
#include "lc/church.hpp"

namespace lc {

std::string_view to_string(Lang lang) { return lang == Lang::LC1 ? "lc1" : "lc2"; }

std::string Task::str() const {
  return std::string(to_string(lang)) + "," + std::string(to_string(strategy)) + "," +
         std::string(to_string(renaming));
}

std::string Task::field() const {
  return std::string(to_string(lang)) + "_" + std::string(to_string(strategy)) + "_" +
         std::string(to_string(renaming));
}

Task Task::parse(std::string_view text) {
  for (const Task& t : all()) {
    if (text == t.str() || text == t.field()) return t;
  }
  throw std::invalid_argument("unknown task '" + std::string(text) +
                              "' (expected e.g. lc1,whnf,vr)");
}

const std::array<Task, 8>& Task::all() {
  static const std::array<Task, 8> tasks = [] {
    std::array<Task, 8> out;
    std::size_t i = 0;
    for (Lang l : {Lang::LC1, Lang::LC2}) {
      for (Strategy s : {Strategy::WHNF, Strategy::DNF}) {
        for (Renaming r : {Renaming::VR, Renaming::NVR}) out[i++] = Task{l, s, r};
      }
    }
    return out;
  }();
  return tasks;
}

std::size_t ExampleRecord::target_slot(const Task& t) {
  return (t.lang == Lang::LC1 ? 0 : 4) + (t.strategy == Strategy::WHNF ? 0 : 2) +
         (t.renaming == Renaming::VR ? 0 : 1);
}

std::size_t ExampleRecord::step_slot(Lang lang, Strategy s) {
  return (lang == Lang::LC1 ? 0 : 2) + (s == Strategy::WHNF ? 0 : 1);
}

bool operator==(const ExampleRecord& a, const ExampleRecord& b) {
  return a.id == b.id && a.ty == b.ty && a.lc1_src == b.lc1_src && a.lc2_src == b.lc2_src &&
         a.targets == b.targets && a.steps == b.steps && a.lengths == b.lengths;
}

namespace {

const std::array<std::string, 4>& step_names() {
  static const std::array<std::string, 4> names{"steps_whnf_lc1", "steps_dnf_lc1",
                                                "steps_whnf_lc2", "steps_dnf_lc2"};
  return names;
}

std::vector<std::string> length_names() {
  std::vector<std::string> out{"len_lc1_src", "len_lc2_src"};
  for (const Task& t : Task::all()) out.push_back("len_" + t.field());
  return out;
}

}  // namespace

const std::vector<std::string>& record_field_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out{"id", "ty", "lc1_src", "lc2_src"};
    for (const Task& t : Task::all()) out.push_back(t.field());
    for (const auto& s : step_names()) out.push_back(s);
    for (const auto& l : length_names()) out.push_back(l);
    return out;
  }();
  return names;
}

std::string record_to_json(const ExampleRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["ty"] = r.ty.str();
  j["lc1_src"] = r.lc1_src;
  j["lc2_src"] = r.lc2_src;
  const auto& tasks = Task::all();
  for (std::size_t i = 0; i < tasks.size(); ++i) j[tasks[i].field()] = r.targets[i];
  for (std::size_t i = 0; i < 4; ++i) j[step_names()[i]] = r.steps[i];
  const auto lens = length_names();
  for (std::size_t i = 0; i < lens.size(); ++i) j[lens[i]] = r.lengths[i];
  return j.dump();
}

ExampleRecord record_from_json(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed record: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("malformed record: not an object");
  auto field = [&j](const std::string& name) -> const nlohmann::json& {
    auto it = j.find(name);
    if (it == j.end()) throw std::runtime_error("record is missing field '" + name + "'");
    return *it;
  };
  ExampleRecord r;
  try {
    r.id = field("id").get<std::int64_t>();
    r.ty = parse_type(field("ty").get<std::string>());
    r.lc1_src = field("lc1_src").get<std::string>();
    r.lc2_src = field("lc2_src").get<std::string>();
    const auto& tasks = Task::all();
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      r.targets[i] = field(tasks[i].field()).get<std::string>();
    }
    for (std::size_t i = 0; i < 4; ++i) r.steps[i] = field(step_names()[i]).get<std::size_t>();
    const auto lens = length_names();
    for (std::size_t i = 0; i < lens.size(); ++i) r.lengths[i] = field(lens[i]).get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed record field: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed record type: ") + e.what());
  }
  return r;
}

std::string_view to_string(Rejection r) {
  switch (r) {
    case Rejection::TooLong:
      return "too_long";
    case Rejection::Duplicate:
      return "duplicate";
    case Rejection::GenerationFailure:
      return "generation_failure";
  }
  return "unknown";
}

std::optional<ExampleRecord> evaluate_program(const Term& lc2, const Type& ty,
                                              const RecordLimits& limits) {
  ExampleRecord r;
  r.ty = ty;
  const Term lc1 = church_encode(lc2);
  r.lc2_src = print2(lc2);
  r.lc1_src = print1(lc1);
  r.lengths[0] = limits.tokens.count(r.lc1_src);
  r.lengths[1] = limits.tokens.count(r.lc2_src);
  if (r.lengths[0] > limits.max_input_tokens || r.lengths[1] > limits.max_input_tokens) {
    return std::nullopt;
  }
  for (Lang lang : {Lang::LC1, Lang::LC2}) {
    const Term& src = lang == Lang::LC1 ? lc1 : lc2;
    for (Strategy s : {Strategy::WHNF, Strategy::DNF}) {
      ReductionResult res = reduce(src, s, Renaming::NVR, limits.fuel);
      r.steps[ExampleRecord::step_slot(lang, s)] = res.steps;
      for (Renaming m : {Renaming::VR, Renaming::NVR}) {
        const Task task{lang, s, m};
        const Term nf = m == Renaming::VR ? rename_vr(res.normal_form) : res.normal_form;
        std::string text = print(nf, lang);
        const std::size_t len = limits.tokens.count(text);
        if (len > limits.max_output_tokens) return std::nullopt;
        r.lengths[2 + ExampleRecord::target_slot(task)] = len;
        r.target(task) = std::move(text);
      }
    }
  }
  r.annotated = lc2;
  return r;
}

}  // namespace lc
