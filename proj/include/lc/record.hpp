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

#ifndef LC_RECORD_HPP_
#define LC_RECORD_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lc/reduce.hpp"
#include "lc/syntax.hpp"
#include "lc/term.hpp"
#include "lc/tokens.hpp"
#include "lc/types.hpp"

namespace lc {

// One (language, strategy, renaming) reduction task.
struct Task {
  Lang lang = Lang::LC1;
  Strategy strategy = Strategy::WHNF;
  Renaming renaming = Renaming::VR;

  // "lc1,whnf,vr"
  std::string str() const;
  // Field name of the task's target, e.g. "lc1_whnf_vr".
  std::string field() const;
  friend bool operator==(const Task&, const Task&) = default;

  static Task parse(std::string_view text);
  // All eight tasks in schema order.
  static const std::array<Task, 8>& all();
};

std::string_view to_string(Lang lang);

// One dataset row. Targets and lengths are stored in schema order: per
// language lc1 then lc2, per strategy whnf then dnf, per renaming vr then nvr
// (serialized names follow the fixed field list in record_field_names()).
struct ExampleRecord {
  std::int64_t id = 0;
  Type ty;
  std::string lc1_src;
  std::string lc2_src;
  std::array<std::string, 8> targets;
  std::array<std::size_t, 4> steps{};  // whnf_lc1, dnf_lc1, whnf_lc2, dnf_lc2
  std::array<std::size_t, 10> lengths{};

  // Annotated sugared source; only present for in-memory records built by the
  // generator. Never serialized.
  std::optional<Term> annotated;

  const std::string& source(Lang lang) const { return lang == Lang::LC1 ? lc1_src : lc2_src; }
  const std::string& target(const Task& t) const { return targets[target_slot(t)]; }
  std::string& target(const Task& t) { return targets[target_slot(t)]; }
  std::size_t step_count(Lang lang, Strategy s) const { return steps[step_slot(lang, s)]; }
  std::size_t source_length(Lang lang) const { return lengths[lang == Lang::LC1 ? 0 : 1]; }
  std::size_t target_length(const Task& t) const { return lengths[2 + target_slot(t)]; }

  static std::size_t target_slot(const Task& t);
  static std::size_t step_slot(Lang lang, Strategy s);

  friend bool operator==(const ExampleRecord& a, const ExampleRecord& b);
};

// Serialized field order of an ExampleRecord line.
const std::vector<std::string>& record_field_names();

// One flat JSON object, no trailing newline.
std::string record_to_json(const ExampleRecord& r);
// Throws std::runtime_error on malformed lines or missing fields.
ExampleRecord record_from_json(std::string_view line);

struct RecordLimits {
  std::size_t max_input_tokens = 512;
  std::size_t max_output_tokens = 256;
  std::size_t fuel = kDefaultFuel;
  TokenCounter tokens;
};

enum class Rejection { TooLong, Duplicate, GenerationFailure };
std::string_view to_string(Rejection r);

// Church-encodes and reduces a closed sugared program under all eight tasks.
// Returns nullopt when any stored string exceeds its token cap. Throws
// FuelExhausted if a reduction does not finish.
std::optional<ExampleRecord> evaluate_program(const Term& lc2, const Type& ty,
                                              const RecordLimits& limits);

}  // namespace lc

#endif  // LC_RECORD_HPP_
