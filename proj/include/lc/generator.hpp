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

#ifndef LC_GENERATOR_HPP_
#define LC_GENERATOR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <variant>

#include "lc/random.hpp"
#include "lc/record.hpp"
#include "lc/term.hpp"
#include "lc/tokens.hpp"
#include "lc/types.hpp"

namespace lc {

struct TypeWeights {
  double unit = 1;
  double boolean = 1;
  double list = 1;
  double arrow = 1;
};

// Weight of each term constructor when it can produce the goal type. `var`
// is the weight of "some in-scope variable of the goal type", shared by all
// such variables.
//
// Defaults are calibrated rather than uniform: halving the two boolean
// constants makes them one "Bool leaf" choice like (), and damping the
// eliminations keeps step counts near the target medians (WHNF 4/3,
// DNF 6/4 for lc1/lc2).
struct TermWeights {
  double var = 1;
  double lam = 1;
  double unit = 1;
  double tru = 0.5;
  double fls = 0.5;
  double nil = 1;
  double cons = 1;
  double app = 0.5;
  double ite = 0.5;
  double foldr = 0.5;
};

struct GenConfig {
  std::uint64_t seed = 0;
  int max_type_depth = 4;
  int max_term_depth = 5;
  // Depth cap for argument/element types invented by App and Foldr.
  int max_arg_type_depth = 2;
  TypeWeights type_weights;
  TermWeights term_weights;
  std::size_t max_input_tokens = 512;
  std::size_t max_output_tokens = 256;
  std::size_t fuel = kDefaultFuel;
  TokenMode token_mode = TokenMode::Whitespace;
  std::string vocab_path;

  // Throws std::invalid_argument naming the first violated constraint.
  void validate() const;
  RecordLimits limits() const;
};

// `key = value` lines; `#` starts a comment. Keys are the GenConfig field
// names, with weights spelled `type_weight.<name>` / `term_weight.<name>`.
GenConfig load_config(const std::string& path);
GenConfig parse_config(const std::string& text);
std::string format_config(const GenConfig& cfg);

class GenerationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Random type of depth <= max_depth by recursive descent over the weights.
Type generate_type(const TypeWeights& weights, int max_depth, Rng& rng);
Type generate_type(const GenConfig& cfg, Rng& rng);

// Closed, annotated term of type `ty`, at most cfg.max_term_depth deep.
// Binders are numbered x0, x1, ... in preorder. Throws GenerationFailure when
// no term of `ty` fits in the depth budget.
Term generate_term(const Type& ty, const GenConfig& cfg, Rng& rng);

// Smallest depth at which `ty` is inhabited using constructors alone.
int min_inhabited_depth(const Type& ty);

using Candidate = std::variant<ExampleRecord, Rejection>;

// Type, term, encoding and all reductions for one draw, without dedup.
Candidate generate_candidate(const GenConfig& cfg, const RecordLimits& limits, Rng& rng);

// generate_candidate plus dedup on the printed sugared source. Accepted
// sources are added to `seen`.
Candidate generate_example(const GenConfig& cfg, const RecordLimits& limits, Rng& rng,
                           std::unordered_set<std::string>& seen);

}  // namespace lc

#endif  // LC_GENERATOR_HPP_
