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

#ifndef LC_SPLITS_HPP_
#define LC_SPLITS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lc/record.hpp"
#include "lc/reduce.hpp"
#include "lc/syntax.hpp"

namespace lc {

enum class SplitKind { Random, Type, Composition, Steps };

std::string_view to_string(SplitKind k);
SplitKind parse_split_kind(std::string_view text);

// Construction error: insufficient corpus, empty band, bad parameters.
class SplitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Which corpus ids are train and test for a split. Steps manifests gate each
// language separately, so their ids live in the per-language views and
// train_ids/test_ids stay empty. Composition manifests keep their synthesized
// test records inline.
struct SplitManifest {
  SplitKind kind = SplitKind::Random;
  std::uint64_t seed = 0;
  std::optional<Strategy> strategy;  // steps only
  std::string corpus;                // path the ids refer to, informational
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::string> warnings;

  std::vector<std::int64_t> train_ids;
  std::vector<std::int64_t> test_ids;

  std::array<std::vector<std::int64_t>, 2> lang_train_ids;  // lc1, lc2
  std::array<std::vector<std::int64_t>, 2> lang_test_ids;

  struct Composed {
    ExampleRecord record;
    std::int64_t fun_id = 0;  // e1
    std::int64_t arg_id = 0;  // e2
  };
  std::vector<Composed> composed;

  // Train/test ids as seen by one language's tasks.
  const std::vector<std::int64_t>& train_for(Lang lang) const;
  const std::vector<std::int64_t>& test_for(Lang lang) const;
};

// Header line (JSON), then `train<TAB>id` / `test<TAB>id` lines; steps
// manifests use `train.lc1<TAB>id` style tags, composition manifests add
// `record<TAB><json>` and `compose<TAB>id<TAB>e1<TAB>e2` lines.
std::string format_manifest(const SplitManifest& m);
SplitManifest parse_manifest(std::string_view text);
void write_manifest(const std::string& path, const SplitManifest& m);
SplitManifest read_manifest(const std::string& path);

// Throws SplitError on overlap, empty sides or ids missing from the corpus.
void validate_manifest(const SplitManifest& m, const std::vector<ExampleRecord>& corpus);

struct RandomSplitParams {
  std::size_t n_train = 90000;
  std::size_t n_test = 500;
};
SplitManifest random_split(const std::vector<ExampleRecord>& corpus, const RandomSplitParams& p,
                           std::uint64_t seed);

struct TypeSplitParams {
  double train_frac = 0.8;
  std::size_t n_train = 80000;
  std::size_t n_test = 500;
};
// Types in frequency order go to train until their cumulative count first
// reaches train_frac of the corpus; the type crossing the boundary is in
// train.
SplitManifest split_by_type(const std::vector<ExampleRecord>& corpus, const TypeSplitParams& p,
                            std::uint64_t seed);

struct ComposeParams {
  std::size_t n_train = 90000;  // 0: the whole corpus is the training pool
  std::size_t max_uses = 3;
  std::size_t n_out = 500;
};
// Samples e1 : a -> b and e2 : a from a random training sample and emits
// records for `e1 e2`. Outputs type-check, are unique, absent from the
// training strings and within the limits; each training term is used at most
// max_uses times. Gives up after 1000 * n_out attempts with a warning.
SplitManifest compose_split(const std::vector<ExampleRecord>& corpus, const ComposeParams& p,
                            const RecordLimits& limits, std::uint64_t seed);

struct StepsSplitParams {
  Strategy strategy = Strategy::WHNF;
  std::size_t train_max = 6;
  std::size_t test_min = 7;
  std::size_t test_max = 12;

  static StepsSplitParams defaults(Strategy s);
};
// Each language's view is gated by its own step count; both views are then
// subsampled to the same number of records per step count.
SplitManifest split_by_steps(const std::vector<ExampleRecord>& corpus, const StepsSplitParams& p,
                             std::uint64_t seed);

}  // namespace lc

#endif  // LC_SPLITS_HPP_
