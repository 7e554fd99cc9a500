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

#ifndef LC_METRICS_HPP_
#define LC_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lc/record.hpp"
#include "lc/splits.hpp"

namespace lc {

// id -> predicted normal form.
using Predictions = std::map<std::int64_t, std::string>;

// Lines of `id<TAB>prediction`. Throws std::runtime_error on malformed lines
// and duplicate ids. A missing tab means an empty prediction.
Predictions parse_predictions(std::istream& in);
Predictions read_predictions(const std::string& path);

// Byte comparison after dropping one trailing "\n" (or "\r\n") from each side.
bool strings_match(std::string_view prediction, std::string_view gold);

struct Verdict {
  std::int64_t id = 0;
  bool predicted = false;   // a prediction line exists
  bool match = false;
  bool alpha_equal = false;  // mismatch, but alpha-equivalent to the gold term
};

struct MatchResult {
  std::size_t total = 0;
  std::size_t matches = 0;
  std::size_t alpha_equal_mismatches = 0;
  std::vector<Verdict> verdicts;  // in gold order

  double score() const { return total == 0 ? 0.0 : static_cast<double>(matches) / static_cast<double>(total); }
  // Share of mismatches that are alpha-equal to the gold term.
  double alpha_share() const {
    const std::size_t miss = total - matches;
    return miss == 0 ? 0.0 : static_cast<double>(alpha_equal_mismatches) / static_cast<double>(miss);
  }
};

// Scores predictions against the task's target of every gold record. Missing
// predictions are mismatches; predictions for ids outside `gold` are an error.
MatchResult exact_match(const Predictions& preds, const std::vector<const ExampleRecord*>& gold,
                        const Task& task);

struct Bucket {
  std::size_t rows = 0;
  double mean_length = 0;
  double exact_match = 0;
};

// Sorts rows by length (ties by position) and cuts them into k contiguous
// buckets whose sizes differ by at most one.
std::vector<Bucket> length_buckets(const std::vector<std::size_t>& lengths,
                                   const std::vector<bool>& matches, std::size_t k);

// Gold records on the test side of a manifest for one language: corpus
// records by id, or the inline records of a composition split.
std::vector<const ExampleRecord*> test_records(const SplitManifest& m,
                                               const std::vector<ExampleRecord>& corpus, Lang lang);

struct TaskScore {
  Task task;
  MatchResult result;
  std::vector<Bucket> input_buckets;
  std::vector<Bucket> output_buckets;
};

// Rows WHNF / DNF, columns VR LC1, VR LC2, NVR LC1, NVR LC2; unscored cells
// print as "-". A second table gives the alpha-equivalence diagnostic.
std::string format_report(const std::vector<TaskScore>& scores, std::string_view title);
std::string format_buckets_csv(const std::vector<Bucket>& buckets);

}  // namespace lc

#endif  // LC_METRICS_HPP_
