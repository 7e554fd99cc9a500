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

#ifndef LC_CORPUS_HPP_
#define LC_CORPUS_HPP_

#include <cstddef>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lc/generator.hpp"
#include "lc/record.hpp"
#include "lc/types.hpp"

namespace lc {

// Median of integer observations; the mean of the two middle values for even
// counts. Zero for an empty input.
double median(std::vector<std::size_t> values);

struct CorpusStats {
  std::size_t candidates = 0;
  std::size_t accepted = 0;
  std::size_t rejected_too_long = 0;
  std::size_t rejected_duplicate = 0;
  std::size_t rejected_generation = 0;

  double acceptance_rate() const {
    return candidates == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(candidates);
  }
  void count(Rejection r);
};

struct Corpus {
  std::vector<ExampleRecord> records;
  CorpusStats stats;
};

// Thrown when fewer than 1% of candidates survive filtering.
class LowAcceptance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reference implementation: candidates k = 0, 1, 2, ... drawn from
// Rng::stream(cfg.seed, k), filtered and deduplicated in k order until n
// records are accepted. Ids are 0 .. n-1.
Corpus build_corpus_serial(const GenConfig& cfg, std::size_t n);

// Same stream of records as build_corpus_serial for any worker count:
// candidates are evaluated in parallel batches and merged in k order.
// workers <= 0 uses the OpenMP default.
Corpus build_corpus(const GenConfig& cfg, std::size_t n, int workers = 0);

// Line-delimited records, ids ascending. Writes to a temporary sibling and
// renames over `path`.
void write_corpus(const std::string& path, const std::vector<ExampleRecord>& records);
std::vector<ExampleRecord> read_corpus(const std::string& path);

// Writes `text` to `path` atomically.
void write_file_atomic(const std::string& path, const std::string& text);

// Distribution summary of a record set.
struct CorpusSummary {
  std::size_t records = 0;
  std::vector<std::pair<Type, std::size_t>> types;  // frequency order
  std::array<std::map<std::size_t, std::size_t>, 4> step_histograms;
  std::array<double, 4> step_medians{};
  std::array<std::map<std::size_t, std::size_t>, 10> length_histograms;
  std::array<double, 10> length_means{};
};

CorpusSummary summarize(const std::vector<ExampleRecord>& records);

// Writes `<prefix>.txt` (key = value), `<prefix>.types.csv`,
// `<prefix>.steps.csv` and `<prefix>.lengths.csv`. `stats` may be null when
// only the summary is known.
void write_stats(const std::string& prefix, const CorpusSummary& summary,
                 const CorpusStats* stats);

// Recomputes every derived field of a record from its sugared source and
// lists discrepancies and violated record invariants. Empty when consistent.
std::vector<std::string> audit_record(const ExampleRecord& r, const RecordLimits& limits);

}  // namespace lc

#endif  // LC_CORPUS_HPP_
