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

#include "lc/corpus.hpp"

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "lc/typecheck.hpp"

#ifdef LCGEN_HAVE_OPENMP
#include <omp.h>
#endif

namespace lc {

double median(std::vector<std::size_t> values) {
  if (values.empty()) return 0.0;
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const double hi = static_cast<double>(values[mid]);
  if (values.size() % 2 == 1) return hi;
  const double lo = static_cast<double>(*std::max_element(values.begin(), values.begin() + mid));
  return (lo + hi) / 2.0;
}

void CorpusStats::count(Rejection r) {
  switch (r) {
    case Rejection::TooLong:
      ++rejected_too_long;
      break;
    case Rejection::Duplicate:
      ++rejected_duplicate;
      break;
    case Rejection::GenerationFailure:
      ++rejected_generation;
      break;
  }
}

namespace {

constexpr std::size_t kGuardMinCandidates = 1000;

// Sequential half of corpus construction. Both builders feed it candidates in
// index order, so dedup, id assignment and the acceptance guard are shared.
class Merger {
 public:
  explicit Merger(std::size_t n) : n_(n) { out_.records.reserve(n); }

  bool done() const { return out_.records.size() >= n_; }

  void take(Candidate c) {
    ++out_.stats.candidates;
    if (auto* r = std::get_if<ExampleRecord>(&c)) {
      if (seen_.insert(r->lc2_src).second) {
        r->id = static_cast<std::int64_t>(out_.records.size());
        out_.records.push_back(std::move(*r));
        ++out_.stats.accepted;
      } else {
        out_.stats.count(Rejection::Duplicate);
      }
    } else {
      out_.stats.count(std::get<Rejection>(c));
    }
    if (out_.stats.candidates >= kGuardMinCandidates && out_.stats.accepted * 100 < out_.stats.candidates) {
      std::ostringstream msg;
      msg << "acceptance rate " << out_.stats.acceptance_rate() << " after "
          << out_.stats.candidates << " candidates is below 1%; check the configuration";
      throw LowAcceptance(msg.str());
    }
  }

  Corpus finish() { return std::move(out_); }

 private:
  std::size_t n_;
  Corpus out_;
  std::unordered_set<std::string> seen_;
};

Candidate draw(const GenConfig& cfg, const RecordLimits& limits, std::uint64_t k) {
  Rng rng = Rng::stream(cfg.seed, k);
  return generate_candidate(cfg, limits, rng);
}

}  // namespace

Corpus build_corpus_serial(const GenConfig& cfg, std::size_t n) {
  if (n == 0) throw std::invalid_argument("corpus size must be at least 1");
  cfg.validate();
  const RecordLimits limits = cfg.limits();
  Merger merger(n);
  for (std::uint64_t k = 0; !merger.done(); ++k) merger.take(draw(cfg, limits, k));
  return merger.finish();
}

Corpus build_corpus(const GenConfig& cfg, std::size_t n, int workers) {
  if (n == 0) throw std::invalid_argument("corpus size must be at least 1");
  cfg.validate();
  const RecordLimits limits = cfg.limits();
#ifdef LCGEN_HAVE_OPENMP
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#else
  const int threads = 1;
#endif
  // Large enough to amortize the fork/join, small enough that little work is
  // thrown away past the n-th acceptance.
  const std::size_t batch = 128 * static_cast<std::size_t>(std::max(threads, 1));

  Merger merger(n);
  std::vector<std::optional<Candidate>> slots(batch);
  std::vector<std::exception_ptr> errors(batch);
  for (std::uint64_t base = 0; !merger.done(); base += batch) {
    std::fill(errors.begin(), errors.end(), nullptr);
#ifdef LCGEN_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(batch); ++i) {
      try {
        slots[i] = draw(cfg, limits, base + static_cast<std::uint64_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (std::size_t i = 0; i < batch && !merger.done(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      merger.take(std::move(*slots[i]));
    }
  }
  return merger.finish();
}

void write_file_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at '" + path + "'");
  }
}

void write_corpus(const std::string& path, const std::vector<ExampleRecord>& records) {
  std::string text;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i > 0 && records[i].id <= records[i - 1].id) {
      throw std::invalid_argument("corpus ids must be strictly ascending");
    }
    text += record_to_json(records[i]);
    text += '\n';
  }
  write_file_atomic(path, text);
}

std::vector<ExampleRecord> read_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus '" + path + "'");
  std::vector<ExampleRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": blank line");
    try {
      out.push_back(record_from_json(line));
    } catch (const std::runtime_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (out.size() > 1 && out.back().id <= out[out.size() - 2].id) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": ids not ascending");
    }
  }
  return out;
}

CorpusSummary summarize(const std::vector<ExampleRecord>& records) {
  CorpusSummary s;
  s.records = records.size();
  std::vector<Type> types;
  types.reserve(records.size());
  std::array<std::vector<std::size_t>, 4> steps;
  std::array<double, 10> length_sums{};
  for (const auto& r : records) {
    types.push_back(r.ty);
    for (std::size_t i = 0; i < 4; ++i) {
      steps[i].push_back(r.steps[i]);
      ++s.step_histograms[i][r.steps[i]];
    }
    for (std::size_t i = 0; i < 10; ++i) {
      ++s.length_histograms[i][r.lengths[i]];
      length_sums[i] += static_cast<double>(r.lengths[i]);
    }
  }
  s.types = type_frequency_order(types);
  for (std::size_t i = 0; i < 4; ++i) s.step_medians[i] = median(std::move(steps[i]));
  for (std::size_t i = 0; i < 10; ++i) {
    s.length_means[i] = records.empty() ? 0.0 : length_sums[i] / static_cast<double>(records.size());
  }
  return s;
}

namespace {

// Field names are shared with the record schema.
const std::string& step_field(std::size_t i) {
  return record_field_names()[4 + 8 + i];
}
const std::string& length_field(std::size_t i) {
  return record_field_names()[4 + 8 + 4 + i];
}

}  // namespace

void write_stats(const std::string& prefix, const CorpusSummary& summary, const CorpusStats* stats) {
  std::ostringstream kv;
  kv << "records = " << summary.records << '\n';
  if (stats) {
    kv << "candidates = " << stats->candidates << '\n'
       << "accepted = " << stats->accepted << '\n'
       << "acceptance_rate = " << stats->acceptance_rate() << '\n'
       << "rejected_too_long = " << stats->rejected_too_long << '\n'
       << "rejected_duplicate = " << stats->rejected_duplicate << '\n'
       << "rejected_generation_failure = " << stats->rejected_generation << '\n';
  }
  kv << "distinct_types = " << summary.types.size() << '\n';
  for (std::size_t i = 0; i < 4; ++i) {
    kv << "median_" << step_field(i) << " = " << summary.step_medians[i] << '\n';
  }
  for (std::size_t i = 0; i < 10; ++i) {
    kv << "mean_" << length_field(i) << " = " << summary.length_means[i] << '\n';
  }
  write_file_atomic(prefix + ".txt", kv.str());

  std::ostringstream types;
  types << "type,count\n";
  for (const auto& [ty, n] : summary.types) types << '"' << ty.str() << "\"," << n << '\n';
  write_file_atomic(prefix + ".types.csv", types.str());

  auto histogram_csv = [](const auto& hists, std::size_t count, const auto& name) {
    std::ostringstream out;
    out << "field,value,count\n";
    for (std::size_t i = 0; i < count; ++i) {
      for (const auto& [v, n] : hists[i]) out << name(i) << ',' << v << ',' << n << '\n';
    }
    return out.str();
  };
  write_file_atomic(prefix + ".steps.csv", histogram_csv(summary.step_histograms, 4, step_field));
  write_file_atomic(prefix + ".lengths.csv",
                    histogram_csv(summary.length_histograms, 10, length_field));
}

std::vector<std::string> audit_record(const ExampleRecord& r, const RecordLimits& limits) {
  std::vector<std::string> problems;
  auto fail = [&](std::string msg) { problems.push_back("record " + std::to_string(r.id) + ": " + std::move(msg)); };

  Term lc2;
  try {
    lc2 = parse2(r.lc2_src);
  } catch (const std::exception& e) {
    fail(std::string("lc2_src does not parse: ") + e.what());
    return problems;
  }
  if (!lc2.closed()) fail("lc2_src is not closed");
  if (r.annotated) {
    try {
      const Type got = check(*r.annotated);
      if (got != r.ty) fail("annotated source has type " + got.str() + ", stored " + r.ty.str());
    } catch (const TypeError& e) {
      fail(std::string("annotated source is ill-typed: ") + e.what());
    }
  }

  // Recompute with the caps lifted so every field can be compared.
  RecordLimits open = limits;
  open.max_input_tokens = std::numeric_limits<std::size_t>::max();
  open.max_output_tokens = std::numeric_limits<std::size_t>::max();
  std::optional<ExampleRecord> fresh;
  try {
    fresh = evaluate_program(lc2, r.ty, open);
  } catch (const std::exception& e) {
    fail(std::string("recomputation failed: ") + e.what());
    return problems;
  }
  const auto& names = record_field_names();
  if (fresh->lc2_src != r.lc2_src) fail("lc2_src is not in canonical form");
  if (fresh->lc1_src != r.lc1_src) fail("lc1_src differs from the encoding of lc2_src");
  for (std::size_t i = 0; i < 8; ++i) {
    if (fresh->targets[i] != r.targets[i]) fail(names[4 + i] + " differs from recomputation");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (fresh->steps[i] != r.steps[i]) fail(step_field(i) + " differs from recomputation");
  }
  for (std::size_t i = 0; i < 10; ++i) {
    if (fresh->lengths[i] != r.lengths[i]) fail(length_field(i) + " differs from recomputation");
  }

  for (Lang lang : {Lang::LC1, Lang::LC2}) {
    if (r.step_count(lang, Strategy::WHNF) > r.step_count(lang, Strategy::DNF)) {
      fail(std::string("whnf steps exceed dnf steps for ") + std::string(to_string(lang)));
    }
    if (r.source_length(lang) > limits.max_input_tokens) {
      fail(std::string(to_string(lang)) + " source exceeds the input cap");
    }
  }
  for (const Task& t : Task::all()) {
    if (r.target_length(t) > limits.max_output_tokens) fail(t.field() + " exceeds the output cap");
    try {
      const Term nf = parse(r.target(t), t.lang);
      if (reduce(nf, t.strategy, Renaming::NVR, 1).steps != 0) {
        fail(t.field() + " is not a normal form");
      }
    } catch (const FuelExhausted&) {
      fail(t.field() + " is not a normal form");
    } catch (const std::exception& e) {
      fail(t.field() + " does not parse: " + e.what());
    }
  }
  return problems;
}

}  // namespace lc
