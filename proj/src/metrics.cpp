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

#include "lc/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace lc {

namespace {

std::string_view drop_newline(std::string_view s) {
  if (!s.empty() && s.back() == '\n') {
    s.remove_suffix(1);
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  }
  return s;
}

}  // namespace

bool strings_match(std::string_view prediction, std::string_view gold) {
  return drop_newline(prediction) == drop_newline(gold);
}

Predictions parse_predictions(std::istream& in) {
  Predictions out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // getline already ate the '\n'; put it back so strings_match sees the
    // line exactly as written.
    if (!line.empty() && line.back() == '\r') line += '\n';
    const std::size_t tab = line.find('\t');
    const std::string id_text = line.substr(0, tab);
    std::int64_t id = 0;
    std::size_t used = 0;
    try {
      id = std::stoll(id_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != id_text.size()) {
      throw std::runtime_error("predictions line " + std::to_string(lineno) + ": bad id '" + id_text + "'");
    }
    std::string pred = tab == std::string::npos ? std::string() : line.substr(tab + 1);
    if (!out.emplace(id, std::move(pred)).second) {
      throw std::runtime_error("predictions line " + std::to_string(lineno) + ": duplicate id " +
                               std::to_string(id));
    }
  }
  return out;
}

Predictions read_predictions(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open predictions '" + path + "'");
  try {
    return parse_predictions(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

MatchResult exact_match(const Predictions& preds, const std::vector<const ExampleRecord*>& gold,
                        const Task& task) {
  std::unordered_set<std::int64_t> gold_ids;
  for (const auto* r : gold) gold_ids.insert(r->id);
  for (const auto& [id, _] : preds) {
    if (!gold_ids.count(id)) {
      throw std::runtime_error("prediction for id " + std::to_string(id) + " has no gold record");
    }
  }
  MatchResult res;
  res.total = gold.size();
  res.verdicts.reserve(gold.size());
  for (const auto* r : gold) {
    Verdict v;
    v.id = r->id;
    auto it = preds.find(r->id);
    if (it != preds.end()) {
      v.predicted = true;
      v.match = strings_match(it->second, r->target(task));
      if (!v.match) {
        // Diagnostic only: unparsable predictions are simply not alpha-equal.
        try {
          v.alpha_equal = alpha_eq(parse(drop_newline(it->second), task.lang), parse(r->target(task), task.lang));
        } catch (const std::exception&) {
          v.alpha_equal = false;
        }
      }
    }
    res.matches += v.match;
    res.alpha_equal_mismatches += v.alpha_equal;
    res.verdicts.push_back(v);
  }
  return res;
}

std::vector<Bucket> length_buckets(const std::vector<std::size_t>& lengths,
                                   const std::vector<bool>& matches, std::size_t k) {
  if (k < 2) throw std::invalid_argument("length buckets need k >= 2");
  if (lengths.size() != matches.size()) throw std::invalid_argument("lengths and verdicts are misaligned");
  std::vector<std::size_t> order(lengths.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lengths[a] < lengths[b]; });
  std::vector<Bucket> out(k);
  const std::size_t n = order.size();
  std::size_t pos = 0;
  for (std::size_t b = 0; b < k; ++b) {
    // The first n % k buckets take one extra row.
    const std::size_t size = n / k + (b < n % k ? 1 : 0);
    double len = 0;
    std::size_t hit = 0;
    for (std::size_t i = pos; i < pos + size; ++i) {
      len += static_cast<double>(lengths[order[i]]);
      hit += matches[order[i]];
    }
    out[b].rows = size;
    if (size > 0) {
      out[b].mean_length = len / static_cast<double>(size);
      out[b].exact_match = static_cast<double>(hit) / static_cast<double>(size);
    }
    pos += size;
  }
  return out;
}

std::vector<const ExampleRecord*> test_records(const SplitManifest& m,
                                               const std::vector<ExampleRecord>& corpus, Lang lang) {
  std::vector<const ExampleRecord*> out;
  if (m.kind == SplitKind::Composition) {
    for (const auto& c : m.composed) out.push_back(&c.record);
    return out;
  }
  std::unordered_map<std::int64_t, const ExampleRecord*> by_id;
  for (const auto& r : corpus) by_id.emplace(r.id, &r);
  for (auto id : m.test_for(lang)) {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw std::runtime_error("manifest id " + std::to_string(id) + " is not in the corpus");
    out.push_back(it->second);
  }
  return out;
}

namespace {

std::string cell(const std::vector<TaskScore>& scores, Strategy s, Renaming r, Lang l, bool alpha) {
  for (const auto& ts : scores) {
    if (ts.task == Task{l, s, r}) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", alpha ? ts.result.alpha_share() : ts.result.score());
      return buf;
    }
  }
  return "-";
}

void table(std::ostringstream& out, const std::vector<TaskScore>& scores, bool alpha) {
  char line[128];
  std::snprintf(line, sizeof line, "%-8s %8s %8s %8s %8s\n", "", "VR LC1", "VR LC2", "NVR LC1", "NVR LC2");
  out << line;
  for (Strategy s : {Strategy::WHNF, Strategy::DNF}) {
    std::snprintf(line, sizeof line, "%-8s %8s %8s %8s %8s\n", s == Strategy::WHNF ? "WHNF" : "DNF",
                  cell(scores, s, Renaming::VR, Lang::LC1, alpha).c_str(),
                  cell(scores, s, Renaming::VR, Lang::LC2, alpha).c_str(),
                  cell(scores, s, Renaming::NVR, Lang::LC1, alpha).c_str(),
                  cell(scores, s, Renaming::NVR, Lang::LC2, alpha).c_str());
    out << line;
  }
}

}  // namespace

std::string format_report(const std::vector<TaskScore>& scores, std::string_view title) {
  std::ostringstream out;
  out << "# " << title << "\n\nexact match\n";
  table(out, scores, false);
  out << "\nalpha-equal share of mismatches (diagnostic)\n";
  table(out, scores, true);
  out << '\n';
  for (const auto& ts : scores) {
    out << ts.task.str() << ": " << ts.result.matches << '/' << ts.result.total << " exact, "
        << ts.result.alpha_equal_mismatches << " alpha-equal mismatches\n";
  }
  return out.str();
}

std::string format_buckets_csv(const std::vector<Bucket>& buckets) {
  std::ostringstream out;
  out << "mean_length,exact_match,rows\n";
  for (const auto& b : buckets) out << b.mean_length << ',' << b.exact_match << ',' << b.rows << '\n';
  return out.str();
}

}  // namespace lc
