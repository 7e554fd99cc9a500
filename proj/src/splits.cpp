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

#include "lc/splits.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "lc/corpus.hpp"
#include "lc/random.hpp"
#include "lc/typecheck.hpp"

namespace lc {

using json = nlohmann::ordered_json;

std::string_view to_string(SplitKind k) {
  switch (k) {
    case SplitKind::Random:
      return "random";
    case SplitKind::Type:
      return "type";
    case SplitKind::Composition:
      return "composition";
    case SplitKind::Steps:
      return "steps";
  }
  return "unknown";
}

SplitKind parse_split_kind(std::string_view text) {
  for (SplitKind k : {SplitKind::Random, SplitKind::Type, SplitKind::Composition, SplitKind::Steps}) {
    if (text == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown split kind '" + std::string(text) + "'");
}

const std::vector<std::int64_t>& SplitManifest::train_for(Lang lang) const {
  return kind == SplitKind::Steps ? lang_train_ids[lang == Lang::LC1 ? 0 : 1] : train_ids;
}

const std::vector<std::int64_t>& SplitManifest::test_for(Lang lang) const {
  return kind == SplitKind::Steps ? lang_test_ids[lang == Lang::LC1 ? 0 : 1] : test_ids;
}

StepsSplitParams StepsSplitParams::defaults(Strategy s) {
  if (s == Strategy::WHNF) return StepsSplitParams{Strategy::WHNF, 6, 7, 12};
  return StepsSplitParams{Strategy::DNF, 8, 9, 32};
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

Strategy parse_strategy(std::string_view s) {
  if (s == "whnf") return Strategy::WHNF;
  if (s == "dnf") return Strategy::DNF;
  throw std::invalid_argument("unknown strategy '" + std::string(s) + "'");
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) return out;
    start = tab + 1;
  }
}

std::int64_t parse_id(std::string_view s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(std::string(s), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::runtime_error("bad id '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::string format_manifest(const SplitManifest& m) {
  json header;
  header["kind"] = std::string(to_string(m.kind));
  header["seed"] = m.seed;
  header["strategy"] = m.strategy ? json(std::string(to_string(*m.strategy))) : json(nullptr);
  header["corpus"] = m.corpus;
  header["parameters"] = m.parameters;
  header["warnings"] = m.warnings;

  std::ostringstream out;
  out << header.dump() << '\n';
  for (auto id : m.train_ids) out << "train\t" << id << '\n';
  for (auto id : m.test_ids) out << "test\t" << id << '\n';
  for (std::size_t l = 0; l < 2; ++l) {
    const char* lang = l == 0 ? "lc1" : "lc2";
    for (auto id : m.lang_train_ids[l]) out << "train." << lang << '\t' << id << '\n';
    for (auto id : m.lang_test_ids[l]) out << "test." << lang << '\t' << id << '\n';
  }
  for (const auto& c : m.composed) {
    out << "record\t" << record_to_json(c.record) << '\n';
    out << "compose\t" << c.record.id << '\t' << c.fun_id << '\t' << c.arg_id << '\n';
  }
  return out.str();
}

SplitManifest parse_manifest(std::string_view text) {
  SplitManifest m;
  std::size_t pos = 0;
  std::size_t lineno = 0;
  std::unordered_map<std::int64_t, std::size_t> composed_at;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    try {
      if (lineno == 1) {
        const json h = json::parse(line);
        m.kind = parse_split_kind(h.at("kind").get<std::string>());
        m.seed = h.at("seed").get<std::uint64_t>();
        if (!h.at("strategy").is_null()) m.strategy = parse_strategy(h.at("strategy").get<std::string>());
        m.corpus = h.at("corpus").get<std::string>();
        m.parameters = h.at("parameters");
        m.warnings = h.at("warnings").get<std::vector<std::string>>();
        continue;
      }
      const auto cols = split_tabs(line);
      const std::string_view tag = cols[0];
      if (tag == "record" && cols.size() >= 2) {
        // Record JSON never contains raw tabs, but be lenient about it.
        const auto json_text = line.substr(tag.size() + 1);
        ExampleRecord r = record_from_json(json_text);
        composed_at[r.id] = m.composed.size();
        m.composed.push_back(SplitManifest::Composed{std::move(r), 0, 0});
        continue;
      }
      if (tag == "compose" && cols.size() == 4) {
        auto it = composed_at.find(parse_id(cols[1]));
        if (it == composed_at.end()) throw std::runtime_error("compose line for unknown record");
        m.composed[it->second].fun_id = parse_id(cols[2]);
        m.composed[it->second].arg_id = parse_id(cols[3]);
        continue;
      }
      if (cols.size() != 2) throw std::runtime_error("expected <tag><TAB><id>");
      const std::int64_t id = parse_id(cols[1]);
      if (tag == "train") {
        m.train_ids.push_back(id);
      } else if (tag == "test") {
        m.test_ids.push_back(id);
      } else if (tag == "train.lc1") {
        m.lang_train_ids[0].push_back(id);
      } else if (tag == "train.lc2") {
        m.lang_train_ids[1].push_back(id);
      } else if (tag == "test.lc1") {
        m.lang_test_ids[0].push_back(id);
      } else if (tag == "test.lc2") {
        m.lang_test_ids[1].push_back(id);
      } else {
        throw std::runtime_error("unknown tag '" + std::string(tag) + "'");
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("manifest line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (lineno == 0) throw std::runtime_error("manifest is empty");
  return m;
}

void write_manifest(const std::string& path, const SplitManifest& m) {
  write_file_atomic(path, format_manifest(m));
}

SplitManifest read_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open manifest '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_manifest(buf.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void validate_manifest(const SplitManifest& m, const std::vector<ExampleRecord>& corpus) {
  std::unordered_set<std::int64_t> known;
  for (const auto& r : corpus) known.insert(r.id);
  auto check_sides = [&](const std::vector<std::int64_t>& train, const std::vector<std::int64_t>& test,
                         bool test_in_corpus, const std::string& what) {
    if (train.empty()) throw SplitError(what + "train side is empty");
    if (test.empty()) throw SplitError(what + "test side is empty");
    std::unordered_set<std::int64_t> seen;
    for (auto id : train) {
      if (!known.count(id)) throw SplitError(what + "train id " + std::to_string(id) + " not in corpus");
      if (!seen.insert(id).second) throw SplitError(what + "train id " + std::to_string(id) + " repeated");
    }
    for (auto id : test) {
      if (test_in_corpus && !known.count(id)) {
        throw SplitError(what + "test id " + std::to_string(id) + " not in corpus");
      }
      if (!seen.insert(id).second) {
        throw SplitError(what + "id " + std::to_string(id) + " is on both sides or repeated");
      }
    }
  };
  if (m.kind == SplitKind::Steps) {
    check_sides(m.lang_train_ids[0], m.lang_test_ids[0], true, "lc1 view: ");
    check_sides(m.lang_train_ids[1], m.lang_test_ids[1], true, "lc2 view: ");
  } else if (m.kind == SplitKind::Composition) {
    std::vector<std::int64_t> test;
    for (const auto& c : m.composed) test.push_back(c.record.id);
    check_sides(m.train_ids, test, false, "");
  } else {
    check_sides(m.train_ids, m.test_ids, true, "");
  }
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

// Picks `n` of `pool` uniformly without replacement, returned in ascending
// order. Partial Fisher-Yates so large pools are cheap.
std::vector<std::int64_t> sample(std::vector<std::int64_t> pool, std::size_t n, Rng& rng) {
  if (n > pool.size()) n = pool.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<std::int64_t> all_ids(const std::vector<ExampleRecord>& corpus) {
  std::vector<std::int64_t> ids;
  ids.reserve(corpus.size());
  for (const auto& r : corpus) ids.push_back(r.id);
  return ids;
}

}  // namespace

SplitManifest random_split(const std::vector<ExampleRecord>& corpus, const RandomSplitParams& p,
                           std::uint64_t seed) {
  if (p.n_train == 0 || p.n_test == 0) throw SplitError("random split sizes must be positive");
  if (p.n_train + p.n_test > corpus.size()) {
    throw SplitError("random split needs " + std::to_string(p.n_train + p.n_test) +
                     " records, corpus has " + std::to_string(corpus.size()));
  }
  Rng rng(splitmix64(seed));
  std::vector<std::int64_t> picked = all_ids(corpus);
  rng.shuffle(picked);
  SplitManifest m;
  m.kind = SplitKind::Random;
  m.seed = seed;
  m.parameters = {{"n_train", p.n_train}, {"n_test", p.n_test}};
  m.train_ids.assign(picked.begin(), picked.begin() + static_cast<std::ptrdiff_t>(p.n_train));
  m.test_ids.assign(picked.begin() + static_cast<std::ptrdiff_t>(p.n_train),
                    picked.begin() + static_cast<std::ptrdiff_t>(p.n_train + p.n_test));
  std::sort(m.train_ids.begin(), m.train_ids.end());
  std::sort(m.test_ids.begin(), m.test_ids.end());
  return m;
}

SplitManifest split_by_type(const std::vector<ExampleRecord>& corpus, const TypeSplitParams& p,
                            std::uint64_t seed) {
  if (!(p.train_frac > 0.0 && p.train_frac < 1.0)) throw SplitError("train_frac must be in (0, 1)");
  if (p.n_train == 0 || p.n_test == 0) throw SplitError("type split sizes must be positive");
  if (corpus.empty()) throw SplitError("corpus is empty");

  std::vector<Type> types;
  types.reserve(corpus.size());
  for (const auto& r : corpus) types.push_back(r.ty);
  const auto ranked = type_frequency_order(types);

  SplitManifest m;
  m.kind = SplitKind::Type;
  m.seed = seed;
  const double target = p.train_frac * static_cast<double>(corpus.size());
  std::unordered_set<Type, TypeHash> train_types;
  std::size_t cumulative = 0;
  for (const auto& [ty, n] : ranked) {
    if (static_cast<double>(cumulative) >= target) break;
    train_types.insert(ty);
    cumulative += n;
  }
  if (static_cast<double>(ranked.front().second) > target) {
    m.warnings.push_back("type " + ranked.front().first.str() +
                         " alone exceeds the train fraction; placed in train");
  }
  if (train_types.size() == ranked.size()) throw SplitError("every type landed in train; no test types");

  std::vector<std::int64_t> train_pool, test_pool;
  for (const auto& r : corpus) (train_types.count(r.ty) ? train_pool : test_pool).push_back(r.id);
  if (train_pool.size() < p.n_train) {
    m.warnings.push_back("train side has only " + std::to_string(train_pool.size()) + " records");
  }
  if (test_pool.size() < p.n_test) {
    m.warnings.push_back("test side has only " + std::to_string(test_pool.size()) + " records");
  }
  Rng rng(splitmix64(seed));
  m.train_ids = sample(std::move(train_pool), p.n_train, rng);
  m.test_ids = sample(std::move(test_pool), p.n_test, rng);

  json train_list = json::array();
  json test_list = json::array();
  for (const auto& [ty, n] : ranked) (train_types.count(ty) ? train_list : test_list).push_back(ty.str());
  m.parameters = {{"train_frac", p.train_frac},
                  {"n_train", p.n_train},
                  {"n_test", p.n_test},
                  {"train_type_records", cumulative},
                  {"train_types", train_list},
                  {"test_types", test_list}};
  return m;
}

SplitManifest compose_split(const std::vector<ExampleRecord>& corpus, const ComposeParams& p,
                            const RecordLimits& limits, std::uint64_t seed) {
  if (p.n_out == 0 || p.max_uses == 0) throw SplitError("composition sizes must be positive");
  if (corpus.empty()) throw SplitError("corpus is empty");
  if (p.n_train > corpus.size()) {
    throw SplitError("composition training pool needs " + std::to_string(p.n_train) +
                     " records, corpus has " + std::to_string(corpus.size()));
  }
  Rng rng(splitmix64(seed));

  SplitManifest m;
  m.kind = SplitKind::Composition;
  m.seed = seed;
  m.parameters = {{"n_train", p.n_train}, {"max_uses", p.max_uses}, {"n_out", p.n_out}};
  m.train_ids = p.n_train == 0 ? all_ids(corpus) : sample(all_ids(corpus), p.n_train, rng);

  std::unordered_map<std::int64_t, const ExampleRecord*> by_id;
  for (const auto& r : corpus) by_id.emplace(r.id, &r);
  std::vector<const ExampleRecord*> pool;
  pool.reserve(m.train_ids.size());
  std::unordered_set<std::string> train_strings;
  std::int64_t next_id = corpus.back().id;
  for (const auto& r : corpus) next_id = std::max(next_id, r.id);
  ++next_id;
  for (auto id : m.train_ids) {
    const ExampleRecord* r = by_id.at(id);
    pool.push_back(r);
    train_strings.insert(r->lc1_src);
    train_strings.insert(r->lc2_src);
  }

  // Arguments grouped by type; functions are the arrow-typed terms whose
  // domain has at least one candidate argument.
  std::map<Type, std::vector<std::size_t>> args_of;
  for (std::size_t i = 0; i < pool.size(); ++i) args_of[pool[i]->ty].push_back(i);
  std::vector<std::size_t> funs;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Type& ty = pool[i]->ty;
    if (ty.kind() == TypeKind::Arrow && args_of.count(ty.dom())) funs.push_back(i);
  }
  if (funs.empty()) throw SplitError("no composable pair in the training pool");

  std::vector<std::size_t> uses(pool.size(), 0);
  std::unordered_map<std::size_t, Term> parsed;
  auto term_of = [&](std::size_t i) -> const Term& {
    auto it = parsed.find(i);
    if (it != parsed.end()) return it->second;
    const ExampleRecord& r = *pool[i];
    return parsed.emplace(i, r.annotated ? *r.annotated : parse2(r.lc2_src)).first->second;
  };
  std::unordered_set<std::string> out_strings;
  const std::size_t max_attempts = 1000 * p.n_out;
  std::size_t attempts = 0;
  while (m.composed.size() < p.n_out && attempts < max_attempts) {
    ++attempts;
    const std::size_t f = funs[rng.below(funs.size())];
    const auto& args = args_of.at(pool[f]->ty.dom());
    const std::size_t a = args[rng.below(args.size())];
    if (uses[f] >= p.max_uses || uses[a] >= p.max_uses) continue;

    const Term composed = rename_vr(Term::app(term_of(f), term_of(a)));
    const Type ty = pool[f]->ty.cod();
    const bool annotated = pool[f]->annotated && pool[a]->annotated;
    if (annotated) {
      // Full check when the terms carry their annotations; otherwise the
      // stored types already guarantee dom(e1) = type(e2).
      try {
        if (check(composed) != ty) continue;
      } catch (const TypeError&) {
        continue;
      }
    }
    auto rec = evaluate_program(composed, ty, limits);
    if (!rec) continue;
    if (train_strings.count(rec->lc2_src) || train_strings.count(rec->lc1_src)) continue;
    if (out_strings.count(rec->lc2_src)) continue;

    out_strings.insert(rec->lc2_src);
    ++uses[f];
    ++uses[a];
    rec->id = next_id++;
    if (!annotated) rec->annotated.reset();
    m.composed.push_back(SplitManifest::Composed{std::move(*rec), pool[f]->id, pool[a]->id});
  }
  if (m.composed.size() < p.n_out) {
    m.warnings.push_back("composition exhausted after " + std::to_string(attempts) + " attempts with " +
                         std::to_string(m.composed.size()) + " of " + std::to_string(p.n_out) +
                         " records");
  }
  if (m.composed.empty()) throw SplitError("composition produced no records");
  return m;
}

SplitManifest split_by_steps(const std::vector<ExampleRecord>& corpus, const StepsSplitParams& p,
                             std::uint64_t seed) {
  if (!(p.train_max < p.test_min && p.test_min <= p.test_max)) {
    throw SplitError("steps bands need train_max < test_min <= test_max");
  }
  // Per language: step count -> ids, for each side.
  using Bands = std::map<std::size_t, std::vector<std::int64_t>>;
  std::array<Bands, 2> train_by, test_by;
  for (const auto& r : corpus) {
    for (std::size_t l = 0; l < 2; ++l) {
      const std::size_t s = r.step_count(l == 0 ? Lang::LC1 : Lang::LC2, p.strategy);
      if (s <= p.train_max) {
        train_by[l][s].push_back(r.id);
      } else if (s >= p.test_min && s <= p.test_max) {
        test_by[l][s].push_back(r.id);
      }
    }
  }

  SplitManifest m;
  m.kind = SplitKind::Steps;
  m.seed = seed;
  m.strategy = p.strategy;
  m.parameters = {{"train_max", p.train_max}, {"test_min", p.test_min}, {"test_max", p.test_max}};

  Rng rng(splitmix64(seed));
  auto equalize = [&](std::array<Bands, 2>& by, std::array<std::vector<std::int64_t>, 2>& out,
                      const char* side) {
    // Keep min(count_lc1[s], count_lc2[s]) records of each step count s in
    // both views, so the two histograms are identical.
    for (auto& [s, ids1] : by[0]) {
      auto it = by[1].find(s);
      if (it == by[1].end()) continue;
      const std::size_t n = std::min(ids1.size(), it->second.size());
      for (std::size_t l = 0; l < 2; ++l) {
        auto picked = sample(l == 0 ? ids1 : it->second, n, rng);
        out[l].insert(out[l].end(), picked.begin(), picked.end());
      }
    }
    for (auto& ids : out) std::sort(ids.begin(), ids.end());
    if (out[0].empty()) throw SplitError(std::string("steps split has an empty ") + side + " band");
  };
  equalize(train_by, m.lang_train_ids, "train");
  equalize(test_by, m.lang_test_ids, "test");
  return m;
}

}  // namespace lc
