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

// lcgen: corpus generation, reduction, splitting and scoring from the shell.
//
// Failures print one line `lcgen: E_<KIND>: <message>` on stderr and exit
// with 2 (usage/config), 3 (data) or 4 (internal invariant).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lc/church.hpp"
#include "lc/corpus.hpp"
#include "lc/generator.hpp"
#include "lc/metrics.hpp"
#include "lc/reduce.hpp"
#include "lc/splits.hpp"
#include "lc/syntax.hpp"
#include "lc/typecheck.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kData = 3;
constexpr int kInternal = 4;

constexpr const char* kConfigEnv = "LCGEN_CONFIG";

struct Failure {
  int code;
  std::string message;
};

// Files written by the current command; removed if it fails part-way.
std::vector<std::string> g_written;

void emit(const std::string& path, const std::string& text) {
  lc::write_file_atomic(path, text);
  g_written.push_back(path);
}

void remove_partial_outputs() {
  for (const auto& p : g_written) {
    std::error_code ec;
    std::filesystem::remove(p, ec);
  }
  g_written.clear();
}

// --config, else $LCGEN_CONFIG, else built-in defaults.
lc::GenConfig resolve_config(const std::string& flag) {
  std::string path = flag;
  if (path.empty()) {
    if (const char* env = std::getenv(kConfigEnv)) path = env;
  }
  if (path.empty()) return lc::GenConfig{};
  try {
    return lc::load_config(path);
  } catch (const std::exception& e) {
    throw Failure{kUsage, e.what()};
  }
}

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kData, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  emit(path, text);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

lc::Lang parse_lang(const std::string& s) { return s == "lc1" ? lc::Lang::LC1 : lc::Lang::LC2; }
lc::Strategy parse_strategy(const std::string& s) {
  return s == "whnf" ? lc::Strategy::WHNF : lc::Strategy::DNF;
}

// ---------------------------------------------------------------------------

struct GenerateOpts {
  std::string config, out, stats;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  int workers = 0;
  bool serial = false;
};

void cmd_generate(const GenerateOpts& o, const CLI::App& sub) {
  lc::GenConfig cfg = resolve_config(o.config);
  if (sub.count("--seed")) cfg.seed = o.seed;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsage, e.what()};
  }
  const lc::Corpus corpus = o.serial ? lc::build_corpus_serial(cfg, o.n) : lc::build_corpus(cfg, o.n, o.workers);
  lc::write_corpus(o.out, corpus.records);
  g_written.push_back(o.out);
  const std::string prefix = o.stats.empty() ? o.out + ".stats" : o.stats;
  for (const char* ext : {".txt", ".types.csv", ".steps.csv", ".lengths.csv"}) g_written.push_back(prefix + ext);
  lc::write_stats(prefix, lc::summarize(corpus.records), &corpus.stats);
  std::cerr << "generated " << corpus.records.size() << " records from " << corpus.stats.candidates
            << " candidates (acceptance " << corpus.stats.acceptance_rate() << ")\n";
}

struct ReduceOpts {
  std::string lang = "lc1", strategy = "dnf", renaming = "vr", in, out;
  bool steps = false;
  std::size_t fuel = lc::kDefaultFuel;
};

void cmd_reduce(const ReduceOpts& o) {
  const lc::Lang lang = parse_lang(o.lang);
  const lc::Strategy strategy = parse_strategy(o.strategy);
  const lc::Renaming renaming = o.renaming == "vr" ? lc::Renaming::VR : lc::Renaming::NVR;
  std::string text;
  std::size_t lineno = 0;
  for (const auto& line : lines_of(read_all(o.in))) {
    ++lineno;
    try {
      const auto res = lc::reduce(lc::parse(line, lang), strategy, renaming, o.fuel);
      text += lc::print(res.normal_form, lang);
      if (o.steps) text += "\t" + std::to_string(res.steps);
      text += '\n';
    } catch (const std::exception& e) {
      throw Failure{kData, "input line " + std::to_string(lineno) + ": " + e.what()};
    }
  }
  write_output(o.out, text);
}

struct EncodeOpts {
  std::string in, out;
};

void cmd_encode(const EncodeOpts& o) {
  std::string text;
  std::size_t lineno = 0;
  for (const auto& line : lines_of(read_all(o.in))) {
    ++lineno;
    try {
      text += lc::print1(lc::church_encode(lc::parse2(line))) + '\n';
    } catch (const std::exception& e) {
      throw Failure{kData, "input line " + std::to_string(lineno) + ": " + e.what()};
    }
  }
  write_output(o.out, text);
}

struct CheckOpts {
  std::string corpus, config;
  std::size_t max_report = 20;
};

void cmd_check(const CheckOpts& o) {
  const lc::GenConfig cfg = resolve_config(o.config);
  const auto records = lc::read_corpus(o.corpus);
  const lc::RecordLimits limits = cfg.limits();
  std::size_t bad = 0;
  std::size_t shown = 0;
  std::unordered_set<std::string> sources;
  for (const auto& r : records) {
    auto problems = lc::audit_record(r, limits);
    if (!sources.insert(r.lc2_src).second) problems.push_back("record " + std::to_string(r.id) + ": duplicate lc2_src");
    if (problems.empty()) continue;
    ++bad;
    for (const auto& p : problems) {
      if (shown++ < o.max_report) std::cerr << p << '\n';
    }
  }
  std::cout << "records = " << records.size() << "\ninconsistent = " << bad << '\n';
  if (bad > 0) throw Failure{kData, std::to_string(bad) + " inconsistent records in " + o.corpus};
}

struct SplitOpts {
  std::string kind, corpus, out, config, strategy = "whnf";
  std::uint64_t seed = 0;
  std::size_t n_train = 0, n_test = 0, max_uses = 3, n_out = 500;
  double train_frac = 0.8;
  std::size_t train_max = 0, test_min = 0, test_max = 0;
};

void cmd_split(const SplitOpts& o, const CLI::App& sub) {
  const auto records = lc::read_corpus(o.corpus);
  const lc::SplitKind kind = lc::parse_split_kind(o.kind);
  auto given = [&](const char* flag) { return sub.count(flag) > 0; };
  lc::SplitManifest m;
  switch (kind) {
    case lc::SplitKind::Random: {
      lc::RandomSplitParams p;
      if (given("--n-train")) p.n_train = o.n_train;
      if (given("--n-test")) p.n_test = o.n_test;
      m = lc::random_split(records, p, o.seed);
      break;
    }
    case lc::SplitKind::Type: {
      lc::TypeSplitParams p;
      if (given("--n-train")) p.n_train = o.n_train;
      if (given("--n-test")) p.n_test = o.n_test;
      p.train_frac = o.train_frac;
      m = lc::split_by_type(records, p, o.seed);
      break;
    }
    case lc::SplitKind::Composition: {
      lc::ComposeParams p;
      if (given("--n-train")) p.n_train = o.n_train;
      p.max_uses = o.max_uses;
      p.n_out = o.n_out;
      m = lc::compose_split(records, p, resolve_config(o.config).limits(), o.seed);
      break;
    }
    case lc::SplitKind::Steps: {
      auto p = lc::StepsSplitParams::defaults(parse_strategy(o.strategy));
      if (given("--train-max")) p.train_max = o.train_max;
      if (given("--test-min")) p.test_min = o.test_min;
      if (given("--test-max")) p.test_max = o.test_max;
      m = lc::split_by_steps(records, p, o.seed);
      break;
    }
  }
  m.corpus = o.corpus;
  lc::validate_manifest(m, records);
  for (const auto& w : m.warnings) std::cerr << "warning: " << w << '\n';
  emit(o.out, lc::format_manifest(m));
}

struct ExportOpts {
  std::string manifest, corpus, task, side = "train";
  std::vector<std::string> out;
};

std::vector<lc::ExampleRecord> corpus_for(const lc::SplitManifest& m, const std::string& flag) {
  const std::string path = flag.empty() ? m.corpus : flag;
  if (path.empty()) throw Failure{kUsage, "no corpus given and the manifest does not name one"};
  return lc::read_corpus(path);
}

void cmd_export(const ExportOpts& o) {
  const lc::SplitManifest m = lc::read_manifest(o.manifest);
  const lc::Task task = lc::Task::parse(o.task);
  const auto records = corpus_for(m, o.corpus);
  std::vector<const lc::ExampleRecord*> rows;
  if (o.side == "test") {
    rows = lc::test_records(m, records, task.lang);
  } else {
    std::unordered_map<std::int64_t, const lc::ExampleRecord*> by_id;
    for (const auto& r : records) by_id.emplace(r.id, &r);
    for (auto id : m.train_for(task.lang)) {
      auto it = by_id.find(id);
      if (it == by_id.end()) throw Failure{kData, "manifest id " + std::to_string(id) + " is not in the corpus"};
      rows.push_back(it->second);
    }
  }
  std::string src, tgt, ids;
  for (const auto* r : rows) {
    src += r->source(task.lang) + '\n';
    tgt += r->target(task) + '\n';
    ids += std::to_string(r->id) + '\n';
  }
  emit(o.out[0], src);
  emit(o.out[1], tgt);
  emit(o.out[0] + ".ids", ids);
}

struct ScoreOpts {
  std::string gold, manifest, out;
  std::vector<std::string> tasks, preds;
  std::size_t buckets = 10;
};

void cmd_score(const ScoreOpts& o) {
  if (o.tasks.size() != o.preds.size()) throw Failure{kUsage, "give one --preds file per --task"};
  const lc::SplitManifest m = lc::read_manifest(o.manifest);
  const auto records = corpus_for(m, o.gold);
  std::vector<lc::TaskScore> scores;
  for (std::size_t i = 0; i < o.tasks.size(); ++i) {
    lc::TaskScore ts;
    ts.task = lc::Task::parse(o.tasks[i]);
    const auto gold = lc::test_records(m, records, ts.task.lang);
    ts.result = lc::exact_match(lc::read_predictions(o.preds[i]), gold, ts.task);
    std::vector<std::size_t> in_len, out_len;
    std::vector<bool> hits;
    for (std::size_t g = 0; g < gold.size(); ++g) {
      in_len.push_back(gold[g]->source_length(ts.task.lang));
      out_len.push_back(gold[g]->target_length(ts.task));
      hits.push_back(ts.result.verdicts[g].match);
    }
    if (gold.size() >= o.buckets) {
      ts.input_buckets = lc::length_buckets(in_len, hits, o.buckets);
      ts.output_buckets = lc::length_buckets(out_len, hits, o.buckets);
    }
    scores.push_back(std::move(ts));
  }
  const std::string title = std::string(lc::to_string(m.kind)) + " split, " + o.manifest;
  const std::string report = lc::format_report(scores, title);
  write_output(o.out, report);
  if (o.out.empty() || o.out == "-") return;
  for (const auto& ts : scores) {
    if (ts.input_buckets.empty()) continue;
    emit(o.out + "." + ts.task.field() + ".input_length.csv", lc::format_buckets_csv(ts.input_buckets));
    emit(o.out + "." + ts.task.field() + ".output_length.csv", lc::format_buckets_csv(ts.output_buckets));
  }
}

struct StatsOpts {
  std::string corpus, out;
};

void cmd_stats(const StatsOpts& o) {
  const auto records = lc::read_corpus(o.corpus);
  const std::string prefix = o.out.empty() ? o.corpus + ".stats" : o.out;
  for (const char* ext : {".txt", ".types.csv", ".steps.csv", ".lengths.csv"}) g_written.push_back(prefix + ext);
  lc::write_stats(prefix, lc::summarize(records), nullptr);
  std::cout << read_all(prefix + ".txt");
}

int fail(int code, const std::string& msg) {
  remove_partial_outputs();
  const char* kind = code == kUsage ? "E_USAGE" : code == kData ? "E_DATA" : "E_INTERNAL";
  std::string line = msg;
  for (char& c : line) {
    if (c == '\n') c = ' ';
  }
  std::cerr << "lcgen: " << kind << ": " << line << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lambda-calculus corpus generation and evaluation"};
  app.require_subcommand(1);
  const std::vector<std::string> langs{"lc1", "lc2"}, strategies{"whnf", "dnf"}, renamings{"vr", "nvr"};

  GenerateOpts gen;
  auto* g = app.add_subcommand("generate", "Build a corpus of unique records");
  g->add_option("--config", gen.config, std::string("Config file (default: $") + kConfigEnv + ")");
  g->add_option("--n", gen.n, "Number of records")->required()->check(CLI::PositiveNumber);
  g->add_option("--out", gen.out, "Corpus output path")->required();
  g->add_option("--seed", gen.seed, "Overrides the config seed");
  g->add_option("--workers", gen.workers, "Worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  g->add_option("--stats", gen.stats, "Stats path prefix (default: <out>.stats)");
  g->add_flag("--serial", gen.serial, "Use the single-threaded reference builder");

  ReduceOpts red;
  auto* r = app.add_subcommand("reduce", "Normalize one term per line");
  r->add_option("--lang", red.lang)->check(CLI::IsMember(langs));
  r->add_option("--strategy", red.strategy)->check(CLI::IsMember(strategies));
  r->add_option("--renaming", red.renaming)->check(CLI::IsMember(renamings));
  r->add_flag("--steps", red.steps, "Append <TAB>step count");
  r->add_option("--fuel", red.fuel, "Step limit per term");
  r->add_option("--in", red.in, "Input file (default stdin)");
  r->add_option("--out", red.out, "Output file (default stdout)");

  EncodeOpts enc;
  auto* e = app.add_subcommand("encode", "Church-encode one sugared term per line");
  e->add_option("--in", enc.in, "Input file (default stdin)");
  e->add_option("--out", enc.out, "Output file (default stdout)");

  CheckOpts chk;
  auto* c = app.add_subcommand("check", "Audit a corpus against fresh recomputation");
  c->add_option("--corpus", chk.corpus)->required();
  c->add_option("--config", chk.config, "Config whose limits apply");
  c->add_option("--max-report", chk.max_report, "Problems printed before going quiet");

  SplitOpts spl;
  auto* s = app.add_subcommand("split", "Build a train/test manifest");
  s->add_option("--kind", spl.kind)->required()->check(CLI::IsMember({"random", "type", "composition", "steps"}));
  s->add_option("--corpus", spl.corpus)->required();
  s->add_option("--out", spl.out)->required();
  s->add_option("--seed", spl.seed);
  s->add_option("--n-train", spl.n_train);
  s->add_option("--n-test", spl.n_test);
  s->add_option("--train-frac", spl.train_frac);
  s->add_option("--max-uses", spl.max_uses);
  s->add_option("--n-out", spl.n_out);
  s->add_option("--config", spl.config, "Config whose limits apply to composed records");
  s->add_option("--strategy", spl.strategy)->check(CLI::IsMember(strategies));
  s->add_option("--train-max", spl.train_max);
  s->add_option("--test-min", spl.test_min);
  s->add_option("--test-max", spl.test_max);

  ExportOpts exp;
  auto* x = app.add_subcommand("export", "Write aligned source/target lines for one task");
  x->add_option("--manifest", exp.manifest)->required();
  x->add_option("--corpus", exp.corpus, "Overrides the corpus named in the manifest");
  x->add_option("--task", exp.task, "e.g. lc1,whnf,vr")->required();
  x->add_option("--side", exp.side)->check(CLI::IsMember({"train", "test"}));
  x->add_option("--out", exp.out, "src.txt tgt.txt")->required()->expected(2);

  ScoreOpts sco;
  auto* sc = app.add_subcommand("score", "Exact-match report for predictions on a split's test side");
  sc->add_option("--gold", sco.gold, "Corpus (default: the one named in the manifest)");
  sc->add_option("--manifest", sco.manifest)->required();
  sc->add_option("--task", sco.tasks, "Task per predictions file")->required();
  sc->add_option("--preds", sco.preds, "Lines of id<TAB>prediction")->required();
  sc->add_option("--out", sco.out, "Report path (default stdout)");
  sc->add_option("--buckets", sco.buckets, "Length buckets")->check(CLI::Range(2, 1000));

  StatsOpts sta;
  auto* st = app.add_subcommand("stats", "Histograms and medians of a corpus");
  st->add_option("--corpus", sta.corpus)->required();
  st->add_option("--out", sta.out, "Path prefix (default: <corpus>.stats)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    return fail(kUsage, ex.what());
  }

  try {
    if (*g) cmd_generate(gen, *g);
    if (*r) cmd_reduce(red);
    if (*e) cmd_encode(enc);
    if (*c) cmd_check(chk);
    if (*s) cmd_split(spl, *s);
    if (*x) cmd_export(exp);
    if (*sc) cmd_score(sco);
    if (*st) cmd_stats(sta);
  } catch (const Failure& f) {
    return fail(f.code, f.message);
  } catch (const lc::FuelExhausted& ex) {
    return fail(kInternal, ex.what());
  } catch (const lc::ParseError& ex) {
    return fail(kData, ex.what());
  } catch (const lc::TypeError& ex) {
    return fail(kData, ex.what());
  } catch (const std::invalid_argument& ex) {
    return fail(kUsage, ex.what());
  } catch (const std::logic_error& ex) {
    return fail(kInternal, ex.what());
  } catch (const std::exception& ex) {
    return fail(kData, ex.what());
  } catch (...) {
    return fail(kInternal, "unknown exception");
  }
  return 0;
}
