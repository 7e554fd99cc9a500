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

#include "lc/generator.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace lc {

void GenConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid config: ") + what);
  };
  require(max_type_depth >= 1, "max_type_depth must be >= 1");
  require(max_term_depth >= 1, "max_term_depth must be >= 1");
  require(max_arg_type_depth >= 1, "max_arg_type_depth must be >= 1");
  require(max_input_tokens >= 1, "max_input_tokens must be >= 1");
  require(max_output_tokens >= 1, "max_output_tokens must be >= 1");
  const auto& tw = type_weights;
  require(tw.unit > 0 && tw.boolean > 0 && tw.list > 0 && tw.arrow > 0,
          "type weights must be positive");
  const auto& w = term_weights;
  for (double x : {w.var, w.lam, w.unit, w.tru, w.fls, w.nil, w.cons, w.app, w.ite, w.foldr}) {
    require(x > 0, "term weights must be positive");
  }
  require(token_mode != TokenMode::Vocab || !vocab_path.empty(),
          "token_mode = vocab needs vocab_path");
}

RecordLimits GenConfig::limits() const {
  RecordLimits l;
  l.max_input_tokens = max_input_tokens;
  l.max_output_tokens = max_output_tokens;
  l.fuel = fuel;
  switch (token_mode) {
    case TokenMode::Whitespace:
      l.tokens = TokenCounter::whitespace();
      break;
    case TokenMode::Char:
      l.tokens = TokenCounter::chars();
      break;
    case TokenMode::Vocab:
      l.tokens = TokenCounter::from_vocab_file(vocab_path);
      break;
  }
  return l;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  if constexpr (std::is_floating_point_v<T>) {
    std::size_t used = 0;
    try {
      out = static_cast<T>(std::stod(value, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || value.empty()) {
      throw std::invalid_argument("config key '" + key + "': not a number: " + value);
    }
  } else {
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw std::invalid_argument("config key '" + key + "': not an integer: " + value);
    }
  }
  return out;
}

}  // namespace

GenConfig parse_config(const std::string& text) {
  GenConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto& tw = cfg.type_weights;
    auto& w = cfg.term_weights;
    const std::array<std::pair<const char*, double*>, 14> weights{{
        {"type_weight.unit", &tw.unit},
        {"type_weight.bool", &tw.boolean},
        {"type_weight.list", &tw.list},
        {"type_weight.arrow", &tw.arrow},
        {"term_weight.var", &w.var},
        {"term_weight.lam", &w.lam},
        {"term_weight.unit", &w.unit},
        {"term_weight.true", &w.tru},
        {"term_weight.false", &w.fls},
        {"term_weight.nil", &w.nil},
        {"term_weight.cons", &w.cons},
        {"term_weight.app", &w.app},
        {"term_weight.ite", &w.ite},
        {"term_weight.foldr", &w.foldr},
    }};
    bool matched = false;
    for (const auto& [name, slot] : weights) {
      if (key == name) {
        *slot = parse_number<double>(key, value);
        matched = true;
      }
    }
    if (matched) continue;
    if (key == "seed") {
      cfg.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "max_type_depth") {
      cfg.max_type_depth = parse_number<int>(key, value);
    } else if (key == "max_term_depth") {
      cfg.max_term_depth = parse_number<int>(key, value);
    } else if (key == "max_arg_type_depth") {
      cfg.max_arg_type_depth = parse_number<int>(key, value);
    } else if (key == "max_input_tokens") {
      cfg.max_input_tokens = parse_number<std::size_t>(key, value);
    } else if (key == "max_output_tokens") {
      cfg.max_output_tokens = parse_number<std::size_t>(key, value);
    } else if (key == "fuel") {
      cfg.fuel = parse_number<std::size_t>(key, value);
    } else if (key == "token_mode") {
      if (value == "whitespace") {
        cfg.token_mode = TokenMode::Whitespace;
      } else if (value == "char") {
        cfg.token_mode = TokenMode::Char;
      } else if (value == "vocab") {
        cfg.token_mode = TokenMode::Vocab;
      } else {
        throw std::invalid_argument("config key 'token_mode': expected whitespace, char or vocab");
      }
    } else if (key == "vocab_path") {
      cfg.vocab_path = value;
    } else {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" +
                                  key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

GenConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_config(const GenConfig& cfg) {
  std::ostringstream out;
  out.precision(17);
  const auto& tw = cfg.type_weights;
  const auto& w = cfg.term_weights;
  out << "seed = " << cfg.seed << '\n'
      << "max_type_depth = " << cfg.max_type_depth << '\n'
      << "max_term_depth = " << cfg.max_term_depth << '\n'
      << "max_arg_type_depth = " << cfg.max_arg_type_depth << '\n'
      << "type_weight.unit = " << tw.unit << '\n'
      << "type_weight.bool = " << tw.boolean << '\n'
      << "type_weight.list = " << tw.list << '\n'
      << "type_weight.arrow = " << tw.arrow << '\n'
      << "term_weight.var = " << w.var << '\n'
      << "term_weight.lam = " << w.lam << '\n'
      << "term_weight.unit = " << w.unit << '\n'
      << "term_weight.true = " << w.tru << '\n'
      << "term_weight.false = " << w.fls << '\n'
      << "term_weight.nil = " << w.nil << '\n'
      << "term_weight.cons = " << w.cons << '\n'
      << "term_weight.app = " << w.app << '\n'
      << "term_weight.ite = " << w.ite << '\n'
      << "term_weight.foldr = " << w.foldr << '\n'
      << "max_input_tokens = " << cfg.max_input_tokens << '\n'
      << "max_output_tokens = " << cfg.max_output_tokens << '\n'
      << "fuel = " << cfg.fuel << '\n'
      << "token_mode = "
      << (cfg.token_mode == TokenMode::Whitespace ? "whitespace"
          : cfg.token_mode == TokenMode::Char     ? "char"
                                                  : "vocab")
      << '\n';
  if (!cfg.vocab_path.empty()) out << "vocab_path = " << cfg.vocab_path << '\n';
  return out.str();
}

Type generate_type(const TypeWeights& weights, int max_depth, Rng& rng) {
  if (max_depth <= 1) {
    const std::array<double, 2> w{weights.unit, weights.boolean};
    return rng.weighted(w) == 0 ? Type::unit() : Type::boolean();
  }
  const std::array<double, 4> w{weights.unit, weights.boolean, weights.list, weights.arrow};
  switch (rng.weighted(w)) {
    case 0:
      return Type::unit();
    case 1:
      return Type::boolean();
    case 2:
      return Type::list(generate_type(weights, max_depth - 1, rng));
    default: {
      Type dom = generate_type(weights, max_depth - 1, rng);
      Type cod = generate_type(weights, max_depth - 1, rng);
      return Type::arrow(std::move(dom), std::move(cod));
    }
  }
}

Type generate_type(const GenConfig& cfg, Rng& rng) {
  return generate_type(cfg.type_weights, cfg.max_type_depth, rng);
}

int min_inhabited_depth(const Type& ty) {
  if (ty.kind() == TypeKind::Arrow) return 1 + min_inhabited_depth(ty.cod());
  return 1;
}

namespace {

enum class Choice { Var, Lam, Unit, True, False, Nil, Cons, App, Ite, Foldr };

class TermGenerator {
 public:
  TermGenerator(const GenConfig& cfg, Rng& rng) : cfg_(cfg), rng_(rng) {}

  Term run(const Type& ty, int remaining) {
    std::vector<Choice> choices;
    std::vector<double> weights;
    const auto& w = cfg_.term_weights;
    auto offer = [&](Choice c, double weight) {
      choices.push_back(c);
      weights.push_back(weight);
    };

    std::vector<VarName> vars;
    for (const auto& [name, t] : env_) {
      if (t == ty) vars.push_back(name);
    }
    if (!vars.empty()) offer(Choice::Var, w.var);
    const int below = remaining - 1;
    switch (ty.kind()) {
      case TypeKind::Unit:
        offer(Choice::Unit, w.unit);
        break;
      case TypeKind::Bool:
        offer(Choice::True, w.tru);
        offer(Choice::False, w.fls);
        break;
      case TypeKind::List:
        offer(Choice::Nil, w.nil);
        if (below >= 1 && fits(ty.elem(), below)) offer(Choice::Cons, w.cons);
        break;
      case TypeKind::Arrow:
        if (below >= 1 && fits_under(ty.dom(), ty.cod(), below)) offer(Choice::Lam, w.lam);
        break;
    }
    if (below >= 1) {
      offer(Choice::App, w.app);
      if (fits(ty, below)) offer(Choice::Ite, w.ite);
      if (fits(ty, below)) offer(Choice::Foldr, w.foldr);
    }

    for (;;) {
      if (choices.empty()) {
        throw GenerationFailure("no constructor of type " + ty.str() + " fits in depth " +
                                std::to_string(remaining));
      }
      const std::size_t pick = rng_.weighted(weights);
      switch (choices[pick]) {
        case Choice::Var:
          return Term::var(vars[rng_.below(vars.size())]);
        case Choice::Unit:
          return Term::unit();
        case Choice::True:
          return Term::tru();
        case Choice::False:
          return Term::fls();
        case Choice::Nil:
          return Term::nil(ty.elem());
        case Choice::Lam: {
          const VarName x{next_var_++};
          env_.emplace_back(x, ty.dom());
          Term body = run(ty.cod(), below);
          env_.pop_back();
          return Term::lam(x, std::move(body), ty.dom());
        }
        case Choice::Cons: {
          Term head = run(ty.elem(), below);
          Term tail = run(ty, below);
          return Term::cons(std::move(head), std::move(tail));
        }
        case Choice::Ite: {
          Term c = run(Type::boolean(), below);
          Term a = run(ty, below);
          Term b = run(ty, below);
          return Term::ite(std::move(c), std::move(a), std::move(b));
        }
        case Choice::App:
          if (auto arg_ty = invent_type([&](const Type& a) {
                return fits(Type::arrow(a, ty), below) && fits(a, below);
              })) {
            Term f = run(Type::arrow(*arg_ty, ty), below);
            Term x = run(*arg_ty, below);
            return Term::app(std::move(f), std::move(x));
          }
          break;
        case Choice::Foldr:
          if (auto elem_ty = invent_type([&](const Type& a) {
                return fits(Type::arrow(a, Type::arrow(ty, ty)), below);
              })) {
            Term f = run(Type::arrow(*elem_ty, Type::arrow(ty, ty)), below);
            Term e = run(ty, below);
            Term l = run(Type::list(*elem_ty), below);
            return Term::foldr(std::move(f), std::move(e), std::move(l));
          }
          break;
      }
      choices.erase(choices.begin() + static_cast<std::ptrdiff_t>(pick));
      weights.erase(weights.begin() + static_cast<std::ptrdiff_t>(pick));
    }
  }

 private:
  template <typename Pred>
  std::optional<Type> invent_type(Pred ok) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      Type t = generate_type(cfg_.type_weights, cfg_.max_arg_type_depth, rng_);
      if (ok(t)) return t;
    }
    return std::nullopt;
  }

  bool in_scope(const Type& ty) const {
    for (const auto& entry : env_) {
      if (entry.second == ty) return true;
    }
    for (const Type& t : extra_) {
      if (t == ty) return true;
    }
    return false;
  }

  // Whether some term of `ty` fits in `depth` levels under the current scope.
  bool fits(const Type& ty, int depth) {
    if (depth < 1) return false;
    if (in_scope(ty) || ty.kind() != TypeKind::Arrow) return true;
    return fits_under(ty.dom(), ty.cod(), depth - 1);
  }

  bool fits_under(const Type& bound, const Type& ty, int depth) {
    extra_.push_back(bound);
    const bool ok = fits(ty, depth);
    extra_.pop_back();
    return ok;
  }

  const GenConfig& cfg_;
  Rng& rng_;
  std::vector<std::pair<VarName, Type>> env_;
  std::vector<Type> extra_;
  std::uint32_t next_var_ = 0;
};

}  // namespace

Term generate_term(const Type& ty, const GenConfig& cfg, Rng& rng) {
  return TermGenerator(cfg, rng).run(ty, cfg.max_term_depth);
}

Candidate generate_candidate(const GenConfig& cfg, const RecordLimits& limits, Rng& rng) {
  const Type ty = generate_type(cfg, rng);
  Term term;
  try {
    term = generate_term(ty, cfg, rng);
  } catch (const GenerationFailure&) {
    return Rejection::GenerationFailure;
  }
  // FuelExhausted propagates: typed programs always normalize, so running out
  // of fuel is a configuration or interpreter bug, not a rejection.
  auto record = evaluate_program(term, ty, limits);
  if (!record) return Rejection::TooLong;
  return std::move(*record);
}

Candidate generate_example(const GenConfig& cfg, const RecordLimits& limits, Rng& rng,
                           std::unordered_set<std::string>& seen) {
  Candidate c = generate_candidate(cfg, limits, rng);
  if (auto* r = std::get_if<ExampleRecord>(&c)) {
    if (!seen.insert(r->lc2_src).second) return Rejection::Duplicate;
  }
  return c;
}

}  // namespace lc
