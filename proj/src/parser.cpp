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

#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "lc/syntax.hpp"

namespace lc {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& found)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": expected " +
                         join(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

enum class Tok {
  Backslash,
  Arrow,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  ConsOp,
  UnitLit,
  NilLit,
  Ident,
  Ite,
  Foldr,
  True,
  False,
  End,
};

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
  std::uint32_t index = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, pos_, "end of input"});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  Token next() {
    const std::size_t start = pos_;
    auto rest = src_.substr(pos_);
    auto fixed = [&](Tok k, std::size_t n) {
      pos_ += n;
      return Token{k, start, src_.substr(start, n)};
    };
    if (rest.starts_with("->")) return fixed(Tok::Arrow, 2);
    if (rest.starts_with("(:)")) return fixed(Tok::ConsOp, 3);
    if (rest.starts_with("()")) return fixed(Tok::UnitLit, 2);
    if (rest.starts_with("[]")) return fixed(Tok::NilLit, 2);
    switch (rest.front()) {
      case '\\':
        return fixed(Tok::Backslash, 1);
      case '(':
        return fixed(Tok::LParen, 1);
      case ')':
        return fixed(Tok::RParen, 1);
      case '[':
        return fixed(Tok::LBracket, 1);
      case ']':
        return fixed(Tok::RBracket, 1);
      case ',':
        return fixed(Tok::Comma, 1);
      case ':':
        return fixed(Tok::Colon, 1);
      default:
        break;
    }
    std::size_t end = pos_;
    while (end < src_.size() && std::isalnum(static_cast<unsigned char>(src_[end]))) ++end;
    if (end == pos_) {
      throw ParseError(start, {"token"}, "'" + std::string(1, rest.front()) + "'");
    }
    const std::string_view word = src_.substr(pos_, end - pos_);
    pos_ = end;
    if (word == "ite") return {Tok::Ite, start, word};
    if (word == "foldr") return {Tok::Foldr, start, word};
    if (word == "True") return {Tok::True, start, word};
    if (word == "False") return {Tok::False, start, word};
    if (word.size() >= 2 && word[0] == 'x') {
      std::uint64_t value = 0;
      bool digits = true;
      for (char c : word.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          digits = false;
          break;
        }
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > std::numeric_limits<std::uint32_t>::max()) {
          digits = false;
          break;
        }
      }
      if (digits) return {Tok::Ident, start, word, static_cast<std::uint32_t>(value)};
    }
    throw ParseError(start, {"variable", "keyword"}, "'" + std::string(word) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view src, Lang lang) : tokens_(Lexer(src).run()), lang_(lang) {}

  Term parse() {
    Term t = expr();
    if (peek().kind != Tok::End) fail({"end of input"});
    return t;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + std::string(t.text) + "'";
    throw ParseError(t.offset, std::move(expected), found);
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail({what});
    advance();
  }

  bool sugared(Tok k) const {
    switch (k) {
      case Tok::LBracket:
      case Tok::Colon:
      case Tok::ConsOp:
      case Tok::UnitLit:
      case Tok::NilLit:
      case Tok::Ite:
      case Tok::Foldr:
      case Tok::True:
      case Tok::False:
        return true;
      default:
        return false;
    }
  }

  bool starts_atom(Tok k) const {
    if (lang_ == Lang::LC1 && sugared(k)) return false;
    switch (k) {
      case Tok::Ident:
      case Tok::LParen:
      case Tok::LBracket:
      case Tok::UnitLit:
      case Tok::NilLit:
      case Tok::ConsOp:
      case Tok::Ite:
      case Tok::Foldr:
      case Tok::True:
      case Tok::False:
        return true;
      default:
        return false;
    }
  }

  std::vector<std::string> term_start() const {
    if (lang_ == Lang::LC1) return {"\\", "variable", "("};
    return {"\\", "variable", "(", "[", "()", "[]", "(:)", "ite", "foldr", "True", "False"};
  }

  Term expr() {
    if (peek().kind == Tok::Backslash) {
      advance();
      if (peek().kind != Tok::Ident) fail({"variable"});
      const VarName binder{advance().index};
      expect(Tok::Arrow, "->");
      return Term::lam(binder, expr());
    }
    Term lhs = application();
    if (lang_ == Lang::LC2 && peek().kind == Tok::Colon) {
      advance();
      return Term::cons(std::move(lhs), expr());
    }
    return lhs;
  }

  // Keyword heads take a fixed number of arguments; any further arguments
  // apply to the result.
  Term application() {
    if (!starts_atom(peek().kind)) fail(term_start());
    const Token head = peek();
    std::size_t needed = 0;
    switch (head.kind) {
      case Tok::Ite:
      case Tok::Foldr:
        needed = 3;
        break;
      case Tok::ConsOp:
        needed = 2;
        break;
      default:
        break;
    }
    std::vector<Term> items;
    if (needed > 0) {
      advance();
    } else {
      items.push_back(atom());
    }
    while (starts_atom(peek().kind)) {
      const Tok k = peek().kind;
      if (k == Tok::Ite || k == Tok::Foldr || k == Tok::ConsOp) {
        fail({"argument (parenthesize " + std::string(peek().text) + " applications)"});
      }
      items.push_back(atom());
    }
    if (needed == 0) {
      Term f = items.front();
      return Term::apply(std::move(f), std::span<const Term>(items).subspan(1));
    }
    if (items.size() < needed) fail({"argument to " + std::string(head.text)});
    Term core;
    switch (head.kind) {
      case Tok::Ite:
        core = Term::ite(items[0], items[1], items[2]);
        break;
      case Tok::Foldr:
        core = Term::foldr(items[0], items[1], items[2]);
        break;
      default:
        core = Term::cons(items[0], items[1]);
        break;
    }
    return Term::apply(std::move(core), std::span<const Term>(items).subspan(needed));
  }

  Term atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident:
        advance();
        return Term::var(VarName{t.index});
      case Tok::LParen: {
        advance();
        Term inner = expr();
        expect(Tok::RParen, ")");
        return inner;
      }
      case Tok::UnitLit:
        advance();
        return Term::unit();
      case Tok::True:
        advance();
        return Term::tru();
      case Tok::False:
        advance();
        return Term::fls();
      case Tok::NilLit:
        advance();
        return Term::nil();
      case Tok::LBracket: {
        advance();
        std::vector<Term> elems{expr()};
        while (peek().kind == Tok::Comma) {
          advance();
          elems.push_back(expr());
        }
        if (peek().kind != Tok::RBracket) fail({",", "]"});
        advance();
        Term list = Term::nil();
        for (auto it = elems.rbegin(); it != elems.rend(); ++it) list = Term::cons(*it, list);
        return list;
      }
      default:
        fail(term_start());
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Lang lang_;
};

}  // namespace

Term parse(std::string_view text, Lang lang) { return Parser(text, lang).parse(); }
Term parse1(std::string_view text) { return parse(text, Lang::LC1); }
Term parse2(std::string_view text) { return parse(text, Lang::LC2); }

}  // namespace lc
