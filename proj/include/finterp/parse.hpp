#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finterp/error.hpp"
#include "finterp/formula.hpp"
#include "finterp/term.hpp"
#include "finterp/type.hpp"
#include "finterp/typing.hpp"

namespace finterp {

struct SourceText {
  std::string text;
  std::string origin = "<input>";

  SourceLoc locate(std::size_t offset) const {
    SourceLoc loc{1, 1};
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
    return loc;
  }
};

namespace detail {

enum class Tok {
  Ident,
  Number,
  KwBot,
  KwVar,
  KwFormula,
  KwTerm,
  KwProj,
  KwSubst,
  KwRec,
  KwSucc,
  KwAdd,
  KwMul,
  KwS,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Dot,
  Colon,
  Assign,
  Backslash,
  Arrow,
  Plus,
  Star,
  Eq,
  Amp,
  Pipe,
  Tilde,
  Bang,
  Question,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset = 0;
  unsigned long number = 0;
  bool glued = false;  // LParen immediately following '='
};

inline bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

inline bool ident_char(char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
}

inline std::vector<Token> lex(const SourceText& src) {
  std::vector<Token> out;
  const std::string& s = src.text;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg, std::size_t at) {
    throw Error(ErrorKind::Syntax, src.origin + ": " + msg, src.locate(at));
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      std::string word = s.substr(start, i - start);
      Tok k = Tok::Ident;
      if (word == "bot") k = Tok::KwBot;
      else if (word == "var") k = Tok::KwVar;
      else if (word == "formula") k = Tok::KwFormula;
      else if (word == "term") k = Tok::KwTerm;
      else if (word == "proj") k = Tok::KwProj;
      else if (word == "subst") k = Tok::KwSubst;
      else if (word == "rec") k = Tok::KwRec;
      else if (word == "succ") k = Tok::KwSucc;
      else if (word == "add") k = Tok::KwAdd;
      else if (word == "mul") k = Tok::KwMul;
      else if (word == "S") k = Tok::KwS;
      out.push_back({k, word, start, 0, false});
      continue;
    }
    if (c >= '0' && c <= '9') {
      unsigned long n = 0;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        n = n * 10 + (s[i] - '0');
        ++i;
      }
      out.push_back({Tok::Number, s.substr(start, i - start), start, n, false});
      continue;
    }
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", start, 0, false}); ++i; break;
      case ')': out.push_back({Tok::RParen, ")", start, 0, false}); ++i; break;
      case '[': out.push_back({Tok::LBracket, "[", start, 0, false}); ++i; break;
      case ']': out.push_back({Tok::RBracket, "]", start, 0, false}); ++i; break;
      case ',': out.push_back({Tok::Comma, ",", start, 0, false}); ++i; break;
      case '.': out.push_back({Tok::Dot, ".", start, 0, false}); ++i; break;
      case '\\': out.push_back({Tok::Backslash, "\\", start, 0, false}); ++i; break;
      case '+': out.push_back({Tok::Plus, "+", start, 0, false}); ++i; break;
      case '*': out.push_back({Tok::Star, "*", start, 0, false}); ++i; break;
      case '&': out.push_back({Tok::Amp, "&", start, 0, false}); ++i; break;
      case '|': out.push_back({Tok::Pipe, "|", start, 0, false}); ++i; break;
      case '~': out.push_back({Tok::Tilde, "~", start, 0, false}); ++i; break;
      case '!': out.push_back({Tok::Bang, "!", start, 0, false}); ++i; break;
      case '?': out.push_back({Tok::Question, "?", start, 0, false}); ++i; break;
      case '=':
        out.push_back({Tok::Eq, "=", start, 0, false});
        ++i;
        if (i < s.size() && s[i] == '(') {
          out.push_back({Tok::LParen, "(", i, 0, true});
          ++i;
        }
        break;
      case ':':
        ++i;
        if (i < s.size() && s[i] == '=') {
          out.push_back({Tok::Assign, ":=", start, 0, false});
          ++i;
        } else {
          out.push_back({Tok::Colon, ":", start, 0, false});
        }
        break;
      case '-':
        ++i;
        if (i < s.size() && s[i] == '>') {
          out.push_back({Tok::Arrow, "->", start, 0, false});
          ++i;
        } else {
          fail("expected '->'", start);
        }
        break;
      default:
        fail(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::End, "", s.size(), 0, false});
  return out;
}

class Parser {
public:
  Parser(const SourceText& src, std::vector<std::pair<std::string, Type>> decls)
      : src_(src), tokens_(lex(src)), decls_(std::move(decls)) {}

  Type parse_type_all() {
    Type t = parse_type();
    expect(Tok::End, "end of input");
    return t;
  }

  Term parse_term_all() {
    Term t = parse_term();
    expect(Tok::End, "end of input");
    return t;
  }

  Formula parse_formula_all() {
    Formula f = parse_formula();
    expect(Tok::End, "end of input");
    return f;
  }

  // preamble of declarations, then named stanzas
  void parse_decls() {
    while (peek().kind == Tok::KwVar) {
      advance();
      Token name = expect(Tok::Ident, "variable name");
      expect(Tok::Colon, "':'");
      Type t = parse_type();
      expect(Tok::Dot, "'.'");
      for (const auto& [n, ty] : decls_)
        if (n == name.text) fail("duplicate declaration of '" + name.text + "'", name);
      decls_.emplace_back(name.text, t);
    }
  }

  struct Item {
    enum class Kind { Formula, Term } kind;
    std::string name;
    std::optional<Formula> formula;
    std::optional<Term> term;
  };

  std::vector<Item> parse_items() {
    std::vector<Item> items;
    while (peek().kind != Tok::End) {
      Token head = advance();
      if (head.kind != Tok::KwFormula && head.kind != Tok::KwTerm)
        fail("expected 'formula' or 'term' stanza", head);
      Token name = expect(Tok::Ident, "item name");
      for (const auto& it : items)
        if (it.name == name.text) fail("duplicate item name '" + name.text + "'", name);
      expect(Tok::Assign, "':='");
      Item item;
      item.name = name.text;
      if (head.kind == Tok::KwFormula) {
        item.kind = Item::Kind::Formula;
        item.formula = parse_formula();
      } else {
        item.kind = Item::Kind::Term;
        item.term = parse_term();
      }
      expect(Tok::Dot, "'.' at end of stanza");
      items.push_back(std::move(item));
    }
    return items;
  }

  const std::vector<std::pair<std::string, Type>>& decls() const { return decls_; }

private:
  const SourceText& src_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::string, Type>> decls_;
  std::vector<std::pair<std::string, Type>> scope_;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  Token advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw Error(ErrorKind::Syntax, src_.origin + ": " + msg,
                src_.locate(at.offset));
  }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind)
      fail("expected " + what + ", found '" +
               (peek().kind == Tok::End ? std::string("end of input") : peek().text) + "'",
           peek());
    return advance();
  }

  const Type* lookup(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == name) return &it->second;
    for (auto it = decls_.rbegin(); it != decls_.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

  // type := tatom ['->' type]; accepts the unparenthesized arrow form that
  // appears inside '=(' ... ')'.
  Type parse_type() {
    Type left = parse_type_atom();
    if (peek().kind == Tok::Arrow) {
      advance();
      return Type::arrow(left, parse_type());
    }
    return left;
  }

  Type parse_type_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      if (t.number == 0) {
        advance();
        return Type::nat();
      }
      if (t.number == 1) {
        advance();
        return Type::one();
      }
      fail("types are built from 0 and 1", t);
    }
    if (t.kind == Tok::LParen) {
      advance();
      Type inner = parse_type();
      expect(Tok::RParen, "')'");
      return inner;
    }
    fail("expected a type", t);
  }

  // --- terms ---

  Term parse_term() {
    if (peek().kind == Tok::Backslash) return parse_lambda();
    return parse_add();
  }

  Term parse_lambda() {
    expect(Tok::Backslash, "'\\'");
    Token name = expect(Tok::Ident, "binder name");
    expect(Tok::Colon, "':'");
    Type t = parse_type();
    expect(Tok::Dot, "'.'");
    scope_.emplace_back(name.text, t);
    Term body = parse_term();
    scope_.pop_back();
    return Term::lam(name.text, t, body);
  }

  Term parse_add() {
    Term left = parse_mul();
    while (peek().kind == Tok::Plus) {
      Token op = advance();
      Term right = parse_mul();
      require_nat(left, op);
      require_nat(right, op);
      left = Term::add(left, right);
    }
    return left;
  }

  Term parse_mul() {
    Term left = parse_unary();
    while (peek().kind == Tok::Star) {
      Token op = advance();
      Term right = parse_unary();
      require_nat(left, op);
      require_nat(right, op);
      left = Term::mul(left, right);
    }
    return left;
  }

  Term parse_unary() {
    if (peek().kind == Tok::KwS) {
      Token op = advance();
      Term arg = parse_unary();
      require_nat(arg, op);
      return Term::succ(arg);
    }
    return parse_app();
  }

  bool starts_atom(Tok k) const {
    switch (k) {
      case Tok::Ident:
      case Tok::Number:
      case Tok::KwProj:
      case Tok::KwSubst:
      case Tok::KwRec:
      case Tok::KwSucc:
      case Tok::KwAdd:
      case Tok::KwMul:
      case Tok::LParen:
      case Tok::Backslash:
        return true;
      default:
        return false;
    }
  }

  Term parse_app() {
    Token head_tok = peek();
    Term head = parse_atom();
    while (starts_atom(peek().kind) && !(peek().kind == Tok::LParen && peek().glued)) {
      Token arg_tok = peek();
      Term arg = parse_atom();
      Type ft = elaborated_type(head, head_tok);
      if (!ft.is_arrow())
        fail("cannot apply a term of type " + to_string(ft), arg_tok);
      Type at = elaborated_type(arg, arg_tok);
      if (ft.domain() != at)
        fail_type("expected argument of type " + to_string(ft.domain()) + ", got " +
                      to_string(at),
                  arg_tok);
      head = Term::app(head, arg);
    }
    return head;
  }

  Term parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        advance();
        const Type* ty = lookup(t.text);
        if (!ty)
          throw Error(ErrorKind::UnboundVariable,
                      src_.origin + ": variable '" + t.text +
                          "' is not bound and not declared in the preamble",
                      src_.locate(t.offset));
        return Term::var(t.text, *ty);
      }
      case Tok::Number:
        advance();
        return Term::numeral(t.number);
      case Tok::KwProj: {
        advance();
        expect(Tok::LBracket, "'['");
        Type a = parse_type();
        expect(Tok::Comma, "','");
        Type b = parse_type();
        expect(Tok::RBracket, "']'");
        return Term::proj(a, b);
      }
      case Tok::KwSubst: {
        advance();
        expect(Tok::LBracket, "'['");
        Type a = parse_type();
        expect(Tok::Comma, "','");
        Type b = parse_type();
        expect(Tok::Comma, "','");
        Type c = parse_type();
        expect(Tok::RBracket, "']'");
        return Term::subst(a, b, c);
      }
      case Tok::KwRec: {
        advance();
        expect(Tok::LBracket, "'['");
        Type a = parse_type();
        expect(Tok::RBracket, "']'");
        return Term::rec(a);
      }
      case Tok::KwSucc:
        advance();
        return Term::succ_fn();
      case Tok::KwAdd:
        advance();
        return Term::add_fn();
      case Tok::KwMul:
        advance();
        return Term::mul_fn();
      case Tok::LParen: {
        advance();
        Term inner = parse_term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Backslash:
        return parse_lambda();
      default:
        fail("expected a term", t);
    }
  }

  void require_nat(const Term& t, const Token& at) {
    Type ty = elaborated_type(t, at);
    if (!ty.is_nat())
      fail_type("expected type 0, got " + to_string(ty), at);
  }

  Type elaborated_type(const Term& t, const Token& at) {
    try {
      return type_of(t);
    } catch (const Error& e) {
      throw Error(e.kind(), src_.origin + ": " + e.what(), src_.locate(at.offset));
    }
  }

  [[noreturn]] void fail_type(const std::string& msg, const Token& at) const {
    throw Error(ErrorKind::TypeMismatch, src_.origin + ": " + msg,
                src_.locate(at.offset));
  }

  // --- formulas ---

  Formula parse_formula() { return parse_imp(); }

  Formula parse_imp() {
    Formula left = parse_or();
    if (peek().kind == Tok::Arrow) {
      advance();
      return Formula::imp(left, parse_imp());
    }
    return left;
  }

  Formula parse_or() {
    Formula left = parse_and();
    while (peek().kind == Tok::Pipe) {
      advance();
      left = Formula::disj(left, parse_and());
    }
    return left;
  }

  Formula parse_and() {
    Formula left = parse_unary_formula();
    while (peek().kind == Tok::Amp) {
      advance();
      left = Formula::conj(left, parse_unary_formula());
    }
    return left;
  }

  Formula parse_unary_formula() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde:
        advance();
        return Formula::neg(parse_unary_formula());
      case Tok::Bang:
      case Tok::Question: {
        advance();
        Token name = expect(Tok::Ident, "binder name");
        expect(Tok::Colon, "':'");
        Type ty = parse_type();
        expect(Tok::Dot, "'.'");
        scope_.emplace_back(name.text, ty);
        Formula body = parse_formula();  // scope extends maximally right
        scope_.pop_back();
        return t.kind == Tok::Bang ? Formula::forall(name.text, ty, body)
                                   : Formula::exists(name.text, ty, body);
      }
      default:
        return parse_formula_primary();
    }
  }

  Formula parse_formula_primary() {
    const Token& t = peek();
    if (t.kind == Tok::KwBot) {
      advance();
      return Formula::bot();
    }
    if (t.kind == Tok::LParen && !t.glued) {
      // could be a parenthesized formula or a parenthesized term on the left
      // of an equation; try the formula reading first
      std::size_t saved = pos_;
      std::size_t scope_depth = scope_.size();
      try {
        advance();
        Formula inner = parse_formula();
        expect(Tok::RParen, "')'");
        return inner;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Syntax) throw;  // keep real elaboration errors
        pos_ = saved;
        scope_.resize(scope_depth);
      }
    }
    return parse_equation();
  }

  Formula parse_equation() {
    Token lhs_tok = peek();
    Term lhs = parse_term();
    Token eq = expect(Tok::Eq, "'='");
    std::optional<Type> declared;
    if (peek().kind == Tok::LParen && peek().glued) {
      std::size_t saved = pos_;
      try {
        advance();
        Type ty = parse_type();
        expect(Tok::RParen, "')'");
        declared = ty;
      } catch (const Error&) {
        pos_ = saved;  // reinterpret as a parenthesized term
      }
    }
    Token rhs_tok = peek();
    Term rhs = parse_term();
    Type lt = elaborated_type(lhs, lhs_tok);
    Type rt = elaborated_type(rhs, rhs_tok);
    if (declared) {
      if (lt != *declared)
        fail_type("left side has type " + to_string(lt) + ", equation is at " +
                      to_string(*declared),
                  lhs_tok);
      if (rt != *declared)
        fail_type("right side has type " + to_string(rt) + ", equation is at " +
                      to_string(*declared),
                  rhs_tok);
    } else if (lt != rt) {
      fail_type("cannot equate " + to_string(lt) + " with " + to_string(rt), eq);
    }
    if (lt.is_nat()) return Formula::eq0(lhs, rhs);
    return expand_higher_eq(lhs, rhs);
  }
};

}  // namespace detail

using VarDecls = std::vector<std::pair<std::string, Type>>;

inline Type parse_type(const SourceText& src) {
  return detail::Parser(src, {}).parse_type_all();
}

inline Term parse_term(const SourceText& src, VarDecls decls = {}) {
  return detail::Parser(src, std::move(decls)).parse_term_all();
}

inline Formula parse_formula(const SourceText& src, VarDecls decls = {}) {
  return detail::Parser(src, std::move(decls)).parse_formula_all();
}

struct FileItem {
  enum class Kind { Formula, Term } kind;
  std::string name;
  std::optional<Formula> formula;
  std::optional<Term> term;
};

struct ParsedFile {
  VarDecls decls;
  std::vector<FileItem> items;
};

inline ParsedFile parse_file(const SourceText& src) {
  detail::Parser p(src, {});
  p.parse_decls();
  auto raw = p.parse_items();
  ParsedFile out;
  out.decls = p.decls();
  for (auto& item : raw) {
    FileItem fi;
    fi.kind = item.kind == detail::Parser::Item::Kind::Formula ? FileItem::Kind::Formula
                                                               : FileItem::Kind::Term;
    fi.name = std::move(item.name);
    fi.formula = std::move(item.formula);
    fi.term = std::move(item.term);
    out.items.push_back(std::move(fi));
  }
  return out;
}

}  // namespace finterp
