#pragma once

#include <algorithm>
#include <cassert>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finterp/type.hpp"

namespace finterp {

// Applicative terms over 0, S, +, *, the projection/substitution combinators,
// recursors, and native lambda. SuccFn/AddFn/MulFn are the curried constant
// forms of S/+/* used by bracket abstraction; the structural nodes are what
// the parser produces for ordinary input.
enum class TermKind {
  Var,
  Zero,
  Succ,
  Add,
  Mul,
  Proj,
  Subst,
  Rec,
  App,
  Lam,
  SuccFn,
  AddFn,
  MulFn,
};

class Term {
public:
  Term() = default;  // Zero

  TermKind kind() const;

  static Term var(std::string name, Type type);
  static Term zero() { return Term(); }
  static Term succ(Term t);
  static Term add(Term a, Term b);
  static Term mul(Term a, Term b);
  static Term proj(Type rho, Type tau);
  static Term subst(Type delta, Type rho, Type tau);
  static Term rec(Type sigma);
  static Term app(Term f, Term a);
  static Term lam(std::string name, Type type, Term body);
  static Term succ_fn();
  static Term add_fn();
  static Term mul_fn();
  static Term numeral(unsigned long n);

  // Var and Lam
  const std::string& name() const;
  // Var annotation / Lam binder type
  const Type& var_type() const;

  // Proj/Subst/Rec type parameters, in declaration order
  const std::vector<Type>& type_params() const;

  const Term& child(std::size_t i) const;
  std::size_t child_count() const;

  const Term& arg() const { return child(0); }            // Succ
  const Term& lhs() const { return child(0); }            // Add/Mul
  const Term& rhs() const { return child(1); }            // Add/Mul
  const Term& fun() const { return child(0); }            // App
  const Term& app_arg() const { return child(1); }        // App
  const Term& body() const { return child(0); }           // Lam

  // Reads back a Zero/Succ chain; nullopt if any non-Succ node intervenes.
  std::optional<unsigned long> as_numeral() const;
  bool is_numeral() const { return as_numeral().has_value(); }

private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  TermKind kind;
  std::string name;
  std::vector<Type> types;
  std::vector<Term> kids;
};

inline TermKind Term::kind() const { return node_ ? node_->kind : TermKind::Zero; }

inline std::size_t Term::child_count() const { return node_ ? node_->kids.size() : 0; }

inline Term Term::var(std::string name, Type type) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::Var, std::move(name), {std::move(type)}, {}}));
}

inline Term Term::succ(Term t) {
  return Term(std::make_shared<const Node>(Node{TermKind::Succ, {}, {}, {std::move(t)}}));
}

inline Term Term::add(Term a, Term b) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::Add, {}, {}, {std::move(a), std::move(b)}}));
}

inline Term Term::mul(Term a, Term b) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::Mul, {}, {}, {std::move(a), std::move(b)}}));
}

inline Term Term::proj(Type rho, Type tau) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::Proj, {}, {std::move(rho), std::move(tau)}, {}}));
}

inline Term Term::subst(Type delta, Type rho, Type tau) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::Subst, {}, {std::move(delta), std::move(rho), std::move(tau)}, {}}));
}

inline Term Term::rec(Type sigma) {
  return Term(std::make_shared<const Node>(Node{TermKind::Rec, {}, {std::move(sigma)}, {}}));
}

inline Term Term::app(Term f, Term a) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::App, {}, {}, {std::move(f), std::move(a)}}));
}

inline Term Term::lam(std::string name, Type type, Term body) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::Lam, std::move(name), {std::move(type)}, {std::move(body)}}));
}

inline Term Term::succ_fn() {
  return Term(std::make_shared<const Node>(Node{TermKind::SuccFn, {}, {}, {}}));
}

inline Term Term::add_fn() {
  return Term(std::make_shared<const Node>(Node{TermKind::AddFn, {}, {}, {}}));
}

inline Term Term::mul_fn() {
  return Term(std::make_shared<const Node>(Node{TermKind::MulFn, {}, {}, {}}));
}

inline Term Term::numeral(unsigned long n) {
  Term t = zero();
  for (unsigned long i = 0; i < n; ++i) t = succ(t);
  return t;
}

inline const std::string& Term::name() const {
  assert(kind() == TermKind::Var || kind() == TermKind::Lam);
  return node_->name;
}

inline const Type& Term::var_type() const {
  assert(kind() == TermKind::Var || kind() == TermKind::Lam);
  return node_->types[0];
}

inline const std::vector<Type>& Term::type_params() const {
  static const std::vector<Type> empty;
  return node_ ? node_->types : empty;
}

inline const Term& Term::child(std::size_t i) const {
  assert(node_ && i < node_->kids.size());
  return node_->kids[i];
}

inline std::optional<unsigned long> Term::as_numeral() const {
  const Term* t = this;
  unsigned long n = 0;
  while (t->kind() == TermKind::Succ) {
    ++n;
    t = &t->arg();
  }
  if (t->kind() != TermKind::Zero) return std::nullopt;
  return n;
}

// Decomposes nested applications into head and argument list.
inline std::pair<Term, std::vector<Term>> app_spine(Term t) {
  std::vector<Term> args;
  while (t.kind() == TermKind::App) {
    args.push_back(t.app_arg());
    t = t.fun();
  }
  std::reverse(args.begin(), args.end());
  return {t, args};
}

inline Term apply_spine(Term head, const std::vector<Term>& args, std::size_t from = 0) {
  for (std::size_t i = from; i < args.size(); ++i) head = Term::app(head, args[i]);
  return head;
}

}  // namespace finterp
