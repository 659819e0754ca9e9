#pragma once

#include <cassert>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "finterp/term.hpp"

namespace finterp {

// Formulas over type-0 equations and bottom. Negation is not a node: ~A is
// stored as Imp(A, Bot). Higher-type surface equations are expanded before
// they reach this representation.
enum class FormulaKind { Bot, Eq0, And, Or, Imp, ForAll, Exists };

class Formula {
public:
  Formula() = default;  // Bot

  FormulaKind kind() const;

  static Formula bot() { return Formula(); }
  static Formula eq0(Term l, Term r);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula neg(Formula a) { return imp(std::move(a), bot()); }
  static Formula forall(std::string name, Type type, Formula body);
  static Formula exists(std::string name, Type type, Formula body);

  bool is_prime() const {
    return kind() == FormulaKind::Bot || kind() == FormulaKind::Eq0;
  }
  bool is_quantifier() const {
    return kind() == FormulaKind::ForAll || kind() == FormulaKind::Exists;
  }

  const Term& lhs_term() const;  // Eq0
  const Term& rhs_term() const;  // Eq0

  const Formula& lhs() const;    // And/Or/Imp
  const Formula& rhs() const;    // And/Or/Imp

  const std::string& bound_name() const;  // ForAll/Exists
  const Type& bound_type() const;         // ForAll/Exists
  const Formula& body() const;            // ForAll/Exists

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  FormulaKind kind;
  std::string name;
  std::vector<Type> types;
  std::vector<Term> terms;
  std::vector<Formula> kids;
};

inline FormulaKind Formula::kind() const { return node_ ? node_->kind : FormulaKind::Bot; }

inline Formula Formula::eq0(Term l, Term r) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Eq0, {}, {}, {std::move(l), std::move(r)}, {}}));
}

inline Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::And, {}, {}, {}, {std::move(a), std::move(b)}}));
}

inline Formula Formula::disj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Or, {}, {}, {}, {std::move(a), std::move(b)}}));
}

inline Formula Formula::imp(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Imp, {}, {}, {}, {std::move(a), std::move(b)}}));
}

inline Formula Formula::forall(std::string name, Type type, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::ForAll, std::move(name), {std::move(type)}, {}, {std::move(body)}}));
}

inline Formula Formula::exists(std::string name, Type type, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Exists, std::move(name), {std::move(type)}, {}, {std::move(body)}}));
}

inline const Term& Formula::lhs_term() const {
  assert(kind() == FormulaKind::Eq0);
  return node_->terms[0];
}

inline const Term& Formula::rhs_term() const {
  assert(kind() == FormulaKind::Eq0);
  return node_->terms[1];
}

inline const Formula& Formula::lhs() const {
  assert(node_ && node_->kids.size() == 2);
  return node_->kids[0];
}

inline const Formula& Formula::rhs() const {
  assert(node_ && node_->kids.size() == 2);
  return node_->kids[1];
}

inline const std::string& Formula::bound_name() const {
  assert(is_quantifier());
  return node_->name;
}

inline const Type& Formula::bound_type() const {
  assert(is_quantifier());
  return node_->types[0];
}

inline const Formula& Formula::body() const {
  assert(is_quantifier());
  return node_->kids[0];
}

}  // namespace finterp
