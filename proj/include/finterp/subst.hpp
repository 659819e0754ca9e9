#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "finterp/error.hpp"
#include "finterp/syntax.hpp"
#include "finterp/typing.hpp"

namespace finterp {

namespace detail {

struct SubstMap {
  std::map<std::string, Term> map;
  // union of free variables of the replacement terms
  std::set<std::string> replacement_frees;

  static SubstMap make(std::map<std::string, Term> m) {
    SubstMap s;
    s.map = std::move(m);
    s.refresh();
    return s;
  }

  void refresh() {
    replacement_frees.clear();
    for (const auto& [k, t] : map)
      for (const auto& [n, ty] : free_vars(t)) replacement_frees.insert(n);
  }
};

inline Term subst_term(const Term& t, const SubstMap& sub);
inline Formula subst_formula(const Formula& f, const SubstMap& sub);

// Shared binder logic: drops the bound name from the active substitution and
// renames the binder when it would capture a replacement's free variable.
// Returns the (possibly renamed) bound name; `body` and `inner` are updated.
template <typename Body>
std::string enter_binder(const std::string& bound, const Type& bound_type, Body& body,
                         SubstMap& inner) {
  inner.map.erase(bound);
  inner.refresh();
  if (inner.map.empty() || !inner.replacement_frees.count(bound)) return bound;

  std::set<std::string> used = inner.replacement_frees;
  for (const auto& [n, ty] : free_vars(body)) used.insert(n);
  for (const auto& [k, r] : inner.map) used.insert(k);
  used.insert(bound);
  std::string renamed = fresh_name(bound, used);

  SubstMap rename;
  rename.map.emplace(bound, Term::var(renamed, bound_type));
  rename.replacement_frees.insert(renamed);
  if constexpr (std::is_same_v<Body, Term>)
    body = subst_term(body, rename);
  else
    body = subst_formula(body, rename);
  return renamed;
}

inline Term subst_term(const Term& t, const SubstMap& sub) {
  if (sub.map.empty()) return t;
  switch (t.kind()) {
    case TermKind::Var: {
      auto it = sub.map.find(t.name());
      return it == sub.map.end() ? t : it->second;
    }
    case TermKind::Zero:
    case TermKind::Proj:
    case TermKind::Subst:
    case TermKind::Rec:
    case TermKind::SuccFn:
    case TermKind::AddFn:
    case TermKind::MulFn:
      return t;
    case TermKind::Succ:
      return Term::succ(subst_term(t.arg(), sub));
    case TermKind::Add:
      return Term::add(subst_term(t.lhs(), sub), subst_term(t.rhs(), sub));
    case TermKind::Mul:
      return Term::mul(subst_term(t.lhs(), sub), subst_term(t.rhs(), sub));
    case TermKind::App:
      return Term::app(subst_term(t.fun(), sub), subst_term(t.app_arg(), sub));
    case TermKind::Lam: {
      SubstMap inner = sub;
      Term body = t.body();
      std::string bound = enter_binder(t.name(), t.var_type(), body, inner);
      if (inner.map.empty() && bound == t.name()) return t;
      return Term::lam(bound, t.var_type(), subst_term(body, inner));
    }
  }
  return t;
}

inline Formula subst_formula(const Formula& f, const SubstMap& sub) {
  if (sub.map.empty()) return f;
  switch (f.kind()) {
    case FormulaKind::Bot:
      return f;
    case FormulaKind::Eq0:
      return Formula::eq0(subst_term(f.lhs_term(), sub), subst_term(f.rhs_term(), sub));
    case FormulaKind::And:
      return Formula::conj(subst_formula(f.lhs(), sub), subst_formula(f.rhs(), sub));
    case FormulaKind::Or:
      return Formula::disj(subst_formula(f.lhs(), sub), subst_formula(f.rhs(), sub));
    case FormulaKind::Imp:
      return Formula::imp(subst_formula(f.lhs(), sub), subst_formula(f.rhs(), sub));
    case FormulaKind::ForAll:
    case FormulaKind::Exists: {
      SubstMap inner = sub;
      Formula body = f.body();
      std::string bound = enter_binder(f.bound_name(), f.bound_type(), body, inner);
      body = subst_formula(body, inner);
      return f.kind() == FormulaKind::ForAll
                 ? Formula::forall(bound, f.bound_type(), body)
                 : Formula::exists(bound, f.bound_type(), body);
    }
  }
  return f;
}

inline std::optional<Type> free_occurrence_type(const Term& t, const std::string& var) {
  auto fv = free_vars(t);
  auto it = fv.find(var);
  if (it == fv.end()) return std::nullopt;
  return it->second;
}

inline std::optional<Type> free_occurrence_type(const Formula& f, const std::string& var) {
  auto fv = free_vars(f);
  auto it = fv.find(var);
  if (it == fv.end()) return std::nullopt;
  return it->second;
}

template <typename Host>
void check_replacement_type(const Host& host, const std::string& var,
                            const Term& replacement) {
  if (auto occ = free_occurrence_type(host, var)) {
    Type rt = type_of(replacement);
    if (rt != *occ)
      throw Error(ErrorKind::TypeMismatch,
                  "substituting " + to_string(replacement) + " : " + to_string(rt) +
                      " for '" + var + "' : " + to_string(*occ));
  }
}

}  // namespace detail

// Simultaneous capture-avoiding substitution.
inline Term substitute_many(const Term& host, std::map<std::string, Term> m) {
  for (const auto& [var, r] : m) detail::check_replacement_type(host, var, r);
  return detail::subst_term(host, detail::SubstMap::make(std::move(m)));
}

inline Formula substitute_many(const Formula& host, std::map<std::string, Term> m) {
  for (const auto& [var, r] : m) detail::check_replacement_type(host, var, r);
  return detail::subst_formula(host, detail::SubstMap::make(std::move(m)));
}

inline Term substitute(const Term& host, const std::string& var, const Term& replacement) {
  return substitute_many(host, {{var, replacement}});
}

inline Formula substitute(const Formula& host, const std::string& var,
                          const Term& replacement) {
  return substitute_many(host, {{var, replacement}});
}

}  // namespace finterp
