#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "finterp/formula.hpp"
#include "finterp/term.hpp"

namespace finterp {

// Ordered tuple of distinct typed variables. Used both for realizer tuples
// and for the Dialectica exists/forall tuples.
struct VarTuple {
  std::vector<std::pair<std::string, Type>> vars;

  std::size_t size() const { return vars.size(); }
  bool empty() const { return vars.empty(); }

  std::vector<Type> types() const {
    std::vector<Type> ts;
    ts.reserve(vars.size());
    for (const auto& [n, t] : vars) ts.push_back(t);
    return ts;
  }

  std::vector<Term> as_terms() const {
    std::vector<Term> vs;
    vs.reserve(vars.size());
    for (const auto& [n, t] : vars) vs.push_back(Term::var(n, t));
    return vs;
  }

  bool distinct() const {
    std::set<std::string> seen;
    for (const auto& [n, t] : vars)
      if (!seen.insert(n).second) return false;
    return true;
  }

  bool fresh_for(const std::set<std::string>& avoid) const {
    for (const auto& [n, t] : vars)
      if (avoid.count(n)) return false;
    return true;
  }
};

// --- free variables ---------------------------------------------------------

namespace detail {

inline void free_vars_into(const Term& t, std::set<std::string>& bound,
                           std::map<std::string, Type>& out) {
  switch (t.kind()) {
    case TermKind::Var:
      if (!bound.count(t.name())) out.emplace(t.name(), t.var_type());
      break;
    case TermKind::Lam: {
      bool inserted = bound.insert(t.name()).second;
      free_vars_into(t.body(), bound, out);
      if (inserted) bound.erase(t.name());
      break;
    }
    default:
      for (std::size_t i = 0; i < t.child_count(); ++i)
        free_vars_into(t.child(i), bound, out);
  }
}

inline void free_vars_into(const Formula& f, std::set<std::string>& bound,
                           std::map<std::string, Type>& out) {
  switch (f.kind()) {
    case FormulaKind::Bot:
      break;
    case FormulaKind::Eq0:
      free_vars_into(f.lhs_term(), bound, out);
      free_vars_into(f.rhs_term(), bound, out);
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      free_vars_into(f.lhs(), bound, out);
      free_vars_into(f.rhs(), bound, out);
      break;
    case FormulaKind::ForAll:
    case FormulaKind::Exists: {
      bool inserted = bound.insert(f.bound_name()).second;
      free_vars_into(f.body(), bound, out);
      if (inserted) bound.erase(f.bound_name());
      break;
    }
  }
}

inline void all_names_into(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Var:
      out.insert(t.name());
      break;
    case TermKind::Lam:
      out.insert(t.name());
      all_names_into(t.body(), out);
      break;
    default:
      for (std::size_t i = 0; i < t.child_count(); ++i) all_names_into(t.child(i), out);
  }
}

inline void all_names_into(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Bot:
      break;
    case FormulaKind::Eq0:
      all_names_into(f.lhs_term(), out);
      all_names_into(f.rhs_term(), out);
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      all_names_into(f.lhs(), out);
      all_names_into(f.rhs(), out);
      break;
    case FormulaKind::ForAll:
    case FormulaKind::Exists:
      out.insert(f.bound_name());
      all_names_into(f.body(), out);
      break;
  }
}

}  // namespace detail

inline std::map<std::string, Type> free_vars(const Term& t) {
  std::map<std::string, Type> out;
  std::set<std::string> bound;
  detail::free_vars_into(t, bound, out);
  return out;
}

inline std::map<std::string, Type> free_vars(const Formula& f) {
  std::map<std::string, Type> out;
  std::set<std::string> bound;
  detail::free_vars_into(f, bound, out);
  return out;
}

// Every identifier occurring in the node, free or bound.
inline std::set<std::string> all_names(const Term& t) {
  std::set<std::string> out;
  detail::all_names_into(t, out);
  return out;
}

inline std::set<std::string> all_names(const Formula& f) {
  std::set<std::string> out;
  detail::all_names_into(f, out);
  return out;
}

// --- fresh names -------------------------------------------------------------

// Candidate chain for a hint: "y", then "y0", "y1", ... A hint that already
// ends in digits shares its stem's chain, so lifting "y0" yields "y1".
inline std::string fresh_name(const std::string& hint, const std::set<std::string>& used) {
  if (!used.count(hint)) return hint;
  std::string stem = hint;
  while (!stem.empty() && stem.back() >= '0' && stem.back() <= '9') stem.pop_back();
  if (stem.empty()) stem = hint;
  for (unsigned long k = 0;; ++k) {
    std::string candidate = stem + std::to_string(k);
    if (!used.count(candidate)) return candidate;
  }
}

// Deterministic name source threaded through the translations. All names it
// issues are distinct from each other and from the seed set.
class NameSupply {
public:
  NameSupply() = default;
  explicit NameSupply(std::set<std::string> used) : used_(std::move(used)) {}

  std::string fresh(const std::string& hint) {
    std::string n = fresh_name(hint.empty() ? "z" : hint, used_);
    used_.insert(n);
    return n;
  }

  void reserve(const std::string& name) { used_.insert(name); }

private:
  std::set<std::string> used_;
};

// The default tuple naming scheme: z0, z1, ... skipping the avoid set.
// Deterministic in (types, avoid).
inline VarTuple fresh_tuple(const std::vector<Type>& types,
                            const std::set<std::string>& avoid) {
  VarTuple tuple;
  unsigned long next = 0;
  for (const Type& t : types) {
    std::string name;
    do {
      name = "z" + std::to_string(next++);
    } while (avoid.count(name));
    tuple.vars.emplace_back(name, t);
  }
  return tuple;
}

// --- alpha equivalence -------------------------------------------------------

namespace detail {

using AlphaEnv = std::vector<std::pair<std::string, std::string>>;

inline const std::string* alpha_lookup(const AlphaEnv& env, const std::string& n,
                                       bool first) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    const std::string& key = first ? it->first : it->second;
    if (key == n) return first ? &it->second : &it->first;
  }
  return nullptr;
}

inline bool alpha_eq_term(const Term& a, const Term& b, AlphaEnv& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Var: {
      const std::string* mapped = alpha_lookup(env, a.name(), true);
      const std::string* back = alpha_lookup(env, b.name(), false);
      if (mapped || back) return mapped && back && *mapped == b.name() && *back == a.name();
      return a.name() == b.name() && a.var_type() == b.var_type();
    }
    case TermKind::Lam: {
      if (a.var_type() != b.var_type()) return false;
      env.emplace_back(a.name(), b.name());
      bool ok = alpha_eq_term(a.body(), b.body(), env);
      env.pop_back();
      return ok;
    }
    default: {
      if (a.type_params() != b.type_params()) return false;
      if (a.child_count() != b.child_count()) return false;
      for (std::size_t i = 0; i < a.child_count(); ++i)
        if (!alpha_eq_term(a.child(i), b.child(i), env)) return false;
      return true;
    }
  }
}

inline bool alpha_eq_formula(const Formula& a, const Formula& b, AlphaEnv& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::Bot:
      return true;
    case FormulaKind::Eq0:
      return alpha_eq_term(a.lhs_term(), b.lhs_term(), env) &&
             alpha_eq_term(a.rhs_term(), b.rhs_term(), env);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      return alpha_eq_formula(a.lhs(), b.lhs(), env) &&
             alpha_eq_formula(a.rhs(), b.rhs(), env);
    case FormulaKind::ForAll:
    case FormulaKind::Exists: {
      if (a.bound_type() != b.bound_type()) return false;
      env.emplace_back(a.bound_name(), b.bound_name());
      bool ok = alpha_eq_formula(a.body(), b.body(), env);
      env.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace detail

inline bool alpha_eq(const Term& a, const Term& b) {
  detail::AlphaEnv env;
  return detail::alpha_eq_term(a, b, env);
}

inline bool alpha_eq(const Formula& a, const Formula& b) {
  detail::AlphaEnv env;
  return detail::alpha_eq_formula(a, b, env);
}

// --- dummy universal quantifiers ----------------------------------------------

// Removes every ForAll whose bound variable does not occur free in its body.
// Bottom-up, so the result is a fixpoint.
inline Formula erase_dummy_foralls(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Bot:
    case FormulaKind::Eq0:
      return f;
    case FormulaKind::And:
      return Formula::conj(erase_dummy_foralls(f.lhs()), erase_dummy_foralls(f.rhs()));
    case FormulaKind::Or:
      return Formula::disj(erase_dummy_foralls(f.lhs()), erase_dummy_foralls(f.rhs()));
    case FormulaKind::Imp:
      return Formula::imp(erase_dummy_foralls(f.lhs()), erase_dummy_foralls(f.rhs()));
    case FormulaKind::Exists:
      return Formula::exists(f.bound_name(), f.bound_type(), erase_dummy_foralls(f.body()));
    case FormulaKind::ForAll: {
      Formula body = erase_dummy_foralls(f.body());
      if (!free_vars(body).count(f.bound_name())) return body;
      return Formula::forall(f.bound_name(), f.bound_type(), body);
    }
  }
  return f;
}

}  // namespace finterp
