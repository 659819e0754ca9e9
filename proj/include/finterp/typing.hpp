#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finterp/error.hpp"
#include "finterp/print.hpp"
#include "finterp/syntax.hpp"
#include "finterp/term.hpp"

namespace finterp {

using TypingContext = std::vector<std::pair<std::string, Type>>;

namespace detail {

inline const Type* ctx_lookup(const TypingContext& ctx, const std::string& name) {
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
    if (it->first == name) return &it->second;
  return nullptr;
}

inline Type infer_type_impl(const Term& t, TypingContext& ctx, bool trust_vars) {
  switch (t.kind()) {
    case TermKind::Var: {
      const Type* found = ctx_lookup(ctx, t.name());
      if (!found) {
        if (trust_vars) return t.var_type();
        throw Error(ErrorKind::UnboundVariable, "variable '" + t.name() + "' is not in scope");
      }
      if (*found != t.var_type())
        throw Error(ErrorKind::TypeMismatch,
                    "variable '" + t.name() + "' annotated " + to_string(t.var_type()) +
                        " but bound at " + to_string(*found));
      return *found;
    }
    case TermKind::Zero:
      return Type::nat();
    case TermKind::Succ: {
      Type a = infer_type_impl(t.arg(), ctx, trust_vars);
      if (!a.is_nat())
        throw Error(ErrorKind::TypeMismatch,
                    "S expects type 0, got " + to_string(a) + " in " + to_string(t));
      return Type::nat();
    }
    case TermKind::Add:
    case TermKind::Mul: {
      Type l = infer_type_impl(t.lhs(), ctx, trust_vars);
      Type r = infer_type_impl(t.rhs(), ctx, trust_vars);
      if (!l.is_nat() || !r.is_nat())
        throw Error(ErrorKind::TypeMismatch,
                    "arithmetic expects type 0 arguments in " + to_string(t));
      return Type::nat();
    }
    case TermKind::Proj: {
      const auto& p = t.type_params();
      return Type::arrow(p[0], Type::arrow(p[1], p[0]));
    }
    case TermKind::Subst: {
      const auto& p = t.type_params();
      const Type& d = p[0];
      const Type& r = p[1];
      const Type& u = p[2];
      return Type::arrow(Type::arrow(d, Type::arrow(r, u)),
                         Type::arrow(Type::arrow(d, r), Type::arrow(d, u)));
    }
    case TermKind::Rec: {
      const Type& s = t.type_params()[0];
      Type step = Type::arrow(Type::nat(), Type::arrow(s, s));
      return Type::arrow(Type::nat(), Type::arrow(s, Type::arrow(step, s)));
    }
    case TermKind::App: {
      Type f = infer_type_impl(t.fun(), ctx, trust_vars);
      Type a = infer_type_impl(t.app_arg(), ctx, trust_vars);
      if (!f.is_arrow())
        throw Error(ErrorKind::TypeMismatch,
                    "cannot apply non-function " + to_string(t.fun()) + " of type " +
                        to_string(f));
      if (f.domain() != a)
        throw Error(ErrorKind::TypeMismatch,
                    "in " + to_string(t) + ": expected argument of type " +
                        to_string(f.domain()) + ", got " + to_string(a));
      return f.codomain();
    }
    case TermKind::Lam: {
      ctx.emplace_back(t.name(), t.var_type());
      Type b = infer_type_impl(t.body(), ctx, trust_vars);
      ctx.pop_back();
      return Type::arrow(t.var_type(), b);
    }
    case TermKind::SuccFn:
      return Type::one();
    case TermKind::AddFn:
    case TermKind::MulFn:
      return Type::arrow(Type::nat(), Type::one());
  }
  throw Error(ErrorKind::TypeMismatch, "malformed term");
}

}  // namespace detail

// Full checker: free variables must be covered by ctx.
inline Type infer_type(const Term& t, const TypingContext& ctx) {
  TypingContext scratch = ctx;
  return detail::infer_type_impl(t, scratch, false);
}

// Trusting variant: free variables type as annotated.
inline Type type_of(const Term& t) {
  TypingContext scratch;
  return detail::infer_type_impl(t, scratch, true);
}

// Checks all terms of a formula under ctx; equations must be at type 0.
inline void typecheck_formula(const Formula& f, const TypingContext& ctx) {
  switch (f.kind()) {
    case FormulaKind::Bot:
      return;
    case FormulaKind::Eq0: {
      Type l = infer_type(f.lhs_term(), ctx);
      Type r = infer_type(f.rhs_term(), ctx);
      if (!l.is_nat() || !r.is_nat())
        throw Error(ErrorKind::TypeMismatch,
                    "equation arguments must have type 0 in " + to_string(f));
      return;
    }
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      typecheck_formula(f.lhs(), ctx);
      typecheck_formula(f.rhs(), ctx);
      return;
    case FormulaKind::ForAll:
    case FormulaKind::Exists: {
      TypingContext inner = ctx;
      inner.emplace_back(f.bound_name(), f.bound_type());
      typecheck_formula(f.body(), inner);
      return;
    }
  }
}

// Pointwise expansion of a higher-type surface equation:
// for lhs, rhs of type rho1 -> ... -> rhok -> 0 produces
// !v1:rho1. ... !vk:rhok. lhs v1 ... vk = rhs v1 ... vk.
inline Formula expand_higher_eq(const Term& lhs, const Term& rhs) {
  Type lt = type_of(lhs);
  Type rt = type_of(rhs);
  if (lt != rt)
    throw Error(ErrorKind::TypeMismatch, "cannot equate " + to_string(lhs) + " : " +
                                             to_string(lt) + " with " + to_string(rhs) +
                                             " : " + to_string(rt));
  std::vector<Type> args = argument_chain(lt);
  if (args.empty()) return Formula::eq0(lhs, rhs);

  std::set<std::string> avoid;
  for (const auto& [n, t] : free_vars(lhs)) avoid.insert(n);
  for (const auto& [n, t] : free_vars(rhs)) avoid.insert(n);
  NameSupply supply(avoid);

  std::vector<std::pair<std::string, Type>> binders;
  Term l = lhs;
  Term r = rhs;
  for (const Type& a : args) {
    std::string v = supply.fresh("v");
    binders.emplace_back(v, a);
    l = Term::app(l, Term::var(v, a));
    r = Term::app(r, Term::var(v, a));
  }
  Formula out = Formula::eq0(l, r);
  for (auto it = binders.rbegin(); it != binders.rend(); ++it)
    out = Formula::forall(it->first, it->second, out);
  return out;
}

}  // namespace finterp
