#pragma once

#include "finterp/subst.hpp"
#include "finterp/syntax.hpp"
#include "finterp/typing.hpp"

namespace finterp {

namespace detail {

// Typed identity in combinator form: subst[d,(d->d),d] proj[d,(d->d)] proj[d,d].
inline Term identity_combinator(const Type& d) {
  Type dd = Type::arrow(d, d);
  return Term::app(Term::app(Term::subst(d, dd, d), Term::proj(d, dd)),
                   Term::proj(d, d));
}

// Bracket abstraction [x:delta] t over a lambda-free body. Arithmetic nodes
// containing x are first lifted to their curried constant forms so the
// standard rules apply.
inline Term abstract_var(const std::string& x, const Type& delta, const Term& t) {
  if (t.kind() == TermKind::Var && t.name() == x) return identity_combinator(delta);
  if (!free_vars(t).count(x)) return Term::app(Term::proj(type_of(t), delta), t);
  switch (t.kind()) {
    case TermKind::Succ:
      return abstract_var(x, delta, Term::app(Term::succ_fn(), t.arg()));
    case TermKind::Add:
      return abstract_var(
          x, delta, Term::app(Term::app(Term::add_fn(), t.lhs()), t.rhs()));
    case TermKind::Mul:
      return abstract_var(
          x, delta, Term::app(Term::app(Term::mul_fn(), t.lhs()), t.rhs()));
    case TermKind::App: {
      const Term& f = t.fun();
      const Term& a = t.app_arg();
      if (a.kind() == TermKind::Var && a.name() == x && !free_vars(f).count(x))
        return f;  // eta
      Type sigma = type_of(a);
      Type tau = type_of(t);
      return Term::app(Term::app(Term::subst(delta, sigma, tau),
                                 abstract_var(x, delta, f)),
                       abstract_var(x, delta, a));
    }
    default:
      // Var handled above; Lam cannot appear in a lambda-free body.
      throw Error(ErrorKind::TypeMismatch,
                  "cannot abstract over " + to_string(t));
  }
}

}  // namespace detail

// Translates away every lambda via bracket abstraction. Lambda-free input
// comes back unchanged; the result has the same type and the same value on
// closed type-0 terms.
inline Term to_combinators(const Term& t) {
  switch (t.kind()) {
    case TermKind::Lam:
      return detail::abstract_var(t.name(), t.var_type(), to_combinators(t.body()));
    case TermKind::Succ:
      return Term::succ(to_combinators(t.arg()));
    case TermKind::Add:
      return Term::add(to_combinators(t.lhs()), to_combinators(t.rhs()));
    case TermKind::Mul:
      return Term::mul(to_combinators(t.lhs()), to_combinators(t.rhs()));
    case TermKind::App:
      return Term::app(to_combinators(t.fun()), to_combinators(t.app_arg()));
    default:
      return t;
  }
}

}  // namespace finterp
