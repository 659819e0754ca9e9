#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "finterp/subst.hpp"
#include "finterp/syntax.hpp"
#include "finterp/typing.hpp"

namespace finterp {

struct DTypes {
  std::vector<Type> exists_types;
  std::vector<Type> forall_types;
};

// Tuple types of the Dialectica form of a formula, A |-> ?x !y A_D:
//   prime        -> ([], [])
//   A & B        -> (x ++ u, y ++ v)
//   A | B        -> ([0] ++ x ++ u, y ++ v)
//   !z:rho. A    -> ([rho -> xi | xi in x], [rho] ++ y)
//   ?z:rho. A    -> ([rho] ++ x, y)
//   A -> B       -> ([x curried onto u_j] ++ [x,v curried onto y_i], x ++ v)
inline DTypes d_types(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Bot:
    case FormulaKind::Eq0:
      return {};
    case FormulaKind::And: {
      DTypes a = d_types(f.lhs());
      DTypes b = d_types(f.rhs());
      for (Type& t : b.exists_types) a.exists_types.push_back(std::move(t));
      for (Type& t : b.forall_types) a.forall_types.push_back(std::move(t));
      return a;
    }
    case FormulaKind::Or: {
      DTypes a = d_types(f.lhs());
      DTypes b = d_types(f.rhs());
      DTypes out;
      out.exists_types.push_back(Type::nat());
      for (Type& t : a.exists_types) out.exists_types.push_back(std::move(t));
      for (Type& t : b.exists_types) out.exists_types.push_back(std::move(t));
      out.forall_types = std::move(a.forall_types);
      for (Type& t : b.forall_types) out.forall_types.push_back(std::move(t));
      return out;
    }
    case FormulaKind::ForAll: {
      DTypes a = d_types(f.body());
      DTypes out;
      for (const Type& xi : a.exists_types)
        out.exists_types.push_back(Type::arrow(f.bound_type(), xi));
      out.forall_types.push_back(f.bound_type());
      for (Type& t : a.forall_types) out.forall_types.push_back(std::move(t));
      return out;
    }
    case FormulaKind::Exists: {
      DTypes a = d_types(f.body());
      DTypes out;
      out.exists_types.push_back(f.bound_type());
      for (Type& t : a.exists_types) out.exists_types.push_back(std::move(t));
      out.forall_types = std::move(a.forall_types);
      return out;
    }
    case FormulaKind::Imp: {
      DTypes a = d_types(f.lhs());
      DTypes b = d_types(f.rhs());
      DTypes out;
      std::vector<Type> xv = a.exists_types;
      for (Type& t : b.forall_types) xv.push_back(t);  // x ++ v for the Y part
      for (const Type& u : b.exists_types)
        out.exists_types.push_back(curry(a.exists_types, u));
      for (const Type& y : a.forall_types) out.exists_types.push_back(curry(xv, y));
      out.forall_types = std::move(a.exists_types);
      for (Type& t : b.forall_types) out.forall_types.push_back(std::move(t));
      return out;
    }
  }
  return {};
}

struct DResult {
  VarTuple exists_tuple;
  VarTuple forall_tuple;
  Formula matrix;
  Formula source;
};

namespace detail {

struct DPart {
  VarTuple ex;
  VarTuple fa;
  Formula matrix;
};

inline DPart d_go(const Formula& f, NameSupply& supply) {
  switch (f.kind()) {
    case FormulaKind::Bot:
    case FormulaKind::Eq0:
      return {{}, {}, f};
    case FormulaKind::And: {
      DPart a = d_go(f.lhs(), supply);
      DPart b = d_go(f.rhs(), supply);
      for (auto& v : b.ex.vars) a.ex.vars.push_back(std::move(v));
      for (auto& v : b.fa.vars) a.fa.vars.push_back(std::move(v));
      return {std::move(a.ex), std::move(a.fa),
              Formula::conj(a.matrix, b.matrix)};
    }
    case FormulaKind::Or: {
      DPart a = d_go(f.lhs(), supply);
      DPart b = d_go(f.rhs(), supply);
      std::string z = supply.fresh("z");
      Term zv = Term::var(z, Type::nat());
      Formula matrix = Formula::disj(
          Formula::conj(Formula::eq0(zv, Term::zero()), a.matrix),
          Formula::conj(Formula::eq0(zv, Term::numeral(1)), b.matrix));
      VarTuple ex;
      ex.vars.emplace_back(z, Type::nat());
      for (auto& v : a.ex.vars) ex.vars.push_back(std::move(v));
      for (auto& v : b.ex.vars) ex.vars.push_back(std::move(v));
      VarTuple fa = std::move(a.fa);
      for (auto& v : b.fa.vars) fa.vars.push_back(std::move(v));
      return {std::move(ex), std::move(fa), std::move(matrix)};
    }
    case FormulaKind::ForAll: {
      DPart a = d_go(f.body(), supply);
      std::string z = supply.fresh(f.bound_name());
      Term zv = Term::var(z, f.bound_type());
      std::map<std::string, Term> sub;
      sub.emplace(f.bound_name(), zv);
      VarTuple ex;
      for (const auto& [xn, xt] : a.ex.vars) {
        std::string name = supply.fresh(xn);
        Type lifted = Type::arrow(f.bound_type(), xt);
        ex.vars.emplace_back(name, lifted);
        sub.emplace(xn, Term::app(Term::var(name, lifted), zv));
      }
      Formula matrix = substitute_many(a.matrix, sub);
      VarTuple fa;
      fa.vars.emplace_back(z, f.bound_type());
      for (auto& v : a.fa.vars) fa.vars.push_back(std::move(v));
      return {std::move(ex), std::move(fa), std::move(matrix)};
    }
    case FormulaKind::Exists: {
      DPart a = d_go(f.body(), supply);
      std::string z = supply.fresh(f.bound_name());
      Formula matrix = substitute(a.matrix, f.bound_name(), Term::var(z, f.bound_type()));
      VarTuple ex;
      ex.vars.emplace_back(z, f.bound_type());
      for (auto& v : a.ex.vars) ex.vars.push_back(std::move(v));
      return {std::move(ex), std::move(a.fa), std::move(matrix)};
    }
    case FormulaKind::Imp: {
      DPart a = d_go(f.lhs(), supply);
      DPart b = d_go(f.rhs(), supply);
      std::vector<Type> x_types = a.ex.types();
      std::vector<Term> x_vars = a.ex.as_terms();
      std::vector<Term> v_vars = b.fa.as_terms();

      VarTuple ex;
      std::map<std::string, Term> b_sub;
      for (const auto& [un, ut] : b.ex.vars) {
        std::string name = supply.fresh(un);
        Type lifted = curry(x_types, ut);
        ex.vars.emplace_back(name, lifted);
        Term call = Term::var(name, lifted);
        for (const Term& x : x_vars) call = Term::app(call, x);
        b_sub.emplace(un, std::move(call));
      }
      std::vector<Type> xv_types = x_types;
      for (const Type& t : b.fa.types()) xv_types.push_back(t);
      std::map<std::string, Term> a_sub;
      for (const auto& [yn, yt] : a.fa.vars) {
        std::string name = supply.fresh(yn);
        Type lifted = curry(xv_types, yt);
        ex.vars.emplace_back(name, lifted);
        Term call = Term::var(name, lifted);
        for (const Term& x : x_vars) call = Term::app(call, x);
        for (const Term& v : v_vars) call = Term::app(call, v);
        a_sub.emplace(yn, std::move(call));
      }

      Formula matrix = Formula::imp(substitute_many(a.matrix, a_sub),
                                    substitute_many(b.matrix, b_sub));
      VarTuple fa = std::move(a.ex);
      for (auto& v : b.fa.vars) fa.vars.push_back(std::move(v));
      return {std::move(ex), std::move(fa), std::move(matrix)};
    }
  }
  return {{}, {}, f};
}

}  // namespace detail

// Dialectica interpretation A |-> (?x, !y, A_D) with quantifier-free matrix.
inline DResult d_translate(const Formula& f) {
  NameSupply supply(all_names(f));
  detail::DPart part = detail::d_go(f, supply);
  return {std::move(part.ex), std::move(part.fa), std::move(part.matrix), f};
}

}  // namespace finterp
