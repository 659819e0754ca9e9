#pragma once

#include <map>
#include <string>
#include <vector>

#include "finterp/classify.hpp"
#include "finterp/error.hpp"
#include "finterp/eval.hpp"
#include "finterp/subst.hpp"
#include "finterp/syntax.hpp"
#include "finterp/typing.hpp"

namespace finterp {

// Realizer tuple types of a formula:
//   prime        -> []
//   A & B        -> types(A) ++ types(B)
//   A | B        -> [0] ++ types(A) ++ types(B)
//   A -> B       -> [types(A) curried onto tau | tau in types(B)]
//   !y:rho. A    -> [rho -> tau | tau in types(A)]
//   ?y:rho. A    -> [rho] ++ types(A)
inline std::vector<Type> mr_types(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Bot:
    case FormulaKind::Eq0:
      return {};
    case FormulaKind::And: {
      std::vector<Type> out = mr_types(f.lhs());
      for (Type& t : mr_types(f.rhs())) out.push_back(std::move(t));
      return out;
    }
    case FormulaKind::Or: {
      std::vector<Type> out{Type::nat()};
      for (Type& t : mr_types(f.lhs())) out.push_back(std::move(t));
      for (Type& t : mr_types(f.rhs())) out.push_back(std::move(t));
      return out;
    }
    case FormulaKind::Imp: {
      std::vector<Type> premise = mr_types(f.lhs());
      std::vector<Type> out;
      for (const Type& tau : mr_types(f.rhs())) out.push_back(curry(premise, tau));
      return out;
    }
    case FormulaKind::ForAll: {
      std::vector<Type> out;
      for (const Type& tau : mr_types(f.body()))
        out.push_back(Type::arrow(f.bound_type(), tau));
      return out;
    }
    case FormulaKind::Exists: {
      std::vector<Type> out{f.bound_type()};
      for (Type& t : mr_types(f.body())) out.push_back(std::move(t));
      return out;
    }
  }
  return {};
}

struct MrResult {
  VarTuple realizers;
  Formula formula;
  Formula source;
};

namespace detail {

struct MrPart {
  VarTuple tuple;
  Formula formula;
};

inline MrPart mr_go(const Formula& f, NameSupply& supply) {
  switch (f.kind()) {
    case FormulaKind::Bot:
    case FormulaKind::Eq0:
      return {{}, f};
    case FormulaKind::And: {
      MrPart a = mr_go(f.lhs(), supply);
      MrPart b = mr_go(f.rhs(), supply);
      VarTuple tuple = a.tuple;
      for (auto& v : b.tuple.vars) tuple.vars.push_back(std::move(v));
      return {std::move(tuple), Formula::conj(a.formula, b.formula)};
    }
    case FormulaKind::Or: {
      MrPart a = mr_go(f.lhs(), supply);
      MrPart b = mr_go(f.rhs(), supply);
      std::string z = supply.fresh("z");
      Term zv = Term::var(z, Type::nat());
      Formula tag_a = Formula::eq0(zv, Term::zero());
      Formula picked =
          Formula::conj(Formula::imp(tag_a, a.formula),
                        Formula::imp(Formula::neg(tag_a), b.formula));
      VarTuple tuple;
      tuple.vars.emplace_back(z, Type::nat());
      for (auto& v : a.tuple.vars) tuple.vars.push_back(std::move(v));
      for (auto& v : b.tuple.vars) tuple.vars.push_back(std::move(v));
      return {std::move(tuple), std::move(picked)};
    }
    case FormulaKind::Imp: {
      MrPart a = mr_go(f.lhs(), supply);
      MrPart b = mr_go(f.rhs(), supply);
      std::vector<Type> premise_types = a.tuple.types();
      std::vector<Term> premise_vars = a.tuple.as_terms();
      VarTuple tuple;
      std::map<std::string, Term> applied;
      for (const auto& [bn, bt] : b.tuple.vars) {
        std::string x = supply.fresh(bn);
        Type xt = curry(premise_types, bt);
        tuple.vars.emplace_back(x, xt);
        Term call = Term::var(x, xt);
        for (const Term& y : premise_vars) call = Term::app(call, y);
        applied.emplace(bn, std::move(call));
      }
      Formula conclusion = substitute_many(b.formula, applied);
      Formula body = Formula::imp(a.formula, std::move(conclusion));
      // empty premise tuples produce no quantifiers
      for (auto it = a.tuple.vars.rbegin(); it != a.tuple.vars.rend(); ++it)
        body = Formula::forall(it->first, it->second, body);
      return {std::move(tuple), std::move(body)};
    }
    case FormulaKind::ForAll: {
      MrPart a = mr_go(f.body(), supply);
      Term bound = Term::var(f.bound_name(), f.bound_type());
      VarTuple tuple;
      std::map<std::string, Term> applied;
      for (const auto& [an, at] : a.tuple.vars) {
        std::string x = supply.fresh(an);
        Type xt = Type::arrow(f.bound_type(), at);
        tuple.vars.emplace_back(x, xt);
        applied.emplace(an, Term::app(Term::var(x, xt), bound));
      }
      Formula body = substitute_many(a.formula, applied);
      return {std::move(tuple),
              Formula::forall(f.bound_name(), f.bound_type(), std::move(body))};
    }
    case FormulaKind::Exists: {
      MrPart a = mr_go(f.body(), supply);
      std::string z = supply.fresh(f.bound_name());
      Formula body = substitute(a.formula, f.bound_name(), Term::var(z, f.bound_type()));
      VarTuple tuple;
      tuple.vars.emplace_back(z, f.bound_type());
      for (auto& v : a.tuple.vars) tuple.vars.push_back(std::move(v));
      return {std::move(tuple), std::move(body)};
    }
  }
  return {{}, f};
}

}  // namespace detail

// The modified-realizability translation A |-> (x, x mr A).
inline MrResult mr_translate(const Formula& f) {
  NameSupply supply(all_names(f));
  detail::MrPart part = detail::mr_go(f, supply);
  return {std::move(part.tuple), std::move(part.formula), f};
}

// Instantiates the realizer tuple with concrete terms, producing t mr A.
// Applications created by the substitution are reduced away.
inline Formula mr_apply_terms(const Formula& f, const std::vector<Term>& terms,
                              const EvalConfig& cfg = {}) {
  MrResult r = mr_translate(f);
  if (terms.size() != r.realizers.size())
    throw Error(ErrorKind::ArityMismatch,
                "expected " + std::to_string(r.realizers.size()) + " realizer term(s), got " +
                    std::to_string(terms.size()));
  std::map<std::string, Term> sub;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Type expected = r.realizers.vars[i].second;
    Type actual = type_of(terms[i]);
    if (actual != expected)
      throw Error(ErrorKind::TypeMismatch,
                  "realizer " + std::to_string(i) + " has type " + to_string(actual) +
                      ", expected " + to_string(expected));
    sub.emplace(r.realizers.vars[i].first, terms[i]);
  }
  Formula instantiated = substitute_many(r.formula, sub);
  return normalize_formula_terms(instantiated, cfg);
}

// Builds the implication (t mr A) -> A for A in Gamma1.
inline Formula gamma1_soundness_formula(const Formula& f, const std::vector<Term>& terms,
                                        ClassifyMode mode = ClassifyMode::Strict,
                                        const EvalConfig& cfg = {}) {
  if (!classify(f, mode).in_gamma1)
    throw Error(ErrorKind::NotGamma1,
                "formula is not in the admissible implication class: " + to_string(f));
  return Formula::imp(mr_apply_terms(f, terms, cfg), f);
}

}  // namespace finterp
