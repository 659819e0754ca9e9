#pragma once

#include <string>
#include <vector>

#include "finterp/classify.hpp"
#include "finterp/error.hpp"
#include "finterp/subst.hpp"
#include "finterp/syntax.hpp"

namespace finterp {

struct ForallExists {
  std::string x_name;
  Type x_type;
  std::string y_name;
  Type y_type;
  Formula matrix;
};

// Splits a sentence of the shape !x. ?y. A into its parts. Only the
// outermost single pair is decomposed.
inline ForallExists decompose_forall_exists(const Formula& s) {
  if (s.kind() != FormulaKind::ForAll)
    throw Error(ErrorKind::NotForallExists,
                "outermost connective is not a universal quantifier in " + to_string(s));
  const Formula& inner = s.body();
  if (inner.kind() != FormulaKind::Exists)
    throw Error(ErrorKind::NotForallExists,
                "no existential quantifier under the leading universal in " + to_string(s) +
                    " (position b)");
  return {s.bound_name(), s.bound_type(), inner.bound_name(), inner.bound_type(),
          inner.body()};
}

// Builds the sequential form
//   !X:(0->rho). ?Y:(0->tau). !n:0. A[x := X n, y := Y n].
inline Formula sequentialize(const Formula& s) {
  ForallExists d = decompose_forall_exists(s);
  NameSupply supply(all_names(s));
  std::string xs = supply.fresh("X");
  std::string ys = supply.fresh("Y");
  std::string n = supply.fresh("n");
  Type xs_type = Type::arrow(Type::nat(), d.x_type);
  Type ys_type = Type::arrow(Type::nat(), d.y_type);
  Term nv = Term::var(n, Type::nat());
  Formula matrix = substitute_many(
      d.matrix, {{d.x_name, Term::app(Term::var(xs, xs_type), nv)},
                 {d.y_name, Term::app(Term::var(ys, ys_type), nv)}});
  return Formula::forall(
      xs, xs_type,
      Formula::exists(ys, ys_type,
                      Formula::forall(n, Type::nat(), std::move(matrix))));
}

enum class UniformizationTheorem {
  FullMr,                // label 719F
  RestrictedMr,          // label 719J
  FullDialectica,        // label 722f
  RestrictedDialectica,  // label restricted-dialectica
};

inline const char* theorem_label(UniformizationTheorem t) {
  switch (t) {
    case UniformizationTheorem::FullMr: return "719F";
    case UniformizationTheorem::RestrictedMr: return "719J";
    case UniformizationTheorem::FullDialectica: return "722f";
    case UniformizationTheorem::RestrictedDialectica: return "restricted-dialectica";
  }
  return "?";
}

struct TheoremReport {
  bool gamma1 = false;
  bool gamma2 = false;
  ClassifyMode mode = ClassifyMode::Strict;
  bool second_order_fragment = false;
  bool uses_full_recursors = false;
  bool rca_replacement = false;
  std::vector<UniformizationTheorem> applicable;
};

namespace detail {

inline bool term_uses_full_recursors(const Term& t) {
  if (t.kind() == TermKind::Rec && !t.type_params()[0].is_nat()) return true;
  for (std::size_t i = 0; i < t.child_count(); ++i)
    if (term_uses_full_recursors(t.child(i))) return true;
  return false;
}

inline bool uses_full_recursors(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Bot:
      return false;
    case FormulaKind::Eq0:
      return term_uses_full_recursors(f.lhs_term()) ||
             term_uses_full_recursors(f.rhs_term());
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      return uses_full_recursors(f.lhs()) || uses_full_recursors(f.rhs());
    default:
      return uses_full_recursors(f.body());
  }
}

inline bool term_binders_level_le(const Term& t, int max_level) {
  switch (t.kind()) {
    case TermKind::Lam:
      return t.var_type().level() <= max_level && term_binders_level_le(t.body(), max_level);
    default:
      for (std::size_t i = 0; i < t.child_count(); ++i)
        if (!term_binders_level_le(t.child(i), max_level)) return false;
      return true;
  }
}

inline bool binders_level_le(const Formula& f, int max_level) {
  switch (f.kind()) {
    case FormulaKind::Bot:
      return true;
    case FormulaKind::Eq0:
      return term_binders_level_le(f.lhs_term(), max_level) &&
             term_binders_level_le(f.rhs_term(), max_level);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      return binders_level_le(f.lhs(), max_level) && binders_level_le(f.rhs(), max_level);
    default:
      return f.bound_type().level() <= max_level && binders_level_le(f.body(), max_level);
  }
}

// Second-order fragment: every binder and free variable has type level <= 1.
// Equations are type 0 by construction.
inline bool second_order_fragment(const Formula& f) {
  if (!binders_level_le(f, 1)) return false;
  for (const auto& [n, t] : free_vars(f))
    if (t.level() > 1) return false;
  return true;
}

}  // namespace detail

// Reports which uniformization theorems' syntactic hypotheses the sentence
// satisfies. Says nothing about provability of the sentence itself.
inline TheoremReport applicable_theorems(const Formula& s,
                                         ClassifyMode mode = ClassifyMode::Strict) {
  ForallExists d = decompose_forall_exists(s);
  ClassificationReport cls = classify(s, mode);
  TheoremReport r;
  r.mode = mode;
  r.gamma1 = cls.in_gamma1;
  r.gamma2 = cls.in_gamma2;
  r.uses_full_recursors = detail::uses_full_recursors(s);
  r.second_order_fragment = detail::second_order_fragment(s);
  r.rca_replacement = d.x_type == Type::one() && d.y_type == Type::one() &&
                      r.second_order_fragment;
  if (r.gamma1) r.applicable.push_back(UniformizationTheorem::FullMr);
  if (r.gamma1 && !r.uses_full_recursors)
    r.applicable.push_back(UniformizationTheorem::RestrictedMr);
  if (r.gamma2) r.applicable.push_back(UniformizationTheorem::FullDialectica);
  if (r.gamma2 && !r.uses_full_recursors)
    r.applicable.push_back(UniformizationTheorem::RestrictedDialectica);
  return r;
}

}  // namespace finterp
