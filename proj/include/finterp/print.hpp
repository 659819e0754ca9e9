#pragma once

#include <string>

#include "finterp/formula.hpp"
#include "finterp/term.hpp"
#include "finterp/type.hpp"

namespace finterp {

// Plain-text printer. Output re-parses to an alpha-equivalent node and is
// stable under print-parse-print. Arrow types always print fully
// parenthesized; the abbreviation 1 is accepted on input only.

inline std::string to_string(const Type& t) {
  if (t.is_nat()) return "0";
  return "(" + to_string(t.domain()) + "->" + to_string(t.codomain()) + ")";
}

namespace detail {

// Term precedence: lambda 0 < add 1 < mul 2 < unary (S / application) 3 < atom 4.
inline std::string print_term(const Term& t, int min_level);

inline std::string paren_unless(int level, int min_level, const std::string& s) {
  if (level >= min_level) return s;
  return "(" + s + ")";
}

inline std::string print_term(const Term& t, int min_level) {
  if (auto n = t.as_numeral()) return std::to_string(*n);
  switch (t.kind()) {
    case TermKind::Var:
      return t.name();
    case TermKind::Zero:
      return "0";
    case TermKind::Succ:
      return paren_unless(3, min_level, "S " + print_term(t.arg(), 4));
    case TermKind::Add:
      return paren_unless(1, min_level,
                          print_term(t.lhs(), 1) + " + " + print_term(t.rhs(), 2));
    case TermKind::Mul:
      return paren_unless(2, min_level,
                          print_term(t.lhs(), 2) + " * " + print_term(t.rhs(), 3));
    case TermKind::Proj:
      return "proj[" + to_string(t.type_params()[0]) + "," +
             to_string(t.type_params()[1]) + "]";
    case TermKind::Subst:
      return "subst[" + to_string(t.type_params()[0]) + "," +
             to_string(t.type_params()[1]) + "," + to_string(t.type_params()[2]) + "]";
    case TermKind::Rec:
      return "rec[" + to_string(t.type_params()[0]) + "]";
    case TermKind::App: {
      auto [head, args] = app_spine(t);
      std::string s = print_term(head, 4);
      for (const Term& a : args) s += " " + print_term(a, 4);
      return paren_unless(3, min_level, s);
    }
    case TermKind::Lam:
      return paren_unless(0, min_level,
                          "\\" + t.name() + ":" + to_string(t.var_type()) + ". " +
                              print_term(t.body(), 0));
    case TermKind::SuccFn:
      return "succ";
    case TermKind::AddFn:
      return "add";
    case TermKind::MulFn:
      return "mul";
  }
  return "?";
}

// Formula precedence: imp 1 < or 2 < and 3 < not 4 < atom 5. Quantifier
// scope extends maximally right, so a quantifier prints bare only when
// nothing follows it in the enclosing formula (trailing position).
inline std::string print_formula(const Formula& f, int min_level, bool trailing) {
  switch (f.kind()) {
    case FormulaKind::Bot:
      return "bot";
    case FormulaKind::Eq0:
      return print_term(f.lhs_term(), 1) + " = " + print_term(f.rhs_term(), 1);
    case FormulaKind::And:
      if (min_level > 3)
        return "(" + print_formula(f, 0, true) + ")";
      return print_formula(f.lhs(), 3, false) + " & " +
             print_formula(f.rhs(), 4, trailing);
    case FormulaKind::Or:
      if (min_level > 2)
        return "(" + print_formula(f, 0, true) + ")";
      return print_formula(f.lhs(), 2, false) + " | " +
             print_formula(f.rhs(), 3, trailing);
    case FormulaKind::Imp:
      if (f.rhs().kind() == FormulaKind::Bot) {
        // negation sugar
        if (min_level > 4) return "(" + print_formula(f, 0, true) + ")";
        return "~" + print_formula(f.lhs(), 4, trailing);
      }
      if (min_level > 1)
        return "(" + print_formula(f, 0, true) + ")";
      return print_formula(f.lhs(), 2, false) + " -> " +
             print_formula(f.rhs(), 1, trailing);
    case FormulaKind::ForAll:
    case FormulaKind::Exists: {
      std::string s = (f.kind() == FormulaKind::ForAll ? "!" : "?") + f.bound_name() +
                      ":" + to_string(f.bound_type()) + ". " +
                      print_formula(f.body(), 0, true);
      if (!trailing) return "(" + s + ")";
      return s;
    }
  }
  return "?";
}

}  // namespace detail

inline std::string to_string(const Term& t) { return detail::print_term(t, 0); }

inline std::string to_string(const Formula& f) {
  return detail::print_formula(f, 0, true);
}

}  // namespace finterp
