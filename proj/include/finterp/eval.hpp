#pragma once

#include <optional>
#include <vector>

#include "finterp/error.hpp"
#include "finterp/subst.hpp"
#include "finterp/typing.hpp"

namespace finterp {

struct EvalConfig {
  std::size_t max_steps = 1'000'000;
  bool trace = false;
};

class BudgetError : public Error {
public:
  BudgetError(Term partial, std::size_t steps)
      : Error(ErrorKind::StepBudgetExceeded,
              "no normal form within " + std::to_string(steps) + " steps; stuck at " +
                  to_string(partial)),
        partial_(std::move(partial)) {}

  const Term& partial() const { return partial_; }

private:
  Term partial_;
};

namespace detail {

// One step of deterministic normal-order reduction. Delta rules for the
// constants fire at the head of an application spine; Rec inspects its first
// argument and Add/Mul their operands, which are reduced in place when they
// are not yet numerals. Returns nullopt on normal forms.
inline std::optional<Term> reduce_step(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Zero:
    case TermKind::Proj:
    case TermKind::Subst:
    case TermKind::Rec:
    case TermKind::SuccFn:
    case TermKind::AddFn:
    case TermKind::MulFn:
      return std::nullopt;
    case TermKind::Succ: {
      // walk the whole successor prefix iteratively; numerals can be long
      std::size_t prefix = 0;
      const Term* core = &t;
      while (core->kind() == TermKind::Succ) {
        ++prefix;
        core = &core->arg();
      }
      if (auto s = reduce_step(*core)) {
        Term out = *s;
        for (std::size_t i = 0; i < prefix; ++i) out = Term::succ(out);
        return out;
      }
      return std::nullopt;
    }
    case TermKind::Add:
    case TermKind::Mul: {
      auto ln = t.lhs().as_numeral();
      auto rn = t.rhs().as_numeral();
      if (ln && rn)
        return Term::numeral(t.kind() == TermKind::Add ? *ln + *rn : *ln * *rn);
      if (auto s = reduce_step(t.lhs()))
        return t.kind() == TermKind::Add ? Term::add(*s, t.rhs()) : Term::mul(*s, t.rhs());
      if (auto s = reduce_step(t.rhs()))
        return t.kind() == TermKind::Add ? Term::add(t.lhs(), *s) : Term::mul(t.lhs(), *s);
      return std::nullopt;
    }
    case TermKind::Lam: {
      if (auto s = reduce_step(t.body())) return Term::lam(t.name(), t.var_type(), *s);
      return std::nullopt;
    }
    case TermKind::App: {
      auto [head, args] = app_spine(t);
      std::size_t k = args.size();
      switch (head.kind()) {
        case TermKind::Lam:
          return apply_spine(substitute(head.body(), head.name(), args[0]), args, 1);
        case TermKind::Proj:
          if (k >= 2) return apply_spine(args[0], args, 2);
          break;
        case TermKind::Subst:
          if (k >= 3)
            return apply_spine(
                Term::app(Term::app(args[0], args[2]), Term::app(args[1], args[2])),
                args, 3);
          break;
        case TermKind::Rec:
          if (k >= 3) {
            const Term& n = args[0];
            if (n.kind() == TermKind::Zero) return apply_spine(args[1], args, 3);
            if (n.kind() == TermKind::Succ) {
              Term pred = n.arg();
              Term again = Term::app(
                  Term::app(Term::app(head, pred), args[1]), args[2]);
              return apply_spine(Term::app(Term::app(args[2], pred), again), args, 3);
            }
            if (auto s = reduce_step(n)) {
              std::vector<Term> next = args;
              next[0] = *s;
              return apply_spine(head, next);
            }
          }
          break;
        case TermKind::SuccFn:
          if (k >= 1) return apply_spine(Term::succ(args[0]), args, 1);
          break;
        case TermKind::AddFn:
          if (k >= 2) return apply_spine(Term::add(args[0], args[1]), args, 2);
          break;
        case TermKind::MulFn:
          if (k >= 2) return apply_spine(Term::mul(args[0], args[1]), args, 2);
          break;
        default:
          break;
      }
      // no head redex: reduce the leftmost reducible component
      if (auto s = reduce_step(head)) return apply_spine(*s, args);
      for (std::size_t i = 0; i < k; ++i) {
        if (auto s = reduce_step(args[i])) {
          std::vector<Term> next = args;
          next[i] = *s;
          return apply_spine(head, next);
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Reduces to normal form, recording intermediate terms (including the input
// and the normal form) when cfg.trace is set.
inline Term normalize(const Term& t, const EvalConfig& cfg,
                      std::vector<Term>* trace = nullptr) {
  Term cur = t;
  if (cfg.trace && trace) trace->push_back(cur);
  for (std::size_t steps = 0;; ++steps) {
    auto next = detail::reduce_step(cur);
    if (!next) return cur;
    if (steps >= cfg.max_steps) throw BudgetError(cur, cfg.max_steps);
    cur = *next;
    if (cfg.trace && trace) trace->push_back(cur);
  }
}

// Normalizes a closed term of type 0 and reads back the numeral.
inline unsigned long eval_nat(const Term& t, const EvalConfig& cfg = {}) {
  if (!free_vars(t).empty())
    throw Error(ErrorKind::NotClosed, "term has free variables: " + to_string(t));
  Type ty = type_of(t);
  if (!ty.is_nat())
    throw Error(ErrorKind::TypeMismatch,
                "expected type 0, got " + to_string(ty) + " for " + to_string(t));
  Term nf = normalize(t, cfg);
  auto n = nf.as_numeral();
  if (!n)
    throw Error(ErrorKind::TypeMismatch, "normal form is not a numeral: " + to_string(nf));
  return *n;
}

inline bool is_quantifier_free(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Bot:
    case FormulaKind::Eq0:
      return true;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      return is_quantifier_free(f.lhs()) && is_quantifier_free(f.rhs());
    default:
      return false;
  }
}

// Decides a closed quantifier-free formula by evaluating its atoms.
inline bool decide_qf(const Formula& f, const EvalConfig& cfg = {}) {
  if (!is_quantifier_free(f))
    throw Error(ErrorKind::NotQuantifierFree, "formula contains a quantifier: " + to_string(f));
  if (!free_vars(f).empty())
    throw Error(ErrorKind::NotClosed, "formula has free variables: " + to_string(f));
  struct Rec {
    const EvalConfig& cfg;
    bool operator()(const Formula& g) const {
      switch (g.kind()) {
        case FormulaKind::Bot:
          return false;
        case FormulaKind::Eq0:
          return eval_nat(g.lhs_term(), cfg) == eval_nat(g.rhs_term(), cfg);
        case FormulaKind::And:
          return (*this)(g.lhs()) && (*this)(g.rhs());
        case FormulaKind::Or:
          return (*this)(g.lhs()) || (*this)(g.rhs());
        case FormulaKind::Imp:
          return !(*this)(g.lhs()) || (*this)(g.rhs());
        default:
          return false;
      }
    }
  };
  return Rec{cfg}(f);
}

// Normalizes every term occurring in a formula (open terms allowed).
inline Formula normalize_formula_terms(const Formula& f, const EvalConfig& cfg = {}) {
  switch (f.kind()) {
    case FormulaKind::Bot:
      return f;
    case FormulaKind::Eq0:
      return Formula::eq0(normalize(f.lhs_term(), cfg), normalize(f.rhs_term(), cfg));
    case FormulaKind::And:
      return Formula::conj(normalize_formula_terms(f.lhs(), cfg),
                           normalize_formula_terms(f.rhs(), cfg));
    case FormulaKind::Or:
      return Formula::disj(normalize_formula_terms(f.lhs(), cfg),
                           normalize_formula_terms(f.rhs(), cfg));
    case FormulaKind::Imp:
      return Formula::imp(normalize_formula_terms(f.lhs(), cfg),
                          normalize_formula_terms(f.rhs(), cfg));
    case FormulaKind::ForAll:
      return Formula::forall(f.bound_name(), f.bound_type(),
                             normalize_formula_terms(f.body(), cfg));
    case FormulaKind::Exists:
      return Formula::exists(f.bound_name(), f.bound_type(),
                             normalize_formula_terms(f.body(), cfg));
  }
  return f;
}

}  // namespace finterp
