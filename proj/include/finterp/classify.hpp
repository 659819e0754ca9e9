#pragma once

#include <map>
#include <optional>
#include <string>

#include "finterp/error.hpp"
#include "finterp/formula.hpp"
#include "finterp/print.hpp"

namespace finterp {

enum class ClassifyMode { Strict, Liberal };

inline const char* mode_name(ClassifyMode m) {
  return m == ClassifyMode::Strict ? "strict" : "liberal";
}

// Syntactic membership report. For every flag that is false, witness_paths
// holds the position of the first offending subformula: a dot-separated path
// of steps l (left operand), r (right operand), b (binder body); "" is the
// formula itself.
struct ClassificationReport {
  bool quantifier_free = false;
  bool exists_free = false;
  bool purely_universal = false;
  bool in_gamma1 = false;
  bool in_gamma2 = false;
  bool negative = false;
  ClassifyMode mode = ClassifyMode::Strict;
  std::map<std::string, std::string> witness_paths;
};

namespace detail {

using Violation = std::optional<std::string>;

inline std::string path_join(const std::string& p, const char* step) {
  return p.empty() ? step : p + "." + step;
}

inline Violation qf_violation(const Formula& f, const std::string& path) {
  switch (f.kind()) {
    case FormulaKind::Bot:
    case FormulaKind::Eq0:
      return std::nullopt;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp: {
      if (auto v = qf_violation(f.lhs(), path_join(path, "l"))) return v;
      return qf_violation(f.rhs(), path_join(path, "r"));
    }
    default:
      return path;
  }
}

// Exists-free: built from primes by forall, conjunction and implication. In
// liberal mode any quantifier-free subformula counts as prime, which lets
// decidable matrices with disjunction through.
inline Violation ef_violation(const Formula& f, ClassifyMode mode, const std::string& path) {
  if (mode == ClassifyMode::Liberal && !qf_violation(f, path)) return std::nullopt;
  switch (f.kind()) {
    case FormulaKind::Bot:
    case FormulaKind::Eq0:
      return std::nullopt;
    case FormulaKind::And:
    case FormulaKind::Imp: {
      if (auto v = ef_violation(f.lhs(), mode, path_join(path, "l"))) return v;
      return ef_violation(f.rhs(), mode, path_join(path, "r"));
    }
    case FormulaKind::ForAll:
      return ef_violation(f.body(), mode, path_join(path, "b"));
    case FormulaKind::Or:
    case FormulaKind::Exists:
      return path;
  }
  return path;
}

// Purely universal: a (possibly empty) block of foralls over a
// quantifier-free matrix.
inline Violation pu_violation(const Formula& f, const std::string& path) {
  const Formula* g = &f;
  std::string p = path;
  while (g->kind() == FormulaKind::ForAll) {
    p = path_join(p, "b");
    g = &g->body();
  }
  return qf_violation(*g, p);
}

// Strips a maximal block of leading existential quantifiers; implication
// premises are tested after stripping since the clause admits a block.
inline const Formula* strip_exists_block(const Formula& f, std::string& path) {
  const Formula* g = &f;
  while (g->kind() == FormulaKind::Exists) {
    path = path_join(path, "b");
    g = &g->body();
  }
  return g;
}

inline Violation gamma1_violation(const Formula& f, ClassifyMode mode,
                                  const std::string& path) {
  switch (f.kind()) {
    case FormulaKind::Bot:
    case FormulaKind::Eq0:
      return std::nullopt;
    case FormulaKind::And:
    case FormulaKind::Or: {
      if (auto v = gamma1_violation(f.lhs(), mode, path_join(path, "l"))) return v;
      return gamma1_violation(f.rhs(), mode, path_join(path, "r"));
    }
    case FormulaKind::ForAll:
    case FormulaKind::Exists:
      return gamma1_violation(f.body(), mode, path_join(path, "b"));
    case FormulaKind::Imp: {
      std::string premise_path = path_join(path, "l");
      const Formula* core = strip_exists_block(f.lhs(), premise_path);
      if (auto v = ef_violation(*core, mode, premise_path)) return v;
      return gamma1_violation(f.rhs(), mode, path_join(path, "r"));
    }
  }
  return path;
}

inline Violation gamma2_violation(const Formula& f, const std::string& path) {
  switch (f.kind()) {
    case FormulaKind::Bot:
    case FormulaKind::Eq0:
      return std::nullopt;
    case FormulaKind::And:
    case FormulaKind::Or: {
      if (auto v = gamma2_violation(f.lhs(), path_join(path, "l"))) return v;
      return gamma2_violation(f.rhs(), path_join(path, "r"));
    }
    case FormulaKind::ForAll:
    case FormulaKind::Exists:
      return gamma2_violation(f.body(), path_join(path, "b"));
    case FormulaKind::Imp: {
      std::string premise_path = path_join(path, "l");
      const Formula* core = strip_exists_block(f.lhs(), premise_path);
      if (auto v = pu_violation(*core, premise_path)) return v;
      return gamma2_violation(f.rhs(), path_join(path, "r"));
    }
  }
  return path;
}

// Negative: built from negated primes by forall, conjunction, implication
// and bottom. A bare equation is the only way to fail.
inline Violation negative_violation(const Formula& f, const std::string& path) {
  switch (f.kind()) {
    case FormulaKind::Bot:
      return std::nullopt;
    case FormulaKind::Eq0:
      return path;
    case FormulaKind::And: {
      if (auto v = negative_violation(f.lhs(), path_join(path, "l"))) return v;
      return negative_violation(f.rhs(), path_join(path, "r"));
    }
    case FormulaKind::Imp: {
      if (f.lhs().is_prime() && f.rhs().kind() == FormulaKind::Bot) return std::nullopt;
      if (auto v = negative_violation(f.lhs(), path_join(path, "l"))) return v;
      return negative_violation(f.rhs(), path_join(path, "r"));
    }
    case FormulaKind::ForAll:
      return negative_violation(f.body(), path_join(path, "b"));
    case FormulaKind::Or:
    case FormulaKind::Exists:
      return path;
  }
  return path;
}

}  // namespace detail

inline ClassificationReport classify(const Formula& f, ClassifyMode mode) {
  ClassificationReport r;
  r.mode = mode;
  auto record = [&r](const char* flag, const detail::Violation& v) {
    if (v) r.witness_paths.emplace(flag, *v);
    return !v.has_value();
  };
  r.quantifier_free = record("quantifier_free", detail::qf_violation(f, ""));
  r.exists_free = record("exists_free", detail::ef_violation(f, mode, ""));
  r.purely_universal = record("purely_universal", detail::pu_violation(f, ""));
  r.in_gamma1 = record("in_gamma1", detail::gamma1_violation(f, mode, ""));
  r.in_gamma2 = record("in_gamma2", detail::gamma2_violation(f, ""));
  r.negative = record("negative", detail::negative_violation(f, ""));
  return r;
}

// Replaces every prime subformula P by ((P -> bot) -> bot). Defined for
// strictly exists-free input; the result is negative.
inline Formula double_negate_primes(const Formula& f) {
  if (detail::ef_violation(f, ClassifyMode::Strict, ""))
    throw Error(ErrorKind::NotExistsFree,
                "double negation of primes requires an exists-free formula, got " +
                    to_string(f));
  struct Rec {
    Formula operator()(const Formula& g) const {
      switch (g.kind()) {
        case FormulaKind::Bot:
        case FormulaKind::Eq0:
          return Formula::neg(Formula::neg(g));
        case FormulaKind::And:
          return Formula::conj((*this)(g.lhs()), (*this)(g.rhs()));
        case FormulaKind::Imp:
          return Formula::imp((*this)(g.lhs()), (*this)(g.rhs()));
        case FormulaKind::ForAll:
          return Formula::forall(g.bound_name(), g.bound_type(), (*this)(g.body()));
        default:
          return g;  // unreachable for exists-free input
      }
    }
  };
  return Rec{}(f);
}

}  // namespace finterp
