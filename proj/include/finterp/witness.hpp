#pragma once

#include <string>
#include <vector>

#include "finterp/error.hpp"
#include "finterp/eval.hpp"
#include "finterp/mr.hpp"
#include "finterp/sequential.hpp"
#include "finterp/subst.hpp"

namespace finterp {

struct IntRange {
  long lo = 0;
  long hi = 0;

  std::string descriptor() const {
    return std::to_string(lo) + ".." + std::to_string(hi);
  }
  long width() const { return hi - lo + 1; }
};

struct WitnessFailure {
  std::vector<long> inputs;
  Formula instance;
  bool decision = false;
};

struct WitnessReport {
  std::size_t checked = 0;
  std::vector<WitnessFailure> failures;
  std::string range;

  bool pass() const { return failures.empty(); }
  const char* verdict() const { return pass() ? "pass" : "fail"; }
};

inline constexpr std::size_t kWitnessInstanceCap = 10'000;

// Checks a candidate witness t against !x:0. ?y:0. A by deciding
// A[x:=n, y:=t n] for every n in the range.
inline WitnessReport check_witness(const Formula& s, const Term& t, IntRange range,
                                   const EvalConfig& cfg = {}) {
  ForallExists d = decompose_forall_exists(s);
  if (!d.x_type.is_nat() || !d.y_type.is_nat())
    throw Error(ErrorKind::ShapeUnsupported,
                "only type-0 quantifier pairs can be sampled, got !" + d.x_name + ":" +
                    to_string(d.x_type) + ". ?" + d.y_name + ":" + to_string(d.y_type));
  if (!is_quantifier_free(d.matrix))
    throw Error(ErrorKind::NotQuantifierFree,
                "matrix contains quantifiers: " + to_string(d.matrix));
  for (const auto& [n, ty] : free_vars(d.matrix))
    if (n != d.x_name && n != d.y_name)
      throw Error(ErrorKind::NotClosed, "matrix mentions undeclared variable '" + n + "'");
  if (!free_vars(t).empty())
    throw Error(ErrorKind::NotClosed, "witness term has free variables: " + to_string(t));
  Type tt = type_of(t);
  if (tt != Type::one())
    throw Error(ErrorKind::TypeMismatch,
                "witness must have type (0->0), got " + to_string(tt));
  if (range.lo > range.hi)
    throw Error(ErrorKind::ShapeUnsupported, "empty range " + range.descriptor());

  WitnessReport report;
  report.range = range.descriptor();
  for (long n = range.lo; n <= range.hi; ++n) {
    unsigned long yv = eval_nat(Term::app(t, Term::numeral(n)), cfg);
    Formula instance = substitute_many(
        d.matrix,
        {{d.x_name, Term::numeral(n)}, {d.y_name, Term::numeral(yv)}});
    bool ok = decide_qf(instance, cfg);
    ++report.checked;
    if (!ok) report.failures.push_back({{n}, instance, ok});
  }
  return report;
}

// Samples t mr A over type-0 instances: instantiates every variable of the
// leading universal block over the range (Cartesian product) and decides the
// matrix. At most kWitnessInstanceCap instances are attempted.
inline WitnessReport check_mr_witness(const Formula& a, const std::vector<Term>& terms,
                                      IntRange range, const EvalConfig& cfg = {}) {
  Formula g = mr_apply_terms(a, terms, cfg);

  std::vector<std::pair<std::string, Type>> block;
  const Formula* body = &g;
  while (body->kind() == FormulaKind::ForAll) {
    block.emplace_back(body->bound_name(), body->bound_type());
    body = &body->body();
  }
  for (const auto& [n, ty] : block)
    if (!ty.is_nat())
      throw Error(ErrorKind::ShapeUnsupported,
                  "cannot sample quantifier over type " + to_string(ty));
  if (!is_quantifier_free(*body))
    throw Error(ErrorKind::ShapeUnsupported,
                "residual quantifier in matrix: " + to_string(*body));
  if (!free_vars(g).empty())
    throw Error(ErrorKind::NotClosed,
                "instantiated realizer statement has free variables: " + to_string(g));
  if (range.lo > range.hi)
    throw Error(ErrorKind::ShapeUnsupported, "empty range " + range.descriptor());

  double total = 1;
  for (std::size_t i = 0; i < block.size(); ++i) total *= double(range.width());
  if (total > double(kWitnessInstanceCap))
    throw Error(ErrorKind::InstanceCapExceeded,
                "instance count exceeds cap of " + std::to_string(kWitnessInstanceCap));

  WitnessReport report;
  report.range = range.descriptor();
  std::vector<long> values(block.size(), range.lo);
  while (true) {
    std::map<std::string, Term> sub;
    for (std::size_t i = 0; i < block.size(); ++i)
      sub.emplace(block[i].first, Term::numeral(values[i]));
    Formula instance = substitute_many(*body, sub);
    bool ok = decide_qf(instance, cfg);
    ++report.checked;
    if (!ok) report.failures.push_back({values, instance, ok});

    // advance odometer, last variable fastest (lexicographic order)
    std::size_t i = block.size();
    while (i > 0) {
      --i;
      if (values[i] < range.hi) {
        ++values[i];
        for (std::size_t j = i + 1; j < block.size(); ++j) values[j] = range.lo;
        break;
      }
      if (i == 0) return report;
    }
    if (block.empty()) return report;
  }
}

}  // namespace finterp
