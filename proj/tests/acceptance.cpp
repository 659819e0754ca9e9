// Acceptance suite: runs every acceptance criterion and prints one pass/fail
// line per criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "finterp/cli.hpp"
#include "finterp/combinators.hpp"
#include "finterp/dialectica.hpp"
#include "finterp/json_out.hpp"
#include "finterp/mr.hpp"
#include "finterp/parse.hpp"
#include "finterp/sequential.hpp"
#include "finterp/witness.hpp"

#include "gen.hpp"

using namespace finterp;

namespace {

struct Check {
  std::string name;
  std::function<bool(std::string&)> body;
  double time_limit_seconds = 0;  // 0 = no limit
};

VarDecls decls_of(const Json& vars) {
  VarDecls out;
  for (auto it = vars.begin(); it != vars.end(); ++it)
    out.emplace_back(it.key(), parse_type(SourceText{it.value().get<std::string>()}));
  return out;
}

VarTuple tuple_of(const Json& arr) {
  VarTuple t;
  for (const auto& entry : arr)
    t.vars.emplace_back(entry[0].get<std::string>(),
                        parse_type(SourceText{entry[1].get<std::string>()}));
  return t;
}

std::vector<Type> types_of(const Json& arr) {
  std::vector<Type> out;
  for (const auto& s : arr) out.push_back(parse_type(SourceText{s.get<std::string>()}));
  return out;
}

// 1. every strictly exists-free formula is a fixpoint of mr with empty tuple
bool exists_free_fixpoint(std::string& detail) {
  gen::Gen g(1001);
  int n = 1000;
  for (int i = 0; i < n; ++i) {
    auto scope = g.starter_scope();
    Formula f = g.random_exists_free(6, scope);
    MrResult r = mr_translate(f);
    if (!r.realizers.empty()) {
      detail = "nonempty realizer tuple for " + to_string(f);
      return false;
    }
    if (!alpha_eq(erase_dummy_foralls(r.formula), f)) {
      detail = "translation differs from input for " + to_string(f);
      return false;
    }
  }
  detail = std::to_string(n) + " formulas";
  return true;
}

// 2. Dialectica output always has a quantifier-free, well-typed matrix with
//    tuple types matching d_types
bool dialectica_shape(std::string& detail) {
  gen::Gen g(1002);
  int n = 1000;
  for (int i = 0; i < n; ++i) {
    auto scope = g.starter_scope();
    Formula f = g.random_formula(6, scope);
    DResult r = d_translate(f);
    if (!is_quantifier_free(r.matrix)) {
      detail = "matrix not quantifier-free for " + to_string(f);
      return false;
    }
    DTypes expected = d_types(f);
    if (r.exists_tuple.types() != expected.exists_types ||
        r.forall_tuple.types() != expected.forall_types) {
      detail = "tuple types disagree with d_types for " + to_string(f);
      return false;
    }
    TypingContext ctx;
    for (const auto& [name, t] : free_vars(f)) ctx.emplace_back(name, t);
    for (const auto& [name, t] : r.exists_tuple.vars) ctx.emplace_back(name, t);
    for (const auto& [name, t] : r.forall_tuple.vars) ctx.emplace_back(name, t);
    try {
      typecheck_formula(r.matrix, ctx);
    } catch (const Error& e) {
      detail = std::string("matrix ill-typed: ") + e.what();
      return false;
    }
  }
  detail = std::to_string(n) + " formulas";
  return true;
}

// 3. frozen hand-derived translation goldens match exactly up to alpha
bool translation_goldens(std::string& detail) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/translations.json");
  if (!in) {
    detail = "golden file missing";
    return false;
  }
  Json cases = Json::parse(in);
  int count = 0;
  for (const auto& c : cases) {
    const std::string name = c["name"];
    const std::string op = c["op"];
    VarDecls vars = decls_of(c["vars"]);
    Formula input = parse_formula(SourceText{c["input"].get<std::string>()}, vars);
    bool ok = true;
    if (op == "mr_types") {
      ok = mr_types(input) == types_of(c["types"]);
    } else if (op == "mr_translate") {
      MrResult r = mr_translate(input);
      VarTuple expected_tuple = tuple_of(c["realizers"]);
      VarDecls fvars = vars;
      for (const auto& [vn, vt] : expected_tuple.vars) fvars.emplace_back(vn, vt);
      Formula expected = parse_formula(SourceText{c["formula"].get<std::string>()}, fvars);
      ok = gen::tuple_alpha_eq(r.realizers, r.formula, expected_tuple, expected);
    } else if (op == "mr_apply" || op == "gamma1_soundness") {
      std::vector<Term> terms;
      for (const auto& t : c["terms"])
        terms.push_back(parse_term(SourceText{t.get<std::string>()}, vars));
      Formula got = op == "mr_apply" ? mr_apply_terms(input, terms)
                                     : gamma1_soundness_formula(input, terms);
      Formula expected = parse_formula(SourceText{c["expected"].get<std::string>()}, vars);
      ok = alpha_eq(got, expected);
    } else if (op == "d_types") {
      DTypes t = d_types(input);
      ok = t.exists_types == types_of(c["exists_types"]) &&
           t.forall_types == types_of(c["forall_types"]);
    } else if (op == "d_translate") {
      DResult r = d_translate(input);
      VarTuple expected_tuple = tuple_of(c["exists"]);
      for (const auto& v : tuple_of(c["forall"]).vars) expected_tuple.vars.push_back(v);
      VarTuple got_tuple = r.exists_tuple;
      for (const auto& v : r.forall_tuple.vars) got_tuple.vars.push_back(v);
      VarDecls fvars = vars;
      for (const auto& [vn, vt] : expected_tuple.vars) fvars.emplace_back(vn, vt);
      Formula expected = parse_formula(SourceText{c["matrix"].get<std::string>()}, fvars);
      ok = gen::tuple_alpha_eq(got_tuple, r.matrix, expected_tuple, expected);
    } else {
      detail = "unknown op " + op;
      return false;
    }
    if (!ok) {
      detail = "golden mismatch: " + name;
      return false;
    }
    ++count;
  }
  if (count < 12) {
    detail = "only " + std::to_string(count) + " goldens";
    return false;
  }
  detail = std::to_string(count) + " cases";
  return true;
}

// 4. class containments on the generated corpus plus a properness witness
bool class_containments(std::string& detail) {
  gen::Gen g(1004);
  for (int i = 0; i < 1000; ++i) {
    auto scope = g.starter_scope();
    Formula f = g.random_formula(6, scope);
    ClassificationReport strict = classify(f, ClassifyMode::Strict);
    ClassificationReport liberal = classify(f, ClassifyMode::Liberal);
    if (strict.exists_free && !strict.in_gamma1) {
      detail = "exists-free outside the realizability class: " + to_string(f);
      return false;
    }
    if (liberal.in_gamma2 && !liberal.in_gamma1) {
      detail = "containment violated for " + to_string(f);
      return false;
    }
  }
  gen::Gen g2(1005);
  for (int i = 0; i < 1000; ++i) {
    auto scope = g2.starter_scope();
    Formula f = g2.random_exists_free(6, scope);
    if (!classify(f, ClassifyMode::Strict).in_gamma1) {
      detail = "exists-free corpus formula outside the class: " + to_string(f);
      return false;
    }
  }
  Formula witness =
      parse_formula(SourceText{"(!x:0. (0 = 0 -> !y:0. y = y)) -> 0 = 0"});
  ClassificationReport w = classify(witness, ClassifyMode::Liberal);
  if (!w.in_gamma1 || w.in_gamma2) {
    detail = "properness witness misclassified";
    return false;
  }
  detail = "2000 formulas + properness witness";
  return true;
}

// 5. recursor values match an independent loop oracle; lambda terms agree
//    with their combinator translations
bool evaluator_oracles(std::string& detail) {
  struct StepFn {
    const char* text;
    unsigned long (*fn)(unsigned long, unsigned long);
  };
  const StepFn steps[] = {
      {"\\k:0. \\r:0. S r", [](unsigned long, unsigned long r) { return r + 1; }},
      {"\\k:0. \\r:0. r + r", [](unsigned long, unsigned long r) { return r + r; }},
      {"\\k:0. \\r:0. k + r + 2",
       [](unsigned long k, unsigned long r) { return k + r + 2; }},
  };
  for (const StepFn& s : steps) {
    Term step = parse_term(SourceText{s.text});
    for (unsigned long n = 0; n <= 8; ++n) {
      for (unsigned long b = 0; b <= 5; ++b) {
        unsigned long expected = b;
        for (unsigned long k = 0; k < n; ++k) expected = s.fn(k, expected);
        Term t = Term::app(
            Term::app(Term::app(Term::rec(Type::nat()), Term::numeral(n)),
                      Term::numeral(b)),
            step);
        if (eval_nat(t) != expected) {
          detail = std::string("recursor disagrees with loop oracle for ") + s.text;
          return false;
        }
      }
    }
  }
  gen::Gen g(1006);
  int terms = 200;
  for (int i = 0; i < terms; ++i) {
    Term t = g.closed_nat_term(4);
    Term c = to_combinators(t);
    if (eval_nat(t) != eval_nat(c)) {
      detail = "combinator translation changed the value of " + to_string(t);
      return false;
    }
  }
  detail = "162 recursor cases + " + std::to_string(terms) + " combinator terms";
  return true;
}

// 6. the doubling sentence and its sequential form check out semantically
bool sequentialization_semantics(std::string& detail) {
  Formula s = parse_formula(SourceText{"!x:0. ?y:0. y = x + x"});
  Term t = parse_term(SourceText{"\\x:0. x + x"});
  WitnessReport direct = check_witness(s, t, {0, 20});
  if (!direct.pass()) {
    detail = "witness check failed on the doubling sentence";
    return false;
  }
  Formula seq = sequentialize(s);
  const std::string xs = seq.bound_name();
  const std::string ys = seq.body().bound_name();
  const std::string n = seq.body().body().bound_name();
  Formula matrix = seq.body().body().body();
  Formula instantiated = substitute_many(
      matrix, {{xs, parse_term(SourceText{"\\n:0. n"})},
               {ys, parse_term(SourceText{"\\n:0. n + n"})}});
  for (unsigned long k = 0; k <= 20; ++k) {
    Formula at_k = substitute(instantiated, n, Term::numeral(k));
    if (!decide_qf(at_k)) {
      detail = "sequential form failed at n = " + std::to_string(k);
      return false;
    }
  }
  detail = "range 0..20, direct and sequential";
  return true;
}

// 7. parse/print round trips and byte-stable CLI JSON goldens
bool round_trips(std::string& detail) {
  gen::Gen g(1007);
  int nodes = 0;
  for (int i = 0; i < 400; ++i) {
    auto scope = g.starter_scope();
    Formula f = g.random_formula(6, scope);
    auto ffv = free_vars(f);
    VarDecls decls(ffv.begin(), ffv.end());
    if (!alpha_eq(parse_formula(SourceText{to_string(f)}, decls), f)) {
      detail = "formula round trip failed: " + to_string(f);
      return false;
    }
    ++nodes;
    Term t = g.term_of(g.random_type(2), scope, 4);
    auto tfv = free_vars(t);
    VarDecls tdecls(tfv.begin(), tfv.end());
    if (!alpha_eq(parse_term(SourceText{to_string(t)}, tdecls), t)) {
      detail = "term round trip failed: " + to_string(t);
      return false;
    }
    ++nodes;
    Type ty = g.random_type(3);
    if (parse_type(SourceText{to_string(ty)}) != ty) {
      detail = "type round trip failed: " + to_string(ty);
      return false;
    }
    ++nodes;
  }

  const std::string corpus = CORPUS_DIR;
  const std::vector<std::vector<std::string>> commands = {
      {"classify", "--json", "--liberal-qf", corpus + "/gamma_shapes.ft"},
      {"mr", "--json", corpus + "/basics.ft"},
      {"dialectica", "--json", corpus + "/basics.ft"},
      {"report", "--json", corpus + "/uniformization.ft"},
      {"witness", "--json", "--item", "doubling", "--use", "always_zero", "--range",
       "0..20", corpus + "/basics.ft"},
  };
  const char* golden_names[] = {"classify_gamma_shapes.json", "mr_basics.json",
                                "dialectica_basics.json", "report_uniformization.json",
                                "witness_fail.json"};
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::ostringstream out1, err1, out2, err2;
    cli::run_cli(commands[i], out1, err1);
    cli::run_cli(commands[i], out2, err2);
    if (out1.str() != out2.str()) {
      detail = std::string("output not byte-stable for ") + golden_names[i];
      return false;
    }
    std::ifstream gf(std::string(GOLDEN_DIR) + "/cli/" + golden_names[i],
                     std::ios::binary);
    std::ostringstream want;
    want << gf.rdbuf();
    if (!gf || want.str() != out1.str()) {
      detail = std::string("golden mismatch for ") + golden_names[i];
      return false;
    }
  }
  detail = std::to_string(nodes) + " nodes + " + std::to_string(commands.size()) +
           " golden commands";
  return true;
}

// 8. the double-negation variant of every exists-free formula is negative
bool negative_translation(std::string& detail) {
  gen::Gen g(1008);
  int n = 1000;
  for (int i = 0; i < n; ++i) {
    auto scope = g.starter_scope();
    Formula f = g.random_exists_free(6, scope);
    Formula d = double_negate_primes(f);
    if (!classify(d, ClassifyMode::Strict).negative) {
      detail = "double negation not negative for " + to_string(f);
      return false;
    }
  }
  detail = std::to_string(n) + " formulas";
  return true;
}

}  // namespace

int main() {
  std::vector<Check> checks = {
      {"exists-free formulas are mr fixpoints with empty tuples", exists_free_fixpoint,
       10.0},
      {"Dialectica matrices are quantifier-free, well-typed, type-aligned",
       dialectica_shape, 30.0},
      {"hand-derived translation goldens match up to alpha", translation_goldens},
      {"class containments hold; proper-subset witness classified", class_containments},
      {"recursor loop oracle and combinator agreement", evaluator_oracles, 30.0},
      {"doubling sentence checks out directly and sequentially",
       sequentialization_semantics},
      {"parse/print round trips and byte-stable CLI goldens", round_trips},
      {"double negation of exists-free formulas is negative", negative_translation},
  };

  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = checks[i].body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && checks[i].time_limit_seconds > 0 && elapsed > checks[i].time_limit_seconds) {
      ok = false;
      detail += "; over time limit of " + std::to_string(checks[i].time_limit_seconds) + "s";
    }
    std::printf("[%s] %zu/%zu %s (%s; %.2fs)\n", ok ? "PASS" : "FAIL", i + 1,
                checks.size(), checks[i].name.c_str(), detail.c_str(), elapsed);
    if (!ok) ++failures;
  }
  return failures;
}
