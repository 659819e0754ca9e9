#include <gtest/gtest.h>

#include "finterp/combinators.hpp"
#include "finterp/eval.hpp"
#include "finterp/parse.hpp"
#include "finterp/print.hpp"
#include "finterp/subst.hpp"
#include "finterp/syntax.hpp"
#include "finterp/typing.hpp"

#include "gen.hpp"

using namespace finterp;

namespace {

Formula fml(const std::string& s, VarDecls decls = {}) {
  return parse_formula(SourceText{s}, std::move(decls));
}

Term trm(const std::string& s, VarDecls decls = {}) {
  return parse_term(SourceText{s}, std::move(decls));
}

TEST(Types, LevelsAndAbbreviation) {
  EXPECT_EQ(Type::nat().level(), 0);
  EXPECT_EQ(Type::one().level(), 1);
  EXPECT_EQ(Type::arrow(Type::one(), Type::nat()).level(), 2);
  EXPECT_EQ(Type::arrow(Type::nat(), Type::one()).level(), 1);
  EXPECT_EQ(parse_type(SourceText{"1"}), Type::arrow(Type::nat(), Type::nat()));
}

TEST(InferType, Examples) {
  EXPECT_EQ(infer_type(Term::zero(), {}), Type::nat());
  EXPECT_EQ(infer_type(Term::proj(Type::nat(), Type::nat()), {}),
            Type::arrow(Type::nat(), Type::arrow(Type::nat(), Type::nat())));
  Term rec_app = trm("rec[0] 2 0 (\\n:0. \\r:0. S r)");
  EXPECT_EQ(infer_type(rec_app, {}), Type::nat());
}

TEST(InferType, Errors) {
  Term unbound = Term::var("w", Type::nat());
  EXPECT_THROW(infer_type(unbound, {}), Error);
  try {
    infer_type(unbound, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnboundVariable);
  }
  Term bad_app = Term::app(Term::numeral(1), Term::numeral(2));
  try {
    infer_type(bad_app, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TypeMismatch);
  }
}

TEST(Substitute, Examples) {
  VarDecls xd{{"x", Type::nat()}};
  Formula a = fml("?y:0. y = x", xd);
  Formula expected = fml("?y:0. y = S 0");
  EXPECT_TRUE(alpha_eq(substitute(a, "x", trm("S 0")), expected));

  // capture: the bound y must be renamed
  Formula b = fml("!y:0. y = x", xd);
  Formula renamed = substitute(b, "x", Term::var("y", Type::nat()));
  EXPECT_TRUE(alpha_eq(renamed, fml("!w:0. w = y", {{"y", Type::nat()}})));
  EXPECT_NE(renamed.bound_name(), "y");

  Term sum = trm("x + x", xd);
  EXPECT_TRUE(alpha_eq(substitute(sum, "x", Term::numeral(3)), trm("3 + 3")));
}

TEST(Substitute, TypeChecked) {
  VarDecls xd{{"x", Type::nat()}};
  Formula a = fml("?y:0. y = x", xd);
  try {
    substitute(a, "x", trm("\\w:0. w"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TypeMismatch);
  }
}

TEST(Substitute, IdentityUpToAlpha) {
  gen::Gen g(11);
  for (int i = 0; i < 300; ++i) {
    auto scope = g.starter_scope();
    Formula f = g.random_formula(4, scope);
    for (const auto& [n, t] : free_vars(f))
      EXPECT_TRUE(alpha_eq(substitute(f, n, Term::var(n, t)), f));
  }
}

TEST(AlphaEq, Examples) {
  EXPECT_TRUE(alpha_eq(fml("!x:0. x = x"), fml("!y:0. y = y")));
  EXPECT_FALSE(alpha_eq(fml("!x:0. x = x"), fml("!x:0. x = 0")));
  EXPECT_TRUE(alpha_eq(trm("\\x:0. x"), trm("\\z:0. z")));
  // differing binder types are distinguished
  EXPECT_FALSE(alpha_eq(trm("\\x:0. 0"), trm("\\x:1. 0")));
}

TEST(AlphaEq, EquivalenceOnCorpus) {
  gen::Gen g(23);
  std::vector<Formula> fs;
  for (int i = 0; i < 1000; ++i) {
    auto scope = g.starter_scope();
    fs.push_back(g.random_formula(6, scope));
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    EXPECT_TRUE(alpha_eq(fs[i], fs[i]));  // reflexive
    if (i + 1 < fs.size()) {
      bool ab = alpha_eq(fs[i], fs[i + 1]);
      bool ba = alpha_eq(fs[i + 1], fs[i]);
      EXPECT_EQ(ab, ba);  // symmetric
    }
  }
  // transitivity across alpha-renamed copies
  for (std::size_t i = 0; i + 2 < fs.size(); i += 97) {
    if (alpha_eq(fs[i], fs[i + 1]) && alpha_eq(fs[i + 1], fs[i + 2]))
      EXPECT_TRUE(alpha_eq(fs[i], fs[i + 2]));
  }
}

TEST(FreeVars, Examples) {
  auto fv = free_vars(fml("?y:0. y = x", {{"x", Type::nat()}}));
  ASSERT_EQ(fv.size(), 1u);
  EXPECT_TRUE(fv.count("x"));

  auto fv2 = free_vars(trm("\\x:0. x + z", {{"z", Type::nat()}}));
  ASSERT_EQ(fv2.size(), 1u);
  EXPECT_TRUE(fv2.count("z"));

  EXPECT_TRUE(free_vars(fml("0 = 0")).empty());
}

TEST(FreshTuple, DefaultScheme) {
  VarTuple t = fresh_tuple({Type::nat()}, {});
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.vars[0].first, "z0");
  EXPECT_EQ(t.vars[0].second, Type::nat());

  EXPECT_TRUE(fresh_tuple({}, {"anything"}).empty());

  VarTuple two = fresh_tuple({Type::nat(), Type::one()}, {"z0"});
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two.vars[0].first, "z1");
  EXPECT_EQ(two.vars[1].first, "z2");
  EXPECT_TRUE(two.distinct());
  EXPECT_TRUE(two.fresh_for({"z0"}));
}

TEST(EraseDummyForalls, Examples) {
  EXPECT_TRUE(alpha_eq(erase_dummy_foralls(fml("!x:0. 0 = 0")), fml("0 = 0")));
  Formula keep = fml("!x:0. x = x");
  EXPECT_TRUE(alpha_eq(erase_dummy_foralls(keep), keep));
  EXPECT_TRUE(alpha_eq(erase_dummy_foralls(fml("!x:0. !y:1. x = x")), fml("!x:0. x = x")));
}

TEST(EraseDummyForalls, IdempotentAndFreeVarPreserving) {
  gen::Gen g(37);
  for (int i = 0; i < 400; ++i) {
    auto scope = g.starter_scope();
    Formula f = g.random_formula(5, scope);
    Formula once = erase_dummy_foralls(f);
    EXPECT_TRUE(alpha_eq(erase_dummy_foralls(once), once));
    EXPECT_EQ(free_vars(once), free_vars(f));
  }
}

TEST(ExpandHigherEq, Examples) {
  VarDecls fg{{"f", Type::one()}, {"g", Type::one()}};
  Formula e = expand_higher_eq(trm("f", fg), trm("g", fg));
  EXPECT_TRUE(alpha_eq(e, fml("!v:0. f v = g v", fg)));

  EXPECT_TRUE(alpha_eq(expand_higher_eq(trm("S 0"), trm("1 + 0")), fml("S 0 = 1 + 0")));

  Type t2 = Type::arrow(Type::one(), Type::nat());
  VarDecls FG{{"F", t2}, {"G", t2}};
  Formula e2 = expand_higher_eq(trm("F", FG), trm("G", FG));
  EXPECT_TRUE(alpha_eq(e2, fml("!v:(0->0). F v = G v", FG)));

  EXPECT_THROW(expand_higher_eq(trm("f", fg), trm("0")), Error);
}

TEST(ToCombinators, IdentityForm) {
  Term id = to_combinators(trm("\\x:0. x"));
  EXPECT_TRUE(alpha_eq(id, trm("subst[0,(0->0),0] proj[0,(0->0)] proj[0,0]")));
  for (unsigned long k = 0; k <= 5; ++k)
    EXPECT_EQ(eval_nat(Term::app(id, Term::numeral(k))), k);
}

TEST(ToCombinators, LambdaFreeUnchanged) {
  EXPECT_TRUE(alpha_eq(to_combinators(Term::zero()), Term::zero()));
  Term t = trm("rec[0] 2 1 (\\n:0. \\r:0. r + r)");
  Term c = to_combinators(t);
  EXPECT_EQ(eval_nat(c), eval_nat(t));
}

TEST(ToCombinators, SuccessorFunction) {
  Term n = to_combinators(trm("\\x:0. S x"));
  EXPECT_EQ(type_of(n), Type::one());
  for (unsigned long k = 0; k <= 5; ++k)
    EXPECT_EQ(eval_nat(Term::app(n, Term::numeral(k))), k + 1);
  // result must be lambda-free
  struct NoLam {
    void operator()(const Term& t) const {
      EXPECT_NE(t.kind(), TermKind::Lam);
      for (std::size_t i = 0; i < t.child_count(); ++i) (*this)(t.child(i));
    }
  };
  NoLam{}(n);
}

TEST(ToCombinators, ClosedNatAgreement) {
  gen::Gen g(41);
  EvalConfig cfg;
  for (int i = 0; i < 200; ++i) {
    Term t = g.closed_nat_term(4);
    Term c = to_combinators(t);
    EXPECT_EQ(type_of(c), Type::nat());
    EXPECT_EQ(eval_nat(t, cfg), eval_nat(c, cfg)) << to_string(t);
  }
}

}  // namespace
