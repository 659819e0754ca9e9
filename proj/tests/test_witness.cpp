#include <gtest/gtest.h>

#include "finterp/parse.hpp"
#include "finterp/witness.hpp"

using namespace finterp;

namespace {

Formula fml(const std::string& s, VarDecls decls = {}) {
  return parse_formula(SourceText{s}, std::move(decls));
}

Term trm(const std::string& s, VarDecls decls = {}) {
  return parse_term(SourceText{s}, std::move(decls));
}

TEST(CheckWitness, Pass) {
  Formula s = fml("!x:0. ?y:0. y = x + x");
  WitnessReport r = check_witness(s, trm("\\x:0. x + x"), {0, 20});
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checked, 21u);
  EXPECT_EQ(r.range, "0..20");
}

TEST(CheckWitness, FailAtOne) {
  Formula s = fml("!x:0. ?y:0. y = x + x");
  WitnessReport r = check_witness(s, trm("\\x:0. 0"), {0, 20});
  EXPECT_FALSE(r.pass());
  ASSERT_FALSE(r.failures.empty());
  EXPECT_EQ(r.failures.front().inputs, std::vector<long>{1});
  EXPECT_EQ(std::string(r.verdict()), "fail");
  // every reported failure re-decides to false
  for (const auto& f : r.failures) {
    EXPECT_FALSE(decide_qf(f.instance));
    EXPECT_FALSE(f.decision);
  }
}

TEST(CheckWitness, Errors) {
  try {
    check_witness(fml("!x:0. ?y:0. ?w:0. w = y"), trm("\\x:0. x"), {0, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotQuantifierFree);
  }
  try {
    check_witness(fml("?y:0. !x:0. x = y"), trm("\\x:0. x"), {0, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotForallExists);
  }
  try {
    check_witness(fml("!x:1. ?y:1. (!n:0. y n = x n)"), trm("\\x:0. x"), {0, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeUnsupported);
  }
  try {
    check_witness(fml("!x:0. ?y:0. y = x"), trm("\\x:0. \\w:0. x"), {0, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TypeMismatch);
  }
}

TEST(CheckWitness, SubrangeMonotone) {
  Formula s = fml("!x:0. ?y:0. y + y = x * 2");
  Term t = trm("\\x:0. x");
  WitnessReport full = check_witness(s, t, {0, 15});
  EXPECT_TRUE(full.pass());
  WitnessReport sub = check_witness(s, t, {3, 7});
  EXPECT_TRUE(sub.pass());
}

TEST(CheckMrWitness, Pass) {
  Formula a = fml("!x:0. ?y:0. y = S x");
  WitnessReport r = check_mr_witness(a, {trm("\\x:0. S x")}, {0, 10});
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checked, 11u);
}

TEST(CheckMrWitness, FailOnPrimeInstance) {
  Formula a = fml("?y:0. y = 3");
  WitnessReport r = check_mr_witness(a, {Term::numeral(2)}, {0, 10});
  EXPECT_FALSE(r.pass());
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_TRUE(r.failures[0].inputs.empty());
  EXPECT_TRUE(alpha_eq(r.failures[0].instance, fml("2 = 3")));
}

TEST(CheckMrWitness, TupleOverProduct) {
  // conjunction of two existentials: realizer tuple of length 2, empty block
  Formula a = fml("(?y:0. y = 1) & (?w:0. w = 2)");
  WitnessReport ok = check_mr_witness(a, {Term::numeral(1), Term::numeral(2)}, {0, 3});
  EXPECT_TRUE(ok.pass());

  // universally quantified statement: the block is sampled
  Formula b = fml("!x:0. ?y:0. y = x * 0");
  WitnessReport sampled = check_mr_witness(b, {trm("\\x:0. 0")}, {0, 9});
  EXPECT_TRUE(sampled.pass());
  EXPECT_EQ(sampled.checked, 10u);
}

TEST(CheckMrWitness, ShapeUnsupported) {
  Formula a = fml("!f:(0->0). 0 = 0");
  try {
    check_mr_witness(a, {}, {0, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeUnsupported);
  }
}

TEST(CheckMrWitness, InstanceCap) {
  // three nested universal type-0 quantifiers over a wide range blow the cap
  Formula a = fml("!x:0. !y:0. !w:0. x + y + w = w + y + x");
  try {
    check_mr_witness(a, {}, {0, 99});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InstanceCapExceeded);
  }
  // under the cap it runs (and passes: addition is commutative)
  WitnessReport r = check_mr_witness(a, {}, {0, 9});
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checked, 1000u);
}

TEST(CheckMrWitness, LexicographicFailureOrder) {
  Formula a = fml("!x:0. !y:0. x = y");
  WitnessReport r = check_mr_witness(a, {}, {0, 1});
  ASSERT_EQ(r.failures.size(), 2u);
  EXPECT_EQ(r.failures[0].inputs, (std::vector<long>{0, 1}));
  EXPECT_EQ(r.failures[1].inputs, (std::vector<long>{1, 0}));
}

}  // namespace
