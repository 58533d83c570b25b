#include <gtest/gtest.h>

#include "planicheck/logic.hpp"
#include "planicheck/random.hpp"

namespace planicheck::logic {
namespace {

std::string reprint(const std::string& s) { return print(*parse_formula(s)); }

Equivalence equiv(const std::string& a, const std::string& b, const std::string& constraint = "") {
  const FormulaPtr fa = parse_formula(a), fb = parse_formula(b);
  if (constraint.empty()) return equivalent(*fa, *fb);
  const FormulaPtr fc = parse_formula(constraint);
  return equivalent(*fa, *fb, fc.get());
}

TEST(Parse, PrecedenceAndAssociativity) {
  const FormulaPtr f = parse_formula("t & p | q -> r");
  ASSERT_EQ(f->op, Op::Implies);
  EXPECT_EQ(f->lhs->op, Op::Or);
  EXPECT_EQ(f->lhs->lhs->op, Op::And);
  EXPECT_EQ(parse_formula("!p & q")->op, Op::And);
  EXPECT_EQ(parse_formula("p <-> q -> r")->op, Op::Iff);
  // left associative
  const FormulaPtr g = parse_formula("p -> q -> r");
  EXPECT_EQ(g->lhs->op, Op::Implies);
  EXPECT_EQ(g->rhs->op, Op::Atom);
}

TEST(Parse, ErrorsReportTheTokenIndex) {
  try {
    (void)parse_formula("p -> -> q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), 3u);
  }
  EXPECT_THROW((void)parse_formula(""), ParseError);
  EXPECT_THROW((void)parse_formula("(p & q"), ParseError);
  EXPECT_THROW((void)parse_formula("p q"), ParseError);
  EXPECT_THROW((void)parse_formula("p $ q"), ParseError);
}

TEST(Print, MinimalParentheses) {
  EXPECT_EQ(reprint("(t & (p | q)) -> r"), "t & (p | q) -> r");
  EXPECT_EQ(reprint("((p -> q) -> r)"), "p -> q -> r");
  EXPECT_EQ(reprint("p -> (q -> r)"), "p -> (q -> r)");
  EXPECT_EQ(reprint("!(p ^ q)"), "!(p ^ q)");
  EXPECT_EQ(reprint("!!p"), "!!p");
}

FormulaPtr random_formula(Rng& rng, int depth) {
  static const char* names[] = {"p", "q", "r", "t", "long_name1"};
  if (depth == 0 || rng.uniform() < 0.2) return atom(names[rng.integer(0, 4)]);
  if (rng.uniform() < 0.15) return negate(random_formula(rng, depth - 1));
  static const Op ops[] = {Op::And, Op::Or, Op::Xor, Op::Implies, Op::Iff};
  return binary(ops[rng.integer(0, 4)], random_formula(rng, depth - 1), random_formula(rng, depth - 1));
}

TEST(Print, RoundTripsRandomTrees) {
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const FormulaPtr f = random_formula(rng, 5);
    const std::string s = print(*f);
    const FormulaPtr g = parse_formula(s);
    ASSERT_TRUE(same_tree(*f, *g)) << s;
    EXPECT_EQ(print(*g), s);
  }
}

TEST(Eval, Connectives) {
  const Assignment tf{{"p", true}, {"q", false}};
  EXPECT_FALSE(eval(*parse_formula("p -> q"), tf));
  EXPECT_TRUE(eval(*parse_formula("q -> p"), tf));
  EXPECT_TRUE(eval(*parse_formula("p ^ q"), tf));
  EXPECT_FALSE(eval(*parse_formula("p <-> q"), tf));
  EXPECT_TRUE(eval(*parse_formula("!q & p"), tf));
}

TEST(Equivalence, ClassicalLaws) {
  EXPECT_TRUE(equiv("p -> q", "!p | q").equivalent);
  EXPECT_TRUE(equiv("!(p & q)", "!p | !q").equivalent);
  EXPECT_TRUE(equiv("p ^ q", "(p | q) & !(p & q)").equivalent);
  EXPECT_TRUE(equiv("p <-> q", "(p -> q) & (q -> p)").equivalent);
  const Equivalence e = equiv("p -> q", "q -> p");
  EXPECT_FALSE(e.equivalent);
  ASSERT_TRUE(e.witness.has_value());
  // first differing row in binary order: p = false, q = true
  EXPECT_FALSE(e.witness->at("p"));
  EXPECT_TRUE(e.witness->at("q"));
  EXPECT_EQ(e.rows, 4u);
}

TEST(Equivalence, ConstraintRestrictsRows) {
  const Equivalence free = equiv("p | q", "p ^ q");
  EXPECT_FALSE(free.equivalent);
  EXPECT_TRUE(free.witness->at("p") && free.witness->at("q"));
  const Equivalence constrained = equiv("p | q", "p ^ q", "!(p & q)");
  EXPECT_TRUE(constrained.equivalent);
  EXPECT_EQ(constrained.rows, 4u);
  EXPECT_EQ(constrained.satisfying, 3u);
}

TEST(Equivalence, RelationProperties) {
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    const FormulaPtr f = random_formula(rng, 3), g = random_formula(rng, 3), h = random_formula(rng, 3);
    EXPECT_TRUE(equivalent(*f, *f).equivalent);
    EXPECT_EQ(equivalent(*f, *g).equivalent, equivalent(*g, *f).equivalent);
    if (equivalent(*f, *g).equivalent && equivalent(*g, *h).equivalent) EXPECT_TRUE(equivalent(*f, *h).equivalent);
  }
}

TEST(Equivalence, AtomBudget) {
  std::string big = "a0";
  for (int i = 1; i <= 20; ++i) big += " & a" + std::to_string(i);
  EXPECT_THROW((void)equiv(big, "a0"), AtomBudgetExceeded);
  std::string ok = "a0";
  for (int i = 1; i < 12; ++i) ok += " | a" + std::to_string(i);
  EXPECT_TRUE(equiv(ok, ok).equivalent);
}

TEST(Scheme, InclusiveForms) {
  const ProblemScheme s = compose_scheme("t", "p", "q", "r", Disjunction::Inclusive);
  EXPECT_EQ(print(*s.generating_1), "t & p -> r");
  EXPECT_EQ(print(*s.generating_2), "t & q -> r");
  EXPECT_EQ(print(*s.combined), "t & (p | q) -> r");
  EXPECT_EQ(print(*s.inverse), "t & r -> p | q");
}

TEST(Scheme, ExclusiveForms) {
  const ProblemScheme s = compose_scheme("t", "p", "q", "r", Disjunction::Exclusive);
  EXPECT_EQ(print(*s.combined), "t & (p ^ q) -> r");
  EXPECT_EQ(print(*s.inverse), "t & r -> p ^ q");
}

TEST(Scheme, RepeatedAtomsAreRejected) {
  EXPECT_THROW((void)compose_scheme("t", "p", "p", "r", Disjunction::Inclusive), SchemeError);
  EXPECT_THROW((void)compose_scheme("t", "p", "q", "t", Disjunction::Exclusive), SchemeError);
}

TEST(Identities, AllSixHold) {
  const auto checks = composition_identities();
  ASSERT_EQ(checks.size(), 6u);
  for (const auto& c : checks) {
    EXPECT_TRUE(c.result.equivalent) << c.name;
    EXPECT_EQ(c.result.rows, 16u) << c.name;
    EXPECT_EQ(c.result.satisfying, c.constraint ? 12u : 16u) << c.name;
  }
}

TEST(Identities, MutatedCompositionFails) {
  // swapping the disjunction for a conjunction breaks the identity
  const auto c = check_equivalence("mutated", "(t & p -> r) & (t & q -> r)", "t & (p & q) -> r", std::nullopt);
  EXPECT_FALSE(c.result.equivalent);
}

TEST(Identities, ExclusiveNeedsItsConstraint) {
  const auto c = check_equivalence("unconstrained", "(t & p -> r) & (t & q -> r)", "t & (p ^ q) -> r", std::nullopt);
  ASSERT_FALSE(c.result.equivalent);
  EXPECT_TRUE(c.result.witness->at("p"));
  EXPECT_TRUE(c.result.witness->at("q"));
  EXPECT_TRUE(c.result.witness->at("t"));
  EXPECT_FALSE(c.result.witness->at("r"));
}

TEST(Identities, NegatedXorExpansion) {
  EXPECT_TRUE(equiv("!(p ^ q)", "p & q | !p & !q").equivalent);
  EXPECT_TRUE(equiv("!(p ^ q)", "!p & !q", "!(p & q)").equivalent);
}

}  // namespace
}  // namespace planicheck::logic
