#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "paw/engine.hpp"
#include "paw/syntax.hpp"
#include "support/oracle.hpp"

using namespace paw;

namespace {

const Variable x1{1}, x2{2}, x3{3};

// walk the stored tree and fail on anything that is not a primitive node
void assert_primitive(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
    case Formula::Kind::Rel:
      return;
    case Formula::Kind::Not:
      assert_primitive(f.sub());
      return;
    case Formula::Kind::Implies:
      assert_primitive(f.lhs());
      assert_primitive(f.rhs());
      return;
    case Formula::Kind::ForAll:
      assert_primitive(f.body());
      return;
  }
  FAIL("non-primitive node survived construction");
}

}  // namespace

TEST_CASE("numerals are unary successor towers") {
  CHECK(mk_numeral(0).term() == Term::zero());
  CHECK(mk_numeral(2).term() == Term::succ(Term::succ(Term::zero())));
  CHECK(mk_numeral(2).term().succ_depth() == 2);

  Numeral seven = mk_numeral(7);
  CHECK(seven.term().succ_depth() == 7);
  CHECK(eval_term(seven.term(), Assignment{}) == 7);
  CHECK(seven.value() == 7);
}

TEST_CASE("substitution replaces free occurrences only") {
  Formula f = Formula::eq(Term::var(x1), Term::zero());
  Formula g = substitute(f, x1, mk_numeral(1).term());
  CHECK(g == Formula::eq(Term::succ(Term::zero()), Term::zero()));

  Formula bound = Formula::forall(x1, Formula::eq(Term::var(x1), Term::var(x2)));
  CHECK(substitute(bound, x1, mk_numeral(3).term()) == bound);
}

TEST_CASE("substitution renames binders to avoid capture") {
  // (Ax2)(x1 = x2) with x1 := x2' must not capture the substituted x2
  Formula f = Formula::forall(x2, Formula::eq(Term::var(x1), Term::var(x2)));
  Term t = Term::succ(Term::var(x2));
  Formula out = substitute(f, x1, t);

  Formula expected =
      Formula::forall(x3, Formula::eq(Term::succ(Term::var(x2)), Term::var(x3)));
  CHECK(out == expected);

  auto fv_before = free_variables(f);
  auto fv_after = free_variables(out);
  CHECK(fv_before == std::set<Variable>{x1});
  CHECK(fv_after == std::set<Variable>{x2});
}

TEST_CASE("free variables") {
  CHECK(free_variables(Formula::eq(Term::zero(), Term::zero())).empty());

  Formula f = Formula::forall(x1, Formula::eq(Term::var(x1), Term::var(x2)));
  CHECK(free_variables(f) == std::set<Variable>{x2});

  // closed induction instance over F(x) := (x = x)
  Formula fx = Formula::eq(Term::var(x1), Term::var(x1));
  Formula ind = Formula::implies(
      substitute(fx, x1, Term::zero()),
      Formula::implies(
          Formula::forall(x1, Formula::implies(fx, substitute(fx, x1,
                                                              Term::succ(Term::var(x1))))),
          Formula::forall(x1, fx)));
  CHECK(free_variables(ind).empty());
}

TEST_CASE("derived constructors desugar at construction") {
  Formula atom = Formula::eq(Term::var(x1), Term::zero());

  Formula ex = Formula::exists(x1, atom);
  CHECK(ex == Formula::not_(Formula::forall(x1, Formula::not_(atom))));

  Formula a = Formula::eq(Term::zero(), Term::zero());
  CHECK(Formula::or_(a, a) == Formula::implies(Formula::not_(a), a));
  CHECK(Formula::and_(a, atom) == Formula::not_(Formula::implies(a, Formula::not_(atom))));

  // the zero-or-successor disjunction stores as an implication
  Formula g = Formula::or_(
      Formula::eq(Term::var(x1), Term::zero()),
      Formula::not_(Formula::forall(x2,
                                    Formula::not_(Formula::eq(Term::var(x1),
                                                              Term::succ(Term::var(x2)))))));
  CHECK(g.kind() == Formula::Kind::Implies);
  CHECK(g.lhs() == Formula::not_(Formula::eq(Term::var(x1), Term::zero())));
  assert_primitive(g);
}

TEST_CASE("no derived node survives random construction") {
  std::mt19937 rng(20240817);
  test::GenConfig cfg;
  for (int i = 0; i < 200; ++i) {
    Formula f = test::random_formula(rng, cfg, 4);
    assert_primitive(f);
    Formula wrapped = Formula::and_(Formula::or_(f, f), Formula::exists(x1, f));
    assert_primitive(wrapped);
  }
}

TEST_CASE("substituting a variable for itself is the identity") {
  std::mt19937 rng(20240818);
  test::GenConfig cfg;
  for (int i = 0; i < 200; ++i) {
    Formula f = test::random_formula(rng, cfg, 4);
    CHECK(substitute(f, x1, Term::var(x1)) == f);
  }
}

TEST_CASE("closed substitution removes exactly the substituted variable") {
  std::mt19937 rng(20240819);
  test::GenConfig cfg;
  for (int i = 0; i < 200; ++i) {
    Formula f = test::random_formula(rng, cfg, 4);
    auto before = free_variables(f);
    if (!before.count(x1)) continue;
    Formula g = substitute(f, x1, mk_numeral(4).term());
    auto after = free_variables(g);
    auto expected = before;
    expected.erase(x1);
    CHECK(after == expected);
  }
}

TEST_CASE("numeral depth matches its value") {
  for (unsigned n = 0; n < 40; ++n) CHECK(mk_numeral(n).term().succ_depth() == n);
}

TEST_CASE("variable indices are positive") {
  CHECK_THROWS_AS(Variable{0}, std::invalid_argument);
}
