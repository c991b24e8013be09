#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "paw/kernel.hpp"
#include "paw/print.hpp"
#include "support/derivations.hpp"

using namespace paw;

namespace {

const Variable x1{1}, x2{2};

Formula parsed(const std::string& text) {
  ParseResult r = parse_formula(text);
  REQUIRE(std::holds_alternative<Formula>(r));
  return std::get<Formula>(r);
}

std::string read_data(const std::string& rel) {
  std::ifstream in(std::string(PAW_TEST_DATA) + "/" + rel, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing test data file " << rel);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Proof parsed_proof(const std::string& text) {
  auto r = parse_proof(text);
  if (auto* err = std::get_if<ParseError>(&r)) FAIL("proof parse error: " << err->message);
  return std::get<Proof>(r);
}

bool matches(const std::vector<AxiomMatch>& ms, AxiomId id) {
  for (const AxiomMatch& m : ms)
    if (m.id == id) return true;
  return false;
}

}  // namespace

TEST_CASE("PA schema matching recovers the instantiation") {
  Formula pa3_inst = parsed("~(0 = 0')");
  auto ms = match_pa_axiom(pa3_inst);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].id == AxiomId::PA3);
  CHECK(ms[0].term_subst.at(1) == Term::zero());

  Formula pa5_inst = parsed("(0 + 0) = 0");
  ms = match_pa_axiom(pa5_inst);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].id == AxiomId::PA5);
  CHECK(ms[0].term_subst.at(1) == Term::zero());

  CHECK(match_pa_axiom(parsed("0 = 0")).empty());
}

TEST_CASE("PA matching is sound: the unifier reproduces the formula") {
  std::vector<Formula> instances = {
      parsed("~(0 = 0')"),
      parsed("(0 + 0) = 0"),
      parsed("(x1 * x2') = ((x1 * x2) + x1)"),
      parsed("(x2 + x3') = (x2 + x3)'"),
      parsed("x2' = x3' -> x2 = x3"),
      parsed("x3 = x3 -> (x3 = 0' -> x3 = 0')"),
      parsed("(0'' + 0) = 0''"),
  };
  for (const Formula& f : instances) {
    auto ms = match_pa_axiom(f);
    REQUIRE_MESSAGE(!ms.empty(), print_formula(f));
    for (const AxiomMatch& m : ms) {
      if (m.id == AxiomId::PA9) continue;
      // simultaneous substitution: park the schema variables on fresh
      // indices first so the unifier's terms cannot collide with them
      Formula rebuilt = pa_axiom_formula(m.id);
      for (unsigned i : {1u, 2u, 3u})
        rebuilt = substitute(rebuilt, Variable(i), Term::var(Variable(1000 + i)));
      for (const auto& [idx, t] : m.term_subst)
        rebuilt = substitute(rebuilt, Variable(1000 + idx), t);
      CHECK(rebuilt == f);
    }
  }
}

TEST_CASE("induction schema instances match and rebuild") {
  Formula g = Formula::eq(Term::var(x1), Term::var(x1));
  Formula inst = induction_instance(g, x1);
  auto ms = match_pa_axiom(inst);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].id == AxiomId::PA9);
  CHECK(*ms[0].induction_formula == g);
  CHECK(*ms[0].induction_var == x1);

  // right top shape, broken step part
  Formula broken = Formula::implies(
      substitute(g, x1, Term::zero()),
      Formula::implies(Formula::forall(x1, Formula::implies(g, g)), Formula::forall(x1, g)));
  CHECK(match_pa_axiom(broken).empty());

  // a second free variable rides along untouched
  Formula g2 = Formula::eq(Term::var(x1), Term::var(x2));
  CHECK(matches(match_pa_axiom(induction_instance(g2, x1)), AxiomId::PA9));
}

TEST_CASE("logical axiom matching") {
  CHECK(matches(match_logical_axiom(parsed("0 = 0 -> (0 = 0' -> 0 = 0)")), AxiomId::L1));

  Formula l4 = parsed("(Ax1)(x1 = x1) -> 0 = 0");
  auto ms = match_logical_axiom(l4);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].id == AxiomId::L4);
  CHECK(*ms[0].instantiation_term == Term::zero());

  Formula l5 = parsed("(Ax1)(0 = 0 -> x1 = x1) -> (0 = 0 -> (Ax1)(x1 = x1))");
  CHECK(matches(match_logical_axiom(l5), AxiomId::L5));

  // x1 free in the antecedent blocks L5
  Formula not_l5 = parsed("(Ax1)(x1 = 0 -> x1 = x1) -> (x1 = 0 -> (Ax1)(x1 = x1))");
  CHECK(!matches(match_logical_axiom(not_l5), AxiomId::L5));
}

TEST_CASE("L4 refuses capture") {
  // substituting x2 for x1 under a binder for x2 would capture it
  Formula bad = parsed("(Ax1)~(Ax2)~(x1 = x2') -> ~(Ax2)~(x2 = x2')");
  CHECK(!matches(match_logical_axiom(bad), AxiomId::L4));

  Formula good = parsed("(Ax1)~(Ax2)~(x1 = x2') -> ~(Ax2)~(x3 = x2')");
  CHECK(matches(match_logical_axiom(good), AxiomId::L4));

  // t := x (no-op instance)
  CHECK(matches(match_logical_axiom(parsed("(Ax1)(x1 = x1) -> x1 = x1")), AxiomId::L4));
}

TEST_CASE("EQ reflexivity instances") {
  CHECK(match_axiom(AxiomId::Eq, parsed("x1 + x2' = x1 + x2'")).has_value());
  CHECK(!match_axiom(AxiomId::Eq, parsed("x1 = x2")).has_value());
}

TEST_CASE("a small modus ponens proof checks") {
  test::ProofBuilder b;
  std::size_t ax = b.axiom(AxiomId::PA5, parsed("(0 + 0) = 0"));
  std::size_t imp = b.axiom(AxiomId::L1, parsed("(0 + 0) = 0 -> (0 = 0 -> (0 + 0) = 0)"));
  b.mp(imp, ax);
  CheckReport report = check_proof(b.finish());
  CHECK(report.accepted);
  CHECK(report.lines.size() == 3);
}

TEST_CASE("modus ponens shape violations are rejected at the right line") {
  std::string text =
      "1 | 0 = 0 | AX:EQ\n"
      "2 | 0' = 0' | AX:EQ\n"
      "3 | 0 = 0 | MP:1,2\n";
  CheckReport report = check_proof(parsed_proof(text));
  CHECK(!report.accepted);
  CHECK(report.failing_line == 3);
  CHECK(report.reason == "line 1 is not an implication");
}

TEST_CASE("dangling references are rejected") {
  CheckReport report = check_proof(parsed_proof("1 | 0 = 0 | MP:1,2\n"));
  CHECK(!report.accepted);
  CHECK(report.failing_line == 1);
  CHECK(report.reason == "dangling reference");

  report = check_proof(parsed_proof("1 | (Ax1)(x1 = x1) | GEN:3,x1\n"));
  CHECK(!report.accepted);
  CHECK(report.reason == "dangling reference");
}

TEST_CASE("generalisation checks the variable and the premise") {
  CHECK(check_proof(parsed_proof("1 | x1 = x1 | AX:EQ\n"
                                 "2 | (Ax1)(x1 = x1) | GEN:1,x1\n"))
            .accepted);

  CheckReport report = check_proof(parsed_proof("1 | x1 = x1 | AX:EQ\n"
                                                "2 | (Ax1)(x1 = x1) | GEN:1,x2\n"));
  CHECK(!report.accepted);
  CHECK(report.failing_line == 2);
}

TEST_CASE("the bundled zero-or-successor proof is accepted") {
  Proof p = test::successor_totality_proof();
  CheckReport report = check_proof(p);
  CHECK(report.accepted);
  CHECK(print_formula(p.goal, {PrintMode::Sugared, false}) ==
        "(Ax1)(x1 = 0 | (Ex2)(x1 = x2'))");

  Proof from_file = parsed_proof(read_data("proofs/successor_totality.proof"));
  CHECK(check_proof(from_file).accepted);
  CHECK(from_file.goal == p.goal);
}

TEST_CASE("any prefix of an accepted proof is accepted") {
  Proof p = test::successor_totality_proof();
  for (std::size_t len : {std::size_t(1), std::size_t(15), std::size_t(40), p.lines.size()}) {
    std::vector<ProofLine> prefix(p.lines.begin(),
                                  p.lines.begin() + static_cast<std::ptrdiff_t>(len));
    Proof q{prefix, prefix.back().formula};
    CHECK(check_proof(q).accepted);
  }
}

TEST_CASE("checking is deterministic") {
  Proof p = test::successor_totality_proof();
  CheckReport a = check_proof(p);
  CheckReport b = check_proof(p);
  CHECK(a.accepted == b.accepted);
  REQUIRE(a.lines.size() == b.lines.size());
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    CHECK(a.lines[i].justification == b.lines[i].justification);
    CHECK(a.lines[i].resolved == b.lines[i].resolved);
  }
}

TEST_CASE("strict mode rejects the reflexivity axiom") {
  CheckOptions strict;
  strict.strict_pa = true;
  CheckReport report = check_proof(parsed_proof("1 | 0 = 0 | AX:EQ\n"), strict);
  CHECK(!report.accepted);
  CHECK(report.failing_line == 1);
}

TEST_CASE("assumption lines are reported and can be disabled") {
  std::string text = "1 | ~(Ax1)(x1 = x1) | ASSUME\n";
  CheckReport report = check_proof(parsed_proof(text));
  CHECK(report.accepted);
  CHECK(report.assumption_lines == std::vector<std::size_t>{1});

  CheckOptions no_assume;
  no_assume.allow_assumptions = false;
  CHECK(!check_proof(parsed_proof(text), no_assume).accepted);
}

TEST_CASE("proof files reject malformed input") {
  auto r = parse_proof("");
  REQUIRE(std::holds_alternative<ParseError>(r));
  CHECK(std::get<ParseError>(r).message == "empty proof");

  CHECK(std::holds_alternative<ParseError>(parse_proof("1 | 0 = 0\n")));
  CHECK(std::holds_alternative<ParseError>(parse_proof("1 | 0 = | AX:EQ\n")));
  CHECK(std::holds_alternative<ParseError>(parse_proof("1 | 0 = 0 | AX:PA77\n")));
}

TEST_CASE("proof files round-trip through print_proof") {
  Proof p = test::successor_totality_proof();
  Proof again = parsed_proof(print_proof(p));
  REQUIRE(again.lines.size() == p.lines.size());
  for (std::size_t i = 0; i < p.lines.size(); ++i)
    CHECK(again.lines[i].formula == p.lines[i].formula);
  CHECK(again.goal == p.goal);
}

TEST_CASE("numeral disequality derivations check for assorted pairs") {
  for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{
           {0, 1}, {1, 0}, {3, 7}, {7, 3}, {5, 11}, {11, 5}, {2, 11}}) {
    Proof p = test::numeral_disequality_proof(a, b);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(check_proof(p).accepted);
    CHECK(p.goal == Formula::not_(Formula::eq(mk_numeral(a).term(), mk_numeral(b).term())));
  }
}
