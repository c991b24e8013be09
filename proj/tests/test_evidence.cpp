#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "paw/engine.hpp"
#include "paw/relations.hpp"
#include "paw/report.hpp"

using namespace paw;

namespace {

Json read_json(const std::string& rel) {
  std::ifstream in(std::string(PAW_TEST_DATA) + "/" + rel, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing " << rel);
  return Json::parse(in);
}

const MachineSpec& machine(std::size_t idx_1based) {
  return bundled_enumeration()[idx_1based - 1];
}

}  // namespace

TEST_CASE("machine specs validate before any run") {
  MachineSpec broken;
  broken.name = "broken";
  broken.states = 2;
  broken.table[{0, TapeSymbol::S0}] = Transition{0, TapeSymbol::S0, TapeMove::Halt};
  CHECK_THROWS_AS(run_tm(broken, {}, 10), std::invalid_argument);

  MachineSpec bad_target = machine(4);
  bad_target.table[{0, TapeSymbol::S0}] = Transition{7, TapeSymbol::S0, TapeMove::Halt};
  CHECK_THROWS_AS(bad_target.validate(), std::invalid_argument);

  CHECK_THROWS_AS(run_tm(machine(4), {}, 0), std::invalid_argument);
}

TEST_CASE("immediate halter and budget exhaustion") {
  RunResult r = run_tm(machine(4), {}, 100);  // halt-now
  CHECK(r.halted);
  CHECK(r.steps == 1);

  r = run_tm(machine(4), {1, 0, 1}, 100);
  CHECK(r.halted);
  CHECK(r.steps == 1);

  r = run_tm(machine(1), {}, 100);  // right mover, no halting entry
  CHECK(!r.halted);
  CHECK(r.steps == 100);
}

TEST_CASE("simulator determinism") {
  for (std::size_t i : {std::size_t(4), std::size_t(8), std::size_t(15)}) {
    RunResult a = run_tm(machine(i), {1, 1}, 500);
    RunResult b = run_tm(machine(i), {1, 1}, 500);
    CHECK(a.halted == b.halted);
    CHECK(a.steps == b.steps);
    CHECK(a.tape_digest == b.tape_digest);
  }
}

TEST_CASE("busy-beaver style runs match their frozen step counts") {
  Json golden = read_json("golden/evidence_lab.json");
  REQUIRE(golden.at("enumeration_version") == bundled_enumeration_version());
  std::uint64_t budget = golden.at("budget").get<std::uint64_t>();
  for (const auto& row : golden.at("halting_empty_tape")) {
    std::size_t idx = row.at("machine").get<std::size_t>();
    RunResult r = run_tm(machine(idx), {}, budget);
    CAPTURE(idx);
    CHECK(r.halted == row.at("halts").get<bool>());
    CHECK(r.steps == row.at("steps").get<std::uint64_t>());
  }
  // the classic 3-state and 4-state halting runs
  CHECK(run_tm(machine(8), {}, 10000).steps == 14);
  CHECK(run_tm(machine(15), {}, 10000).steps == 107);
}

TEST_CASE("machine specs round-trip through JSON") {
  for (const MachineSpec& m : bundled_enumeration()) {
    MachineSpec back = machine_from_json(machine_to_json(m));
    CHECK(back.states == m.states);
    CHECK(back.initial == m.initial);
    CHECK(back.table == m.table);
    RunResult a = run_tm(m, {1}, 200);
    RunResult b = run_tm(back, {1}, 200);
    CHECK(a.steps == b.steps);
    CHECK(a.tape_digest == b.tape_digest);
  }

  Json dup = machine_to_json(machine(4));
  dup["transitions"].push_back(dup["transitions"][0]);
  CHECK_THROWS_AS(machine_from_json(dup), std::invalid_argument);
}

TEST_CASE("digit relations decide [R(n) = 0] by their generator") {
  RealDigitSpec zeros = zeros_real();
  CHECK(zeros.digit(7) == 0);

  RealDigitSpec alt = alternating_real();
  CHECK(alt.digit(1) == 0);
  CHECK(alt.digit(2) == 1);
  CHECK(alt.digit(3) == 0);
  CHECK(alt.digit(4) == 1);

  Json golden = read_json("golden/evidence_lab.json");
  const auto& digits = golden.at("alternating_digits_1_16");
  for (unsigned n = 1; n <= 16; ++n) CHECK(alt.digit(n) == digits[n - 1].get<int>());

  RelationRegistry reg;
  register_real_digit_relation(reg, zeros, "digit_zeros");
  register_real_digit_relation(reg, alt, "digit_alt");
  SatisfactionMethod sm{"term-evaluation", &reg};

  Formula r7 = Formula::rel("digit_zeros", {mk_numeral(7).term()});
  CHECK(decide_atom(r7, Assignment{}, sm).value);
  Formula r2 = Formula::rel("digit_alt", {mk_numeral(2).term()});
  CHECK(!decide_atom(r2, Assignment{}, sm).value);

  ClassifyResult c = classify(Formula::rel("digit_alt", {Term::var(Variable(1))}), 16, sm);
  CHECK(c.classification == Classification::Computable);
}

TEST_CASE("halting relation decides instance by instance") {
  RelationRegistry reg = default_registry(1000);
  SatisfactionMethod sm{"term-evaluation", &reg};

  AtomDecision d = decide_atom(Formula::rel("halts", {mk_numeral(4).term()}), Assignment{}, sm);
  CHECK(d.value);
  CHECK(d.evidence.instances[0].steps == 1);
  CHECK(d.evidence.method == EvidenceMethod::PerInstance);

  d = decide_atom(Formula::rel("halts", {mk_numeral(1).term()}), Assignment{}, sm);
  CHECK(!d.value);  // right mover exceeds any budget

  Json golden = read_json("golden/evidence_lab.json");
  VerifyTable t =
      verify_up_to(Formula::rel("halts", {Term::var(Variable(1))}), 10, sm);
  REQUIRE(t.rows.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    const auto& row = golden.at("halting_empty_tape")[i];
    REQUIRE(t.rows[i].value.has_value());
    CHECK(*t.rows[i].value == row.at("halts").get<bool>());
  }
  CHECK(t.polarity() == "mixed");
}

TEST_CASE("halting is never classified computable at any bound") {
  RelationRegistry reg = default_registry(10000);
  SatisfactionMethod sm{"term-evaluation", &reg};
  Formula h = Formula::rel("halts", {Term::var(Variable(1))});
  for (unsigned bound = 1; bound <= bundled_enumeration().size(); ++bound) {
    ClassifyResult c = classify(h, bound, sm);
    CAPTURE(bound);
    CHECK(c.classification == Classification::VerifiableOnlyAtBound);
  }
}

TEST_CASE("budget monotonicity: once halted, halted at every larger budget") {
  for (std::size_t i = 1; i <= bundled_enumeration().size(); ++i) {
    RunResult base = run_tm(machine(i), {}, 200);
    if (!base.halted) continue;
    for (std::uint64_t budget : {base.steps, base.steps + 1, base.steps * 2, std::uint64_t(10000)}) {
      RunResult again = run_tm(machine(i), {}, budget);
      CHECK(again.halted);
      CHECK(again.steps == base.steps);
    }
  }
}

TEST_CASE("diagonal values flip observed behaviour") {
  Json golden = read_json("golden/evidence_lab.json");
  for (const auto& row : golden.at("diagonal_first_8")) {
    unsigned n = row.at("n").get<unsigned>();
    DiagonalValue d = diagonal_d(n, bundled_enumeration(), 10000);
    CAPTURE(n);
    CHECK(d.value == row.at("value").get<int>());
  }

  // the first three machines compute the empty function at this budget
  CHECK(diagonal_d(1, bundled_enumeration(), 10000).value == 1);
  CHECK(diagonal_d(2, bundled_enumeration(), 10000).value == 1);
  CHECK(diagonal_d(3, bundled_enumeration(), 10000).value == 1);

  // diagonal property: whenever machine n halts on input n, the value
  // differs from the machine's first output bit
  for (unsigned n = 1; n <= bundled_enumeration().size(); ++n) {
    std::vector<int> input(n, 1);
    RunResult r = run_tm(machine(n), input, 10000);
    if (!r.halted) continue;
    DiagonalValue d = diagonal_d(n, bundled_enumeration(), 10000);
    REQUIRE(r.first_output_bit.has_value());
    CHECK(d.value != *r.first_output_bit);
  }

  CHECK_THROWS_AS(diagonal_d(0, bundled_enumeration(), 100), std::out_of_range);
  CHECK_THROWS_AS(diagonal_d(99, bundled_enumeration(), 100), std::out_of_range);
}

TEST_CASE("the bundle mixes halters and non-halters in every prefix") {
  for (std::size_t prefix : {std::size_t(8), std::size_t(16), std::size_t(32)}) {
    bool any_halt = false, any_loop = false;
    for (std::size_t i = 1; i <= prefix; ++i) {
      RunResult r = run_tm(machine(i), {}, 10000);
      (r.halted ? any_halt : any_loop) = true;
    }
    CHECK(any_halt);
    CHECK(any_loop);
  }
}
