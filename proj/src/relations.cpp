#include "paw/relations.hpp"

#include <stdexcept>

namespace paw {

RealDigitSpec alternating_real() {
  RealDigitSpec spec;
  spec.name = "alternating";
  spec.description = "binary expansion 0.0101...; digit n is 0 for odd n";
  spec.total_certified = true;
  spec.digit = [](const Nat& n) { return (n + 1) % 2 == 0 ? 0 : 1; };
  return spec;
}

RealDigitSpec zeros_real() {
  RealDigitSpec spec;
  spec.name = "zeros";
  spec.description = "binary expansion 0.000...";
  spec.total_certified = true;
  spec.digit = [](const Nat&) { return 0; };
  return spec;
}

namespace {

MachineSpec uniform_machine(std::string name, unsigned states,
                            const std::function<Transition(unsigned, TapeSymbol)>& rule) {
  MachineSpec m;
  m.name = std::move(name);
  m.states = states;
  for (unsigned q = 0; q < states; ++q)
    for (TapeSymbol s : {TapeSymbol::S0, TapeSymbol::S1, TapeSymbol::Blank})
      m.table[{q, s}] = rule(q, s);
  return m;
}

MachineSpec mover(std::string name, TapeMove dir) {
  return uniform_machine(std::move(name), 1,
                         [dir](unsigned, TapeSymbol s) { return Transition{0, s, dir}; });
}

MachineSpec ping_pong() {
  return uniform_machine("ping-pong", 2, [](unsigned q, TapeSymbol s) {
    return q == 0 ? Transition{1, s, TapeMove::Right} : Transition{0, s, TapeMove::Left};
  });
}

MachineSpec halt_now() {
  return uniform_machine("halt-now", 1,
                         [](unsigned, TapeSymbol s) { return Transition{0, s, TapeMove::Halt}; });
}

MachineSpec write_and_halt(std::string name, TapeSymbol out) {
  return uniform_machine(std::move(name), 1,
                         [out](unsigned, TapeSymbol) { return Transition{0, out, TapeMove::Halt}; });
}

MachineSpec flip_and_halt() {
  return uniform_machine("flip-halt", 1, [](unsigned, TapeSymbol s) {
    TapeSymbol out = s == TapeSymbol::S1 ? TapeSymbol::S0 : TapeSymbol::S1;
    return Transition{0, out, TapeMove::Halt};
  });
}

// Walks right k-1 cells, then halts: k steps in total.
MachineSpec delay(unsigned k) {
  MachineSpec m = uniform_machine("delay-" + std::to_string(k), k, [k](unsigned q, TapeSymbol s) {
    if (q + 1 < k) return Transition{q + 1, s, TapeMove::Right};
    return Transition{q, s, TapeMove::Halt};
  });
  return m;
}

// Writes k ones rightward, halting on the last write.
MachineSpec stamp_ones(unsigned k) {
  return uniform_machine("stamp-" + std::to_string(k), k, [k](unsigned q, TapeSymbol) {
    if (q + 1 < k) return Transition{q + 1, TapeSymbol::S1, TapeMove::Right};
    return Transition{q, TapeSymbol::S1, TapeMove::Halt};
  });
}

// Blank cells behave like 0 for the busy-beaver style tables below.
Transition bb(unsigned next, int write, char move) {
  return Transition{next, write ? TapeSymbol::S1 : TapeSymbol::S0,
                    move == 'L' ? TapeMove::Left : (move == 'R' ? TapeMove::Right : TapeMove::Halt)};
}

MachineSpec busy3() {
  MachineSpec m;
  m.name = "busy-3";
  m.states = 3;
  auto set = [&m](unsigned q, Transition on0, Transition on1) {
    m.table[{q, TapeSymbol::S0}] = on0;
    m.table[{q, TapeSymbol::Blank}] = on0;
    m.table[{q, TapeSymbol::S1}] = on1;
  };
  set(0, bb(1, 1, 'R'), bb(0, 1, 'H'));
  set(1, bb(2, 0, 'R'), bb(1, 1, 'R'));
  set(2, bb(2, 1, 'L'), bb(0, 1, 'L'));
  return m;
}

MachineSpec busy4() {
  MachineSpec m;
  m.name = "busy-4";
  m.states = 4;
  auto set = [&m](unsigned q, Transition on0, Transition on1) {
    m.table[{q, TapeSymbol::S0}] = on0;
    m.table[{q, TapeSymbol::Blank}] = on0;
    m.table[{q, TapeSymbol::S1}] = on1;
  };
  set(0, bb(1, 1, 'R'), bb(1, 1, 'L'));
  set(1, bb(0, 1, 'L'), bb(2, 0, 'L'));
  set(2, bb(2, 1, 'H'), bb(3, 1, 'L'));
  set(3, bb(3, 1, 'R'), bb(0, 0, 'R'));
  return m;
}

MachineSpec busy2() {
  MachineSpec m;
  m.name = "busy-2";
  m.states = 2;
  auto set = [&m](unsigned q, Transition on0, Transition on1) {
    m.table[{q, TapeSymbol::S0}] = on0;
    m.table[{q, TapeSymbol::Blank}] = on0;
    m.table[{q, TapeSymbol::S1}] = on1;
  };
  set(0, bb(1, 1, 'R'), bb(1, 1, 'L'));
  set(1, bb(0, 1, 'L'), bb(1, 1, 'H'));
  return m;
}

// Writes 1 going right, 0 going left, forever.
MachineSpec blinker() {
  return uniform_machine("blinker", 2, [](unsigned q, TapeSymbol) {
    return q == 0 ? Transition{1, TapeSymbol::S1, TapeMove::Right}
                  : Transition{0, TapeSymbol::S0, TapeMove::Left};
  });
}

// Runs right until it reads a 1, then halts; loops forever on empty input.
MachineSpec seeker() {
  return uniform_machine("seeker", 1, [](unsigned, TapeSymbol s) {
    if (s == TapeSymbol::S1) return Transition{0, TapeSymbol::S1, TapeMove::Halt};
    return Transition{0, s, TapeMove::Right};
  });
}

std::vector<MachineSpec> build_bundle() {
  std::vector<MachineSpec> v;
  v.push_back(mover("mover-right", TapeMove::Right));  // 1: never halts
  v.push_back(mover("mover-left", TapeMove::Left));    // 2: never halts
  v.push_back(ping_pong());                            // 3: never halts
  v.push_back(halt_now());                             // 4
  v.push_back(write_and_halt("write-one", TapeSymbol::S1));   // 5
  v.push_back(write_and_halt("write-zero", TapeSymbol::S0));  // 6
  v.push_back(flip_and_halt());                        // 7
  v.push_back(busy3());                                // 8
  v.push_back(delay(2));                               // 9
  v.push_back(delay(3));                               // 10
  v.push_back(delay(5));                               // 11
  v.push_back(delay(8));                               // 12
  v.push_back(delay(13));                              // 13
  v.push_back(delay(21));                              // 14
  v.push_back(busy4());                                // 15: long-runner
  v.push_back(blinker());                              // 16: never halts
  v.push_back(stamp_ones(4));                          // 17
  v.push_back(stamp_ones(7));                          // 18
  v.push_back(delay(4));                               // 19
  v.push_back(delay(6));                               // 20
  v.push_back(delay(7));                               // 21
  v.push_back(delay(9));                               // 22
  v.push_back(delay(10));                              // 23
  v.push_back(delay(12));                              // 24
  v.push_back(busy2());                                // 25
  v.push_back(stamp_ones(10));                         // 26
  v.push_back(delay(16));                              // 27
  v.push_back(delay(20));                              // 28
  v.push_back(seeker());                               // 29: never halts on empty input
  v.push_back(delay(32));                              // 30
  v.push_back(stamp_ones(15));                         // 31
  v.push_back(mover("mover-right-2", TapeMove::Right));  // 32: never halts
  for (auto& m : v) m.validate();
  return v;
}

}  // namespace

const std::vector<MachineSpec>& bundled_enumeration() {
  static const std::vector<MachineSpec> bundle = build_bundle();
  return bundle;
}

std::string bundled_enumeration_version() { return "v1"; }

BudgetSchedule constant_schedule(std::uint64_t budget) {
  return [budget](const Nat&) { return budget; };
}

void register_real_digit_relation(RelationRegistry& reg, const RealDigitSpec& spec,
                                  const std::string& rel_name) {
  RelationEntry entry;
  entry.name = rel_name;
  entry.description = "digit relation over the " + spec.name + " real: " + spec.description;
  entry.arity = 1;
  entry.uniform = spec.total_certified;
  if (!spec.total_certified) entry.not_uniform_reason = "generator lacks a totality certificate";
  auto digit = spec.digit;
  entry.decide = [digit](const std::vector<Nat>& args) -> std::pair<bool, std::uint64_t> {
    return {digit(args[0]) == 0, 1};
  };
  reg.add(std::move(entry));
}

void register_halting_relation(RelationRegistry& reg, const std::vector<MachineSpec>& enumeration,
                               BudgetSchedule schedule, const std::string& rel_name) {
  RelationEntry entry;
  entry.name = rel_name;
  entry.description = "budgeted halting over machine enumeration " +
                      bundled_enumeration_version() + " (true halting is undecidable; this " +
                      "relation substitutes a monotone budget schedule)";
  entry.arity = 1;
  entry.uniform = false;
  entry.not_uniform_reason = kHaltingNotUniformReason;
  entry.decide = [machines = enumeration, schedule](const std::vector<Nat>& args)
      -> std::pair<bool, std::uint64_t> {
    const Nat& n = args[0];
    if (n < 1 || n > machines.size())
      throw std::out_of_range("machine index " + n.str() + " outside the enumeration (1.." +
                              std::to_string(machines.size()) + ")");
    std::uint64_t budget = schedule(n);
    RunResult r = run_tm(machines[static_cast<std::size_t>(n) - 1], {}, budget);
    return {r.halted, r.steps};
  };
  reg.add(std::move(entry));
}

DiagonalValue diagonal_d(const Nat& n, const std::vector<MachineSpec>& enumeration,
                         std::uint64_t budget) {
  if (n < 1 || n > enumeration.size())
    throw std::out_of_range("machine index " + n.str() + " outside the enumeration (1.." +
                            std::to_string(enumeration.size()) + ")");
  if (budget == 0) throw std::invalid_argument("diagonal_d: budget must be positive");

  std::vector<int> input(static_cast<std::size_t>(n), 1);  // unary input
  RunResult r = run_tm(enumeration[static_cast<std::size_t>(n) - 1], input, budget);

  DiagonalValue out;
  int observed = r.halted ? r.first_output_bit.value_or(0) : -1;
  out.value = r.halted ? (1 + observed) % 2 : 1;
  out.evidence.algorithm_id = "diagonal";
  out.evidence.method = EvidenceMethod::PerInstance;
  out.evidence.instances.push_back(EvidenceRow{{n}, out.value == 1, r.steps, true});
  out.evidence.note = r.halted
                          ? "machine halted; value flips its first output bit"
                          : "machine exceeded the budget of " + std::to_string(budget) + " steps";
  return out;
}

RelationRegistry default_registry(std::uint64_t budget) {
  RelationRegistry reg;
  register_real_digit_relation(reg, alternating_real(), "digit_alt");
  register_real_digit_relation(reg, zeros_real(), "digit_zeros");
  register_halting_relation(reg, bundled_enumeration(), constant_schedule(budget), "halts");
  return reg;
}

}  // namespace paw
