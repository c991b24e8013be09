#ifndef PAW_TM_HPP
#define PAW_TM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace paw {

// Deterministic single-tape Turing machines over the alphabet
// {0, 1, blank}. A transition's move is Left, Right or Halt; the
// machine stops exactly when it applies a Halt transition, and that
// application counts as a step.
enum class TapeSymbol : std::uint8_t { S0 = 0, S1 = 1, Blank = 2 };
enum class TapeMove : std::uint8_t { Left, Right, Halt };

struct Transition {
  unsigned next_state = 0;
  TapeSymbol write = TapeSymbol::Blank;
  TapeMove move = TapeMove::Halt;

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct MachineSpec {
  std::string name;
  unsigned states = 1;
  unsigned initial = 0;
  std::map<std::pair<unsigned, TapeSymbol>, Transition> table;

  // The table must be total over states x alphabet and each entry must
  // stay inside the state space. Throws std::invalid_argument.
  void validate() const;
};

struct RunResult {
  bool halted = false;
  std::uint64_t steps = 0;   // halted: steps taken; otherwise == budget
  std::uint64_t budget = 0;
  std::uint64_t tape_digest = 0;      // trimmed tape content + head offset
  std::optional<int> first_output_bit;  // leftmost non-blank cell, if any
};

// Simulates until the machine halts or the budget is exhausted.
// budget must be >= 1. The input bits are written at cells 0,1,...
// with the head starting on cell 0.
RunResult run_tm(const MachineSpec& m, const std::vector<int>& input_bits, std::uint64_t budget);

// Versioned JSON machine format (see docs/formats.md).
nlohmann::ordered_json machine_to_json(const MachineSpec& m);
MachineSpec machine_from_json(const nlohmann::json& j);

}  // namespace paw

#endif  // PAW_TM_HPP
