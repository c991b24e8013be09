#ifndef PAW_RELATIONS_HPP
#define PAW_RELATIONS_HPP

#include <functional>
#include <string>
#include <vector>

#include "paw/engine.hpp"
#include "paw/tm.hpp"

// Demonstration relations: computable-real digit relations decided by a
// total generator, and a budgeted halting relation decided machine by
// machine but deliberately not registered as uniform. Together they
// separate the Computable / VerifiableOnlyAtBound classifications at
// desk scale.

namespace paw {

struct RealDigitSpec {
  std::string name;
  std::string description;
  bool total_certified = true;              // the generator is total by construction
  std::function<int(const Nat&)> digit;     // n-th binary digit, n >= 1
};

// digits 0, 1, 0, 1, ... from position 1
RealDigitSpec alternating_real();
// digits 0, 0, 0, ...
RealDigitSpec zeros_real();

// The bundled machine enumeration, version 1: 32 small machines mixing
// halters, delayed halters, one long-runner and several non-halters.
// Machine indices are 1-based.
const std::vector<MachineSpec>& bundled_enumeration();
std::string bundled_enumeration_version();

using BudgetSchedule = std::function<std::uint64_t(const Nat&)>;
BudgetSchedule constant_schedule(std::uint64_t budget);

// Registers @<name>(n) := "digit n of the real equals 0"; uniform iff
// the spec carries a totality certificate.
void register_real_digit_relation(RelationRegistry& reg, const RealDigitSpec& spec,
                                  const std::string& rel_name);

// Registers @<name>(n) := "machine n halts on empty input within
// schedule(n) steps". Decidable instance by instance, but registered
// with no uniform decider: synthesis reports the reason below.
inline constexpr const char* kHaltingNotUniformReason = "unbounded search subformula";
void register_halting_relation(RelationRegistry& reg, const std::vector<MachineSpec>& enumeration,
                               BudgetSchedule schedule, const std::string& rel_name);

struct DiagonalValue {
  int value = 0;  // in {0, 1}
  Evidence evidence;
};

// d(n): run machine n on the unary input of n ones. If it fails to halt
// within the budget the value is 1; otherwise the value flips the first
// output bit, so it always differs from what machine n produced.
DiagonalValue diagonal_d(const Nat& n, const std::vector<MachineSpec>& enumeration,
                         std::uint64_t budget);

// Registry with @digit_alt, @digit_zeros and @halts over the bundled
// enumeration at a constant budget schedule.
RelationRegistry default_registry(std::uint64_t budget);

}  // namespace paw

#endif  // PAW_RELATIONS_HPP
