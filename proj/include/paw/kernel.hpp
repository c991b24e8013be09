#ifndef PAW_KERNEL_HPP
#define PAW_KERNEL_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "paw/parse.hpp"
#include "paw/syntax.hpp"

// Hilbert-style proof checking for first-order arithmetic.
//
// Axiom schemata:
//   PA1  (x1 = x2) -> ((x1 = x3) -> (x2 = x3))
//   PA2  (x1 = x2) -> (x1' = x2')
//   PA3  ~(0 = x1')
//   PA4  (x1' = x2') -> (x1 = x2)
//   PA5  (x1 + 0) = x1
//   PA6  (x1 + x2') = (x1 + x2)'
//   PA7  (x1 * 0) = 0
//   PA8  (x1 * x2') = ((x1 * x2) + x1)
//   PA9  F(0) -> (((Ax)(F(x) -> F(x'))) -> (Ax)F(x))   for any F, x
//   L1   A -> (B -> A)
//   L2   (A -> (B -> C)) -> ((A -> B) -> (A -> C))
//   L3   (~B -> ~A) -> ((~B -> A) -> B)
//   L4   (Ax)A -> A[x := t]       t free for x in A
//   L5   (Ax)(A -> B) -> (A -> (Ax)B)   x not free in A
//   EQ   t = t                    reflexivity; disabled by strict_pa
//
// Inference: modus ponens and generalisation. The checker never
// searches; every axiom line must name its schema.

namespace paw {

enum class AxiomId {
  PA1, PA2, PA3, PA4, PA5, PA6, PA7, PA8, PA9,
  L1, L2, L3, L4, L5,
  Eq,
};

std::string to_string(AxiomId id);
std::optional<AxiomId> axiom_id_from_string(const std::string& s);

// A successful schema match together with the recovered instantiation.
struct AxiomMatch {
  AxiomId id;
  std::string detail;                      // resolved instantiation, printable
  std::map<unsigned, Term> term_subst;     // PA1-PA8: schema variable -> term
  std::optional<Formula> induction_formula;  // PA9's F
  std::optional<Variable> induction_var;     // PA9's x
  std::optional<Term> instantiation_term;    // L4's t, EQ's t
};

// Every PA schema the formula instantiates, in PA1..PA9 order.
std::vector<AxiomMatch> match_pa_axiom(const Formula& f);

// Every logical schema the formula instantiates, in L1..L5 order.
std::vector<AxiomMatch> match_logical_axiom(const Formula& f);

// Match against one named schema (the checker's path).
std::optional<AxiomMatch> match_axiom(AxiomId id, const Formula& f);

// Canonical schema formula for PA1..PA8 over the variables x1..x3.
Formula pa_axiom_formula(AxiomId id);
// Canonical induction instance for a concrete formula and variable.
Formula induction_instance(const Formula& f, Variable x);

struct Justification {
  enum class Kind { Axiom, ModusPonens, Generalisation, Assumption };
  Kind kind = Kind::Axiom;
  AxiomId axiom = AxiomId::Eq;
  std::size_t major = 0;  // MP: line holding A -> B; GEN: premise line
  std::size_t minor = 0;  // MP: line holding A
  std::optional<Variable> gen_var;
};

struct ProofLine {
  std::size_t index = 0;  // 1-based, equals position in the proof
  Formula formula;
  Justification justification;
};

struct Proof {
  std::vector<ProofLine> lines;  // non-empty
  Formula goal;                  // equals the last line's formula
};

struct LineReport {
  std::size_t index = 0;
  std::string justification;  // as written
  std::string resolved;       // schema instantiation / referenced lines
};

struct CheckReport {
  bool accepted = false;
  std::size_t failing_line = 0;  // meaningful iff !accepted
  std::string reason;            // meaningful iff !accepted
  std::vector<LineReport> lines;
  std::vector<std::size_t> assumption_lines;
};

struct CheckOptions {
  bool strict_pa = false;          // reject EQ axiom lines
  bool allow_assumptions = true;   // permit ASSUME lines (postulated goals)
};

CheckReport check_proof(const Proof& p, const CheckOptions& opts = {});

// Line-oriented proof file format. Blank lines and lines starting with
// '#' are ignored. Each proof line reads
//   <idx> | <formula> | AX:<id>
//   <idx> | <formula> | MP:<i>,<j>      (i: the implication, j: its antecedent)
//   <idx> | <formula> | GEN:<i>,<var>
//   <idx> | <formula> | ASSUME
// The goal is the last line's formula.
std::variant<Proof, ParseError> parse_proof(std::string_view text);

std::string print_justification(const Justification& j);
std::string print_proof(const Proof& p);

}  // namespace paw

#endif  // PAW_KERNEL_HPP
