#ifndef PAW_ENGINE_HPP
#define PAW_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "paw/kernel.hpp"
#include "paw/nat.hpp"
#include "paw/syntax.hpp"

// Evaluation of arithmetic formulas over the naturals, with the result
// split into four verdicts rather than a bare boolean:
//
//   TrueCertified   backed by a certificate or total decision procedure
//   FalseCertified  backed by a certificate or a concrete counterexample
//   VerifiedUpTo    every instance up to the bound was checked, but no
//                   uniform certificate exists
//   Unknown         not even instance checking settled it
//
// Truth and falsehood are deliberately asymmetric: a counterexample is
// finite evidence of falsehood, while an exhausted enumeration only
// verifies truth up to the bound.

namespace paw {

class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(Nat default_value) : default_(std::move(default_value)) {}

  Nat get(Variable v) const {
    auto it = support_.find(v.index());
    return it == support_.end() ? default_ : it->second;
  }

  Assignment with(Variable v, Nat value) const {
    Assignment out = *this;
    out.support_[v.index()] = std::move(value);
    return out;
  }

  const std::map<unsigned, Nat>& support() const { return support_; }
  const Nat& default_value() const { return default_; }

 private:
  std::map<unsigned, Nat> support_;
  Nat default_ = 0;
};

Nat eval_term(const Term& t, const Assignment& s);
Nat eval_term(const Term& t, const Assignment& s, std::uint64_t& steps);

enum class EvidenceMethod { Uniform, PerInstance };

struct EvidenceRow {
  std::vector<Nat> args;
  std::optional<bool> value;  // nullopt when the instance stayed undetermined
  std::uint64_t steps = 0;
  bool certified = false;
};

struct Evidence {
  std::string algorithm_id;
  EvidenceMethod method = EvidenceMethod::Uniform;
  std::vector<EvidenceRow> instances;
  std::string note;
};

// Stable FNV-1a digest of the evidence content; identical runs produce
// identical digests.
std::uint64_t trace_digest(const Evidence& e);

enum class VerdictKind { TrueCertified, FalseCertified, VerifiedUpTo, Unknown };

std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<bool> holds;
  unsigned bound = 0;
  std::uint64_t steps = 0;
  Evidence evidence;

  bool certified() const {
    return kind == VerdictKind::TrueCertified || kind == VerdictKind::FalseCertified;
  }
  // "all-true" / "all-false" / "mixed"
  std::string polarity() const;
};

// Relation atoms (@name(...)) are decided by registered procedures. An
// entry with uniform=true carries a totality certificate and can back a
// uniform decider; otherwise synthesis reports not_uniform_reason.
struct RelationEntry {
  std::string name;
  std::string description;
  std::size_t arity = 1;
  bool uniform = false;
  std::string not_uniform_reason;
  std::function<std::pair<bool, std::uint64_t>(const std::vector<Nat>&)> decide;
};

class RelationRegistry {
 public:
  void add(RelationEntry e) { entries_[e.name] = std::move(e); }
  const RelationEntry* find(const std::string& name) const {
    auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::string, RelationEntry> entries_;
};

// The evidence supplier for atomic formulas: closed equalities are
// decided by term evaluation; relation atoms by the registry. Distinct
// witness labels must never change a verdict.
struct SatisfactionMethod {
  std::string witness_label = "term-evaluation";
  const RelationRegistry* registry = nullptr;
};

enum class Mode { Standard, Algorithmic };

std::string to_string(Mode m);
std::optional<Mode> mode_from_string(const std::string& s);

struct AtomDecision {
  bool value = false;
  Evidence evidence;
  std::uint64_t steps = 0;
};

// The formula must be an equality or relation atom.
AtomDecision decide_atom(const Formula& atom, const Assignment& s,
                         const SatisfactionMethod& sm = {});

// Tarski satisfaction relative to one assignment. Universal quantifiers
// first try a structural certificate; failing that they enumerate the
// bound variable over {0..bound}. Under Mode::Algorithmic a true verdict
// additionally requires uniform evidence; witness-backed truths degrade
// to VerifiedUpTo.
Verdict satisfies(const Formula& f, const Assignment& s, unsigned bound,
                  Mode mode = Mode::Standard, const SatisfactionMethod& sm = {});

// Truth = satisfaction under every assignment, evaluated as the
// universal closure under the all-zero assignment.
Verdict evaluate_truth(const Formula& f, unsigned bound, Mode mode = Mode::Standard,
                       const SatisfactionMethod& sm = {});

struct VerifyTable {
  std::vector<Variable> vars;
  unsigned n = 0;
  std::vector<EvidenceRow> rows;
  std::string polarity() const;  // "all-true" / "all-false" / "mixed"
  bool fully_decided() const;    // every row determined and certified
  Evidence to_evidence() const;
};

// Instance-by-instance verification: a single free variable ranges over
// {1..n}, several free variables over the grid {0..n}^k; each closed
// instance is decided by satisfies() at the same bound n.
VerifyTable verify_up_to(const Formula& f, unsigned n, const SatisfactionMethod& sm = {});

struct Decider {
  std::string algorithm_id;
  std::string description;
  std::string domain_note;
  std::vector<Variable> params;  // free variables, ascending
  std::function<std::pair<bool, std::uint64_t>(const std::vector<Nat>&)> decide;
};

struct NotFound {
  std::string reason;
  std::string blocking;  // printed blocking subformula
};

using SynthesisResult = std::variant<Decider, NotFound>;

// A total decision procedure for the formula's instances, when one
// exists in the certified fragment: quantifier-free formulas, formulas
// whose quantifiers are all syntactically bounded (x < t patterns via
// the definable order), and closed forms carrying structural
// certificates.
SynthesisResult synthesize_uniform_decider(const Formula& f, const SatisfactionMethod& sm = {});

// PA1..PA8: the universal closure of the schema, certified structurally.
Verdict check_axiom_truth(AxiomId id, unsigned bound, const SatisfactionMethod& sm = {});

// PA9 for a concrete formula and variable; the case of the analysis
// that fired is recorded in the evidence ("induction-case-a/b/c").
Verdict check_induction_truth(const Formula& g, Variable x, unsigned bound,
                              const SatisfactionMethod& sm = {});

enum class Rule { ModusPonens, Generalisation };

struct PreservationReport {
  Rule rule = Rule::ModusPonens;
  std::vector<Verdict> premises;
  Verdict conclusion;
  bool preserved = false;  // conclusion at least as strong as the weakest premise
  bool degraded = false;   // conclusion fell short of TrueCertified
};

// premises for MP: {antecedent A, implication A -> B}; for GEN: {A} with
// conclusion (Ax)A. Throws std::invalid_argument on shape mismatch.
PreservationReport check_rule_preservation(Rule rule, const std::vector<Formula>& premises,
                                           const Formula& conclusion, unsigned bound,
                                           Mode mode = Mode::Standard,
                                           const SatisfactionMethod& sm = {});

enum class Classification { Computable, VerifiableOnlyAtBound, UnknownAtBound };

std::string to_string(Classification c);

struct ClassifyResult {
  Classification classification = Classification::UnknownAtBound;
  unsigned bound = 0;
  std::optional<Decider> decider;      // Computable
  std::optional<NotFound> why_not;     // synthesis failure
  std::optional<VerifyTable> table;    // instance table when one was built
  std::optional<Verdict> closed_verdict;  // closed formulas
};

ClassifyResult classify(const Formula& f, unsigned bound, const SatisfactionMethod& sm = {});

// ---- corpus-level consistency definitions ----

struct CorpusEntry {
  std::string name;  // usually the proof file name
  Formula goal;
  bool uses_assumptions = false;
};

struct SimpleInconsistencyWitness {
  std::string positive_name;  // proof of (Ax)F
  std::string negative_name;  // proof of ~(Ax)F
  std::string formula;        // printed (Ax)F
};

struct OmegaPatternWitness {
  std::string negative_name;  // proof of ~(Ax)F
  std::string formula;        // printed F
  unsigned coverage = 0;
  std::vector<std::string> instance_names;  // proofs of F(0)..F(coverage)
};

struct ScanReport {
  unsigned coverage = 0;
  std::vector<SimpleInconsistencyWitness> simple;
  std::vector<OmegaPatternWitness> omega;
  bool clean() const { return simple.empty() && omega.empty(); }
};

// Searches the goals of a corpus of accepted proofs for (i) a pair
// (Ax)F, ~(Ax)F and (ii) a goal ~(Ax)F together with goals F(n) for
// every n <= coverage. The omega finding is a bounded witness pattern
// over this corpus, nothing more.
ScanReport consistency_scan(const std::vector<CorpusEntry>& corpus, unsigned coverage);

}  // namespace paw

#endif  // PAW_ENGINE_HPP
