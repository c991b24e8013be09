#ifndef PAW_SYNTAX_HPP
#define PAW_SYNTAX_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Abstract syntax of the first-order arithmetic language:
// terms over 0, successor, + and *, and formulas over =, ~, -> and
// universal quantification. Everything else (exists, and, or) is
// surface sugar and is expanded at construction time, so a stored
// tree only ever contains the primitive connectives.
//
// All values are immutable and share structure freely; every
// operation in this header is pure.

namespace paw {

class Variable {
 public:
  explicit Variable(unsigned index) : index_(index) {
    if (index == 0) throw std::invalid_argument("variable index must be positive");
  }
  unsigned index() const { return index_; }

  friend bool operator==(Variable a, Variable b) { return a.index_ == b.index_; }
  friend bool operator!=(Variable a, Variable b) { return a.index_ != b.index_; }
  friend bool operator<(Variable a, Variable b) { return a.index_ < b.index_; }

 private:
  unsigned index_;
};

class Term {
 public:
  enum class Kind { Zero, Var, Succ, Add, Mul };

  static Term zero();
  static Term var(Variable v);
  static Term succ(Term t);
  static Term add(Term lhs, Term rhs);
  static Term mul(Term lhs, Term rhs);

  Kind kind() const;
  Variable var_of() const;        // Kind::Var only
  const Term& child() const;      // Kind::Succ only
  const Term& lhs() const;        // Add/Mul
  const Term& rhs() const;        // Add/Mul

  // Depth of the successor spine; 0 unless the term is Succ(...).
  unsigned succ_depth() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  unsigned var_index = 0;            // Var
  std::shared_ptr<const Term> a, b;  // Succ uses a; Add/Mul use a and b
};

inline Term::Kind Term::kind() const { return node_->kind; }

// A numeral is the unary successor tower of a natural number. It is an
// ordinary term, so schema matching and substitution treat it uniformly;
// the cached value just avoids re-counting the spine.
class Numeral {
 public:
  explicit Numeral(std::uint64_t value);
  std::uint64_t value() const { return value_; }
  const Term& term() const { return term_; }

 private:
  std::uint64_t value_;
  Term term_;
};

inline Numeral mk_numeral(std::uint64_t n) { return Numeral(n); }

class Formula {
 public:
  enum class Kind { Eq, Not, Implies, ForAll, Rel };

  static Formula eq(Term lhs, Term rhs);
  static Formula not_(Formula f);
  static Formula implies(Formula a, Formula b);
  static Formula forall(Variable v, Formula body);

  // Named relation atom backed by a registered decision procedure.
  // Surface form "@name(t1,...,tk)". Not part of the arithmetic core;
  // used to plug externally defined relations into the evaluator.
  static Formula rel(std::string name, std::vector<Term> args);

  // Derived constructors; the result never contains a derived node.
  static Formula exists(Variable v, Formula body);  // ~(Av)~body
  static Formula and_(Formula a, Formula b);        // ~(a -> ~b)
  static Formula or_(Formula a, Formula b);         // ~a -> b

  Kind kind() const;
  const Term& eq_lhs() const;
  const Term& eq_rhs() const;
  const Formula& sub() const;      // Not
  const Formula& lhs() const;      // Implies
  const Formula& rhs() const;      // Implies
  Variable bound_var() const;      // ForAll
  const Formula& body() const;     // ForAll
  const std::string& rel_name() const;
  const std::vector<Term>& rel_args() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  // Eq
  std::shared_ptr<const Term> t1, t2;
  // Not / Implies / ForAll
  std::shared_ptr<const Formula> f1, f2;
  unsigned var_index = 0;
  // Rel
  std::string rel_name;
  std::vector<Term> rel_args;
};

inline Formula::Kind Formula::kind() const { return node_->kind; }

std::set<Variable> free_variables(const Term& t);
std::set<Variable> free_variables(const Formula& f);

// Capture-avoiding substitution of t for every free occurrence of x.
// When a binder would capture a variable of t, the bound variable is
// renamed to the smallest index free in neither operand, so the result
// is deterministic.
Term substitute(const Term& in, Variable x, const Term& t);
Formula substitute(const Formula& in, Variable x, const Term& t);

// True when plain (rename-free) substitution of t for x in f is safe:
// no free occurrence of x sits under a binder for a variable of t.
bool substitutable(const Formula& f, Variable x, const Term& t);

// Universal closure over the free variables in ascending index order.
Formula universal_closure(const Formula& f);

}  // namespace paw

#endif  // PAW_SYNTAX_HPP
