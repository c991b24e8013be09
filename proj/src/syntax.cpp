#include "paw/syntax.hpp"

#include <algorithm>

namespace paw {

// ---- Term ----

Term Term::zero() {
  static const Term z{std::make_shared<const Node>(Node{Kind::Zero, 0, nullptr, nullptr})};
  return z;
}

Term Term::var(Variable v) {
  return Term{std::make_shared<const Node>(Node{Kind::Var, v.index(), nullptr, nullptr})};
}

Term Term::succ(Term t) {
  auto c = std::make_shared<const Term>(std::move(t));
  return Term{std::make_shared<const Node>(Node{Kind::Succ, 0, std::move(c), nullptr})};
}

Term Term::add(Term lhs, Term rhs) {
  auto a = std::make_shared<const Term>(std::move(lhs));
  auto b = std::make_shared<const Term>(std::move(rhs));
  return Term{std::make_shared<const Node>(Node{Kind::Add, 0, std::move(a), std::move(b)})};
}

Term Term::mul(Term lhs, Term rhs) {
  auto a = std::make_shared<const Term>(std::move(lhs));
  auto b = std::make_shared<const Term>(std::move(rhs));
  return Term{std::make_shared<const Node>(Node{Kind::Mul, 0, std::move(a), std::move(b)})};
}

Variable Term::var_of() const { return Variable(node_->var_index); }
const Term& Term::child() const { return *node_->a; }
const Term& Term::lhs() const { return *node_->a; }
const Term& Term::rhs() const { return *node_->b; }

unsigned Term::succ_depth() const {
  unsigned d = 0;
  const Term* t = this;
  while (t->kind() == Kind::Succ) {
    ++d;
    t = &t->child();
  }
  return d;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Term::Kind::Zero: return true;
    case Term::Kind::Var: return a.node_->var_index == b.node_->var_index;
    case Term::Kind::Succ: return a.child() == b.child();
    case Term::Kind::Add:
    case Term::Kind::Mul: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

Numeral::Numeral(std::uint64_t value) : value_(value), term_(Term::zero()) {
  for (std::uint64_t i = 0; i < value; ++i) term_ = Term::succ(term_);
}

// ---- Formula ----

Formula Formula::eq(Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Eq;
  n->t1 = std::make_shared<const Term>(std::move(lhs));
  n->t2 = std::make_shared<const Term>(std::move(rhs));
  return Formula{std::move(n)};
}

Formula Formula::not_(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->f1 = std::make_shared<const Formula>(std::move(f));
  return Formula{std::move(n)};
}

Formula Formula::implies(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->f1 = std::make_shared<const Formula>(std::move(a));
  n->f2 = std::make_shared<const Formula>(std::move(b));
  return Formula{std::move(n)};
}

Formula Formula::forall(Variable v, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::ForAll;
  n->var_index = v.index();
  n->f1 = std::make_shared<const Formula>(std::move(body));
  return Formula{std::move(n)};
}

Formula Formula::rel(std::string name, std::vector<Term> args) {
  if (name.empty()) throw std::invalid_argument("relation name must be non-empty");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Rel;
  n->rel_name = std::move(name);
  n->rel_args = std::move(args);
  return Formula{std::move(n)};
}

Formula Formula::exists(Variable v, Formula body) {
  return not_(forall(v, not_(std::move(body))));
}

Formula Formula::and_(Formula a, Formula b) {
  return not_(implies(std::move(a), not_(std::move(b))));
}

Formula Formula::or_(Formula a, Formula b) {
  return implies(not_(std::move(a)), std::move(b));
}

const Term& Formula::eq_lhs() const { return *node_->t1; }
const Term& Formula::eq_rhs() const { return *node_->t2; }
const Formula& Formula::sub() const { return *node_->f1; }
const Formula& Formula::lhs() const { return *node_->f1; }
const Formula& Formula::rhs() const { return *node_->f2; }
Variable Formula::bound_var() const { return Variable(node_->var_index); }
const Formula& Formula::body() const { return *node_->f1; }
const std::string& Formula::rel_name() const { return node_->rel_name; }
const std::vector<Term>& Formula::rel_args() const { return node_->rel_args; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Formula::Kind::Eq:
      return a.eq_lhs() == b.eq_lhs() && a.eq_rhs() == b.eq_rhs();
    case Formula::Kind::Not:
      return a.sub() == b.sub();
    case Formula::Kind::Implies:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Formula::Kind::ForAll:
      return a.node_->var_index == b.node_->var_index && a.body() == b.body();
    case Formula::Kind::Rel:
      return a.rel_name() == b.rel_name() && a.rel_args() == b.rel_args();
  }
  return false;
}

// ---- free variables ----

namespace {

void collect_free(const Term& t, std::set<Variable>& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: return;
    case Term::Kind::Var: out.insert(t.var_of()); return;
    case Term::Kind::Succ: collect_free(t.child(), out); return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      collect_free(t.lhs(), out);
      collect_free(t.rhs(), out);
      return;
  }
}

void collect_free(const Formula& f, std::set<Variable>& bound, std::set<Variable>& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq: {
      std::set<Variable> vs;
      collect_free(f.eq_lhs(), vs);
      collect_free(f.eq_rhs(), vs);
      for (Variable v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case Formula::Kind::Rel: {
      std::set<Variable> vs;
      for (const Term& t : f.rel_args()) collect_free(t, vs);
      for (Variable v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case Formula::Kind::Not:
      collect_free(f.sub(), bound, out);
      return;
    case Formula::Kind::Implies:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
      return;
    case Formula::Kind::ForAll: {
      Variable v = f.bound_var();
      bool was_bound = bound.count(v) > 0;
      bound.insert(v);
      collect_free(f.body(), bound, out);
      if (!was_bound) bound.erase(v);
      return;
    }
  }
}

}  // namespace

std::set<Variable> free_variables(const Term& t) {
  std::set<Variable> out;
  collect_free(t, out);
  return out;
}

std::set<Variable> free_variables(const Formula& f) {
  std::set<Variable> bound, out;
  collect_free(f, bound, out);
  return out;
}

// ---- substitution ----

Term substitute(const Term& in, Variable x, const Term& t) {
  switch (in.kind()) {
    case Term::Kind::Zero: return in;
    case Term::Kind::Var: return in.var_of() == x ? t : in;
    case Term::Kind::Succ: {
      Term c = substitute(in.child(), x, t);
      return c == in.child() ? in : Term::succ(c);
    }
    case Term::Kind::Add: {
      Term a = substitute(in.lhs(), x, t);
      Term b = substitute(in.rhs(), x, t);
      return (a == in.lhs() && b == in.rhs()) ? in : Term::add(a, b);
    }
    case Term::Kind::Mul: {
      Term a = substitute(in.lhs(), x, t);
      Term b = substitute(in.rhs(), x, t);
      return (a == in.lhs() && b == in.rhs()) ? in : Term::mul(a, b);
    }
  }
  return in;
}

namespace {

Variable smallest_fresh(const std::set<Variable>& avoid) {
  unsigned i = 1;
  for (Variable v : avoid) {
    if (v.index() == i)
      ++i;
    else if (v.index() > i)
      break;
  }
  return Variable(i);
}

}  // namespace

Formula substitute(const Formula& in, Variable x, const Term& t) {
  switch (in.kind()) {
    case Formula::Kind::Eq:
      return Formula::eq(substitute(in.eq_lhs(), x, t), substitute(in.eq_rhs(), x, t));
    case Formula::Kind::Rel: {
      std::vector<Term> args;
      args.reserve(in.rel_args().size());
      for (const Term& a : in.rel_args()) args.push_back(substitute(a, x, t));
      return Formula::rel(in.rel_name(), std::move(args));
    }
    case Formula::Kind::Not:
      return Formula::not_(substitute(in.sub(), x, t));
    case Formula::Kind::Implies:
      return Formula::implies(substitute(in.lhs(), x, t), substitute(in.rhs(), x, t));
    case Formula::Kind::ForAll: {
      Variable y = in.bound_var();
      if (y == x) return in;  // x is shadowed here
      std::set<Variable> body_free = free_variables(in.body());
      if (!body_free.count(x)) return in;  // nothing to replace below
      std::set<Variable> t_free = free_variables(t);
      if (t_free.count(y)) {
        // y would capture a variable of t; rename it to the smallest
        // index free in neither operand.
        std::set<Variable> avoid = free_variables(in);
        avoid.insert(t_free.begin(), t_free.end());
        Variable z = smallest_fresh(avoid);
        Formula renamed = substitute(in.body(), y, Term::var(z));
        return Formula::forall(z, substitute(renamed, x, t));
      }
      return Formula::forall(y, substitute(in.body(), x, t));
    }
  }
  return in;
}

namespace {

bool substitutable_rec(const Formula& f, Variable x, const std::set<Variable>& t_free,
                       std::set<Variable>& binders) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
    case Formula::Kind::Rel: {
      if (!free_variables(f).count(x)) return true;
      for (Variable b : binders)
        if (t_free.count(b)) return false;
      return true;
    }
    case Formula::Kind::Not:
      return substitutable_rec(f.sub(), x, t_free, binders);
    case Formula::Kind::Implies:
      return substitutable_rec(f.lhs(), x, t_free, binders) &&
             substitutable_rec(f.rhs(), x, t_free, binders);
    case Formula::Kind::ForAll: {
      Variable y = f.bound_var();
      if (y == x) return true;
      bool was = binders.count(y) > 0;
      binders.insert(y);
      bool ok = substitutable_rec(f.body(), x, t_free, binders);
      if (!was) binders.erase(y);
      return ok;
    }
  }
  return true;
}

}  // namespace

bool substitutable(const Formula& f, Variable x, const Term& t) {
  std::set<Variable> t_free = free_variables(t);
  std::set<Variable> binders;
  return substitutable_rec(f, x, t_free, binders);
}

Formula universal_closure(const Formula& f) {
  std::set<Variable> fv = free_variables(f);
  Formula out = f;
  // Close from the largest index inward so the outermost quantifier
  // binds the smallest variable.
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) out = Formula::forall(*it, out);
  return out;
}

}  // namespace paw
