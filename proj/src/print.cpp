#include "paw/print.hpp"

#include <optional>

namespace paw {

std::string variable_name(Variable v) { return "x" + std::to_string(v.index()); }

namespace {

// Term precedence levels used for minimal parenthesisation.
enum TermLevel { kAdd = 0, kMul = 1, kPost = 2, kTermAtom = 3 };

int term_level(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Add: return kAdd;
    case Term::Kind::Mul: return kMul;
    case Term::Kind::Succ: return kPost;
    default: return kTermAtom;
  }
}

void print_term_rec(const Term& t, int min_level, std::string& out) {
  bool parens = term_level(t) < min_level;
  if (parens) out += '(';
  switch (t.kind()) {
    case Term::Kind::Zero:
      out += '0';
      break;
    case Term::Kind::Var:
      out += variable_name(t.var_of());
      break;
    case Term::Kind::Succ:
      print_term_rec(t.child(), kPost, out);
      out += '\'';
      break;
    case Term::Kind::Add:
      print_term_rec(t.lhs(), kAdd, out);
      out += " + ";
      print_term_rec(t.rhs(), kMul, out);
      break;
    case Term::Kind::Mul:
      print_term_rec(t.lhs(), kMul, out);
      out += " * ";
      print_term_rec(t.rhs(), kPost, out);
      break;
  }
  if (parens) out += ')';
}

// Formula precedence levels; sugar views share the level of the
// connective they print as.
enum FormulaLevel { kImp = 0, kOr = 1, kAnd = 2, kUnary = 3, kAtom = 4 };

// How a node renders under the requested mode.
enum class View { Eq, Rel, Not, Implies, ForAll, Exists, And, Or };

View view_of(const Formula& f, PrintMode mode) {
  switch (f.kind()) {
    case Formula::Kind::Eq: return View::Eq;
    case Formula::Kind::Rel: return View::Rel;
    case Formula::Kind::ForAll: return View::ForAll;
    case Formula::Kind::Implies:
      if (mode == PrintMode::Sugared && f.lhs().kind() == Formula::Kind::Not) return View::Or;
      return View::Implies;
    case Formula::Kind::Not: {
      if (mode == PrintMode::Sugared) {
        const Formula& s = f.sub();
        if (s.kind() == Formula::Kind::ForAll && s.body().kind() == Formula::Kind::Not)
          return View::Exists;
        if (s.kind() == Formula::Kind::Implies && s.rhs().kind() == Formula::Kind::Not)
          return View::And;
      }
      return View::Not;
    }
  }
  return View::Eq;
}

int view_level(View v) {
  switch (v) {
    case View::Eq:
    case View::Rel: return kAtom;
    case View::Not:
    case View::ForAll:
    case View::Exists: return kUnary;
    case View::And: return kAnd;
    case View::Or: return kOr;
    case View::Implies: return kImp;
  }
  return kAtom;
}

struct Printer {
  PrintMode mode;
  bool unicode;
  std::string out;

  void quantifier(char marker, Variable v) {
    out += '(';
    if (unicode)
      out += (marker == 'A') ? "∀" : "∃";
    else
      out += marker;
    out += variable_name(v);
    out += ')';
  }

  // Operand of ~ or a quantifier: unary-level operands chain without
  // parentheses, everything else is wrapped.
  void unary_operand(const Formula& f) {
    if (view_level(view_of(f, mode)) >= kUnary && view_of(f, mode) != View::Eq &&
        view_of(f, mode) != View::Rel) {
      print(f, kUnary);
    } else {
      out += '(';
      print(f, kImp);
      out += ')';
    }
  }

  void print(const Formula& f, int min_level) {
    View v = view_of(f, mode);
    bool parens = view_level(v) < min_level;
    if (parens) out += '(';
    switch (v) {
      case View::Eq:
        print_term_rec(f.eq_lhs(), kAdd, out);
        out += " = ";
        print_term_rec(f.eq_rhs(), kAdd, out);
        break;
      case View::Rel: {
        out += '@';
        out += f.rel_name();
        out += '(';
        bool first = true;
        for (const Term& t : f.rel_args()) {
          if (!first) out += ", ";
          first = false;
          print_term_rec(t, kAdd, out);
        }
        out += ')';
        break;
      }
      case View::Not:
        out += unicode ? "¬" : "~";
        unary_operand(f.sub());
        break;
      case View::ForAll:
        quantifier('A', f.bound_var());
        unary_operand(f.body());
        break;
      case View::Exists:
        quantifier('E', f.sub().bound_var());
        unary_operand(f.sub().body().sub());
        break;
      case View::And:
        print(f.sub().lhs(), kAnd);
        out += unicode ? " ∧ " : " & ";
        print(f.sub().rhs().sub(), kUnary);
        break;
      case View::Or:
        print(f.lhs().sub(), kOr);
        out += unicode ? " ∨ " : " | ";
        print(f.rhs(), kAnd);
        break;
      case View::Implies:
        print(f.lhs(), kOr);
        out += unicode ? " → " : " -> ";
        print(f.rhs(), kImp);
        break;
    }
    if (parens) out += ')';
  }
};

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_term_rec(t, kAdd, out);
  return out;
}

std::string print_formula(const Formula& f, const PrintOptions& opts) {
  Printer p{opts.mode, opts.unicode, {}};
  p.print(f, kImp);
  return p.out;
}

}  // namespace paw
