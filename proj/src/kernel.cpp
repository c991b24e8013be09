#include "paw/kernel.hpp"

#include <sstream>

#include "paw/print.hpp"

namespace paw {

std::string to_string(AxiomId id) {
  switch (id) {
    case AxiomId::PA1: return "PA1";
    case AxiomId::PA2: return "PA2";
    case AxiomId::PA3: return "PA3";
    case AxiomId::PA4: return "PA4";
    case AxiomId::PA5: return "PA5";
    case AxiomId::PA6: return "PA6";
    case AxiomId::PA7: return "PA7";
    case AxiomId::PA8: return "PA8";
    case AxiomId::PA9: return "PA9";
    case AxiomId::L1: return "L1";
    case AxiomId::L2: return "L2";
    case AxiomId::L3: return "L3";
    case AxiomId::L4: return "L4";
    case AxiomId::L5: return "L5";
    case AxiomId::Eq: return "EQ";
  }
  return "?";
}

std::optional<AxiomId> axiom_id_from_string(const std::string& s) {
  static const std::map<std::string, AxiomId> table = {
      {"PA1", AxiomId::PA1}, {"PA2", AxiomId::PA2}, {"PA3", AxiomId::PA3},
      {"PA4", AxiomId::PA4}, {"PA5", AxiomId::PA5}, {"PA6", AxiomId::PA6},
      {"PA7", AxiomId::PA7}, {"PA8", AxiomId::PA8}, {"PA9", AxiomId::PA9},
      {"L1", AxiomId::L1},   {"L2", AxiomId::L2},   {"L3", AxiomId::L3},
      {"L4", AxiomId::L4},   {"L5", AxiomId::L5},   {"EQ", AxiomId::Eq},
  };
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

namespace {

const Variable kV1{1}, kV2{2}, kV3{3};

Term v1() { return Term::var(kV1); }
Term v2() { return Term::var(kV2); }
Term v3() { return Term::var(kV3); }

// ---- PA1..PA8 schema matching by first-order unification over the
// schema variables x1..x3 (every variable of a schema template is a
// hole that binds an arbitrary term).

bool match_term_schema(const Term& tmpl, const Term& f, std::map<unsigned, Term>& subst) {
  if (tmpl.kind() == Term::Kind::Var) {
    unsigned i = tmpl.var_of().index();
    auto it = subst.find(i);
    if (it == subst.end()) {
      subst.emplace(i, f);
      return true;
    }
    return it->second == f;
  }
  if (tmpl.kind() != f.kind()) return false;
  switch (tmpl.kind()) {
    case Term::Kind::Zero: return true;
    case Term::Kind::Succ: return match_term_schema(tmpl.child(), f.child(), subst);
    case Term::Kind::Add:
    case Term::Kind::Mul:
      return match_term_schema(tmpl.lhs(), f.lhs(), subst) &&
             match_term_schema(tmpl.rhs(), f.rhs(), subst);
    default: return false;
  }
}

bool match_formula_schema(const Formula& tmpl, const Formula& f, std::map<unsigned, Term>& subst) {
  if (tmpl.kind() != f.kind()) return false;
  switch (tmpl.kind()) {
    case Formula::Kind::Eq:
      return match_term_schema(tmpl.eq_lhs(), f.eq_lhs(), subst) &&
             match_term_schema(tmpl.eq_rhs(), f.eq_rhs(), subst);
    case Formula::Kind::Not:
      return match_formula_schema(tmpl.sub(), f.sub(), subst);
    case Formula::Kind::Implies:
      return match_formula_schema(tmpl.lhs(), f.lhs(), subst) &&
             match_formula_schema(tmpl.rhs(), f.rhs(), subst);
    default: return false;  // no quantifiers or relation atoms in PA1..PA8
  }
}

std::string subst_detail(const std::map<unsigned, Term>& subst) {
  std::string out;
  for (const auto& [i, t] : subst) {
    if (!out.empty()) out += ", ";
    out += variable_name(Variable(i)) + " := " + print_term(t);
  }
  return out;
}

// ---- L4 support: recover the instantiating term by a lockstep walk.

bool find_l4_term(const Term& a, const Term& b, Variable x, bool x_bound,
                  std::optional<Term>& cand) {
  if (!x_bound && a.kind() == Term::Kind::Var && a.var_of() == x) {
    if (cand && !(*cand == b)) return false;
    cand = b;
    return true;
  }
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Zero: return true;
    case Term::Kind::Var: return a.var_of() == b.var_of();
    case Term::Kind::Succ: return find_l4_term(a.child(), b.child(), x, x_bound, cand);
    case Term::Kind::Add:
    case Term::Kind::Mul:
      return find_l4_term(a.lhs(), b.lhs(), x, x_bound, cand) &&
             find_l4_term(a.rhs(), b.rhs(), x, x_bound, cand);
  }
  return false;
}

bool find_l4_formula(const Formula& a, const Formula& b, Variable x, bool x_bound,
                     std::optional<Term>& cand) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Eq:
      return find_l4_term(a.eq_lhs(), b.eq_lhs(), x, x_bound, cand) &&
             find_l4_term(a.eq_rhs(), b.eq_rhs(), x, x_bound, cand);
    case Formula::Kind::Rel: {
      if (a.rel_name() != b.rel_name() || a.rel_args().size() != b.rel_args().size()) return false;
      for (std::size_t i = 0; i < a.rel_args().size(); ++i)
        if (!find_l4_term(a.rel_args()[i], b.rel_args()[i], x, x_bound, cand)) return false;
      return true;
    }
    case Formula::Kind::Not: return find_l4_formula(a.sub(), b.sub(), x, x_bound, cand);
    case Formula::Kind::Implies:
      return find_l4_formula(a.lhs(), b.lhs(), x, x_bound, cand) &&
             find_l4_formula(a.rhs(), b.rhs(), x, x_bound, cand);
    case Formula::Kind::ForAll:
      if (a.bound_var() != b.bound_var()) return false;
      return find_l4_formula(a.body(), b.body(), x, x_bound || a.bound_var() == x, cand);
  }
  return false;
}

std::optional<AxiomMatch> match_one(AxiomId id, const Formula& f) {
  using K = Formula::Kind;
  switch (id) {
    case AxiomId::PA1:
    case AxiomId::PA2:
    case AxiomId::PA3:
    case AxiomId::PA4:
    case AxiomId::PA5:
    case AxiomId::PA6:
    case AxiomId::PA7:
    case AxiomId::PA8: {
      std::map<unsigned, Term> subst;
      if (!match_formula_schema(pa_axiom_formula(id), f, subst)) return std::nullopt;
      AxiomMatch m{id, subst_detail(subst), subst, {}, {}, {}};
      return m;
    }
    case AxiomId::PA9: {
      // F(0) -> (((Ax)(F(x) -> F(x'))) -> (Ax)F(x)); F is read off the
      // conclusion quantifier, which pins the most general instance.
      if (f.kind() != K::Implies || f.rhs().kind() != K::Implies) return std::nullopt;
      const Formula& step = f.rhs().lhs();
      const Formula& conc = f.rhs().rhs();
      if (step.kind() != K::ForAll || conc.kind() != K::ForAll) return std::nullopt;
      Variable x = conc.bound_var();
      if (step.bound_var() != x) return std::nullopt;
      const Formula& g = conc.body();
      if (step.body().kind() != K::Implies) return std::nullopt;
      if (step.body().lhs() != g) return std::nullopt;
      if (step.body().rhs() != substitute(g, x, Term::succ(Term::var(x)))) return std::nullopt;
      if (f.lhs() != substitute(g, x, Term::zero())) return std::nullopt;
      AxiomMatch m{AxiomId::PA9,
                   "F(" + variable_name(x) + ") := " + print_formula(g),
                   {},
                   g,
                   x,
                   {}};
      return m;
    }
    case AxiomId::L1: {
      // A -> (B -> A)
      if (f.kind() != K::Implies || f.rhs().kind() != K::Implies) return std::nullopt;
      if (f.lhs() != f.rhs().rhs()) return std::nullopt;
      return AxiomMatch{AxiomId::L1, "A := " + print_formula(f.lhs()) + ", B := " +
                        print_formula(f.rhs().lhs()), {}, {}, {}, {}};
    }
    case AxiomId::L2: {
      // (A -> (B -> C)) -> ((A -> B) -> (A -> C))
      if (f.kind() != K::Implies) return std::nullopt;
      const Formula& p = f.lhs();
      const Formula& q = f.rhs();
      if (p.kind() != K::Implies || p.rhs().kind() != K::Implies) return std::nullopt;
      const Formula &a = p.lhs(), &b = p.rhs().lhs(), &c = p.rhs().rhs();
      if (q.kind() != K::Implies || q.lhs().kind() != K::Implies || q.rhs().kind() != K::Implies)
        return std::nullopt;
      if (q.lhs().lhs() != a || q.lhs().rhs() != b) return std::nullopt;
      if (q.rhs().lhs() != a || q.rhs().rhs() != c) return std::nullopt;
      return AxiomMatch{AxiomId::L2, "A := " + print_formula(a) + ", B := " + print_formula(b) +
                        ", C := " + print_formula(c), {}, {}, {}, {}};
    }
    case AxiomId::L3: {
      // (~B -> ~A) -> ((~B -> A) -> B)
      if (f.kind() != K::Implies) return std::nullopt;
      const Formula& p = f.lhs();
      const Formula& q = f.rhs();
      if (p.kind() != K::Implies || p.lhs().kind() != K::Not || p.rhs().kind() != K::Not)
        return std::nullopt;
      const Formula& b = p.lhs().sub();
      const Formula& a = p.rhs().sub();
      if (q.kind() != K::Implies || q.lhs().kind() != K::Implies) return std::nullopt;
      if (q.lhs().lhs() != p.lhs() || q.lhs().rhs() != a) return std::nullopt;
      if (q.rhs() != b) return std::nullopt;
      return AxiomMatch{AxiomId::L3, "A := " + print_formula(a) + ", B := " + print_formula(b),
                        {}, {}, {}, {}};
    }
    case AxiomId::L4: {
      // (Ax)A -> A[x := t], t free for x in A
      if (f.kind() != K::Implies || f.lhs().kind() != K::ForAll) return std::nullopt;
      Variable x = f.lhs().bound_var();
      const Formula& a = f.lhs().body();
      std::optional<Term> cand;
      if (!find_l4_formula(a, f.rhs(), x, false, cand)) return std::nullopt;
      Term t = cand ? *cand : Term::var(x);
      if (!substitutable(a, x, t)) return std::nullopt;
      if (substitute(a, x, t) != f.rhs()) return std::nullopt;
      return AxiomMatch{AxiomId::L4, variable_name(x) + " := " + print_term(t), {}, {}, {}, t};
    }
    case AxiomId::L5: {
      // (Ax)(A -> B) -> (A -> (Ax)B), x not free in A
      if (f.kind() != K::Implies || f.lhs().kind() != K::ForAll) return std::nullopt;
      Variable x = f.lhs().bound_var();
      if (f.lhs().body().kind() != K::Implies) return std::nullopt;
      const Formula& a = f.lhs().body().lhs();
      const Formula& b = f.lhs().body().rhs();
      if (f.rhs().kind() != K::Implies || f.rhs().lhs() != a) return std::nullopt;
      const Formula& q = f.rhs().rhs();
      if (q.kind() != K::ForAll || q.bound_var() != x || q.body() != b) return std::nullopt;
      if (free_variables(a).count(x)) return std::nullopt;
      return AxiomMatch{AxiomId::L5, "moves (A" + variable_name(x) + ") inward", {}, {}, {}, {}};
    }
    case AxiomId::Eq: {
      if (f.kind() != K::Eq || f.eq_lhs() != f.eq_rhs()) return std::nullopt;
      return AxiomMatch{AxiomId::Eq, "t := " + print_term(f.eq_lhs()), {}, {}, {}, f.eq_lhs()};
    }
  }
  return std::nullopt;
}

}  // namespace

Formula pa_axiom_formula(AxiomId id) {
  switch (id) {
    case AxiomId::PA1:
      return Formula::implies(Formula::eq(v1(), v2()),
                              Formula::implies(Formula::eq(v1(), v3()), Formula::eq(v2(), v3())));
    case AxiomId::PA2:
      return Formula::implies(Formula::eq(v1(), v2()),
                              Formula::eq(Term::succ(v1()), Term::succ(v2())));
    case AxiomId::PA3:
      return Formula::not_(Formula::eq(Term::zero(), Term::succ(v1())));
    case AxiomId::PA4:
      return Formula::implies(Formula::eq(Term::succ(v1()), Term::succ(v2())),
                              Formula::eq(v1(), v2()));
    case AxiomId::PA5:
      return Formula::eq(Term::add(v1(), Term::zero()), v1());
    case AxiomId::PA6:
      return Formula::eq(Term::add(v1(), Term::succ(v2())), Term::succ(Term::add(v1(), v2())));
    case AxiomId::PA7:
      return Formula::eq(Term::mul(v1(), Term::zero()), Term::zero());
    case AxiomId::PA8:
      return Formula::eq(Term::mul(v1(), Term::succ(v2())), Term::add(Term::mul(v1(), v2()), v1()));
    default:
      throw std::invalid_argument("pa_axiom_formula: not a PA1..PA8 schema");
  }
}

Formula induction_instance(const Formula& f, Variable x) {
  Formula base = substitute(f, x, Term::zero());
  Formula step = Formula::forall(
      x, Formula::implies(f, substitute(f, x, Term::succ(Term::var(x)))));
  return Formula::implies(base, Formula::implies(step, Formula::forall(x, f)));
}

std::vector<AxiomMatch> match_pa_axiom(const Formula& f) {
  std::vector<AxiomMatch> out;
  for (AxiomId id : {AxiomId::PA1, AxiomId::PA2, AxiomId::PA3, AxiomId::PA4, AxiomId::PA5,
                     AxiomId::PA6, AxiomId::PA7, AxiomId::PA8, AxiomId::PA9}) {
    if (auto m = match_one(id, f)) out.push_back(std::move(*m));
  }
  return out;
}

std::vector<AxiomMatch> match_logical_axiom(const Formula& f) {
  std::vector<AxiomMatch> out;
  for (AxiomId id : {AxiomId::L1, AxiomId::L2, AxiomId::L3, AxiomId::L4, AxiomId::L5}) {
    if (auto m = match_one(id, f)) out.push_back(std::move(*m));
  }
  return out;
}

std::optional<AxiomMatch> match_axiom(AxiomId id, const Formula& f) { return match_one(id, f); }

std::string print_justification(const Justification& j) {
  switch (j.kind) {
    case Justification::Kind::Axiom: return "AX:" + to_string(j.axiom);
    case Justification::Kind::ModusPonens:
      return "MP:" + std::to_string(j.major) + "," + std::to_string(j.minor);
    case Justification::Kind::Generalisation:
      return "GEN:" + std::to_string(j.major) + "," + variable_name(*j.gen_var);
    case Justification::Kind::Assumption: return "ASSUME";
  }
  return "?";
}

CheckReport check_proof(const Proof& p, const CheckOptions& opts) {
  CheckReport report;
  auto reject = [&](std::size_t line, std::string reason) {
    report.accepted = false;
    report.failing_line = line;
    report.reason = std::move(reason);
    return report;
  };

  if (p.lines.empty()) return reject(0, "empty proof");

  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const ProofLine& line = p.lines[i];
    std::size_t idx = i + 1;
    if (line.index != idx)
      return reject(idx, "line numbered " + std::to_string(line.index) + " at position " +
                             std::to_string(idx));
    LineReport lr{idx, print_justification(line.justification), ""};
    const Justification& j = line.justification;
    switch (j.kind) {
      case Justification::Kind::Axiom: {
        if (j.axiom == AxiomId::Eq && opts.strict_pa)
          return reject(idx, "reflexivity axiom EQ is disabled under strict mode");
        auto m = match_axiom(j.axiom, line.formula);
        if (!m) return reject(idx, "not an instance of " + to_string(j.axiom));
        lr.resolved = to_string(j.axiom) + "[" + m->detail + "]";
        break;
      }
      case Justification::Kind::ModusPonens: {
        if (j.major == 0 || j.major >= idx || j.minor == 0 || j.minor >= idx)
          return reject(idx, "dangling reference");
        const Formula& imp = p.lines[j.major - 1].formula;
        const Formula& ant = p.lines[j.minor - 1].formula;
        if (imp.kind() != Formula::Kind::Implies)
          return reject(idx, "line " + std::to_string(j.major) + " is not an implication");
        if (imp.lhs() != ant)
          return reject(idx, "line " + std::to_string(j.minor) +
                                 " does not match the antecedent of line " +
                                 std::to_string(j.major));
        if (imp.rhs() != line.formula)
          return reject(idx, "conclusion does not match the consequent of line " +
                                 std::to_string(j.major));
        lr.resolved = "from " + std::to_string(j.major) + " and " + std::to_string(j.minor);
        break;
      }
      case Justification::Kind::Generalisation: {
        if (j.major == 0 || j.major >= idx) return reject(idx, "dangling reference");
        if (!j.gen_var) return reject(idx, "generalisation without a variable");
        if (line.formula.kind() != Formula::Kind::ForAll ||
            line.formula.bound_var() != *j.gen_var ||
            line.formula.body() != p.lines[j.major - 1].formula)
          return reject(idx, "not the generalisation of line " + std::to_string(j.major) +
                                 " over " + variable_name(*j.gen_var));
        lr.resolved = "from " + std::to_string(j.major);
        break;
      }
      case Justification::Kind::Assumption: {
        if (!opts.allow_assumptions) return reject(idx, "assumption lines are disabled");
        report.assumption_lines.push_back(idx);
        lr.resolved = "postulated";
        break;
      }
    }
    report.lines.push_back(std::move(lr));
  }

  if (!(p.goal == p.lines.back().formula))
    return reject(p.lines.size(), "goal does not match the last line");

  report.accepted = true;
  return report;
}

namespace {

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

ParseError proof_error(std::size_t offset, std::string msg) {
  return ParseError{SourceSpan{offset, offset}, std::move(msg), {}};
}

}  // namespace

std::variant<Proof, ParseError> parse_proof(std::string_view text) {
  std::vector<ProofLine> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    std::size_t line_start = pos;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::size_t p1 = line.find('|');
    std::size_t p2 = p1 == std::string_view::npos ? std::string_view::npos : line.find('|', p1 + 1);
    if (p2 == std::string_view::npos)
      return proof_error(line_start, "expected '<idx> | <formula> | <justification>'");

    std::string_view idx_text = trim(line.substr(0, p1));
    std::string_view formula_text = trim(line.substr(p1 + 1, p2 - p1 - 1));
    std::string_view just_text = trim(line.substr(p2 + 1));

    std::size_t idx = 0;
    for (char c : idx_text) {
      if (c < '0' || c > '9') return proof_error(line_start, "line index is not a number");
      idx = idx * 10 + static_cast<std::size_t>(c - '0');
    }
    if (idx_text.empty()) return proof_error(line_start, "missing line index");

    ParseResult fr = parse_formula(formula_text);
    if (auto* err = std::get_if<ParseError>(&fr)) {
      ParseError adjusted = *err;
      std::size_t field_offset =
          line_start + static_cast<std::size_t>(formula_text.data() - raw.data());
      adjusted.span.start += field_offset;
      adjusted.span.end += field_offset;
      adjusted.message = "line " + std::to_string(idx) + ": " + adjusted.message;
      return adjusted;
    }
    Formula formula = std::get<Formula>(fr);

    Justification just;
    std::string jt(just_text);
    if (jt == "ASSUME") {
      just.kind = Justification::Kind::Assumption;
    } else if (jt.rfind("AX:", 0) == 0) {
      auto id = axiom_id_from_string(jt.substr(3));
      if (!id) return proof_error(line_start, "unknown axiom id '" + jt.substr(3) + "'");
      just.kind = Justification::Kind::Axiom;
      just.axiom = *id;
    } else if (jt.rfind("MP:", 0) == 0) {
      std::size_t comma = jt.find(',', 3);
      if (comma == std::string::npos) return proof_error(line_start, "MP needs two line numbers");
      try {
        just.major = std::stoul(jt.substr(3, comma - 3));
        just.minor = std::stoul(jt.substr(comma + 1));
      } catch (const std::exception&) {
        return proof_error(line_start, "MP references are not numbers");
      }
      just.kind = Justification::Kind::ModusPonens;
    } else if (jt.rfind("GEN:", 0) == 0) {
      std::size_t comma = jt.find(',', 4);
      if (comma == std::string::npos)
        return proof_error(line_start, "GEN needs a line number and a variable");
      try {
        just.major = std::stoul(jt.substr(4, comma - 4));
      } catch (const std::exception&) {
        return proof_error(line_start, "GEN reference is not a number");
      }
      TermParseResult vr = parse_term(trim(std::string_view(jt).substr(comma + 1)));
      auto* vt = std::get_if<Term>(&vr);
      if (!vt || vt->kind() != Term::Kind::Var)
        return proof_error(line_start, "GEN variable is malformed");
      just.gen_var = vt->var_of();
      just.kind = Justification::Kind::Generalisation;
    } else {
      return proof_error(line_start, "unknown justification '" + jt + "'");
    }

    lines.push_back(ProofLine{idx, formula, just});
  }

  if (lines.empty()) return proof_error(0, "empty proof");
  Formula goal = lines.back().formula;
  return Proof{std::move(lines), std::move(goal)};
}

std::string print_proof(const Proof& p) {
  std::ostringstream out;
  for (const ProofLine& line : p.lines) {
    out << line.index << " | " << print_formula(line.formula) << " | "
        << print_justification(line.justification) << "\n";
  }
  return out.str();
}

}  // namespace paw
