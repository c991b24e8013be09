#include "paw/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "paw/polynomial.hpp"
#include "paw/print.hpp"

namespace paw {

// ---- small enum helpers ----

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::TrueCertified: return "true-certified";
    case VerdictKind::FalseCertified: return "false-certified";
    case VerdictKind::VerifiedUpTo: return "verified-up-to";
    case VerdictKind::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Mode m) { return m == Mode::Standard ? "standard" : "algorithmic"; }

std::optional<Mode> mode_from_string(const std::string& s) {
  if (s == "standard") return Mode::Standard;
  if (s == "algorithmic") return Mode::Algorithmic;
  return std::nullopt;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Computable: return "computable";
    case Classification::VerifiableOnlyAtBound: return "verifiable-only-at-bound";
    case Classification::UnknownAtBound: return "unknown-at-bound";
  }
  return "?";
}

std::string Verdict::polarity() const {
  switch (kind) {
    case VerdictKind::TrueCertified: return "all-true";
    case VerdictKind::FalseCertified: return "all-false";
    case VerdictKind::VerifiedUpTo: return holds.value_or(true) ? "all-true" : "all-false";
    case VerdictKind::Unknown: return "mixed";
  }
  return "mixed";
}

// ---- term evaluation ----

Nat eval_term(const Term& t, const Assignment& s, std::uint64_t& steps) {
  ++steps;
  switch (t.kind()) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::Var: return s.get(t.var_of());
    case Term::Kind::Succ: return eval_term(t.child(), s, steps) + 1;
    case Term::Kind::Add: return eval_term(t.lhs(), s, steps) + eval_term(t.rhs(), s, steps);
    case Term::Kind::Mul: return eval_term(t.lhs(), s, steps) * eval_term(t.rhs(), s, steps);
  }
  return 0;
}

Nat eval_term(const Term& t, const Assignment& s) {
  std::uint64_t steps = 0;
  return eval_term(t, s, steps);
}

// ---- evidence digest ----

namespace {

void fnv_feed(std::uint64_t& h, std::string_view data) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  h ^= 0xff;
  h *= 1099511628211ull;
}

std::string nat_str(const Nat& n) { return n.str(); }

}  // namespace

std::uint64_t trace_digest(const Evidence& e) {
  std::uint64_t h = 14695981039346656037ull;
  fnv_feed(h, e.algorithm_id);
  fnv_feed(h, e.method == EvidenceMethod::Uniform ? "uniform" : "per-instance");
  fnv_feed(h, e.note);
  for (const EvidenceRow& r : e.instances) {
    for (const Nat& a : r.args) fnv_feed(h, nat_str(a));
    fnv_feed(h, r.value ? (*r.value ? "t" : "f") : "u");
    fnv_feed(h, std::to_string(r.steps));
    fnv_feed(h, r.certified ? "c" : "-");
  }
  return h;
}

// ---- atomic decisions ----

AtomDecision decide_atom(const Formula& atom, const Assignment& s, const SatisfactionMethod& sm) {
  if (atom.kind() == Formula::Kind::Eq) {
    std::uint64_t st = 0;
    Nat a = eval_term(atom.eq_lhs(), s, st);
    Nat b = eval_term(atom.eq_rhs(), s, st);
    st += 1;  // the comparison itself
    AtomDecision d;
    d.value = a == b;
    d.steps = st;
    d.evidence.algorithm_id = "atom-eval";
    d.evidence.method = EvidenceMethod::Uniform;
    d.evidence.instances.push_back(EvidenceRow{{a, b}, d.value, st, true});
    d.evidence.note = "witness: " + sm.witness_label;
    return d;
  }
  if (atom.kind() == Formula::Kind::Rel) {
    if (!sm.registry)
      throw std::invalid_argument("relation atom '@" + atom.rel_name() +
                                  "' used without a relation registry");
    const RelationEntry* e = sm.registry->find(atom.rel_name());
    if (!e) throw std::invalid_argument("unknown relation '@" + atom.rel_name() + "'");
    if (e->arity != atom.rel_args().size())
      throw std::invalid_argument("relation '@" + atom.rel_name() + "' expects " +
                                  std::to_string(e->arity) + " argument(s)");
    std::uint64_t st = 0;
    std::vector<Nat> args;
    args.reserve(atom.rel_args().size());
    for (const Term& t : atom.rel_args()) args.push_back(eval_term(t, s, st));
    auto [value, rsteps] = e->decide(args);
    st += rsteps;
    AtomDecision d;
    d.value = value;
    d.steps = st;
    d.evidence.algorithm_id = "rel:" + e->name;
    d.evidence.method = e->uniform ? EvidenceMethod::Uniform : EvidenceMethod::PerInstance;
    // the row carries the relation's own step count; argument evaluation
    // is only part of the decision total
    d.evidence.instances.push_back(EvidenceRow{std::move(args), value, rsteps, true});
    d.evidence.note = e->description;
    return d;
  }
  throw std::invalid_argument("decide_atom: not an atomic formula");
}

// ---- structural truth certificates ----

namespace {

struct Certificate {
  std::string name;
};

std::optional<Certificate> certify_true(const Formula& f);

std::optional<Certificate> certify_false(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      if (never_equal(f.eq_lhs(), f.eq_rhs())) return Certificate{"poly-offset"};
      return std::nullopt;
    case Formula::Kind::Not:
      return certify_true(f.sub());
    case Formula::Kind::ForAll:
      return certify_false(f.body());
    case Formula::Kind::Implies:
      if (certify_true(f.lhs()) && certify_false(f.rhs()))
        return Certificate{"implication-never"};
      return std::nullopt;
    case Formula::Kind::Rel:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Certificate> certify_true(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::ForAll:
      return certify_true(f.body());
    case Formula::Kind::Eq:
      if (always_equal(f.eq_lhs(), f.eq_rhs())) return Certificate{"poly-identity"};
      return std::nullopt;
    case Formula::Kind::Not:
      return certify_false(f.sub());
    case Formula::Kind::Implies: {
      // Substitution instances of PA axioms hold for every assignment.
      auto matches = match_pa_axiom(f);
      if (!matches.empty())
        return Certificate{"pa-axiom-instance(" + to_string(matches.front().id) + ")"};
      if (certify_true(f.rhs())) return Certificate{"consequent-universal"};
      if (certify_false(f.lhs())) return Certificate{"antecedent-never"};
      return std::nullopt;
    }
    case Formula::Kind::Rel:
      return std::nullopt;
  }
  return std::nullopt;
}

// ---- bounded quantifier patterns (the definable order u < t is the
// formula (Ez)(u + z' = t), stored as ~(Az)~(u + z' = t)) ----

struct LtPattern {
  Variable var;
  Term bound_term;
};

std::optional<LtPattern> match_lt(const Formula& g) {
  using K = Formula::Kind;
  if (g.kind() != K::Not || g.sub().kind() != K::ForAll) return std::nullopt;
  const Formula& fa = g.sub();
  Variable z = fa.bound_var();
  if (fa.body().kind() != K::Not || fa.body().sub().kind() != K::Eq) return std::nullopt;
  const Formula& eq = fa.body().sub();
  const Term& lhs = eq.eq_lhs();
  if (lhs.kind() != Term::Kind::Add) return std::nullopt;
  if (lhs.lhs().kind() != Term::Kind::Var) return std::nullopt;
  if (lhs.rhs().kind() != Term::Kind::Succ || lhs.rhs().child().kind() != Term::Kind::Var)
    return std::nullopt;
  if (lhs.rhs().child().var_of() != z) return std::nullopt;
  Variable u = lhs.lhs().var_of();
  if (u == z) return std::nullopt;
  const Term& t = eq.eq_rhs();
  if (free_variables(t).count(z)) return std::nullopt;
  return LtPattern{u, t};
}

struct BoundedForAll {
  Variable var;
  Term bound_term;
  const Formula* matrix;
};

std::optional<BoundedForAll> match_bounded_forall(const Formula& f) {
  using K = Formula::Kind;
  if (f.kind() != K::ForAll || f.body().kind() != K::Implies) return std::nullopt;
  Variable x = f.bound_var();
  auto lt = match_lt(f.body().lhs());
  if (!lt || lt->var != x) return std::nullopt;
  if (free_variables(lt->bound_term).count(x)) return std::nullopt;
  return BoundedForAll{x, lt->bound_term, &f.body().rhs()};
}

struct BoundedExists {
  Variable var;
  Term bound_term;
  const Formula* matrix;
};

// (Ex)(x < t & M), stored ~(Ax)~~((x < t) -> ~M) after desugaring both
// the quantifier and the conjunction.
std::optional<BoundedExists> match_bounded_exists(const Formula& f) {
  using K = Formula::Kind;
  if (f.kind() != K::Not || f.sub().kind() != K::ForAll) return std::nullopt;
  const Formula& fa = f.sub();
  Variable x = fa.bound_var();
  if (fa.body().kind() != K::Not) return std::nullopt;
  const Formula& w = fa.body().sub();
  if (w.kind() != K::Not || w.sub().kind() != K::Implies) return std::nullopt;
  const Formula& imp = w.sub();
  if (imp.rhs().kind() != K::Not) return std::nullopt;
  auto lt = match_lt(imp.lhs());
  if (!lt || lt->var != x) return std::nullopt;
  if (free_variables(lt->bound_term).count(x)) return std::nullopt;
  return BoundedExists{x, lt->bound_term, &imp.rhs().sub()};
}

// Scan for membership in the uniformly decidable fragment; returns the
// leftmost blocking subformula on failure.
std::optional<NotFound> scan_decidable(const Formula& f, const SatisfactionMethod& sm,
                                       bool& has_quantifier) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return std::nullopt;
    case Formula::Kind::Rel: {
      const RelationEntry* e = sm.registry ? sm.registry->find(f.rel_name()) : nullptr;
      if (!e) return NotFound{"unknown relation", print_formula(f)};
      if (!e->uniform)
        return NotFound{e->not_uniform_reason.empty() ? "relation lacks a uniform decider"
                                                      : e->not_uniform_reason,
                        print_formula(f)};
      return std::nullopt;
    }
    case Formula::Kind::Not: {
      if (auto be = match_bounded_exists(f)) {
        has_quantifier = true;
        return scan_decidable(*be->matrix, sm, has_quantifier);
      }
      return scan_decidable(f.sub(), sm, has_quantifier);
    }
    case Formula::Kind::Implies: {
      if (auto nf = scan_decidable(f.lhs(), sm, has_quantifier)) return nf;
      return scan_decidable(f.rhs(), sm, has_quantifier);
    }
    case Formula::Kind::ForAll: {
      if (!free_variables(f.body()).count(f.bound_var()))
        return scan_decidable(f.body(), sm, has_quantifier);
      if (auto bf = match_bounded_forall(f)) {
        has_quantifier = true;
        return scan_decidable(*bf->matrix, sm, has_quantifier);
      }
      return NotFound{"unbounded universal quantifier", print_formula(f)};
    }
  }
  return std::nullopt;
}

// Direct boolean evaluation over the decidable fragment.
bool decide_rec(const Formula& f, const Assignment& s, const SatisfactionMethod& sm,
                std::uint64_t& steps) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
    case Formula::Kind::Rel: {
      AtomDecision d = decide_atom(f, s, sm);
      steps += d.steps;
      return d.value;
    }
    case Formula::Kind::Not: {
      if (auto be = match_bounded_exists(f)) {
        Nat limit = eval_term(be->bound_term, s, steps);
        for (Nat v = 0; v < limit; ++v)
          if (decide_rec(*be->matrix, s.with(be->var, v), sm, steps)) return true;
        return false;
      }
      return !decide_rec(f.sub(), s, sm, steps);
    }
    case Formula::Kind::Implies:
      return !decide_rec(f.lhs(), s, sm, steps) || decide_rec(f.rhs(), s, sm, steps);
    case Formula::Kind::ForAll: {
      if (!free_variables(f.body()).count(f.bound_var()))
        return decide_rec(f.body(), s, sm, steps);
      auto bf = match_bounded_forall(f);
      if (!bf) throw std::logic_error("decide_rec reached an unbounded quantifier");
      Nat limit = eval_term(bf->bound_term, s, steps);
      for (Nat v = 0; v < limit; ++v)
        if (!decide_rec(*bf->matrix, s.with(bf->var, v), sm, steps)) return false;
      return true;
    }
  }
  return false;
}

// ---- satisfies ----

struct EvalCtx {
  unsigned bound;
  Mode mode;
  const SatisfactionMethod& sm;
};

Verdict finish(Verdict v, const EvalCtx& ctx) {
  if (ctx.mode == Mode::Algorithmic && v.kind == VerdictKind::TrueCertified &&
      v.evidence.method == EvidenceMethod::PerInstance) {
    v.kind = VerdictKind::VerifiedUpTo;
    if (!v.evidence.note.empty()) v.evidence.note += "; ";
    v.evidence.note += "per-instance evidence does not certify algorithmic truth";
  }
  return v;
}

Evidence combined_evidence(const std::string& id, const Evidence& a, const Evidence& b) {
  Evidence e;
  e.algorithm_id = id;
  e.method = (a.method == EvidenceMethod::Uniform && b.method == EvidenceMethod::Uniform)
                 ? EvidenceMethod::Uniform
                 : EvidenceMethod::PerInstance;
  e.note = a.algorithm_id + " with " + b.algorithm_id;
  return e;
}

Verdict eval_rec(const Formula& f, const Assignment& s, EvalCtx& ctx, std::uint64_t& steps) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
    case Formula::Kind::Rel: {
      AtomDecision d = decide_atom(f, s, ctx.sm);
      steps += d.steps;
      Verdict v;
      v.kind = d.value ? VerdictKind::TrueCertified : VerdictKind::FalseCertified;
      v.holds = d.value;
      v.bound = ctx.bound;
      v.steps = d.steps;
      v.evidence = std::move(d.evidence);
      return finish(std::move(v), ctx);
    }
    case Formula::Kind::Not: {
      std::uint64_t st = 0;
      Verdict inner = eval_rec(f.sub(), s, ctx, st);
      steps += st;
      Verdict v;
      v.bound = ctx.bound;
      v.steps = st;
      v.evidence = std::move(inner.evidence);
      switch (inner.kind) {
        case VerdictKind::TrueCertified:
          v.kind = VerdictKind::FalseCertified;
          v.holds = false;
          break;
        case VerdictKind::FalseCertified:
          v.kind = VerdictKind::TrueCertified;
          v.holds = true;
          break;
        case VerdictKind::VerifiedUpTo:
          v.kind = VerdictKind::VerifiedUpTo;
          v.holds = !inner.holds.value_or(true);
          break;
        case VerdictKind::Unknown:
          v.kind = VerdictKind::Unknown;
          break;
      }
      return finish(std::move(v), ctx);
    }
    case Formula::Kind::Implies: {
      std::uint64_t st = 0;
      Verdict va = eval_rec(f.lhs(), s, ctx, st);
      Verdict vb = eval_rec(f.rhs(), s, ctx, st);
      steps += st;
      Verdict v;
      v.bound = ctx.bound;
      v.steps = st;
      if (va.kind == VerdictKind::FalseCertified) {
        v.kind = VerdictKind::TrueCertified;
        v.holds = true;
        v.evidence = std::move(va.evidence);
        v.evidence.note = "antecedent certified false";
      } else if (vb.kind == VerdictKind::TrueCertified) {
        v.kind = VerdictKind::TrueCertified;
        v.holds = true;
        v.evidence = std::move(vb.evidence);
        v.evidence.note = "consequent certified true";
      } else if (va.kind == VerdictKind::TrueCertified && vb.kind == VerdictKind::FalseCertified) {
        v.kind = VerdictKind::FalseCertified;
        v.holds = false;
        v.evidence = combined_evidence("implication-refuted", va.evidence, vb.evidence);
      } else {
        std::optional<bool> ta = va.holds, tb = vb.holds;
        Evidence merged = combined_evidence("bounded-implication", va.evidence, vb.evidence);
        merged.method = EvidenceMethod::PerInstance;
        if (ta && !*ta) {
          v.kind = VerdictKind::VerifiedUpTo;
          v.holds = true;
        } else if (tb && *tb) {
          v.kind = VerdictKind::VerifiedUpTo;
          v.holds = true;
        } else if (ta && tb && *ta && !*tb) {
          v.kind = VerdictKind::VerifiedUpTo;
          v.holds = false;
        } else {
          v.kind = VerdictKind::Unknown;
        }
        v.evidence = std::move(merged);
      }
      return finish(std::move(v), ctx);
    }
    case Formula::Kind::ForAll: {
      Variable x = f.bound_var();
      if (!free_variables(f.body()).count(x)) return eval_rec(f.body(), s, ctx, steps);
      if (auto cert = certify_true(f)) {
        steps += 1;
        Verdict v;
        v.kind = VerdictKind::TrueCertified;
        v.holds = true;
        v.bound = ctx.bound;
        v.steps = 1;
        v.evidence = Evidence{cert->name, EvidenceMethod::Uniform, {}, ""};
        return finish(std::move(v), ctx);
      }
      if (auto cert = certify_false(f)) {
        steps += 1;
        Verdict v;
        v.kind = VerdictKind::FalseCertified;
        v.holds = false;
        v.bound = ctx.bound;
        v.steps = 1;
        v.evidence = Evidence{cert->name, EvidenceMethod::Uniform, {}, ""};
        return finish(std::move(v), ctx);
      }
      std::vector<EvidenceRow> rows;
      bool any_undetermined = false;
      bool any_false_unverified = false;
      std::uint64_t total = 0;
      for (unsigned val = 0; val <= ctx.bound; ++val) {
        std::uint64_t inst_steps = 0;
        Verdict vi = eval_rec(f.body(), s.with(x, Nat(val)), ctx, inst_steps);
        total += inst_steps;
        rows.push_back(EvidenceRow{{Nat(val)}, vi.holds, inst_steps, vi.certified()});
        if (vi.kind == VerdictKind::FalseCertified) {
          steps += total;
          Verdict v;
          v.kind = VerdictKind::FalseCertified;
          v.holds = false;
          v.bound = ctx.bound;
          v.steps = total;
          v.evidence.algorithm_id = "counterexample";
          v.evidence.method = EvidenceMethod::PerInstance;
          v.evidence.instances = {rows.back()};
          v.evidence.note = "witness " + variable_name(x) + " = " + std::to_string(val);
          return finish(std::move(v), ctx);
        }
        if (!vi.holds)
          any_undetermined = true;
        else if (!*vi.holds)
          any_false_unverified = true;
      }
      steps += total;
      Verdict v;
      v.bound = ctx.bound;
      v.steps = total;
      v.evidence.algorithm_id = "enumeration";
      v.evidence.method = EvidenceMethod::PerInstance;
      v.evidence.instances = std::move(rows);
      v.evidence.note = "exhausted {0.." + std::to_string(ctx.bound) + "}";
      if (any_false_unverified) {
        v.kind = VerdictKind::VerifiedUpTo;
        v.holds = false;
      } else if (any_undetermined) {
        v.kind = VerdictKind::Unknown;
      } else {
        v.kind = VerdictKind::VerifiedUpTo;
        v.holds = true;
      }
      return finish(std::move(v), ctx);
    }
  }
  throw std::logic_error("eval_rec: unreachable");
}

}  // namespace

Verdict satisfies(const Formula& f, const Assignment& s, unsigned bound, Mode mode,
                  const SatisfactionMethod& sm) {
  if (bound == 0) throw std::invalid_argument("empty enumeration bound");
  EvalCtx ctx{bound, mode, sm};
  std::uint64_t steps = 0;
  Verdict v = eval_rec(f, s, ctx, steps);
  v.steps = steps;
  return v;
}

Verdict evaluate_truth(const Formula& f, unsigned bound, Mode mode,
                       const SatisfactionMethod& sm) {
  return satisfies(universal_closure(f), Assignment{}, bound, mode, sm);
}

// ---- verify_up_to ----

std::string VerifyTable::polarity() const {
  bool all_true = true, all_false = true;
  for (const EvidenceRow& r : rows) {
    if (!r.value) return "mixed";
    (*r.value ? all_false : all_true) = false;
  }
  if (all_true) return "all-true";
  if (all_false) return "all-false";
  return "mixed";
}

bool VerifyTable::fully_decided() const {
  for (const EvidenceRow& r : rows)
    if (!r.value || !r.certified) return false;
  return true;
}

Evidence VerifyTable::to_evidence() const {
  Evidence e;
  e.algorithm_id = "verify-up-to";
  e.method = EvidenceMethod::PerInstance;
  e.instances = rows;
  e.note = "instances over n = " + std::to_string(n);
  return e;
}

VerifyTable verify_up_to(const Formula& f, unsigned n, const SatisfactionMethod& sm) {
  if (n == 0) throw std::invalid_argument("verification bound must be positive");
  std::set<Variable> fv = free_variables(f);
  if (fv.empty()) throw std::invalid_argument("no free variables");

  VerifyTable table;
  table.vars.assign(fv.begin(), fv.end());
  table.n = n;

  auto decide_instance = [&](const std::vector<unsigned>& tuple) {
    Formula inst = f;
    std::vector<Nat> args;
    for (std::size_t i = 0; i < table.vars.size(); ++i) {
      inst = substitute(inst, table.vars[i], mk_numeral(tuple[i]).term());
      args.emplace_back(tuple[i]);
    }
    Verdict v = satisfies(inst, Assignment{}, n, Mode::Standard, sm);
    table.rows.push_back(EvidenceRow{std::move(args), v.holds, v.steps, v.certified()});
  };

  if (table.vars.size() == 1) {
    for (unsigned a = 1; a <= n; ++a) decide_instance({a});
  } else {
    // grid {0..n}^k in lexicographic order, first variable slowest
    std::vector<unsigned> tuple(table.vars.size(), 0);
    bool done = false;
    while (!done) {
      decide_instance(tuple);
      done = true;
      for (std::size_t i = tuple.size(); i-- > 0;) {
        if (tuple[i] < n) {
          ++tuple[i];
          std::fill(tuple.begin() + static_cast<std::ptrdiff_t>(i) + 1, tuple.end(), 0u);
          done = false;
          break;
        }
      }
    }
  }
  return table;
}

// ---- uniform decider synthesis ----

SynthesisResult synthesize_uniform_decider(const Formula& f, const SatisfactionMethod& sm) {
  std::set<Variable> fv = free_variables(f);
  std::vector<Variable> params(fv.begin(), fv.end());

  bool has_quantifier = false;
  std::optional<NotFound> blocked = scan_decidable(f, sm, has_quantifier);
  if (!blocked) {
    Decider d;
    d.algorithm_id = has_quantifier ? "bounded-enum" : "qf-eval";
    d.description = has_quantifier ? "finite enumeration of syntactically bounded quantifiers"
                                   : "direct term evaluation";
    d.domain_note = "total over every tuple of naturals";
    d.params = params;
    Formula g = f;
    SatisfactionMethod smc = sm;
    d.decide = [g, smc, params](const std::vector<Nat>& args) -> std::pair<bool, std::uint64_t> {
      if (args.size() != params.size())
        throw std::invalid_argument("decider arity mismatch");
      Assignment s;
      for (std::size_t i = 0; i < params.size(); ++i) s = s.with(params[i], args[i]);
      std::uint64_t steps = 0;
      bool value = decide_rec(g, s, smc, steps);
      return {value, steps == 0 ? 1 : steps};
    };
    return d;
  }

  if (auto cert = certify_true(f)) {
    Decider d;
    d.algorithm_id = "certificate:" + cert->name;
    d.description = "structural certificate of universal truth";
    d.domain_note = "constant over every tuple of naturals";
    d.params = params;
    d.decide = [](const std::vector<Nat>&) -> std::pair<bool, std::uint64_t> { return {true, 1}; };
    return d;
  }
  if (auto cert = certify_false(f)) {
    Decider d;
    d.algorithm_id = "certificate:" + cert->name;
    d.description = "structural certificate of universal falsity";
    d.domain_note = "constant over every tuple of naturals";
    d.params = params;
    d.decide = [](const std::vector<Nat>&) -> std::pair<bool, std::uint64_t> { return {false, 1}; };
    return d;
  }
  return *blocked;
}

// ---- axiom truth ----

Verdict check_axiom_truth(AxiomId id, unsigned bound, const SatisfactionMethod& sm) {
  switch (id) {
    case AxiomId::PA1:
    case AxiomId::PA2:
    case AxiomId::PA3:
    case AxiomId::PA4:
    case AxiomId::PA5:
    case AxiomId::PA6:
    case AxiomId::PA7:
    case AxiomId::PA8:
      return evaluate_truth(pa_axiom_formula(id), bound, Mode::Standard, sm);
    case AxiomId::PA9:
      throw std::invalid_argument("PA9 needs a concrete formula; use check_induction_truth");
    default:
      throw std::invalid_argument("check_axiom_truth expects a PA schema");
  }
}

Verdict check_induction_truth(const Formula& g, Variable x, unsigned bound,
                              const SatisfactionMethod& sm) {
  Formula base = substitute(g, x, Term::zero());
  Formula step =
      Formula::forall(x, Formula::implies(g, substitute(g, x, Term::succ(Term::var(x)))));

  Verdict vb = evaluate_truth(base, bound, Mode::Standard, sm);
  Verdict vs = evaluate_truth(step, bound, Mode::Standard, sm);

  Verdict out;
  out.bound = bound;
  out.holds = true;
  out.steps = vb.steps + vs.steps;
  if (vb.kind == VerdictKind::FalseCertified) {
    out.kind = VerdictKind::TrueCertified;
    out.evidence.algorithm_id = "induction-case-a";
    out.evidence.method = EvidenceMethod::Uniform;
    out.evidence.instances = vb.evidence.instances;
    out.evidence.note = "base instance certified false";
  } else if (vb.kind == VerdictKind::TrueCertified && vs.kind == VerdictKind::FalseCertified) {
    out.kind = VerdictKind::TrueCertified;
    out.evidence.algorithm_id = "induction-case-b";
    out.evidence.method = EvidenceMethod::Uniform;
    out.evidence.instances = vs.evidence.instances;
    out.evidence.note = "base true, step formula certified false; " + vs.evidence.note;
  } else if (vb.kind == VerdictKind::TrueCertified && vs.kind == VerdictKind::TrueCertified) {
    out.kind = VerdictKind::TrueCertified;
    out.evidence.algorithm_id = "induction-case-c";
    out.evidence.method = EvidenceMethod::Uniform;
    out.evidence.note = "base and step certified; conclusion follows by the inductive chain";
  } else {
    out.kind = VerdictKind::VerifiedUpTo;
    out.evidence.algorithm_id = "induction-degraded";
    out.evidence.method = EvidenceMethod::PerInstance;
    out.evidence.note = "a sub-verdict is only verified up to the bound (base: " +
                        to_string(vb.kind) + ", step: " + to_string(vs.kind) + ")";
  }
  return out;
}

// ---- rule preservation ----

namespace {

int truth_category(const Verdict& v) {
  if (v.kind == VerdictKind::TrueCertified) return 3;
  if (v.kind == VerdictKind::VerifiedUpTo && v.holds.value_or(false)) return 2;
  if (v.kind == VerdictKind::Unknown) return 1;
  return 0;
}

}  // namespace

PreservationReport check_rule_preservation(Rule rule, const std::vector<Formula>& premises,
                                           const Formula& conclusion, unsigned bound, Mode mode,
                                           const SatisfactionMethod& sm) {
  if (rule == Rule::Generalisation) {
    if (premises.size() != 1 || conclusion.kind() != Formula::Kind::ForAll ||
        conclusion.body() != premises[0])
      throw std::invalid_argument("generalisation premise/conclusion shape mismatch");
  } else {
    if (premises.size() != 2 || premises[1].kind() != Formula::Kind::Implies ||
        premises[1].lhs() != premises[0] || premises[1].rhs() != conclusion)
      throw std::invalid_argument("modus ponens premise/conclusion shape mismatch");
  }

  PreservationReport report;
  report.rule = rule;
  int weakest = 3;
  for (const Formula& p : premises) {
    report.premises.push_back(evaluate_truth(p, bound, mode, sm));
    weakest = std::min(weakest, truth_category(report.premises.back()));
  }
  report.conclusion = evaluate_truth(conclusion, bound, mode, sm);
  report.preserved = truth_category(report.conclusion) >= weakest;
  report.degraded = report.conclusion.kind != VerdictKind::TrueCertified;
  return report;
}

// ---- classify ----

ClassifyResult classify(const Formula& f, unsigned bound, const SatisfactionMethod& sm) {
  ClassifyResult out;
  out.bound = bound;
  SynthesisResult syn = synthesize_uniform_decider(f, sm);
  if (auto* d = std::get_if<Decider>(&syn)) {
    out.classification = Classification::Computable;
    out.decider = std::move(*d);
    return out;
  }
  out.why_not = std::get<NotFound>(syn);
  if (!free_variables(f).empty()) {
    out.table = verify_up_to(f, bound, sm);
    out.classification = out.table->fully_decided() ? Classification::VerifiableOnlyAtBound
                                                    : Classification::UnknownAtBound;
    return out;
  }
  out.closed_verdict = satisfies(f, Assignment{}, bound, Mode::Standard, sm);
  out.classification = out.closed_verdict->certified() ? Classification::VerifiableOnlyAtBound
                                                       : Classification::UnknownAtBound;
  return out;
}

// ---- consistency definitions over a corpus ----

ScanReport consistency_scan(const std::vector<CorpusEntry>& corpus, unsigned coverage) {
  ScanReport report;
  report.coverage = coverage;

  // simple pattern: goals (Ax)F and ~(Ax)F
  for (const CorpusEntry& pos : corpus) {
    if (pos.goal.kind() != Formula::Kind::ForAll) continue;
    for (const CorpusEntry& neg : corpus) {
      if (neg.goal.kind() != Formula::Kind::Not) continue;
      if (neg.goal.sub() == pos.goal) {
        report.simple.push_back(SimpleInconsistencyWitness{pos.name, neg.name,
                                                           print_formula(pos.goal)});
      }
    }
  }

  // omega pattern: a goal ~(Ax)F with goals F(0)..F(coverage)
  for (const CorpusEntry& neg : corpus) {
    if (neg.goal.kind() != Formula::Kind::Not ||
        neg.goal.sub().kind() != Formula::Kind::ForAll)
      continue;
    const Formula& fa = neg.goal.sub();
    Variable x = fa.bound_var();
    OmegaPatternWitness witness;
    witness.negative_name = neg.name;
    witness.formula = print_formula(fa.body());
    witness.coverage = coverage;
    bool complete = true;
    for (unsigned nval = 0; nval <= coverage && complete; ++nval) {
      Formula inst = substitute(fa.body(), x, mk_numeral(nval).term());
      bool found = false;
      for (const CorpusEntry& e : corpus) {
        if (e.goal == inst) {
          witness.instance_names.push_back(e.name);
          found = true;
          break;
        }
      }
      complete = found;
    }
    if (complete) report.omega.push_back(std::move(witness));
  }

  return report;
}

}  // namespace paw
