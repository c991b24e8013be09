#include "paw/polynomial.hpp"

namespace paw {

void Polynomial::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto it = coeffs_.find(m);
  if (it == coeffs_.end()) {
    coeffs_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Polynomial Polynomial::constant(Int c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(Variable v) {
  Polynomial p;
  p.add_term({{v.index(), 1}}, 1);
  return p;
}

Polynomial Polynomial::from_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return Polynomial();
    case Term::Kind::Var: return variable(t.var_of());
    case Term::Kind::Succ: return from_term(t.child()) + constant(1);
    case Term::Kind::Add: return from_term(t.lhs()) + from_term(t.rhs());
    case Term::Kind::Mul: return from_term(t.lhs()) * from_term(t.rhs());
  }
  return Polynomial();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [m, c] : o.coeffs_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [m, c] : o.coeffs_) out.add_term(m, -c);
  return out;
}

namespace {

Polynomial::Monomial merge_monomials(const Polynomial::Monomial& a, const Polynomial::Monomial& b) {
  Polynomial::Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (const auto& [ma, ca] : coeffs_)
    for (const auto& [mb, cb] : o.coeffs_) out.add_term(merge_monomials(ma, mb), ca * cb);
  return out;
}

Int Polynomial::constant_term() const {
  auto it = coeffs_.find({});
  return it == coeffs_.end() ? Int(0) : it->second;
}

bool Polynomial::all_positive() const {
  for (const auto& [m, c] : coeffs_)
    if (c < 0) return false;
  return true;
}

bool Polynomial::all_negative() const {
  for (const auto& [m, c] : coeffs_)
    if (c > 0) return false;
  return true;
}

bool always_equal(const Term& lhs, const Term& rhs) {
  return Polynomial::from_term(lhs) == Polynomial::from_term(rhs);
}

bool never_equal(const Term& lhs, const Term& rhs) {
  Polynomial diff = Polynomial::from_term(lhs) - Polynomial::from_term(rhs);
  Int c = diff.constant_term();
  if (c > 0) return diff.all_positive();
  if (c < 0) return diff.all_negative();
  return false;
}

}  // namespace paw
