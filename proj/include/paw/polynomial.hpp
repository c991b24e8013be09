#ifndef PAW_POLYNOMIAL_HPP
#define PAW_POLYNOMIAL_HPP

#include <map>
#include <utility>
#include <vector>

#include "paw/nat.hpp"
#include "paw/syntax.hpp"

namespace paw {

// Multivariate polynomial normal form of a term. Two terms denote the
// same function over the naturals exactly when their normal forms are
// equal, which is what the structural truth certificates rest on.
class Polynomial {
 public:
  // A monomial maps variable index to exponent, sorted by index.
  using Monomial = std::vector<std::pair<unsigned, unsigned>>;

  static Polynomial constant(Int c);
  static Polynomial variable(Variable v);
  static Polynomial from_term(const Term& t);

  Polynomial() = default;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  Int constant_term() const;

  // All non-zero coefficients strictly positive / strictly negative.
  bool all_positive() const;
  bool all_negative() const;

  const std::map<Monomial, Int>& coefficients() const { return coeffs_; }

 private:
  std::map<Monomial, Int> coeffs_;  // zero coefficients are never stored
  void add_term(const Monomial& m, const Int& c);
};

// p(x) = q(x) for every assignment of naturals.
bool always_equal(const Term& lhs, const Term& rhs);

// p(x) != q(x) for every assignment of naturals, certified by a
// sign-uniform nonzero difference: the difference polynomial has a
// nonzero constant coefficient and every coefficient shares its sign,
// so the gap never closes (a successor-depth comparison, generalised).
bool never_equal(const Term& lhs, const Term& rhs);

}  // namespace paw

#endif  // PAW_POLYNOMIAL_HPP
