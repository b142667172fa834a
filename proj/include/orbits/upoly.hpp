#pragma once

#include <vector>

#include "orbits/rational.hpp"

namespace orbits {

// Dense univariate polynomial over Q. Used for Poincare/Hilbert series
// bookkeeping and for the exact positivity decision (Sturm sequences).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const Rational& v);
  static UPoly monomial(const Rational& v, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  Rational eval(const Rational& x) const;
  UPoly derivative() const;

  // Exact division; throws "inexact_division" when the remainder is nonzero.
  UPoly div_exact(const UPoly& d) const;
  // Returns {quotient, remainder}.
  std::pair<UPoly, UPoly> div_rem(const UPoly& d) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;  // c_[i] is the coefficient of x^i
};

UPoly upoly_gcd(UPoly a, UPoly b);

// Number of distinct real roots of p in the open interval (a, b),
// decided exactly with a Sturm chain on the squarefree part.
int sturm_roots_in_open_interval(const UPoly& p, const Rational& a, const Rational& b);

// True iff p(t) > 0 for every t in [0, 1].
bool positive_on_unit_interval(const UPoly& p);

}  // namespace orbits
