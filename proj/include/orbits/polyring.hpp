#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbits/rational.hpp"

namespace orbits {

// Variable table shared by all polynomials of a ring. Order in the table is
// the precedence of the term order (index 0 binds strongest, e.g. f > x1 >
// ... > xk > q). Degrees are real cohomological degrees and must be even
// and positive.
class VarTable {
 public:
  VarTable(std::vector<std::string> names, std::vector<int> degrees);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  bool same_as(const VarTable& o) const {
    return names_ == o.names_ && degrees_ == o.degrees_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names, std::vector<int> degrees);

using Monomial = std::vector<unsigned>;  // exponent per variable

// Degree-then-lexicographic comparison, degrees weighted by the grading.
// Returns <0, 0, >0 like strcmp; "larger" monomials come first in a poly.
int mono_cmp(const VarTable& vars, const Monomial& a, const Monomial& b);
int mono_weighted_degree(const VarTable& vars, const Monomial& m);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b, requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed graded variable table. Terms are kept sorted descending in the
// term order, so the leading term is terms().front().
class GradedPoly {
 public:
  GradedPoly() = default;
  explicit GradedPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

  static GradedPoly zero(VarTablePtr vars) { return GradedPoly(std::move(vars)); }
  static GradedPoly constant(VarTablePtr vars, const Rational& c);
  static GradedPoly variable(VarTablePtr vars, std::size_t index);
  static GradedPoly term(VarTablePtr vars, const Rational& c, Monomial m);

  const VarTablePtr& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }

  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;

  // Weighted degree of the leading term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  GradedPoly operator+(const GradedPoly& o) const;
  GradedPoly operator-(const GradedPoly& o) const;
  GradedPoly operator*(const GradedPoly& o) const;
  GradedPoly operator-() const;
  GradedPoly scaled(const Rational& c) const;
  GradedPoly monic() const;
  bool operator==(const GradedPoly& o) const;

  GradedPoly pow(unsigned e) const;

  // Substitutes a constant for one variable; result lives on a table with
  // that variable removed.
  GradedPoly substitute(std::size_t var, const Rational& value, const VarTablePtr& new_vars) const;

  // Re-expresses the polynomial on another table, matching variables by
  // name. Throws if a used variable is missing from the target table.
  GradedPoly reindexed(const VarTablePtr& new_vars) const;

  void add_term(const Rational& c, Monomial m);

  std::string str() const;

 private:
  void normalize();
  VarTablePtr vars_;
  std::vector<std::pair<Monomial, Rational>> terms_;
};

// Remainder of multivariate division of p by the divisors; deterministic.
GradedPoly reduce(const GradedPoly& p, const std::vector<GradedPoly>& divisors);

// Reduced Groebner basis (monic, auto-reduced, sorted by leading monomial).
// The public entry point enforces homogeneity; the affine variant is used
// internally for q-specializations where relations lose homogeneity.
std::vector<GradedPoly> groebner_basis(const std::vector<GradedPoly>& relations);
std::vector<GradedPoly> groebner_basis_affine(const std::vector<GradedPoly>& relations);

// A finitely presented graded quotient ring with a normal-form oracle.
class QuotientRing {
 public:
  QuotientRing(VarTablePtr vars, std::vector<GradedPoly> relations,
               bool require_homogeneous = true);

  const VarTablePtr& vars() const { return vars_; }
  const std::vector<GradedPoly>& relations() const { return relations_; }
  const std::vector<GradedPoly>& basis() const { return groebner_; }

  GradedPoly normal_form(const GradedPoly& p) const;

  bool finite_dimensional() const;
  // Monomials outside the leading-term ideal, sorted ascending.
  const std::vector<Monomial>& monomial_basis() const;
  std::size_t dimension() const { return monomial_basis().size(); }

  // Betti numbers b_0, b_2, b_4, ...: counts of basis monomials per real
  // degree. Requires a finite-dimensional, homogeneously presented ring.
  std::vector<long long> hilbert_series() const;

  // Highest weighted degree among basis monomials and its unique monomial.
  int top_degree() const;
  const Monomial& top_monomial() const;

  // Coefficient of the top basis monomial in nf(p); requires the top degree
  // to be one-dimensional and p homogeneous of top degree.
  Rational top_evaluate(const GradedPoly& p) const;

 private:
  void ensure_basis_enumerated() const;
  VarTablePtr vars_;
  bool homogeneous_;
  std::vector<GradedPoly> relations_;
  std::vector<GradedPoly> groebner_;
  mutable bool enumerated_ = false;
  mutable bool finite_ = false;
  mutable std::vector<Monomial> monomials_;
};

std::vector<long long> hilbert_series(const QuotientRing& ring);
GradedPoly normal_form(const GradedPoly& p, const QuotientRing& ring);
Rational top_evaluate(const GradedPoly& p, const QuotientRing& ring);

}  // namespace orbits
