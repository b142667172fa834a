#pragma once

#include "orbits/polyring.hpp"
#include "orbits/rootsys.hpp"
#include "orbits/upoly.hpp"

namespace orbits {

// x1..xk with deg xi = 2i (Chern classes of the dual tautological bundle).
VarTablePtr grassmannian_vars(int k);
// f, x1..xk with deg f = 2.
VarTablePtr bundle_vars(int k);

// Whitney relations y_{N-k+1}, ..., y_N in x1..xk, where the y_j are defined
// by the recursion sum_{i=0..j} x_i y_{j-i} = 0 with x_0 = y_0 = 1 and
// x_i = 0 for i > k. y_j is homogeneous of real degree 2j.
std::vector<GradedPoly> chern_relations(int k, int N);

// Convenience: all of y_1..y_m on the given table (variables named x1..xk).
std::vector<GradedPoly> chern_tail(int k, int m, const VarTablePtr& vars);

QuotientRing grassmannian_ring(int k, int N);

struct BundleRing {
  QuotientRing ring;
  GradedPoly poincare_dual_base;  // P_k = f^k - x1 f^{k-1} + ... + (-1)^k xk
};

// Cohomology of the CP^k-bundle P(T0 + C) over Gr_k(N): adjoin f with the
// relation f * P_k on top of the Whitney relations.
BundleRing bundle_ring(int k, int N);

// Adjoins a degree-2 generator f to a finite-dimensional base with the
// single new relation f(f - x0); dim doubles.
QuotientRing sphere_bundle_ring(const QuotientRing& base, const GradedPoly& x0);

struct BorelDegrees {
  GroupType group;      // G
  GroupType stabilizer; // Z(v)
  std::vector<int> s_degrees;  // 2 * invariant degrees of G
  std::vector<int> r_degrees;  // same for Z(v); torus factors contribute 2
};

// Exponent-degree data for Borel's quotient formula; validates that both
// sides have length rank(G) and that prod(s_i/2) equals the Weyl order.
BorelDegrees borel_degrees(const GroupType& g, const GroupType& zv);

// Invariant degrees of a simple series (d_1..d_n with |W| = prod d_i).
std::vector<int> invariant_degrees(Series s, int rank);
Rational weyl_order(const GroupType& g);

// Poincare polynomial of G/Z(v):  prod(1-t^{s_i}) / prod(1-t^{r_i}).
// The division must be exact; t tracks real degree.
UPoly borel_poincare(const BorelDegrees& bd);

struct ChernData {
  GradedPoly first_chern;    // (N-1) x1 + (k+1) f on the bundle table
  int minimal_chern_number;  // gcd(N-1, k+1)
};

ChernData chern_data(int k, int N);

// Symplectic-cone membership for the S^2-bundle with base class x0:
// alpha > 0 and top((x + t*alpha*x0)^{n-1}) > 0 for all t in [0,1],
// decided exactly (Sturm sequences on the resulting polynomial in t).
bool symplectic_cone_check(const QuotientRing& base, const GradedPoly& x,
                           const Rational& alpha, const GradedPoly& x0);

// The polynomial p(t) used by the check, exposed for reporting.
UPoly symplectic_cone_polynomial(const QuotientRing& base, const GradedPoly& x,
                                 const Rational& alpha, const GradedPoly& x0);

}  // namespace orbits
