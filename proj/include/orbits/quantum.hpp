#pragma once

#include "orbits/cohomology.hpp"

namespace orbits {

// Quotient presentation over generators plus the quantum variable q; the
// grading stays homogeneous with deg q = q_degree, and q -> 0 recovers the
// classical ring.
struct QuantumRing {
  int k = 0;
  int N = 0;
  int q_degree = 0;
  VarTablePtr vars;                   // classical generators + q (last)
  std::vector<GradedPoly> relations;  // homogeneous, including q terms
  QuotientRing ring;                  // quotient by `relations`
  QuotientRing classical;             // q -> 0 specialization
};

// QH*(Gr_k(N)): y_{N-k+1} = ... = y_{N-1} = 0 and y_N + (-1)^{N-k} q = 0,
// with deg q = 2N. The sign is pinned by the k=1 case x^N = q (one line
// through two points in projective space).
QuantumRing quantum_grassmannian(int k, int N);

// QH* of the CP^k-bundle under the hypothesis 2(k+1) = N-1:
//   f P_k = q,  y_{N-k+1} = ... = y_{N-1} = 0,  y_N = (-1)^{k+1} q^2 f,
// with deg q = 2(k+1).
QuantumRing quantum_bundle_ring(int k, int N);

// Degree-2 homology class a[u] + b[v] with its first-Chern pairing.
struct HomologyClass {
  int u_coeff = 0;
  int v_coeff = 0;
  int chern_value = 0;
  bool operator==(const HomologyClass&) const = default;
};

// The five classes that can contribute to the quantum relations:
// [u], 2[u], [v], [v]-[u], 2([v]-[u]).
std::vector<HomologyClass> contributing_classes(int k, int N);

// Identifiers of the curated Gromov-Witten evaluations.
enum class GwTriple { I33a, I33b, I33d, I34, I35_jN1, I35a, I35b, C4, C5 };

struct GwFact {
  GwTriple triple;
  HomologyClass cls;
  Rational value;
  std::string note;  // provenance of the count
};

// Stored invariant for a tabulated triple; validates that the class matches
// the family and instantiates signs that depend on k.
GwFact gw_invariant(const HomologyClass& cls, GwTriple triple, int k, int N);

const char* gw_triple_name(GwTriple t);

// Substitutes q = value into the relations and rebuilds the quotient.
QuotientRing specialize_q(const QuantumRing& ring, const Rational& value);

// Largest m (up to the classical dimension) such that some m-fold product
// of positive-degree generators is nonzero in the q = 1 specialization.
int quantum_cup_length(const QuantumRing& ring);

}  // namespace orbits
