#include "orbits/quantum.hpp"

#include <map>

namespace orbits {

namespace {

VarTablePtr with_q(const VarTablePtr& base, int q_degree) {
  std::vector<std::string> names;
  std::vector<int> degs;
  for (std::size_t i = 0; i < base->size(); ++i) {
    names.push_back(base->name(i));
    degs.push_back(base->degree(i));
  }
  names.push_back("q");
  degs.push_back(q_degree);
  return make_vars(std::move(names), std::move(degs));
}

VarTablePtr without_q(const VarTablePtr& vars) {
  std::vector<std::string> names;
  std::vector<int> degs;
  for (std::size_t i = 0; i + 1 < vars->size(); ++i) {
    names.push_back(vars->name(i));
    degs.push_back(vars->degree(i));
  }
  return make_vars(std::move(names), std::move(degs));
}

void check_homogeneous(const std::vector<GradedPoly>& rels) {
  for (const auto& r : rels)
    if (!r.is_homogeneous())
      throw Error("nonhomogeneous_relation",
                  "quantum relation '" + r.str() + "' is not homogeneous");
}

QuantumRing assemble(int k, int N, int q_degree, VarTablePtr vars,
                     std::vector<GradedPoly> rels) {
  check_homogeneous(rels);
  auto classical_vars = without_q(vars);
  std::vector<GradedPoly> classical_rels;
  std::size_t qidx = vars->size() - 1;
  for (const auto& r : rels) {
    GradedPoly c = r.substitute(qidx, 0, classical_vars);
    if (!c.is_zero()) classical_rels.push_back(c);
  }
  QuotientRing ring(vars, rels);
  QuotientRing classical(classical_vars, std::move(classical_rels));
  return QuantumRing{k, N, q_degree, vars, std::move(rels), std::move(ring), std::move(classical)};
}

}  // namespace

QuantumRing quantum_grassmannian(int k, int N) {
  if (k <= 0 || k >= N)
    throw Error("invalid_parameters", "need 1 <= k < N");
  int q_degree = 2 * N;
  auto vars = with_q(grassmannian_vars(k), q_degree);
  auto ys = chern_relations(k, N);
  std::vector<GradedPoly> rels;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) rels.push_back(ys[i].reindexed(vars));
  GradedPoly q = GradedPoly::variable(vars, vars->size() - 1);
  GradedPoly last = ys.back().reindexed(vars);
  int sgn = (N - k) % 2 == 0 ? 1 : -1;
  rels.push_back(last + q.scaled(sgn));
  return assemble(k, N, q_degree, vars, std::move(rels));
}

QuantumRing quantum_bundle_ring(int k, int N) {
  if (k <= 0 || k >= N)
    throw Error("invalid_parameters", "need 1 <= k < N");
  if (2 * (k + 1) != N - 1)
    throw Error("hypothesis_violated",
                "quantum bundle presentation requires 2(k+1) = N-1; got k=" +
                    std::to_string(k) + ", N=" + std::to_string(N));
  int q_degree = 2 * (k + 1);
  BundleRing br = bundle_ring(k, N);
  auto vars = with_q(bundle_vars(k), q_degree);
  GradedPoly q = GradedPoly::variable(vars, vars->size() - 1);
  GradedPoly f = GradedPoly::variable(vars, 0);

  std::vector<GradedPoly> rels;
  GradedPoly fpk = (GradedPoly::variable(bundle_vars(k), 0) * br.poincare_dual_base).reindexed(vars);
  rels.push_back(fpk - q);
  auto ys = chern_relations(k, N);
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) rels.push_back(ys[i].reindexed(vars));
  int sgn = (k + 1) % 2 == 0 ? 1 : -1;  // (-1)^{k+1}
  rels.push_back(ys.back().reindexed(vars) - (q * q * f).scaled(sgn));
  return assemble(k, N, q_degree, vars, std::move(rels));
}

std::vector<HomologyClass> contributing_classes(int k, int N) {
  if (2 * (k + 1) != N - 1)
    throw Error("hypothesis_violated", "contributing classes assume 2(k+1) = N-1");
  std::vector<HomologyClass> out;
  for (int b = 0; b <= 2; ++b)
    for (int a = -2; a <= 2; ++a) {
      int c = (k + 1) * a + (N - 1) * b;
      if (c > 0 && c <= 2 * (k + 1)) out.push_back({a, b, c});
    }
  return out;
}

const char* gw_triple_name(GwTriple t) {
  switch (t) {
    case GwTriple::I33a: return "3.3a";
    case GwTriple::I33b: return "3.3b";
    case GwTriple::I33d: return "3.3d";
    case GwTriple::I34: return "3.4";
    case GwTriple::I35_jN1: return "3.5|j=N-1";
    case GwTriple::I35a: return "3.5a";
    case GwTriple::I35b: return "3.5b";
    case GwTriple::C4: return "C4";
    case GwTriple::C5: return "C5";
  }
  return "?";
}

GwFact gw_invariant(const HomologyClass& cls, GwTriple triple, int k, int N) {
  if (2 * (k + 1) != N - 1)
    throw Error("hypothesis_violated", "stored invariants assume 2(k+1) = N-1");
  auto expect = [&](int a, int b, const char* family) {
    if (cls.u_coeff != a || cls.v_coeff != b)
      throw Error("class_mismatch", std::string("invariant family ") + family +
                                        " is tabulated for a different homology class");
  };
  Rational sgn = (k + 1) % 2 == 0 ? 1 : -1;  // (-1)^{k+1}
  GwFact fact{triple, cls, 0, ""};
  switch (triple) {
    case GwTriple::I33a:
      expect(1, 0, "3.3a");
      fact.value = 0;
      fact.note = "fiber class: no line meets a pulled-back cycle and f^l through a point";
      break;
    case GwTriple::I33b:
      expect(1, 0, "3.3b");
      fact.value = 1;
      fact.note = "fiber class: one line of CP^k through two points, meeting the divisor";
      break;
    case GwTriple::I33d:
      expect(1, 0, "3.3d");
      fact.value = 0;
      fact.note = "fiber class against pulled-back Whitney cycles: empty intersection";
      break;
    case GwTriple::I34:
      expect(2, 0, "3.4");
      fact.value = 0;
      fact.note = "double fiber class: projections stay near a line, no contribution";
      break;
    case GwTriple::I35_jN1:
      expect(0, 1, "3.5 at j = N-1");
      fact.value = 0;
      fact.note = "section class against y_{N-1}: no minimal sphere in the base fits";
      break;
    case GwTriple::I35a:
      expect(0, 1, "3.5a");
      fact.value = sgn;
      fact.note = "section class through x_k, y_{N-k} and a fiber line";
      break;
    case GwTriple::I35b:
      expect(0, 1, "3.5b");
      fact.value = sgn;
      fact.note = "section class through x_k, y_{N-k} and a point on a section";
      break;
    case GwTriple::C4:
      expect(-1, 1, "C4");
      fact.value = 0;
      fact.note = "exceptional class [v]-[u]: no holomorphic sphere (intersection with the big orbit)";
      break;
    case GwTriple::C5:
      expect(-2, 2, "C5");
      fact.value = 0;
      fact.note = "double exceptional class: empty moduli, bubbles would land in [v]-[u]";
      break;
  }
  return fact;
}

QuotientRing specialize_q(const QuantumRing& ring, const Rational& value) {
  std::size_t qidx = ring.vars->size() - 1;
  auto cvars = without_q(ring.vars);
  std::vector<GradedPoly> rels;
  for (const auto& r : ring.relations) {
    GradedPoly c = r.substitute(qidx, value, cvars);
    if (!c.is_zero()) rels.push_back(c);
  }
  QuotientRing out(cvars, std::move(rels), /*require_homogeneous=*/value == 0);
  // flatness of the q-deformation: the fiber dimension matches q = 0
  if (out.dimension() != ring.classical.dimension())
    throw Error("internal", "q-specialization changed the vector-space dimension");
  return out;
}

int quantum_cup_length(const QuantumRing& ring) {
  QuotientRing at_one = specialize_q(ring, 1);
  const VarTablePtr& vars = at_one.vars();
  const std::size_t g = vars->size();
  const int cap = static_cast<int>(ring.classical.dimension());

  // nonzero normal forms of generator monomials, level by level; zero
  // products stay zero under further multiplication, so dead branches are
  // dropped
  std::map<Monomial, GradedPoly> level;
  level[Monomial(g, 0)] = at_one.normal_form(GradedPoly::constant(vars, 1));
  int best = 0;
  for (int m = 1; m <= cap; ++m) {
    std::map<Monomial, GradedPoly> next;
    for (const auto& [mono, nf] : level)
      for (std::size_t v = 0; v < g; ++v) {
        Monomial ext = mono;
        ++ext[v];
        if (next.count(ext)) continue;
        GradedPoly p = at_one.normal_form(nf * GradedPoly::variable(vars, v));
        if (!p.is_zero()) next.emplace(std::move(ext), std::move(p));
      }
    if (next.empty()) break;
    best = m;
    level = std::move(next);
  }
  return best;
}

}  // namespace orbits
