#include "orbits/cohomology.hpp"

#include <numeric>

namespace orbits {

VarTablePtr grassmannian_vars(int k) {
  std::vector<std::string> names;
  std::vector<int> degs;
  for (int i = 1; i <= k; ++i) {
    names.push_back("x" + std::to_string(i));
    degs.push_back(2 * i);
  }
  return make_vars(std::move(names), std::move(degs));
}

VarTablePtr bundle_vars(int k) {
  std::vector<std::string> names{"f"};
  std::vector<int> degs{2};
  for (int i = 1; i <= k; ++i) {
    names.push_back("x" + std::to_string(i));
    degs.push_back(2 * i);
  }
  return make_vars(std::move(names), std::move(degs));
}

namespace {
void check_kn(int k, int N) {
  if (k <= 0 || k >= N)
    throw Error("invalid_parameters", "need 1 <= k < N, got k=" + std::to_string(k) +
                                          ", N=" + std::to_string(N));
}

GradedPoly var_by_name(const VarTablePtr& vars, const std::string& name) {
  auto idx = vars->index_of(name);
  if (!idx) throw Error("unknown_variable", "no variable '" + name + "'");
  return GradedPoly::variable(vars, *idx);
}
}  // namespace

std::vector<GradedPoly> chern_tail(int k, int m, const VarTablePtr& vars) {
  // y_0 = 1; y_j = - sum_{i=1..min(j,k)} x_i y_{j-i}
  std::vector<GradedPoly> ys;
  ys.push_back(GradedPoly::constant(vars, 1));
  for (int j = 1; j <= m; ++j) {
    GradedPoly y = GradedPoly::zero(vars);
    for (int i = 1; i <= std::min(j, k); ++i) {
      GradedPoly xi = var_by_name(vars, "x" + std::to_string(i));
      y = y - xi * ys[j - i];
    }
    ys.push_back(y);
  }
  return ys;
}

std::vector<GradedPoly> chern_relations(int k, int N) {
  check_kn(k, N);
  auto vars = grassmannian_vars(k);
  auto ys = chern_tail(k, N, vars);
  std::vector<GradedPoly> out(ys.begin() + (N - k + 1), ys.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    int j = N - k + 1 + static_cast<int>(i);
    if (!out[i].is_homogeneous() || out[i].degree() != 2 * j)
      throw Error("internal", "y_" + std::to_string(j) + " is not homogeneous of degree 2j");
  }
  return out;
}

QuotientRing grassmannian_ring(int k, int N) {
  check_kn(k, N);
  return QuotientRing(grassmannian_vars(k), chern_relations(k, N));
}

BundleRing bundle_ring(int k, int N) {
  check_kn(k, N);
  auto vars = bundle_vars(k);
  GradedPoly f = var_by_name(vars, "f");
  // P_k = f^k - x1 f^{k-1} + ... + (-1)^k xk
  GradedPoly pk = f.pow(static_cast<unsigned>(k));
  for (int i = 1; i <= k; ++i) {
    GradedPoly term = var_by_name(vars, "x" + std::to_string(i)) *
                      f.pow(static_cast<unsigned>(k - i));
    pk = i % 2 ? pk - term : pk + term;
  }
  std::vector<GradedPoly> rels{f * pk};
  for (const auto& y : chern_relations(k, N)) rels.push_back(y.reindexed(vars));
  return BundleRing{QuotientRing(vars, std::move(rels)), pk};
}

QuotientRing sphere_bundle_ring(const QuotientRing& base, const GradedPoly& x0) {
  if (!base.finite_dimensional())
    throw Error("not_finite_dimensional", "sphere bundle needs a finite-dimensional base");
  if (!x0.is_zero() && (!x0.is_homogeneous() || x0.degree() != 2))
    throw Error("degree_mismatch", "x0 must be homogeneous of degree 2");
  const VarTable& bv = *base.vars();
  if (bv.index_of("f"))
    throw Error("bad_vars", "base ring already uses the fiber generator name 'f'");
  std::vector<std::string> names{"f"};
  std::vector<int> degs{2};
  for (std::size_t i = 0; i < bv.size(); ++i) {
    names.push_back(bv.name(i));
    degs.push_back(bv.degree(i));
  }
  auto vars = make_vars(std::move(names), std::move(degs));
  GradedPoly f = GradedPoly::variable(vars, 0);
  std::vector<GradedPoly> rels{f * (f - x0.reindexed(vars))};
  for (const auto& r : base.relations()) rels.push_back(r.reindexed(vars));
  return QuotientRing(vars, std::move(rels));
}

std::vector<int> invariant_degrees(Series s, int rank) {
  std::vector<int> d;
  switch (s) {
    case Series::A:
      for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
      break;
    case Series::B:
    case Series::C:
      for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
      break;
    case Series::D:
      for (int i = 1; i < rank; ++i) d.push_back(2 * i);
      d.push_back(rank);
      break;
    case Series::G2: d = {2, 6}; break;
    case Series::F4: d = {2, 6, 8, 12}; break;
    case Series::E6: d = {2, 5, 6, 8, 9, 12}; break;
    case Series::E7: d = {2, 6, 8, 10, 12, 14, 18}; break;
    case Series::E8: d = {2, 8, 12, 14, 18, 20, 24, 30}; break;
  }
  return d;
}

Rational weyl_order(const GroupType& g) {
  Rational w = 1;
  for (const auto& f : g.factors)
    for (int d : invariant_degrees(f.series, f.rank)) w *= d;
  return w;
}

namespace {
Rational known_weyl_order(const SimpleFactor& f) {
  auto fact = [](int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  };
  auto p2 = [](int n) {
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= 2;
    return r;
  };
  switch (f.series) {
    case Series::A: return fact(f.rank + 1);
    case Series::B:
    case Series::C: return p2(f.rank) * fact(f.rank);
    case Series::D: return p2(f.rank - 1) * fact(f.rank);
    case Series::G2: return 12;
    case Series::F4: return 1152;
    case Series::E6: return 51840;
    case Series::E7: return 2903040;
    case Series::E8: return 696729600;
  }
  return 0;
}
}  // namespace

BorelDegrees borel_degrees(const GroupType& g, const GroupType& zv) {
  if (g.rank() != zv.rank())
    throw Error("rank_mismatch", "stabilizer rank must equal the group rank");
  BorelDegrees bd;
  bd.group = g;
  bd.stabilizer = zv;
  auto collect = [](const GroupType& t, std::vector<int>& out) {
    for (const auto& f : t.factors) {
      auto ds = invariant_degrees(f.series, f.rank);
      // internal consistency of the embedded table: prod(d_i) = |W|
      Rational prod = 1;
      for (int d : ds) prod *= d;
      if (prod != known_weyl_order(f))
        throw Error("internal", "invariant-degree table inconsistent with the Weyl order");
      for (int d : ds) out.push_back(2 * d);
    }
    for (int i = 0; i < t.torus_rank; ++i) out.push_back(2);
    std::sort(out.begin(), out.end());
  };
  collect(g, bd.s_degrees);
  collect(zv, bd.r_degrees);
  return bd;
}

UPoly borel_poincare(const BorelDegrees& bd) {
  if (bd.s_degrees.size() != bd.r_degrees.size())
    throw Error("rank_mismatch", "degree lists must have equal length");
  UPoly num = UPoly::constant(1);
  UPoly den = UPoly::constant(1);
  for (int s : bd.s_degrees)
    num = num * (UPoly::constant(1) - UPoly::monomial(1, static_cast<std::size_t>(s)));
  for (int r : bd.r_degrees)
    den = den * (UPoly::constant(1) - UPoly::monomial(1, static_cast<std::size_t>(r)));
  try {
    return num.div_exact(den);
  } catch (const Error&) {
    throw Error("inconsistent_degree_data",
                "Poincare quotient is not a polynomial for the given degree data");
  }
}

ChernData chern_data(int k, int N) {
  check_kn(k, N);
  auto vars = bundle_vars(k);
  GradedPoly c1 = var_by_name(vars, "x1").scaled(N - 1) + var_by_name(vars, "f").scaled(k + 1);
  return ChernData{c1, std::gcd(N - 1, k + 1)};
}

UPoly symplectic_cone_polynomial(const QuotientRing& base, const GradedPoly& x,
                                 const Rational& alpha, const GradedPoly& x0) {
  if (!base.finite_dimensional())
    throw Error("not_finite_dimensional", "cone check needs a finite-dimensional base");
  auto check2 = [](const GradedPoly& p, const char* what) {
    if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != 2))
      throw Error("degree_mismatch", std::string(what) + " must be homogeneous of degree 2");
  };
  check2(x, "x");
  check2(x0, "x0");
  int top = base.top_degree();
  if (top % 2 != 0) throw Error("internal", "odd top degree");
  unsigned n1 = static_cast<unsigned>(top / 2);  // n-1 where dim_R = 2(n-1)

  // p(t) = top((x + t a x0)^{n-1}) = sum_j C(n-1,j) a^j top(x^{n-1-j} x0^j) t^j
  std::vector<Rational> coeffs(n1 + 1, Rational(0));
  Rational binom = 1;
  for (unsigned j = 0; j <= n1; ++j) {
    if (j > 0) binom = binom * Rational(static_cast<long>(n1 - j + 1)) / Rational(static_cast<long>(j));
    GradedPoly cls = x.pow(n1 - j) * x0.pow(j);
    coeffs[j] = binom * pow_rational(alpha, j) * base.top_evaluate(cls);
  }
  return UPoly(std::move(coeffs));
}

bool symplectic_cone_check(const QuotientRing& base, const GradedPoly& x,
                           const Rational& alpha, const GradedPoly& x0) {
  if (alpha <= 0) return false;
  UPoly p = symplectic_cone_polynomial(base, x, alpha, x0);
  return positive_on_unit_interval(p);
}

}  // namespace orbits
