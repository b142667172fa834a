#include "orbits/rootsys.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace orbits {

std::string series_name(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::E6: return "E6";
    case Series::E7: return "E7";
    case Series::E8: return "E8";
    case Series::F4: return "F4";
    case Series::G2: return "G2";
  }
  return "?";
}

int factor_dim(const SimpleFactor& f) {
  int n = f.rank;
  switch (f.series) {
    case Series::A: return n * (n + 2);
    case Series::B: return n * (2 * n + 1);
    case Series::C: return n * (2 * n + 1);
    case Series::D: return n * (2 * n - 1);
    case Series::G2: return 14;
    case Series::F4: return 52;
    case Series::E6: return 78;
    case Series::E7: return 133;
    case Series::E8: return 248;
  }
  return 0;
}

GroupType GroupType::torus(int rank_) {
  GroupType g;
  g.torus_rank = rank_;
  return g;
}

GroupType GroupType::simple(Series s, int rank_) {
  GroupType g;
  g.factors.push_back({s, rank_});
  g.canonicalize();
  return g;
}

GroupType GroupType::finite_group() {
  GroupType g;
  g.finite = true;
  return g;
}

int GroupType::rank() const {
  int r = torus_rank;
  for (const auto& f : factors) r += f.rank;
  return r;
}

int GroupType::dim() const {
  int d = torus_rank;
  for (const auto& f : factors) d += factor_dim(f);
  return d;
}

void GroupType::canonicalize() {
  std::vector<SimpleFactor> out;
  for (auto f : factors) {
    if ((f.series == Series::B || f.series == Series::C) && f.rank == 1) f = {Series::A, 1};
    if (f.series == Series::C && f.rank == 2) f = {Series::B, 2};
    if (f.series == Series::D && f.rank == 3) f = {Series::A, 3};
    if (f.series == Series::D && f.rank == 2) {
      out.push_back({Series::A, 1});
      out.push_back({Series::A, 1});
      continue;
    }
    if (f.series == Series::D && f.rank == 1) {
      ++torus_rank;
      continue;
    }
    out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](const SimpleFactor& a, const SimpleFactor& b) {
    int da = factor_dim(a), db = factor_dim(b);
    if (da != db) return da > db;
    if (a.series != b.series) return a.series < b.series;
    return a.rank > b.rank;
  });
  factors = std::move(out);
  if (finite && (!factors.empty() || torus_rank > 0))
    throw Error("bad_group_type", "finite type cannot carry factors or torus");
}

bool GroupType::operator<(const GroupType& o) const {
  if (finite != o.finite) return finite < o.finite;
  if (torus_rank != o.torus_rank) return torus_rank < o.torus_rank;
  return factors < o.factors;
}

namespace {
std::string factor_str(const SimpleFactor& f) {
  std::ostringstream os;
  switch (f.series) {
    case Series::A: os << "SU(" << f.rank + 1 << ")"; break;
    case Series::B: os << "SO(" << 2 * f.rank + 1 << ")"; break;
    case Series::C: os << "Sp(" << f.rank << ")"; break;
    case Series::D: os << "SO(" << 2 * f.rank << ")"; break;
    default: os << series_name(f.series); break;
  }
  return os.str();
}
}  // namespace

std::string GroupType::str() const {
  if (finite) return "Z_p";
  if (factors.empty() && torus_rank == 0) return "1";
  if (factors.empty()) return "T^" + std::to_string(torus_rank);
  bool all_a = std::all_of(factors.begin(), factors.end(),
                           [](const SimpleFactor& f) { return f.series == Series::A; });
  if (su_form && all_a) {
    int ones = torus_rank - static_cast<int>(factors.size()) + 1;
    if (ones >= 0) {
      std::vector<int> parts;
      for (const auto& f : factors) parts.push_back(f.rank + 1);
      for (int i = 0; i < ones; ++i) parts.push_back(1);
      if (parts.size() == 1) return "SU(" + std::to_string(parts[0]) + ")";
      std::ostringstream os;
      os << "S(";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << "x";
        os << "U" << parts[i];
      }
      os << ")";
      return os.str();
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << "x";
    os << factor_str(factors[i]);
  }
  if (torus_rank > 0) os << "xT^" << torus_rank;
  return os.str();
}

namespace {

using Vec = std::vector<Rational>;

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec basis_vec(int dim, int i, const Rational& c = 1) {
  Vec v(dim, Rational(0));
  v[i] = c;
  return v;
}

void push_pm(std::vector<Vec>& roots, const Vec& v) {
  roots.push_back(v);
  Vec m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m[i] = -v[i];
  roots.push_back(std::move(m));
}

std::size_t expected_root_count(Series s, int n) {
  switch (s) {
    case Series::A: return static_cast<std::size_t>(n) * (n + 1);
    case Series::B:
    case Series::C: return 2 * static_cast<std::size_t>(n) * n;
    case Series::D: return 2 * static_cast<std::size_t>(n) * (n - 1);
    case Series::G2: return 12;
    case Series::F4: return 48;
    case Series::E6: return 72;
    case Series::E7: return 126;
    case Series::E8: return 240;
  }
  return 0;
}

std::vector<Vec> e8_roots() {
  std::vector<Vec> roots;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec v(8, Rational(0));
          v[i] = si;
          v[j] = sj;
          roots.push_back(std::move(v));
        }
  Rational half(1, 2);
  for (unsigned m = 0; m < 256; ++m) {
    int minus = __builtin_popcount(m);
    if (minus % 2 != 0) continue;
    Vec v(8);
    for (int i = 0; i < 8; ++i) v[i] = (m >> i) & 1U ? -half : half;
    roots.push_back(std::move(v));
  }
  return roots;
}

std::vector<Vec> bourbaki_e_simple_roots() {
  Rational half(1, 2);
  std::vector<Vec> s;
  Vec a1(8, -half);
  a1[0] = half;
  a1[7] = half;
  s.push_back(a1);                       // (1/2)(e1+e8) - (1/2)(e2+...+e7)
  Vec a2(8, Rational(0));
  a2[0] = 1;
  a2[1] = 1;
  s.push_back(a2);                       // e1+e2
  for (int k = 0; k < 6; ++k) {          // e_{k+2} - e_{k+1}
    Vec a(8, Rational(0));
    a[k + 1] = 1;
    a[k] = -1;
    s.push_back(a);
  }
  return s;
}

}  // namespace

RootSystem build_root_system_internal(Series s, int n) {
  RootSystem rs;
  rs.series = s;
  rs.rank = n;
  std::vector<Vec> roots;
  std::vector<Vec> simple;

  switch (s) {
    case Series::A: {
      if (n < 1) throw Error("invalid_type", "A_n needs n >= 1");
      rs.ambient = n + 1;
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
          if (i != j) {
            Vec v(n + 1, Rational(0));
            v[i] = 1;
            v[j] = -1;
            roots.push_back(std::move(v));
          }
      for (int i = 0; i < n; ++i) {
        Vec v(n + 1, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        simple.push_back(std::move(v));
      }
      break;
    }
    case Series::B: {
      if (n < 1) throw Error("invalid_type", "B_n needs n >= 1");
      rs.ambient = n;
      for (int i = 0; i < n; ++i) push_pm(roots, basis_vec(n, i));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          push_pm(roots, vec_add(basis_vec(n, i), basis_vec(n, j)));
          push_pm(roots, vec_add(basis_vec(n, i), basis_vec(n, j, -1)));
        }
      for (int i = 0; i + 1 < n; ++i) simple.push_back(vec_add(basis_vec(n, i), basis_vec(n, i + 1, -1)));
      simple.push_back(basis_vec(n, n - 1));
      break;
    }
    case Series::C: {
      if (n < 1) throw Error("invalid_type", "C_n needs n >= 1");
      rs.ambient = n;
      for (int i = 0; i < n; ++i) push_pm(roots, basis_vec(n, i, 2));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          push_pm(roots, vec_add(basis_vec(n, i), basis_vec(n, j)));
          push_pm(roots, vec_add(basis_vec(n, i), basis_vec(n, j, -1)));
        }
      for (int i = 0; i + 1 < n; ++i) simple.push_back(vec_add(basis_vec(n, i), basis_vec(n, i + 1, -1)));
      simple.push_back(basis_vec(n, n - 1, 2));
      break;
    }
    case Series::D: {
      if (n < 2) throw Error("invalid_type", "D_n needs n >= 2");
      rs.ambient = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          push_pm(roots, vec_add(basis_vec(n, i), basis_vec(n, j)));
          push_pm(roots, vec_add(basis_vec(n, i), basis_vec(n, j, -1)));
        }
      for (int i = 0; i + 1 < n; ++i) simple.push_back(vec_add(basis_vec(n, i), basis_vec(n, i + 1, -1)));
      simple.push_back(vec_add(basis_vec(n, n - 2), basis_vec(n, n - 1)));
      break;
    }
    case Series::G2: {
      if (n != 2) throw Error("invalid_type", "G2 has rank 2");
      rs.ambient = 3;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) {
            Vec v(3, Rational(0));
            v[i] = 1;
            v[j] = -1;
            roots.push_back(std::move(v));
          }
      int perms[3][3] = {{0, 1, 2}, {1, 0, 2}, {2, 0, 1}};
      for (auto& p : perms) {
        Vec v(3, Rational(0));
        v[p[0]] = 2;
        v[p[1]] = -1;
        v[p[2]] = -1;
        push_pm(roots, v);
      }
      {
        Vec a1(3, Rational(0));
        a1[0] = 1;
        a1[1] = -1;
        simple.push_back(a1);
        Vec a2(3, Rational(0));
        a2[0] = -2;
        a2[1] = 1;
        a2[2] = 1;
        simple.push_back(a2);
      }
      break;
    }
    case Series::F4: {
      if (n != 4) throw Error("invalid_type", "F4 has rank 4");
      rs.ambient = 4;
      for (int i = 0; i < 4; ++i) push_pm(roots, basis_vec(4, i));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          push_pm(roots, vec_add(basis_vec(4, i), basis_vec(4, j)));
          push_pm(roots, vec_add(basis_vec(4, i), basis_vec(4, j, -1)));
        }
      Rational half(1, 2);
      for (unsigned m = 0; m < 16; ++m) {
        Vec v(4);
        for (int i = 0; i < 4; ++i) v[i] = (m >> i) & 1U ? -half : half;
        roots.push_back(std::move(v));
      }
      simple.push_back(vec_add(basis_vec(4, 1), basis_vec(4, 2, -1)));  // e2-e3
      simple.push_back(vec_add(basis_vec(4, 2), basis_vec(4, 3, -1)));  // e3-e4
      simple.push_back(basis_vec(4, 3));                                // e4
      {
        Vec v(4, Rational(-1, 2));
        v[0] = Rational(1, 2);
        simple.push_back(v);                                            // (e1-e2-e3-e4)/2
      }
      break;
    }
    case Series::E6:
    case Series::E7:
    case Series::E8: {
      int want = s == Series::E6 ? 6 : s == Series::E7 ? 7 : 8;
      if (n != want) throw Error("invalid_type", "E-series rank mismatch");
      rs.ambient = 8;
      auto all = e8_roots();
      auto sr = bourbaki_e_simple_roots();
      simple.assign(sr.begin(), sr.begin() + want);
      if (s == Series::E8) {
        roots = std::move(all);
      } else {
        // keep the roots lying in the span of the chosen simple roots:
        // orthogonal to e7+e8 (E7), and also to e6+e8 (E6)
        for (const auto& v : all) {
          bool ok = v[6] + v[7] == 0;
          if (s == Series::E6) ok = ok && v[5] + v[7] == 0;
          if (ok) roots.push_back(v);
        }
      }
      break;
    }
  }

  if (roots.size() != expected_root_count(s, n))
    throw Error("internal", "root count mismatch for " + series_name(s) + "_" + std::to_string(n));

  rs.roots = std::move(roots);
  for (const auto& sv : simple) {
    auto it = std::find(rs.roots.begin(), rs.roots.end(), sv);
    if (it == rs.roots.end()) throw Error("internal", "simple root is not a root");
    rs.simple.push_back(static_cast<std::size_t>(it - rs.roots.begin()));
  }
  return rs;
}

RootSystem build_root_system(Series s, int rank) {
  bool ok = false;
  switch (s) {
    case Series::A: ok = rank >= 1; break;
    case Series::B: ok = rank >= 2; break;
    case Series::C: ok = rank >= 3; break;
    case Series::D: ok = rank >= 4; break;
    case Series::E6: ok = rank == 6; break;
    case Series::E7: ok = rank == 7; break;
    case Series::E8: ok = rank == 8; break;
    case Series::F4: ok = rank == 4; break;
    case Series::G2: ok = rank == 2; break;
  }
  if (!ok)
    throw Error("invalid_type",
                "(" + series_name(s) + ", " + std::to_string(rank) + ") is not a simple type");
  return build_root_system_internal(s, rank);
}

RootSystem so_root_system(int m) {
  if (m < 3) throw Error("invalid_type", "SO(m) root data needs m >= 3");
  if (m % 2 == 1) return build_root_system_internal(Series::B, (m - 1) / 2);
  return build_root_system_internal(Series::D, m / 2);
}

Rational pairing(const std::vector<Rational>& root, const CartanElement& v) {
  if (root.size() != v.coords.size())
    throw Error("dimension_mismatch", "Cartan element does not match the model dimension");
  return dot(root, v.coords);
}

namespace {
void check_element(const RootSystem& rs, const CartanElement& v) {
  if (static_cast<int>(v.coords.size()) != rs.ambient)
    throw Error("dimension_mismatch", "Cartan element does not match the model dimension");
  if (rs.series == Series::A) {
    Rational s = 0;
    for (const auto& c : v.coords) s += c;
    if (s != 0)
      throw Error("bad_cartan_element", "A-series Cartan elements must have zero coordinate sum");
  }
}
}  // namespace

bool is_regular(const RootSystem& rs, const CartanElement& v) {
  check_element(rs, v);
  for (const auto& r : rs.roots)
    if (dot(r, v.coords) == 0) return false;
  return true;
}

std::vector<Rational> solve_linear_system(std::vector<std::vector<Rational>> a,
                                          std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (n == 0 || a[0].size() != n || b.size() != n)
    throw Error("singular_system", "linear solve needs a square system");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error("singular_system", "singular linear system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

namespace {

// Cartan matrices of the standard systems, cached; guarded because the
// parallel enumeration classifies components concurrently.
const std::vector<std::vector<long>>& standard_cartan(Series s, int rank) {
  static std::map<std::pair<Series, int>, std::vector<std::vector<long>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(s, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  RootSystem rs = build_root_system_internal(s, rank);
  std::size_t r = rs.simple.size();
  std::vector<std::vector<long>> m(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rational v = 2 * dot(rs.roots[rs.simple[i]], rs.roots[rs.simple[j]]) /
                   dot(rs.roots[rs.simple[j]], rs.roots[rs.simple[j]]);
      if (v.get_den() != 1) throw Error("internal", "non-integer Cartan entry");
      m[i][j] = v.get_num().get_si();
    }
  return cache.emplace(key, std::move(m)).first->second;
}

bool cartan_isomorphic_rec(const std::vector<std::vector<long>>& a,
                           const std::vector<std::vector<long>>& b,
                           std::vector<int>& perm, std::vector<bool>& used, std::size_t i) {
  const std::size_t r = a.size();
  if (i == r) return true;
  for (std::size_t p = 0; p < r; ++p) {
    if (used[p]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) {
      if (a[p][perm[j]] != b[i][j] || a[perm[j]][p] != b[j][i]) ok = false;
    }
    if (!ok) continue;
    perm[i] = static_cast<int>(p);
    used[p] = true;
    if (cartan_isomorphic_rec(a, b, perm, used, i + 1)) return true;
    used[p] = false;
  }
  return false;
}

bool cartan_isomorphic(const std::vector<std::vector<long>>& a,
                       const std::vector<std::vector<long>>& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> perm(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  return cartan_isomorphic_rec(a, b, perm, used, 0);
}

struct Component {
  std::vector<Vec> simple;       // simple roots of this component
  std::vector<const Vec*> roots; // all subsystem roots supported on it
};

SimpleFactor classify_component(const Component& comp) {
  const int r = static_cast<int>(comp.simple.size());
  const std::size_t count = comp.roots.size();
  Rational min_norm;
  bool all_equal = true;
  std::size_t shorts = 0;
  for (std::size_t i = 0; i < comp.roots.size(); ++i) {
    Rational n2 = dot(*comp.roots[i], *comp.roots[i]);
    if (i == 0) {
      min_norm = n2;
      shorts = 1;
      continue;
    }
    if (n2 != min_norm) {
      all_equal = false;
      if (n2 < min_norm) {
        min_norm = n2;
        shorts = 1;
      }
    } else {
      ++shorts;
    }
  }
  if (!all_equal) {
    shorts = 0;
    for (const auto* v : comp.roots)
      if (dot(*v, *v) == min_norm) ++shorts;
  }

  SimpleFactor guess{Series::A, r};
  const std::size_t sr = static_cast<std::size_t>(r);
  if (r == 1) {
    guess = {Series::A, 1};
  } else if (all_equal) {
    if (count == sr * (sr + 1)) guess = {Series::A, r};
    else if (r >= 4 && count == 2 * sr * (sr - 1)) guess = {Series::D, r};
    else if (r == 6 && count == 72) guess = {Series::E6, 6};
    else if (r == 7 && count == 126) guess = {Series::E7, 7};
    else if (r == 8 && count == 240) guess = {Series::E8, 8};
    else throw Error("dynkin_match_failed", "unrecognized simply-laced component");
  } else {
    if (r == 2 && count == 12) guess = {Series::G2, 2};
    else if (r == 4 && count == 48) guess = {Series::F4, 4};
    else if (count == 2 * sr * sr && shorts == 2 * sr) guess = {Series::B, r};
    else if (count == 2 * sr * sr && shorts == 2 * sr * (sr - 1)) guess = {Series::C, r};
    else throw Error("dynkin_match_failed", "unrecognized multiply-laced component");
  }

  // confirm by Cartan-matrix graph isomorphism with the standard system
  std::vector<std::vector<long>> cm(sr, std::vector<long>(sr, 0));
  for (std::size_t i = 0; i < sr; ++i)
    for (std::size_t j = 0; j < sr; ++j) {
      Rational v = 2 * dot(comp.simple[i], comp.simple[j]) / dot(comp.simple[j], comp.simple[j]);
      if (v.get_den() != 1) throw Error("dynkin_match_failed", "non-integer Cartan entry");
      cm[i][j] = v.get_num().get_si();
    }
  if (!cartan_isomorphic(cm, standard_cartan(guess.series, guess.rank)))
    throw Error("dynkin_match_failed", "Cartan matrix does not match the identified type");
  return guess;
}

}  // namespace

GroupType centralizer_type(const RootSystem& rs, const CartanElement& v) {
  check_element(rs, v);

  std::vector<const Vec*> vanishing;
  std::set<Vec> vanishing_set;
  for (const auto& r : rs.roots)
    if (dot(r, v.coords) == 0) {
      vanishing.push_back(&r);
      vanishing_set.insert(r);
    }

  GroupType result;
  result.su_form = rs.series == Series::A;
  if (vanishing.empty()) {
    result.torus_rank = rs.rank;
    return result;
  }

  // sub-root-system closure checks
  std::set<Vec> all_roots(rs.roots.begin(), rs.roots.end());
  for (const auto* a : vanishing) {
    Vec neg(a->size());
    for (std::size_t i = 0; i < a->size(); ++i) neg[i] = -(*a)[i];
    if (!vanishing_set.count(neg))
      throw Error("internal", "vanishing set not closed under negation");
  }
  for (const auto* a : vanishing)
    for (const auto* b : vanishing) {
      Vec s = vec_add(*a, *b);
      if (all_roots.count(s) && !vanishing_set.count(s))
        throw Error("internal", "vanishing set not closed under root addition");
    }

  // generic functional positive/negative split of the subsystem
  std::vector<const Vec*> positives;
  for (long m : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 101L, 1009L}) {
    positives.clear();
    Vec w(static_cast<std::size_t>(rs.ambient));
    Rational p = 1;
    for (auto& c : w) {
      c = p;
      p *= m;
    }
    bool generic = true;
    for (const auto* a : vanishing) {
      Rational d = dot(*a, w);
      if (d == 0) {
        generic = false;
        break;
      }
      if (d > 0) positives.push_back(a);
    }
    if (generic) break;
    positives.clear();
  }
  if (positives.empty()) throw Error("internal", "no generic functional found");

  // simple roots of the subsystem: indecomposable positives
  std::set<Vec> pos_set;
  for (const auto* a : positives) pos_set.insert(*a);
  std::vector<Vec> sub_simple;
  for (const auto* a : positives) {
    bool decomposable = false;
    for (const auto* b : positives) {
      if (a == b) continue;
      Vec diff(a->size());
      for (std::size_t i = 0; i < a->size(); ++i) diff[i] = (*a)[i] - (*b)[i];
      if (pos_set.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) sub_simple.push_back(*a);
  }

  const std::size_t sr = sub_simple.size();

  // expansion of every subsystem root over the subsystem simple roots;
  // integer coefficients of one sign, and the support identifies the
  // component the root belongs to
  std::vector<std::vector<Rational>> gram(sr, std::vector<Rational>(sr));
  for (std::size_t i = 0; i < sr; ++i)
    for (std::size_t j = 0; j < sr; ++j) gram[i][j] = dot(sub_simple[i], sub_simple[j]);

  // connected components of the Dynkin graph
  std::vector<int> comp_id(sr, -1);
  int n_comp = 0;
  for (std::size_t i = 0; i < sr; ++i) {
    if (comp_id[i] >= 0) continue;
    std::vector<std::size_t> stack{i};
    comp_id[i] = n_comp;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < sr; ++j)
        if (comp_id[j] < 0 && gram[u][j] != 0) {
          comp_id[j] = n_comp;
          stack.push_back(j);
        }
    }
    ++n_comp;
  }

  std::vector<Component> comps(n_comp);
  for (std::size_t i = 0; i < sr; ++i) comps[comp_id[i]].simple.push_back(sub_simple[i]);

  for (const auto* a : vanishing) {
    std::vector<Rational> rhs(sr);
    for (std::size_t i = 0; i < sr; ++i) rhs[i] = dot(sub_simple[i], *a);
    std::vector<Rational> coef = solve_linear_system(gram, rhs);
    int seen = -1;
    int last_sign = 0;
    for (std::size_t i = 0; i < sr; ++i) {
      if (coef[i] == 0) continue;
      if (coef[i].get_den() != 1)
        throw Error("internal", "subsystem root with non-integer expansion");
      int s = sign(coef[i]);
      if (last_sign != 0 && s != last_sign)
        throw Error("internal", "subsystem root with mixed-sign expansion");
      last_sign = s;
      if (seen >= 0 && comp_id[i] != seen)
        throw Error("internal", "subsystem root supported on two components");
      seen = comp_id[i];
    }
    if (seen < 0) throw Error("internal", "zero expansion of a root");
    comps[seen].roots.push_back(a);
  }

  for (const auto& c : comps) result.factors.push_back(classify_component(c));
  result.canonicalize();
  result.torus_rank = rs.rank - static_cast<int>(sr);
  if (result.torus_rank < 0) throw Error("internal", "negative torus rank");
  return result;
}

std::vector<ChamberFace> enumerate_faces(const RootSystem& rs, ExecMode mode) {
  const std::size_t n = rs.simple.size();
  const std::size_t total = 1ULL << n;
  std::vector<ChamberFace> faces(total);

  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram[i][j] = dot(rs.roots[rs.simple[i]], rs.roots[rs.simple[j]]);

  auto work = [&](std::size_t mask) {
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = (mask >> i) & 1ULL ? 0 : 1;
    std::vector<Rational> coef = solve_linear_system(gram, rhs);
    CartanElement v;
    v.coords.assign(static_cast<std::size_t>(rs.ambient), Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& a = rs.roots[rs.simple[j]];
      for (std::size_t c = 0; c < a.size(); ++c) v.coords[c] += coef[j] * a[c];
    }
    ChamberFace face;
    face.mask = static_cast<unsigned>(mask);
    face.sample = v;
    face.type = centralizer_type(rs, v);
    for (std::size_t r = 0; r < rs.roots.size(); ++r)
      if (dot(rs.roots[r], v.coords) == 0) face.vanishing.push_back(r);
    for (std::size_t i = 0; i < n; ++i) {
      bool zero = dot(rs.roots[rs.simple[i]], v.coords) == 0;
      if (zero != (((mask >> i) & 1ULL) != 0))
        throw Error("internal", "face sample does not cut out the requested wall set");
    }
    faces[mask] = std::move(face);
  };

#ifdef ORBITS_HAVE_OPENMP
  if (mode == ExecMode::Parallel) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long long mask = 0; mask < static_cast<long long>(total); ++mask) {
      try {
        work(static_cast<std::size_t>(mask));
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return faces;
  }
#else
  (void)mode;
#endif
  for (std::size_t mask = 0; mask < total; ++mask) work(mask);
  return faces;
}

std::set<GroupType> enumerate_centralizer_types(const RootSystem& rs, ExecMode mode) {
  std::set<GroupType> out;
  for (const auto& f : enumerate_faces(rs, mode)) out.insert(f.type);
  return out;
}

namespace {

RootSystem factor_root_system(const SimpleFactor& f) {
  return build_root_system_internal(f.series, f.rank);
}

GroupType merge_types(const GroupType& a, const GroupType& b) {
  GroupType g;
  g.factors = a.factors;
  g.factors.insert(g.factors.end(), b.factors.begin(), b.factors.end());
  g.torus_rank = a.torus_rank + b.torus_rank;
  g.canonicalize();
  return g;
}

}  // namespace

std::set<GroupType> centralizer_types_of_group(const GroupType& g) {
  if (g.finite) throw Error("bad_group_type", "finite groups have no coadjoint orbits here");
  std::set<GroupType> acc{GroupType::torus(0)};
  for (const auto& f : g.factors) {
    std::set<GroupType> fs = enumerate_centralizer_types(factor_root_system(f), ExecMode::Serial);
    std::set<GroupType> next;
    for (const auto& a : acc)
      for (const auto& b : fs) next.insert(merge_types(a, b));
    acc = std::move(next);
  }
  std::set<GroupType> out;
  for (const auto& a : acc) out.insert(merge_types(a, GroupType::torus(g.torus_rank)));
  return out;
}

std::set<std::pair<GroupType, GroupType>> nested_centralizer_pairs(const GroupType& g) {
  if (g.finite) throw Error("bad_group_type", "finite groups have no coadjoint orbits here");
  using Pair = std::pair<GroupType, GroupType>;
  std::set<Pair> acc{{GroupType::torus(0), GroupType::torus(0)}};
  for (const auto& f : g.factors) {
    auto faces = enumerate_faces(factor_root_system(f), ExecMode::Serial);
    std::set<Pair> fp;
    for (const auto& lo : faces)
      for (const auto& hi : faces) {
        if (!std::includes(hi.vanishing.begin(), hi.vanishing.end(), lo.vanishing.begin(),
                           lo.vanishing.end()))
          continue;
        fp.insert({lo.type, hi.type});
      }
    std::set<Pair> next;
    for (const auto& a : acc)
      for (const auto& b : fp)
        next.insert({merge_types(a.first, b.first), merge_types(a.second, b.second)});
    acc = std::move(next);
  }
  std::set<Pair> out;
  GroupType t = GroupType::torus(g.torus_rank);
  for (const auto& p : acc) out.insert({merge_types(p.first, t), merge_types(p.second, t)});
  return out;
}

}  // namespace orbits
