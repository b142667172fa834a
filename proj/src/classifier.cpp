#include "orbits/classifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace orbits {

namespace {

GroupType so_type(int m) {
  if (m < 0) throw Error("invalid_type", "SO(m) needs m >= 0");
  if (m <= 1) return GroupType::torus(0);
  if (m == 2) return GroupType::torus(1);
  GroupType g;
  if (m % 2 == 1)
    g.factors.push_back({Series::B, (m - 1) / 2});
  else
    g.factors.push_back({Series::D, m / 2});
  g.canonicalize();
  return g;
}

GroupType su_type(int m) {
  if (m <= 1) return GroupType::finite_group();  // SU(1) is trivial
  return GroupType::simple(Series::A, m - 1);
}

GroupType u_type(int m) {
  if (m <= 0) return GroupType::finite_group();
  if (m == 1) return GroupType::torus(1);
  GroupType g = GroupType::simple(Series::A, m - 1);
  g.torus_rank = 1;
  return g;
}

GroupType sp_type(int m) {
  if (m <= 0) return GroupType::finite_group();
  GroupType g;
  g.factors.push_back({Series::C, m});
  g.canonicalize();
  return g;
}

GroupType add_torus(GroupType g, int t) {
  if (g.finite) {
    if (t == 0) return g;
    GroupType r = GroupType::torus(t);
    return r;
  }
  g.torus_rank += t;
  return g;
}

GroupType add_factor(GroupType g, const GroupType& extra) {
  if (extra.finite) return g;
  if (g.finite) {
    GroupType r = extra;
    return r;
  }
  g.factors.insert(g.factors.end(), extra.factors.begin(), extra.factors.end());
  g.torus_rank += extra.torus_rank;
  g.canonicalize();
  return g;
}

}  // namespace

const std::vector<SphereAction>& sphere_action_table(int max_rank) {
  static std::map<int, std::vector<SphereAction>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(max_rank);
  if (it != cache.end()) return it->second;

  std::vector<SphereAction> rows;
  auto push = [&](GroupType k, GroupType h, int n, const std::string& src) {
    if (k.rank() > max_rank) return;
    int dk = k.dim(), dh = h.finite ? 0 : h.dim();
    if (dk - dh != n) throw Error("internal", "sphere row dimension bookkeeping is off");
    for (const auto& r : rows)
      if (r.acting == k && r.stabilizer == h && r.sphere_dim == n) return;
    rows.push_back({std::move(k), std::move(h), n, src});
  };

  const std::string mbs = "Montgomery-Samelson / Borel; Alekseevsky-Alekseevsky 1993, Table 1";
  for (int m = 2; m <= 2 * max_rank + 1; ++m)
    push(so_type(m), m == 2 ? GroupType::finite_group() : so_type(m - 1), m - 1,
         "SO(" + std::to_string(m) + ") on S^" + std::to_string(m - 1) + "; " + mbs);
  for (int m = 2; m <= max_rank + 1; ++m)
    push(su_type(m), su_type(m - 1), 2 * m - 1,
         "SU(" + std::to_string(m) + ") on S^" + std::to_string(2 * m - 1) + "; " + mbs);
  for (int m = 1; m <= max_rank; ++m)
    push(u_type(m), u_type(m - 1), 2 * m - 1,
         "U(" + std::to_string(m) + ") on S^" + std::to_string(2 * m - 1) + "; " + mbs);
  for (int m = 1; m <= max_rank; ++m)
    push(sp_type(m), sp_type(m - 1), 4 * m - 1,
         "Sp(" + std::to_string(m) + ") on S^" + std::to_string(4 * m - 1) + "; " + mbs);
  for (int m = 1; m + 1 <= max_rank; ++m)
    push(add_torus(sp_type(m), 1), add_torus(sp_type(m - 1), 1), 4 * m - 1,
         "Sp(" + std::to_string(m) + ")xU(1) on S^" + std::to_string(4 * m - 1) + "; " + mbs);
  for (int m = 1; m + 1 <= max_rank; ++m)
    push(add_factor(sp_type(m), sp_type(1)), add_factor(sp_type(m - 1), sp_type(1)), 4 * m - 1,
         "Sp(" + std::to_string(m) + ")xSp(1) on S^" + std::to_string(4 * m - 1) + "; " + mbs);
  push(GroupType::simple(Series::G2, 2), GroupType::simple(Series::A, 2), 6,
       "G2 on S^6; " + mbs);
  push(GroupType::simple(Series::B, 3), GroupType::simple(Series::G2, 2), 7,
       "Spin(7) on S^7; " + mbs);
  push(GroupType::simple(Series::B, 4), GroupType::simple(Series::B, 3), 15,
       "Spin(9) on S^15; " + mbs);

  return cache.emplace(max_rank, std::move(rows)).first->second;
}

const char* case_name(CaseLabel c) {
  switch (c) {
    case CaseLabel::I: return "I";
    case CaseLabel::II: return "II";
    case CaseLabel::III: return "III";
    case CaseLabel::IV: return "IV";
  }
  return "?";
}

namespace {

// Known standard inclusions between simple types (a chain oracle used only
// for the coarse case analysis, not for the enumeration join).
bool simple_chain_fits(const SimpleFactor& a, const SimpleFactor& b) {
  if (a == b) return true;
  auto so_dim = [](const SimpleFactor& f) -> int {
    if (f.series == Series::B) return 2 * f.rank + 1;
    if (f.series == Series::D) return 2 * f.rank;
    if (f.series == Series::A && f.rank == 1) return 3;
    if (f.series == Series::A && f.rank == 3) return 6;
    return -1;
  };
  auto su_dim = [](const SimpleFactor& f) -> int {
    return f.series == Series::A ? f.rank + 1 : -1;
  };
  auto sp_dim = [](const SimpleFactor& f) -> int {
    if (f.series == Series::C) return f.rank;
    if (f.series == Series::A && f.rank == 1) return 1;
    if (f.series == Series::B && f.rank == 2) return 2;
    return -1;
  };
  int soa = so_dim(a), sob = so_dim(b);
  if (soa > 0 && sob > 0 && soa <= sob) return true;
  int sua = su_dim(a), sub = su_dim(b);
  if (sua > 0 && sub > 0 && sua <= sub) return true;
  int spa = sp_dim(a), spb = sp_dim(b);
  if (spa > 0 && spb > 0 && spa <= spb) return true;
  if (sua > 0 && spb > 0 && sua <= spb) return true;       // SU(m) in Sp(m)
  if (sua > 0 && sob > 0 && 2 * sua <= sob) return true;   // SU(m) in SO(2m)
  if (soa > 0 && sub > 0 && soa <= sub) return true;       // SO(m) in SU(m)
  if (b.series == Series::G2 && sua > 0 && sua <= 3) return true;   // SU(3) in G2
  if (a.series == Series::G2 && sob >= 7) return true;              // G2 in SO(7)
  if (b.series == Series::F4 && soa > 0 && soa <= 9) return true;   // Spin(9) in F4
  if (a.series == Series::F4 && (b.series == Series::E6 || b.series == Series::E7 ||
                                 b.series == Series::E8))
    return true;
  return false;
}

bool type_leq(const GroupType& a, const GroupType& b) {
  if (a == b) return true;
  if (a.finite) return true;
  if (b.finite) return false;
  if (a.rank() > b.rank() || a.dim() >= b.dim()) return false;
  // injective assignment of factors along known chains
  std::vector<bool> used(b.factors.size(), false);
  std::vector<std::size_t> order(a.factors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::function<bool(std::size_t)> match = [&](std::size_t i) -> bool {
    if (i == a.factors.size()) return true;
    for (std::size_t j = 0; j < b.factors.size(); ++j) {
      if (used[j] || !simple_chain_fits(a.factors[i], b.factors[j])) continue;
      used[j] = true;
      if (match(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return match(0);
}

}  // namespace

CaseLabel case_of(const GroupType& z_v, const GroupType& z_min, const GroupType& z_max) {
  if (!type_leq(z_v, z_min) || !type_leq(z_v, z_max))
    throw Error("containment_violated",
                "interior stabilizer does not embed in both endpoint stabilizers");
  bool eq_min = z_v == z_min;
  bool eq_max = z_v == z_max;
  if (eq_min && eq_max) return CaseLabel::I;
  if (eq_min) return CaseLabel::II;
  if (eq_max) return CaseLabel::III;
  return CaseLabel::IV;
}

bool Quintuple::operator<(const Quintuple& o) const {
  auto key = [](const Quintuple& q) {
    return std::make_tuple(q.g.dim(), q.g, q.z_v, q.z_max, q.g_max, q.g_m);
  };
  return key(*this) < key(o);
}

namespace {

struct GroupContext {
  std::set<GroupType> types;
  std::set<std::pair<GroupType, GroupType>> nested;
};

const GroupContext& group_context(const GroupType& g) {
  static std::map<GroupType, GroupContext> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g);
  if (it != cache.end()) return it->second;
  GroupContext ctx;
  ctx.types = centralizer_types_of_group(g);
  ctx.nested = nested_centralizer_pairs(g);
  return cache.emplace(g, std::move(ctx)).first->second;
}

bool torus_extension_of(const GroupType& z_v, const GroupType& g_m) {
  if (g_m.finite) return !z_v.finite && z_v.factors.empty() && z_v.torus_rank == 1;
  return !z_v.finite && z_v.factors == g_m.factors && z_v.torus_rank == g_m.torus_rank + 1;
}

}  // namespace

AdmissibleCheck is_admissible(const Quintuple& q) {
  AdmissibleCheck res;
  if (q.g.finite || (q.g.factors.empty() && q.g.torus_rank == 0)) {
    res.reason = "G is not a compact group type";
    return res;
  }
  if (q.z_max == q.g_max) {
    res.reason = "Z_max equals G_max";
    return res;
  }
  if (!torus_extension_of(q.z_v, q.g_m)) {
    res.reason = "Z_v is not G_m x S^1 at type level";
    return res;
  }
  int dim_gm = q.g_m.finite ? 0 : q.g_m.dim();
  int rank_gm = q.g_m.finite ? 0 : q.g_m.rank();
  if (q.z_v.dim() != dim_gm + 1 || q.z_v.rank() != rank_gm + 1) {
    res.reason = "rank/dimension bookkeeping of Z_v = G_m x S^1 fails";
    return res;
  }
  int n = -1;
  for (const auto& row : sphere_action_table()) {
    if (row.acting == q.g_max && row.stabilizer == q.g_m) {
      n = row.sphere_dim;
      break;
    }
  }
  if (n < 0) {
    res.reason = "(G_max, G_m) is not a transitive sphere pair";
    return res;
  }
  if ((q.g_max.finite ? 0 : q.g_max.dim()) - dim_gm != n) {
    res.reason = "dim G_max - dim G_m does not match the sphere dimension";
    return res;
  }
  const GroupContext& ctx = group_context(q.g);
  if (!ctx.types.count(q.z_v)) {
    res.reason = "Z_v is not a realizable centralizer type of G";
    return res;
  }
  if (!ctx.types.count(q.z_max)) {
    res.reason = "Z_max is not a realizable centralizer type of G";
    return res;
  }
  if (!ctx.nested.count({q.z_v, q.z_max})) {
    res.reason = "Z_v is not contained in Z_max as centralizers of G";
    return res;
  }
  res.ok = true;
  res.sphere_dim = n;
  return res;
}

namespace {

// Does `part` split off from `whole` as a direct factor, and what remains?
std::optional<GroupType> strip_factor(const GroupType& whole, const GroupType& part) {
  if (part.finite) return whole;  // trivial/finite common factor strips nothing
  if (whole.finite) return part.factors.empty() && part.torus_rank == 0
                               ? std::optional<GroupType>(whole)
                               : std::nullopt;
  if (part.torus_rank > whole.torus_rank) return std::nullopt;
  GroupType rest = whole;
  rest.torus_rank -= part.torus_rank;
  for (const auto& f : part.factors) {
    auto it = std::find(rest.factors.begin(), rest.factors.end(), f);
    if (it == rest.factors.end()) return std::nullopt;
    rest.factors.erase(it);
  }
  return rest;
}

std::vector<GroupType> proper_normal_factors(const GroupType& g) {
  // nonempty subgroups generated by a subset of the simple factors and a
  // part of the torus
  std::vector<GroupType> out;
  const std::size_t n = g.factors.size();
  for (std::size_t mask = 0; mask < (1ULL << n); ++mask) {
    for (int t = 0; t <= g.torus_rank; ++t) {
      if (mask == 0 && t == 0) continue;
      GroupType g1;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1ULL) g1.factors.push_back(g.factors[i]);
      g1.torus_rank = t;
      g1.canonicalize();
      if (std::find(out.begin(), out.end(), g1) == out.end()) out.push_back(g1);
    }
  }
  return out;
}

}  // namespace

bool is_effective(const Quintuple& q) {
  AdmissibleCheck adm = is_admissible(q);
  if (!adm) throw Error("inadmissible", "effectiveness is defined for admissible quintuples");
  for (const auto& g1 : proper_normal_factors(q.g)) {
    auto g2 = strip_factor(q.g, g1);
    if (!g2) continue;
    for (const auto& h1 : centralizer_types_of_group(g1)) {
      auto zv2 = strip_factor(q.z_v, h1);
      auto zmax2 = strip_factor(q.z_max, h1);
      auto gmax2 = strip_factor(q.g_max, h1);
      auto gm2 = strip_factor(q.g_m, h1);
      if (!zv2 || !zmax2 || !gmax2 || !gm2) continue;
      Quintuple rest{*g2, *zv2, *zmax2, *gmax2, *gm2, 0, ""};
      if (is_admissible(rest)) return false;
    }
  }
  return true;
}

std::vector<Quintuple> paper_list_quintuples(int max_rank) {
  std::vector<Quintuple> out;
  // (1a)=(3): (A1, T^1, A1, T^1, finite); S^1 pair
  if (max_rank >= 1)
    out.push_back({GroupType::simple(Series::A, 1), GroupType::torus(1),
                   GroupType::simple(Series::A, 1), GroupType::torus(1),
                   GroupType::finite_group(), 1, "1a/3"});
  for (int k = 2; k <= max_rank; ++k)  // (1): SO(2k+1) family
    out.push_back({so_type(2 * k + 1), add_torus(so_type(2 * k - 1), 1), so_type(2 * k + 1),
                   so_type(2 * k), so_type(2 * k - 1), 2 * k - 1,
                   "1 (k=" + std::to_string(k) + ")"});
  for (int k = 1; k + 1 <= max_rank; ++k)  // (2): SO(2k+2) family
    out.push_back({so_type(2 * k + 2), add_torus(so_type(2 * k), 1), so_type(2 * k + 2),
                   so_type(2 * k + 1), so_type(2 * k), 2 * k,
                   "2 (k=" + std::to_string(k) + ")"});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Quintuple> enumerate_quintuples(int max_rank, ExecMode mode) {
  if (max_rank < 2) throw Error("invalid_parameters", "max_rank must be at least 2");

  std::vector<std::pair<Series, int>> scan;
  for (int r = 1; r <= max_rank; ++r) scan.push_back({Series::A, r});
  for (int r = 2; r <= max_rank; ++r) scan.push_back({Series::B, r});
  for (int r = 3; r <= max_rank; ++r) scan.push_back({Series::C, r});
  for (int r = 2; r <= max_rank; ++r) scan.push_back({Series::D, r});
  if (max_rank >= 2) scan.push_back({Series::G2, 2});
  if (max_rank >= 4) scan.push_back({Series::F4, 4});
  if (max_rank >= 6) scan.push_back({Series::E6, 6});
  if (max_rank >= 7) scan.push_back({Series::E7, 7});
  if (max_rank >= 8) scan.push_back({Series::E8, 8});

  const auto& table = sphere_action_table(std::max(max_rank, 8));

  std::vector<std::vector<Quintuple>> found(scan.size());

  auto scan_group = [&](std::size_t gi) {
    auto [series, rank] = scan[gi];
    RootSystem rs = build_root_system_internal(series, rank);
    GroupType g;
    g.factors.push_back({series, rank});
    g.canonicalize();

    auto faces = enumerate_faces(rs, ExecMode::Serial);
    std::set<std::pair<GroupType, GroupType>> pairs;
    for (const auto& lo : faces)
      for (const auto& hi : faces) {
        if (lo.vanishing.size() >= hi.vanishing.size()) continue;
        if (!std::includes(hi.vanishing.begin(), hi.vanishing.end(), lo.vanishing.begin(),
                           lo.vanishing.end()))
          continue;
        pairs.insert({lo.type, hi.type});
      }

    for (const auto& [zv, zmax] : pairs) {
      for (const auto& row : table) {
        if (!torus_extension_of(zv, row.stabilizer)) continue;
        // the endpoint fibration Z_max / G_max must itself be one of the
        // transitive sphere pairs, one dimension up from the slice sphere
        for (const auto& top : table) {
          if (!(top.acting == zmax && top.stabilizer == row.acting &&
                top.sphere_dim == row.sphere_dim + 1))
            continue;
          Quintuple q{g, zv, zmax, row.acting, row.stabilizer, row.sphere_dim, ""};
          AdmissibleCheck adm = is_admissible(q);
          if (!adm) continue;
          if (!is_effective(q)) continue;
          found[gi].push_back(q);
        }
      }
    }
  };

#ifdef ORBITS_HAVE_OPENMP
  if (mode == ExecMode::Parallel) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(scan.size()); ++i) {
      try {
        scan_group(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  } else {
    for (std::size_t i = 0; i < scan.size(); ++i) scan_group(i);
  }
#else
  (void)mode;
  for (std::size_t i = 0; i < scan.size(); ++i) scan_group(i);
#endif

  std::vector<Quintuple> out;
  for (auto& bucket : found)
    for (auto& q : bucket)
      if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  std::sort(out.begin(), out.end());

  for (auto& q : out)
    for (const auto& p : paper_list_quintuples(max_rank))
      if (p == q) q.paper_item = p.paper_item;
  return out;
}

AlphaSolution solve_alpha(int l, const Rational& x1, const Rational& x2, const Rational& x3) {
  if (l < 2) throw Error("invalid_parameters", "the case needs l >= 2");
  if (x1 + x2 + Rational(l) * x3 != 0)
    throw Error("not_traceless", "x1 + x2 + l*x3 must vanish");
  if (x1 == x2) throw Error("degenerate_data", "x1 = x2 makes the configuration degenerate");

  std::vector<std::vector<Rational>> m = {
      {1, 1, Rational(l)}, {0, 1, -1}, {1, -1, 0}};
  std::vector<Rational> rhs = {0, x3 - x2, x1 - x2};
  std::vector<Rational> a = solve_linear_system(m, rhs);

  if (x2 + a[1] == 0)
    throw Error("degenerate_data", "x2 + alpha2 vanishes; the solved direction is degenerate");
  if (x1 - a[0] == 0)
    throw Error("degenerate_data", "x1 - alpha1 vanishes; the solved direction is degenerate");

  AlphaSolution sol;
  sol.l = l;
  sol.v = {x1, x2};
  sol.alpha = {a[0], a[1]};
  for (int i = 0; i < l; ++i) {
    sol.v.push_back(x3);
    sol.alpha.push_back(a[2]);
  }

  RootSystem rs = build_root_system_internal(Series::A, l + 1);
  auto type_of = [&](const std::vector<Rational>& coords) {
    CartanElement v;
    v.coords = coords;
    return centralizer_type(rs, v);
  };
  auto shift = [&](int sgn) {
    std::vector<Rational> w(sol.v.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = sol.v[i] + Rational(sgn) * sol.alpha[i];
    return w;
  };
  sol.type_v = type_of(sol.v);
  sol.type_plus = type_of(shift(1));
  sol.type_minus = type_of(shift(-1));

  // S(U1 x U1 x Ul) for v, and {S(U1 x U_{l+1}), S(U2 x Ul)} for v +- alpha
  GroupType expect_v = GroupType::simple(Series::A, l - 1);
  expect_v.torus_rank = 2;
  expect_v.su_form = true;
  GroupType expect_min = GroupType::simple(Series::A, l);
  expect_min.torus_rank = 1;
  GroupType expect_max = GroupType::simple(Series::A, l - 1);
  expect_max.factors.push_back({Series::A, 1});
  expect_max.canonicalize();
  expect_max.torus_rank = 1;
  if (!(sol.type_v == expect_v))
    throw Error("degenerate_data", "v does not have stabilizer S(U1xU1xUl)");
  bool match = (sol.type_plus == expect_min && sol.type_minus == expect_max) ||
               (sol.type_plus == expect_max && sol.type_minus == expect_min);
  if (!match)
    throw Error("degenerate_data", "v +- alpha do not realize the two endpoint stabilizers");
  return sol;
}

}  // namespace orbits
