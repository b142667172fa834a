#include "orbits/json_io.hpp"

#include <algorithm>
#include <cctype>

namespace orbits {

Json group_type_json(const GroupType& g) {
  Json j;
  j["name"] = g.str();
  if (g.finite) {
    j["finite"] = true;
    return j;
  }
  Json factors = Json::array();
  for (const auto& f : g.factors)
    factors.push_back({{"series", series_name(f.series)}, {"rank", f.rank}});
  j["factors"] = factors;
  j["torus_rank"] = g.torus_rank;
  j["rank"] = g.rank();
  j["dim"] = g.dim();
  return j;
}

Json ring_json(const QuotientRing& ring) {
  Json j;
  Json gens = Json::array();
  for (std::size_t i = 0; i < ring.vars()->size(); ++i)
    gens.push_back({{"name", ring.vars()->name(i)}, {"degree", ring.vars()->degree(i)}});
  j["generators"] = gens;
  Json rels = Json::array();
  for (const auto& r : ring.relations()) rels.push_back(r.monic().str());
  j["relations"] = rels;
  Json gb = Json::array();
  for (const auto& g : ring.basis()) gb.push_back(g.str());
  j["groebner_basis"] = gb;
  if (ring.finite_dimensional()) {
    j["dimension"] = ring.dimension();
    j["betti"] = ring.hilbert_series();
  } else {
    j["dimension"] = nullptr;
  }
  return j;
}

Json quantum_ring_json(const QuantumRing& ring) {
  Json j;
  j["k"] = ring.k;
  j["N"] = ring.N;
  j["q_degree"] = ring.q_degree;
  Json gens = Json::array();
  for (std::size_t i = 0; i < ring.vars->size(); ++i)
    gens.push_back({{"name", ring.vars->name(i)}, {"degree", ring.vars->degree(i)}});
  j["generators"] = gens;
  Json rels = Json::array();
  for (const auto& r : ring.relations) rels.push_back(r.monic().str());
  j["relations"] = rels;
  j["classical_dimension"] = ring.classical.dimension();
  j["classical_betti"] = ring.classical.hilbert_series();
  return j;
}

Json quintuple_json(const Quintuple& q) {
  Json j;
  j["G"] = q.g.str();
  j["Z_v"] = q.z_v.str();
  j["Z_max"] = q.z_max.str();
  j["G_max"] = q.g_max.str();
  j["G_m"] = q.g_m.str();
  j["sphere_dim"] = q.sphere_dim;
  j["paper_item"] = q.paper_item.empty() ? Json(nullptr) : Json(q.paper_item);
  return j;
}

Json sphere_action_json(const SphereAction& row) {
  Json j;
  j["acting"] = row.acting.str();
  j["stabilizer"] = row.stabilizer.str();
  j["sphere_dim"] = row.sphere_dim;
  j["source"] = row.source;
  return j;
}

Json upoly_json(const UPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"coefficients", coeffs}, {"text", p.str()}};
}

namespace {

std::string strip(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  return t;
}

int parse_int_suffix(const std::string& s, std::size_t pos) {
  if (pos >= s.size()) throw Error("bad_group", "missing rank in '" + s + "'");
  std::size_t idx = pos;
  if (s[idx] == '(') ++idx;
  std::size_t end = idx;
  while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
  if (end == idx) throw Error("bad_group", "missing rank in '" + s + "'");
  int value = std::stoi(s.substr(idx, end - idx));
  return value;
}

}  // namespace

std::pair<Series, int> parse_simple_group(const std::string& token) {
  std::string s = strip(token);
  if (s.empty()) throw Error("bad_group", "empty group token");
  auto up = [&](std::string t) {
    std::transform(t.begin(), t.end(), t.begin(), ::toupper);
    return t;
  };
  std::string u = up(s);
  if (u == "G2") return {Series::G2, 2};
  if (u == "F4") return {Series::F4, 4};
  if (u == "E6") return {Series::E6, 6};
  if (u == "E7") return {Series::E7, 7};
  if (u == "E8") return {Series::E8, 8};
  if (u.rfind("SU", 0) == 0) {
    int n = parse_int_suffix(s, 2);
    if (n < 2) throw Error("bad_group", "SU(n) needs n >= 2");
    return {Series::A, n - 1};
  }
  if (u.rfind("SPIN", 0) == 0 || u.rfind("SO", 0) == 0) {
    int m = parse_int_suffix(s, u.rfind("SPIN", 0) == 0 ? 4 : 2);
    if (m < 3) throw Error("bad_group", "SO(m) needs m >= 3");
    if (m % 2 == 1) return {Series::B, (m - 1) / 2};
    return {Series::D, m / 2};
  }
  if (u.rfind("SP", 0) == 0) {
    int n = parse_int_suffix(s, 2);
    return {Series::C, n};
  }
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (c == 'A' || c == 'B' || c == 'C' || c == 'D') {
    int n = parse_int_suffix(s, 1);
    Series ser = c == 'A' ? Series::A : c == 'B' ? Series::B : c == 'C' ? Series::C : Series::D;
    return {ser, n};
  }
  throw Error("bad_group", "cannot parse group '" + token + "'");
}

GroupType parse_group_type(const std::string& expr) {
  std::string s = strip(expr);
  if (s.empty()) throw Error("bad_group", "empty group type");
  if (s == "Z_p" || s == "Zp") return GroupType::finite_group();
  if (s == "1") return GroupType::torus(0);

  if (s.size() > 2 && (s.rfind("S(", 0) == 0) && s.back() == ')') {
    std::string inner = s.substr(2, s.size() - 3);
    GroupType g;
    g.su_form = true;
    int parts = 0;
    std::size_t pos = 0;
    while (pos < inner.size()) {
      std::size_t next = inner.find('x', pos);
      std::string tok = inner.substr(pos, next == std::string::npos ? next : next - pos);
      if (tok.empty() || (tok[0] != 'U' && tok[0] != 'u'))
        throw Error("bad_group", "S(...) expects U-factors in '" + expr + "'");
      int n = parse_int_suffix(tok, 1);
      if (n < 1) throw Error("bad_group", "U(n) needs n >= 1");
      if (n >= 2) g.factors.push_back({Series::A, n - 1});
      ++parts;
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (parts == 0) throw Error("bad_group", "empty S(...) expression");
    // each U-factor contributes a central circle; the determinant
    // condition removes one of them
    g.torus_rank = parts - 1;
    g.canonicalize();
    return g;
  }

  GroupType g;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find('x', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.empty()) throw Error("bad_group", "empty factor in '" + expr + "'");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    if (c == 'T') {
      std::size_t idx = 1;
      if (idx < tok.size() && tok[idx] == '^') ++idx;
      g.torus_rank += parse_int_suffix(tok, idx);
    } else if (c == 'U' && !(tok.size() > 1 && std::isalpha(static_cast<unsigned char>(tok[1])))) {
      int n = parse_int_suffix(tok, 1);
      if (n >= 2) g.factors.push_back({Series::A, n - 1});
      g.torus_rank += 1;
    } else if (tok == "Z_p" || tok == "Zp") {
      // finite factors contribute nothing at Lie-algebra level
    } else {
      auto [ser, rank] = parse_simple_group(tok);
      if (ser == Series::D && rank < 2) throw Error("bad_group", "bad factor '" + tok + "'");
      g.factors.push_back({ser, rank});
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  g.canonicalize();
  return g;
}

}  // namespace orbits
