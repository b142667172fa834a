#pragma once

#include <optional>

#include "orbits/rootsys.hpp"

namespace orbits {

// One transitive, effective sphere action K/H = S^n, at Lie-algebra level.
struct SphereAction {
  GroupType acting;
  GroupType stabilizer;
  int sphere_dim;
  std::string source;
};

// The classical table of compact groups acting transitively and effectively
// on spheres (Montgomery-Samelson, Borel), with acting-group rank capped.
const std::vector<SphereAction>& sphere_action_table(int max_rank = 8);

enum class CaseLabel { I, II, III, IV };
const char* case_name(CaseLabel c);

// Stabilizer pattern of Lemma-type four-way case analysis: compares the
// interior stabilizer with the two endpoint stabilizers.
CaseLabel case_of(const GroupType& z_v, const GroupType& z_min, const GroupType& z_max);

struct Quintuple {
  GroupType g, z_v, z_max, g_max, g_m;
  int sphere_dim = 0;           // n with G_max/G_m = S^n
  std::string paper_item;       // family label when the quintuple matches one
  bool operator==(const Quintuple& o) const {
    return g == o.g && z_v == o.z_v && z_max == o.z_max && g_max == o.g_max && g_m == o.g_m;
  }
  bool operator<(const Quintuple& o) const;
};

struct AdmissibleCheck {
  bool ok = false;
  std::string reason;  // empty when ok
  int sphere_dim = 0;
  explicit operator bool() const { return ok; }
};

// Definitional conditions at type level: Z_v and Z_max realizable (nested)
// centralizer types of G, Z_max != G_max, Z_v = G_m x S^1, and (G_max, G_m)
// a transitive sphere pair.
AdmissibleCheck is_admissible(const Quintuple& q);

// No common coadjoint-stabilizer factor splits off all five members at once.
bool is_effective(const Quintuple& q);

// Joins the centralizer enumeration of every group of rank <= max_rank in
// the scan list against the sphere-action table; emits the admissible and
// effective quintuples, deduplicated and canonically ordered.
std::vector<Quintuple> enumerate_quintuples(int max_rank, ExecMode mode = ExecMode::Parallel);

// The expected family entries ((1), (1a)=(3), (2)) within the rank bound.
std::vector<Quintuple> paper_list_quintuples(int max_rank);

struct AlphaSolution {
  int l = 0;
  std::vector<Rational> v;      // (x1, x2, x3, ..., x3), length l+2
  std::vector<Rational> alpha;  // (a1, a2, a3, ..., a3), length l+2
  GroupType type_v;             // S(U1 x U1 x Ul)
  GroupType type_plus;          // centralizer of v + alpha
  GroupType type_minus;         // centralizer of v - alpha
};

// Solves a1+a2+l*a3 = 0, x2+a2 = x3+a3 (nonzero), x1-a1 = x2-a2 (nonzero)
// and verifies the three centralizer types against the root data.
AlphaSolution solve_alpha(int l, const Rational& x1, const Rational& x2, const Rational& x3);

}  // namespace orbits
