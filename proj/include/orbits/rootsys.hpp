#pragma once

#include <set>
#include <string>
#include <vector>

#include "orbits/rational.hpp"

namespace orbits {

enum class Series { A, B, C, D, E6, E7, E8, F4, G2 };

std::string series_name(Series s);

// A simple (or torus) factor of a compact group, up to local isomorphism.
// Canonical form: C2 -> B2, D3 -> A3, B1/C1 -> A1; D2 never appears as a
// factor (it splits into two A1's), D1 is absorbed into the torus rank.
struct SimpleFactor {
  Series series;
  int rank;
  auto operator<=>(const SimpleFactor&) const = default;
};

int factor_dim(const SimpleFactor& f);

// Compact group type up to local isomorphism: simple factors plus a torus.
// `su_form` marks A-series centralizers reported in S(U x ... x U) shape;
// it is a rendering hint and does not enter equality. `finite` marks the
// dimension-zero type standing in for finite groups like Z_p.
struct GroupType {
  std::vector<SimpleFactor> factors;
  int torus_rank = 0;
  bool su_form = false;
  bool finite = false;

  static GroupType torus(int rank_);
  static GroupType simple(Series s, int rank_);
  static GroupType finite_group();

  int rank() const;
  int dim() const;
  bool is_torus() const { return factors.empty() && !finite; }
  void canonicalize();

  bool operator==(const GroupType& o) const {
    return factors == o.factors && torus_rank == o.torus_rank && finite == o.finite;
  }
  bool operator<(const GroupType& o) const;

  std::string str() const;
};

struct RootSystem {
  Series series;
  int rank;
  int ambient;                                // dimension of the coordinate model
  std::vector<std::vector<Rational>> roots;   // all roots
  std::vector<std::size_t> simple;            // indices of the simple roots
};

struct CartanElement {
  std::vector<Rational> coords;
};

// Standard root data of the simple compact groups, in the usual orthogonal
// coordinate models (A_n on the zero-sum hyperplane of R^{n+1}).
RootSystem build_root_system(Series s, int rank);

// Internal builder without the simple-type rank restrictions; also accepts
// the semisimple small cases B1, C1/C2, D2, D3 needed for SO(m) groups.
RootSystem build_root_system_internal(Series s, int rank);

// Root data of SO(m), m >= 3 (B_k for odd m, D_k for even m).
RootSystem so_root_system(int m);

Rational pairing(const std::vector<Rational>& root, const CartanElement& v);

bool is_regular(const RootSystem& rs, const CartanElement& v);

GroupType centralizer_type(const RootSystem& rs, const CartanElement& v);

enum class ExecMode { Serial, Parallel };

// One open face of the closed Weyl chamber: the subset of simple roots that
// vanish on it, the full vanishing-root set, and the centralizer type.
struct ChamberFace {
  unsigned mask = 0;
  std::vector<std::size_t> vanishing;  // sorted root indices
  GroupType type;
  CartanElement sample;                // a point in the open face
};

std::vector<ChamberFace> enumerate_faces(const RootSystem& rs,
                                         ExecMode mode = ExecMode::Parallel);

std::set<GroupType> enumerate_centralizer_types(const RootSystem& rs,
                                                ExecMode mode = ExecMode::Parallel);

// Centralizer types of a (possibly semisimple x torus) group type with all
// simple factors of rank <= 8, via products of per-factor enumerations.
std::set<GroupType> centralizer_types_of_group(const GroupType& g);

// Nested centralizer pairs (Z ⊆ Z') realizable in g, as type pairs.
std::set<std::pair<GroupType, GroupType>> nested_centralizer_pairs(const GroupType& g);

// Exact rational linear solve (Gaussian elimination); throws on singular
// systems. Shared with the classifier's case-IVb solver.
std::vector<Rational> solve_linear_system(std::vector<std::vector<Rational>> a,
                                          std::vector<Rational> b);

}  // namespace orbits
