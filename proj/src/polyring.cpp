#include "orbits/polyring.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace orbits {

VarTable::VarTable(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.size() != degrees_.size())
    throw Error("bad_vars", "variable/degree count mismatch");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (degrees_[i] <= 0 || degrees_[i] % 2 != 0)
      throw Error("bad_vars", "variable '" + names_[i] + "' must have a positive even degree");
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw Error("bad_vars", "duplicate variable '" + names_[i] + "'");
  }
}

std::optional<std::size_t> VarTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

VarTablePtr make_vars(std::vector<std::string> names, std::vector<int> degrees) {
  return std::make_shared<const VarTable>(std::move(names), std::move(degrees));
}

int mono_weighted_degree(const VarTable& vars, const Monomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(m[i]) * vars.degree(i);
  return d;
}

int mono_cmp(const VarTable& vars, const Monomial& a, const Monomial& b) {
  int da = mono_weighted_degree(vars, a), db = mono_weighted_degree(vars, b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw Error("bad_division", "monomial division is not exact");
    r[i] = a[i] - b[i];
  }
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

GradedPoly GradedPoly::constant(VarTablePtr vars, const Rational& c) {
  GradedPoly p(vars);
  if (c != 0) p.terms_.push_back({Monomial(vars->size(), 0), c});
  return p;
}

GradedPoly GradedPoly::variable(VarTablePtr vars, std::size_t index) {
  if (index >= vars->size()) throw Error("bad_vars", "variable index out of range");
  Monomial m(vars->size(), 0);
  m[index] = 1;
  return term(std::move(vars), 1, std::move(m));
}

GradedPoly GradedPoly::term(VarTablePtr vars, const Rational& c, Monomial m) {
  GradedPoly p(vars);
  if (m.size() != p.vars_->size()) throw Error("bad_vars", "monomial size mismatch");
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

const Monomial& GradedPoly::leading_monomial() const {
  if (is_zero()) throw Error("zero_polynomial", "leading term of zero");
  return terms_.front().first;
}

const Rational& GradedPoly::leading_coeff() const {
  if (is_zero()) throw Error("zero_polynomial", "leading term of zero");
  return terms_.front().second;
}

int GradedPoly::degree() const {
  if (is_zero()) return -1;
  return mono_weighted_degree(*vars_, terms_.front().first);
}

bool GradedPoly::is_homogeneous() const {
  if (is_zero()) return true;
  int d = mono_weighted_degree(*vars_, terms_.front().first);
  for (const auto& [m, c] : terms_)
    if (mono_weighted_degree(*vars_, m) != d) return false;
  return true;
}

void GradedPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [this](const auto& a, const auto& b) {
    return mono_cmp(*vars_, a.first, b.first) > 0;
  });
  std::vector<std::pair<Monomial, Rational>> out;
  out.reserve(terms_.size());
  for (auto& [m, c] : terms_) {
    if (!out.empty() && out.back().first == m)
      out.back().second += c;
    else
      out.push_back({std::move(m), c});
  }
  terms_.clear();
  for (auto& [m, c] : out)
    if (c != 0) terms_.push_back({std::move(m), std::move(c)});
}

void GradedPoly::add_term(const Rational& c, Monomial m) {
  if (c == 0) return;
  if (m.size() != vars_->size()) throw Error("bad_vars", "monomial size mismatch");
  terms_.push_back({std::move(m), c});
  normalize();
}

namespace {
void check_same_vars(const GradedPoly& a, const GradedPoly& b) {
  if (!a.vars() || !b.vars() || !a.vars()->same_as(*b.vars()))
    throw Error("bad_vars", "polynomials live on different variable tables");
}
}  // namespace

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
  check_same_vars(*this, o);
  GradedPoly r(vars_);
  // merge two descending-sorted term lists
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mono_cmp(*vars_, terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].second + o.terms_[j].second;
      if (s != 0) r.terms_.push_back({terms_[i].first, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const { return *this + (-o); }

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
  check_same_vars(*this, o);
  GradedPoly r(vars_);
  if (is_zero() || o.is_zero()) return r;
  std::map<Monomial, Rational> acc;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = mono_mul(ma, mb);
      acc[m] += ca * cb;
    }
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(), [&](const auto& a, const auto& b) {
    return mono_cmp(*vars_, a.first, b.first) > 0;
  });
  return r;
}

GradedPoly GradedPoly::scaled(const Rational& c) const {
  GradedPoly r(vars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [m, k] : r.terms_) k *= c;
  return r;
}

GradedPoly GradedPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading_coeff());
}

bool GradedPoly::operator==(const GradedPoly& o) const {
  return vars_->same_as(*o.vars_) && terms_ == o.terms_;
}

GradedPoly GradedPoly::pow(unsigned e) const {
  GradedPoly r = constant(vars_, 1);
  GradedPoly b = *this;
  while (e) {
    if (e & 1U) r = r * b;
    b = b * b;
    e >>= 1U;
  }
  return r;
}

GradedPoly GradedPoly::substitute(std::size_t var, const Rational& value,
                                  const VarTablePtr& new_vars) const {
  if (new_vars->size() != vars_->size() - 1)
    throw Error("bad_vars", "substitution target table has wrong size");
  GradedPoly r(new_vars);
  for (const auto& [m, c] : terms_) {
    Monomial nm;
    nm.reserve(m.size() - 1);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != var) nm.push_back(m[i]);
    r.terms_.push_back({std::move(nm), c * pow_rational(value, m[var])});
  }
  r.normalize();
  return r;
}

GradedPoly GradedPoly::reindexed(const VarTablePtr& new_vars) const {
  std::vector<std::optional<std::size_t>> map(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) map[i] = new_vars->index_of(vars_->name(i));
  GradedPoly r(new_vars);
  for (const auto& [m, c] : terms_) {
    Monomial nm(new_vars->size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!map[i])
        throw Error("unknown_variable", "variable '" + vars_->name(i) + "' not in target table");
      nm[*map[i]] = m[i];
    }
    r.terms_.push_back({std::move(nm), c});
  }
  r.normalize();
  return r;
}

std::string GradedPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool has_var = false;
    for (unsigned e : m)
      if (e) has_var = true;
    if (!has_var) {
      os << to_string(a);
      continue;
    }
    bool printed = false;
    if (a != 1) {
      os << to_string(a);
      printed = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (printed) os << "*";
      os << vars_->name(i);
      if (m[i] > 1) os << "^" << m[i];
      printed = true;
    }
  }
  return os.str();
}

GradedPoly reduce(const GradedPoly& p, const std::vector<GradedPoly>& divisors) {
  GradedPoly rem(p.vars());
  GradedPoly work = p;
  while (!work.is_zero()) {
    const Monomial& lm = work.leading_monomial();
    const GradedPoly* hit = nullptr;
    for (const auto& d : divisors) {
      if (!d.is_zero() && mono_divides(d.leading_monomial(), lm)) {
        hit = &d;
        break;
      }
    }
    if (hit) {
      Rational f = work.leading_coeff() / hit->leading_coeff();
      Monomial q = mono_div(lm, hit->leading_monomial());
      work = work - hit->scaled(f) * GradedPoly::term(p.vars(), 1, q);
    } else {
      GradedPoly lt = GradedPoly::term(p.vars(), work.leading_coeff(), lm);
      rem = rem + lt;
      work = work - lt;
    }
  }
  return rem;
}

namespace {

GradedPoly s_polynomial(const GradedPoly& a, const GradedPoly& b) {
  Monomial l = mono_lcm(a.leading_monomial(), b.leading_monomial());
  GradedPoly ta = GradedPoly::term(a.vars(), 1 / a.leading_coeff(),
                                   mono_div(l, a.leading_monomial()));
  GradedPoly tb = GradedPoly::term(b.vars(), 1 / b.leading_coeff(),
                                   mono_div(l, b.leading_monomial()));
  return a * ta - b * tb;
}

bool coprime_leading(const GradedPoly& a, const GradedPoly& b) {
  const Monomial& ma = a.leading_monomial();
  const Monomial& mb = b.leading_monomial();
  for (std::size_t i = 0; i < ma.size(); ++i)
    if (ma[i] && mb[i]) return false;
  return true;
}

std::vector<GradedPoly> buchberger(const std::vector<GradedPoly>& relations) {
  VarTablePtr vars;
  std::vector<GradedPoly> basis;
  for (const auto& r : relations) {
    if (!vars) vars = r.vars();
    if (!vars->same_as(*r.vars()))
      throw Error("bad_vars", "relations live on different variable tables");
    if (!r.is_zero()) basis.push_back(r.monic());
  }
  if (basis.empty()) return {};

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int deg;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return mono_cmp(*vars, a.lcm, b.lcm) < 0;
  };
  std::vector<Pair> queue;
  auto push_pairs = [&](std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i) {
      Monomial l = mono_lcm(basis[i].leading_monomial(), basis[upto].leading_monomial());
      queue.push_back({i, upto, l, mono_weighted_degree(*vars, l)});
    }
    std::sort(queue.begin(), queue.end(), pair_less);
  };
  for (std::size_t k = 1; k < basis.size(); ++k) push_pairs(k);

  while (!queue.empty()) {
    Pair pr = queue.front();
    queue.erase(queue.begin());
    const GradedPoly& a = basis[pr.i];
    const GradedPoly& b = basis[pr.j];
    if (coprime_leading(a, b)) continue;  // product criterion
    GradedPoly s = reduce(s_polynomial(a, b), basis);
    if (s.is_zero()) continue;
    basis.push_back(s.monic());
    push_pairs(basis.size() - 1);
  }

  // minimalize: drop elements whose leading term is divisible by another's
  std::vector<GradedPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (!mono_divides(basis[j].leading_monomial(), basis[i].leading_monomial())) continue;
      // tie-break equal leading monomials by keeping the earliest
      if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
      redundant = true;
      break;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // inter-reduce tails to get the unique reduced basis
  std::vector<GradedPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GradedPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    GradedPoly r = reduce(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const GradedPoly& a, const GradedPoly& b) {
    return mono_cmp(*vars, a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return reduced;
}

}  // namespace

std::vector<GradedPoly> groebner_basis(const std::vector<GradedPoly>& relations) {
  for (const auto& r : relations)
    if (!r.is_homogeneous())
      throw Error("nonhomogeneous_relation",
                  "relation '" + r.str() + "' is not homogeneous in the assigned grading");
  return buchberger(relations);
}

std::vector<GradedPoly> groebner_basis_affine(const std::vector<GradedPoly>& relations) {
  return buchberger(relations);
}

QuotientRing::QuotientRing(VarTablePtr vars, std::vector<GradedPoly> relations,
                           bool require_homogeneous)
    : vars_(std::move(vars)), homogeneous_(require_homogeneous), relations_(std::move(relations)) {
  for (const auto& r : relations_) {
    if (!r.vars()->same_as(*vars_))
      throw Error("bad_vars", "relation uses a different variable table");
  }
  groebner_ = homogeneous_ ? groebner_basis(relations_) : groebner_basis_affine(relations_);
}

GradedPoly QuotientRing::normal_form(const GradedPoly& p) const {
  if (!p.vars()->same_as(*vars_))
    throw Error("unknown_variable", "polynomial does not live on the ring's variables");
  return reduce(p, groebner_);
}

void QuotientRing::ensure_basis_enumerated() const {
  if (enumerated_) return;
  enumerated_ = true;
  const std::size_t n = vars_->size();
  // finite dimension over the coefficient field iff every variable has a
  // pure power among the leading terms
  std::vector<long> bound(n, -1);
  for (const auto& g : groebner_) {
    const Monomial& lm = g.leading_monomial();
    int support = -1;
    bool pure = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (lm[i] == 0) continue;
      if (support >= 0) { pure = false; break; }
      support = static_cast<int>(i);
    }
    if (pure && support >= 0) {
      long e = lm[support];
      if (bound[support] < 0 || e < bound[support]) bound[support] = e;
    }
    if (pure && support < 0) {  // a nonzero constant: the ring is zero
      finite_ = true;
      monomials_.clear();
      return;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] < 0) { finite_ = false; return; }
  finite_ = true;

  std::vector<Monomial> lts;
  for (const auto& g : groebner_) lts.push_back(g.leading_monomial());
  Monomial cur(n, 0);
  // walk the bounded exponent box, keeping monomials outside <LT>
  while (true) {
    bool standard = true;
    for (const auto& lt : lts)
      if (mono_divides(lt, cur)) { standard = false; break; }
    if (standard) monomials_.push_back(cur);
    std::size_t k = 0;
    while (k < n) {
      if (static_cast<long>(++cur[k]) < bound[k]) break;
      cur[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  std::sort(monomials_.begin(), monomials_.end(), [&](const Monomial& a, const Monomial& b) {
    return mono_cmp(*vars_, a, b) < 0;
  });
}

bool QuotientRing::finite_dimensional() const {
  ensure_basis_enumerated();
  return finite_;
}

const std::vector<Monomial>& QuotientRing::monomial_basis() const {
  ensure_basis_enumerated();
  if (!finite_)
    throw Error("not_finite_dimensional", "quotient ring is not finite dimensional");
  return monomials_;
}

std::vector<long long> QuotientRing::hilbert_series() const {
  if (!homogeneous_)
    throw Error("not_graded", "Hilbert series requires a homogeneous presentation");
  const auto& basis = monomial_basis();
  std::vector<long long> betti;
  for (const auto& m : basis) {
    int d = mono_weighted_degree(*vars_, m);
    std::size_t slot = static_cast<std::size_t>(d / 2);
    if (betti.size() <= slot) betti.resize(slot + 1, 0);
    ++betti[slot];
  }
  if (betti.empty()) betti.push_back(0);
  return betti;
}

int QuotientRing::top_degree() const {
  const auto& basis = monomial_basis();
  if (basis.empty()) throw Error("zero_ring", "zero ring has no top degree");
  return mono_weighted_degree(*vars_, basis.back());
}

const Monomial& QuotientRing::top_monomial() const {
  const auto& basis = monomial_basis();
  if (basis.empty()) throw Error("zero_ring", "zero ring has no top class");
  int td = top_degree();
  std::size_t count = 0;
  const Monomial* top = nullptr;
  for (const auto& m : basis)
    if (mono_weighted_degree(*vars_, m) == td) { ++count; top = &m; }
  if (count != 1)
    throw Error("top_not_one_dimensional",
                "top degree is not one-dimensional; presentation violates duality");
  return *top;
}

Rational QuotientRing::top_evaluate(const GradedPoly& p) const {
  const Monomial& top = top_monomial();
  if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != top_degree()))
    throw Error("degree_mismatch", "top evaluation needs a homogeneous class of top degree");
  GradedPoly nf = normal_form(p);
  for (const auto& [m, c] : nf.terms())
    if (m == top) return c;
  return 0;
}

std::vector<long long> hilbert_series(const QuotientRing& ring) { return ring.hilbert_series(); }
GradedPoly normal_form(const GradedPoly& p, const QuotientRing& ring) { return ring.normal_form(p); }
Rational top_evaluate(const GradedPoly& p, const QuotientRing& ring) { return ring.top_evaluate(p); }

}  // namespace orbits
