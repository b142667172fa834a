#include "orbits/upoly.hpp"

#include <sstream>

namespace orbits {

UPoly UPoly::constant(const Rational& v) {
  if (v == 0) return UPoly();
  return UPoly({v});
}

UPoly UPoly::monomial(const Rational& v, std::size_t degree) {
  if (v == 0) return UPoly();
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = v;
  return UPoly(std::move(c));
}

const Rational& UPoly::coeff(std::size_t i) const {
  static const Rational zero(0);
  return i < c_.size() ? c_[i] : zero;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x = -x;
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(r));
}

Rational UPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::div_rem(const UPoly& d) const {
  if (d.is_zero()) throw Error("division_by_zero", "univariate division by zero polynomial");
  std::vector<Rational> rem = c_;
  int dd = d.degree();
  if (degree() < dd) return {UPoly(), *this};
  std::vector<Rational> quot(c_.size() - d.c_.size() + 1, Rational(0));
  const Rational& lead = d.c_.back();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / lead;
    quot[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::div_exact(const UPoly& d) const {
  auto [q, r] = div_rem(d);
  if (!r.is_zero()) throw Error("inexact_division", "univariate division left a remainder");
  return q;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rational a = c_[i];
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (i == 0 || a != 1) os << to_string(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.div_rem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // monic normalization
  Rational lead = a.coeffs().back();
  std::vector<Rational> c = a.coeffs();
  for (auto& x : c) x /= lead;
  return UPoly(std::move(c));
}

namespace {

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero()) {
    const UPoly& a = chain[chain.size() - 2];
    const UPoly& b = chain.back();
    UPoly r = a.div_rem(b).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

int sign_changes_at(const std::vector<UPoly>& chain, const Rational& x) {
  int changes = 0;
  int prev = 0;
  for (const auto& q : chain) {
    int s = sign(q.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int sturm_roots_in_open_interval(const UPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw Error("zero_polynomial", "root isolation of the zero polynomial");
  UPoly g = upoly_gcd(p, p.derivative());
  UPoly sf = g.is_zero() || g.degree() == 0 ? p : p.div_exact(g);
  if (sf.degree() <= 0) return 0;
  auto chain = sturm_chain(sf);
  // V(a) - V(b) counts roots in (a, b]; drop b when it is itself a root.
  int n = sign_changes_at(chain, a) - sign_changes_at(chain, b);
  if (sf.eval(b) == 0) --n;
  return n;
}

bool positive_on_unit_interval(const UPoly& p) {
  if (p.is_zero()) return false;
  if (sign(p.eval(Rational(0))) <= 0) return false;
  if (sign(p.eval(Rational(1))) <= 0) return false;
  if (p.degree() <= 1) return true;  // affine and positive at both ends
  return sturm_roots_in_open_interval(p, Rational(0), Rational(1)) == 0;
}

}  // namespace orbits
