#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace orbits {

// Exact arbitrary-precision rationals back every computation in this
// library; no floating point is used anywhere in the math paths.
using Rational = mpq_class;

struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(msg), code(std::move(c)) {}
};

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
inline Rational parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw Error("bad_rational", "cannot parse rational: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

inline Rational pow_rational(const Rational& base, unsigned long e) {
  Rational r = 1;
  Rational b = base;
  unsigned long n = e;
  while (n) {
    if (n & 1UL) r *= b;
    b *= b;
    n >>= 1UL;
  }
  return r;
}

}  // namespace orbits
