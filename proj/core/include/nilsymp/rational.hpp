#pragma once

#include <gmpxx.h>

#include <string>

namespace nilsymp {

// All engine arithmetic is exact. Rational is GMP-backed; there is no
// floating point anywhere in the core library.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p", "-p" or "p/q".
inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace nilsymp
