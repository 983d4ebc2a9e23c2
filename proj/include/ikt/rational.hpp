#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ikt/errors.hpp"

namespace ikt {

using Rational = mpq_class;

// Accepts "p", "p/q" and "-p/q"; the result is canonicalized.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0) throw InputError("malformed rational literal '" + text + "'");
  if (text.find('/') != std::string::npos) {
    const auto slash = text.find('/');
    const std::string den = text.substr(slash + 1);
    if (den.empty() || den.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("malformed rational literal '" + text + "'");
    }
    mpz_class d(den);
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
  }
  q.canonicalize();
  return q;
}

inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Rational half(const Rational& q) { return q / 2; }

}  // namespace ikt
