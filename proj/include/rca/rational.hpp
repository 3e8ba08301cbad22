#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "rca/errors.hpp"

namespace rca {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) {
    throw DomainError("not a rational number: '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace rca
