#pragma once

// Hirzebruch-Jung continued fractions r/a = a1 - 1/(a2 - 1/(... - 1/ak)).

#include <numeric>
#include <string>
#include <vector>

#include "rca/errors.hpp"
#include "rca/rational.hpp"

namespace rca {

/// Hirzebruch-Jung expansion of numerator/denominator; every entry is >= 2.
struct HJFraction {
  long numerator = 0;
  long denominator = 0;
  std::vector<long> entries;

  std::size_t size() const { return entries.size(); }
  long operator[](std::size_t i) const { return entries[i]; }
  bool operator==(const HJFraction&) const = default;
};

/// Throws DomainError unless gcd(r,a) = 1 and 0 < a < r (which also excludes r = 1).
inline void check_group_parameters(long r, long a) {
  if (r < 2) throw DomainError("r must be at least 2 (got " + std::to_string(r) + ")");
  if (a <= 0 || a >= r) {
    throw DomainError("a must satisfy 0 < a < r (got r=" + std::to_string(r) +
                      ", a=" + std::to_string(a) + ")");
  }
  if (std::gcd(r, a) != 1) {
    throw DomainError("r and a must be coprime (got r=" + std::to_string(r) +
                      ", a=" + std::to_string(a) + ")");
  }
}

/// Exact value of a1 - 1/(a2 - 1/(... - 1/ak)).
inline Rational evaluate(const std::vector<long>& entries) {
  if (entries.empty()) throw DomainError("empty continued fraction");
  Rational value(entries.back());
  for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
    value = Rational(*it) - 1 / value;
  }
  value.canonicalize();
  return value;
}

/// Expansion of r/a by repeated ceiling division.
inline HJFraction hj_expand(long r, long a) {
  check_group_parameters(r, a);
  HJFraction f{r, a, {}};
  long num = r;
  long den = a;
  while (den != 0) {
    const long q = (num + den - 1) / den;
    f.entries.push_back(q);
    const long rest = q * den - num;  // num/den = q - rest/den
    num = den;
    den = rest;
  }
  return f;
}

/// Expansion of r/(r-a).
inline HJFraction hj_dual(long r, long a) {
  check_group_parameters(r, a);
  return hj_expand(r, r - a);
}

/// Sum of (a_i - 1) over the expansion of r/a.
inline long versal_dimension(long r, long a) {
  long total = 0;
  for (long e : hj_expand(r, a).entries) total += e - 1;
  return total;
}

inline std::string format_entries(const std::vector<long>& entries) {
  std::string s = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries[i]);
  }
  return s + "]";
}

}  // namespace rca
