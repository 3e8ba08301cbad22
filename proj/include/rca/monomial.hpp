#pragma once

// Monomials in x,y, the invariant semigroup of 1/r(1,a) and rank-one monomial modules over it.

#include <algorithm>
#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "rca/errors.hpp"
#include "rca/numtheory.hpp"

namespace rca {

/// x^p y^q with p, q possibly negative.
struct LaurentMonomial {
  long x = 0;
  long y = 0;

  constexpr long degree() const { return x + y; }
  constexpr bool is_identity() const { return x == 0 && y == 0; }
  constexpr bool nonnegative() const { return x >= 0 && y >= 0; }
  /// Componentwise <=, i.e. this divides other inside C[x,y].
  constexpr bool divides(const LaurentMonomial& other) const { return x <= other.x && y <= other.y; }

  constexpr LaurentMonomial operator+(const LaurentMonomial& o) const { return {x + o.x, y + o.y}; }
  constexpr LaurentMonomial operator-(const LaurentMonomial& o) const { return {x - o.x, y - o.y}; }
  constexpr LaurentMonomial operator*(long k) const { return {x * k, y * k}; }
  constexpr LaurentMonomial& operator+=(const LaurentMonomial& o) {
    x += o.x;
    y += o.y;
    return *this;
  }

  constexpr auto operator<=>(const LaurentMonomial&) const = default;
};

/// Degree first, then decreasing x-exponent.
struct ByDegree {
  constexpr bool operator()(const LaurentMonomial& a, const LaurentMonomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.x > b.x;
  }
};

inline std::string to_string(const LaurentMonomial& m) {
  if (m.is_identity()) return "1";
  auto factor = [](const char* v, long e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return v;
    return std::string(v) + "^" + std::to_string(e);
  };
  std::string sx = factor("x", m.x);
  std::string sy = factor("y", m.y);
  if (!sx.empty() && !sy.empty()) return sx + "*" + sy;
  return sx + sy;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentMonomial& m) { return os << to_string(m); }

/// Monomials x^c y^d fixed by diag(e, e^a), e a primitive r-th root of unity.
struct InvariantSemigroup {
  long r = 0;
  long a = 0;

  InvariantSemigroup() = default;
  InvariantSemigroup(long r_, long a_) : r(r_), a(a_) { check_group_parameters(r_, a_); }

  /// c + a*d mod r, in [0, r).
  long weight(const LaurentMonomial& m) const {
    long w = (m.x + a * m.y) % r;
    return w < 0 ? w + r : w;
  }

  bool operator==(const InvariantSemigroup&) const = default;
};

inline bool semigroup_member(const InvariantSemigroup& s, const LaurentMonomial& m) {
  return m.nonnegative() && s.weight(m) == 0;
}

/// Minimal generators of the semigroup found by brute force in the box c, d <= r, sorted by
/// decreasing c.
inline std::vector<LaurentMonomial> minimal_semigroup_generators(const InvariantSemigroup& s) {
  std::vector<LaurentMonomial> members;
  for (long c = 0; c <= s.r; ++c) {
    for (long d = 0; d <= s.r; ++d) {
      LaurentMonomial m{c, d};
      if (!m.is_identity() && semigroup_member(s, m)) members.push_back(m);
    }
  }
  std::vector<LaurentMonomial> result;
  for (const auto& m : members) {
    bool decomposable = false;
    for (const auto& u : members) {
      const auto v = m - u;
      if (!v.is_identity() && u != m && semigroup_member(s, v)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) result.push_back(m);
  }
  std::sort(result.begin(), result.end(), [](const auto& p, const auto& q) { return p.x > q.x; });
  return result;
}

/// Finitely generated module over the invariant semigroup, stored by minimal generators.
class MonomialModule {
 public:
  MonomialModule() = default;

  /// Builds the module spanned by `gens`; shifts so the componentwise minimum is (0,0) and
  /// drops redundant generators. All generators must share one weight class.
  static MonomialModule normalized(const InvariantSemigroup& s, std::vector<LaurentMonomial> gens) {
    if (gens.empty()) throw DomainError("a monomial module needs at least one generator");
    LaurentMonomial low = gens.front();
    for (const auto& g : gens) {
      low.x = std::min(low.x, g.x);
      low.y = std::min(low.y, g.y);
    }
    for (auto& g : gens) g = g - low;
    MonomialModule m;
    m.parent_ = s;
    m.shift_ = low;
    m.gens_ = minimalize(s, std::move(gens));
    m.check_weights();
    return m;
  }

  const InvariantSemigroup& parent() const { return parent_; }
  const std::vector<LaurentMonomial>& generators() const { return gens_; }
  /// Translation subtracted during normalization.
  const LaurentMonomial& shift() const { return shift_; }
  long weight() const { return parent_.weight(gens_.front()); }

  bool contains(const LaurentMonomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const auto& g) { return semigroup_member(parent_, m - g); });
  }

  /// Multiset of total degrees of the generators.
  std::vector<long> grading() const {
    std::vector<long> degs;
    for (const auto& g : gens_) degs.push_back(g.degree());
    std::sort(degs.begin(), degs.end());
    return degs;
  }

  bool is_normalized() const {
    long mx = gens_.front().x, my = gens_.front().y;
    for (const auto& g : gens_) {
      mx = std::min(mx, g.x);
      my = std::min(my, g.y);
    }
    return mx == 0 && my == 0;
  }

  bool is_minimal() const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      for (std::size_t j = 0; j < gens_.size(); ++j) {
        if (i != j && semigroup_member(parent_, gens_[i] - gens_[j])) return false;
      }
    }
    return true;
  }

  bool has_constant_weight() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [&](const auto& g) { return parent_.weight(g) == weight(); });
  }

  /// True when the module is every monomial of its weight class in N^2. Checked on the
  /// minimal elements of the weight class, which lie in [0, r-1]^2.
  bool is_saturated() const {
    for (long c = 0; c < parent_.r; ++c) {
      for (long d = 0; d < parent_.r; ++d) {
        LaurentMonomial m{c, d};
        if (parent_.weight(m) == weight() && !contains(m)) return false;
      }
    }
    return true;
  }

  /// Same generating set (generators are kept sorted).
  bool operator==(const MonomialModule& o) const { return parent_ == o.parent_ && gens_ == o.gens_; }

 private:
  static std::vector<LaurentMonomial> minimalize(const InvariantSemigroup& s,
                                                 std::vector<LaurentMonomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<LaurentMonomial> kept;
    for (const auto& g : gens) {
      bool redundant = std::any_of(gens.begin(), gens.end(), [&](const auto& h) {
        return h != g && semigroup_member(s, g - h);
      });
      if (!redundant) kept.push_back(g);
    }
    // Decreasing x-exponent reads like the usual (x^7, y) notation.
    std::sort(kept.begin(), kept.end(), [](const auto& p, const auto& q) { return p.x > q.x; });
    return kept;
  }

  void check_weights() const {
    if (!has_constant_weight()) throw DomainError("module generators lie in different weight classes");
  }

  InvariantSemigroup parent_;
  LaurentMonomial shift_;
  std::vector<LaurentMonomial> gens_;
};

inline bool module_member(const MonomialModule& M, const LaurentMonomial& m) { return M.contains(m); }

inline std::string to_string(const MonomialModule& M) {
  std::string s = "(";
  for (std::size_t i = 0; i < M.generators().size(); ++i) {
    if (i) s += ",";
    s += to_string(M.generators()[i]);
  }
  return s + ")";
}

}  // namespace rca
