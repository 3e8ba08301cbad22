#pragma once

// Special maximal Cohen-Macaulay modules of 1/r(1,a): the trivial module and the modules
// (Z_i, Z_{i+1}^k), grouped into isomorphism classes via
// (Z_i, Z_{i+1}^{b_{i+1}-1}) ~ (Z_{i+1}, Z_{i+2}).

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "rca/errors.hpp"
#include "rca/invariant_ring.hpp"
#include "rca/monomial.hpp"

namespace rca {

/// A module given by Z-monomial generators, together with its normalized monomial form.
struct RawModule {
  std::vector<Exponents> z_generators;  // over Z_0..Z_{l+1}
  MonomialModule normalized;
  std::string label;                    // e.g. "(Z0,Z1^2)"
  /// Componentwise minimum subtracted during normalization.
  LaurentMonomial shift() const { return normalized.shift(); }
};

struct SpecialModuleClass {
  int class_id = 0;
  std::vector<RawModule> representatives;  // first one is the canonical representative
  MonomialModule normalized;

  const RawModule& canonical() const { return representatives.front(); }
};

namespace detail {

inline LaurentMonomial realize(const Exponents& e, const std::vector<LaurentMonomial>& z) {
  LaurentMonomial m;
  for (std::size_t i = 0; i < e.size(); ++i) m += z[i] * e[i];
  return m;
}

inline RawModule make_raw(const InvariantSemigroup& s, const PolyRing& zring, const std::vector<LaurentMonomial>& z,
                          std::vector<Exponents> gens) {
  RawModule m;
  std::vector<LaurentMonomial> mons;
  m.label = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) m.label += ",";
    m.label += zring.format_monomial(gens[i]);
    mons.push_back(realize(gens[i], z));
  }
  m.label += ")";
  m.z_generators = std::move(gens);
  m.normalized = MonomialModule::normalized(s, std::move(mons));
  return m;
}

}  // namespace detail

/// Trivial module followed by (Z_i, Z_{i+1}^k), 0 <= i <= l-1, 1 <= k <= b_{i+1}-1, and (Z_l, Z_{l+1}).
inline std::vector<RawModule> raw_special_modules(long r, long a) {
  const auto b = hj_dual(r, a).entries;
  const std::size_t l = b.size();
  const InvariantSemigroup s(r, a);
  const auto z = ring_generators(r, a);
  const auto P = ring_presentation(r, a);
  const std::size_t n = z.size();

  std::vector<RawModule> out;
  out.push_back(detail::make_raw(s, P.ring, z, {Exponents(n, 0)}));
  auto pair = [&](std::size_t i, int k) {
    Exponents u(n, 0), v(n, 0);
    u[i] = 1;
    v[i + 1] = k;
    return detail::make_raw(s, P.ring, z, {u, v});
  };
  for (std::size_t i = 0; i + 1 <= l; ++i) {
    for (long k = 1; k <= b[i] - 1; ++k) out.push_back(pair(i, static_cast<int>(k)));
  }
  out.push_back(pair(l, 1));
  return out;
}

/// An identification edge between two raw modules (indices into raw_special_modules).
struct Identification {
  std::size_t from;
  std::size_t to;
};

inline std::vector<Identification> special_identifications(long r, long a, const std::vector<RawModule>& raw) {
  const auto b = hj_dual(r, a).entries;
  const std::size_t l = b.size();
  const std::size_t n = l + 2;
  auto find = [&](const std::vector<Exponents>& gens) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i].z_generators == gens) return i;
    }
    throw VerificationFailure("identification refers to a module outside the special list");
  };
  std::vector<Identification> edges;
  for (std::size_t i = 0; i < l; ++i) {
    Exponents u(n, 0), v(n, 0), p(n, 0), q(n, 0);
    u[i] = 1;
    v[i + 1] = static_cast<int>(b[i] - 1);
    p[i + 1] = 1;
    q[i + 2] = 1;
    edges.push_back({find({u, v}), find({p, q})});
  }
  return edges;
}

/// Isomorphism classes in order of first appearance; aborts if an identification joins
/// modules with different normalized forms.
inline std::vector<SpecialModuleClass> module_classes(long r, long a) {
  const auto raw = raw_special_modules(r, a);
  const auto edges = special_identifications(r, a, raw);

  std::vector<std::size_t> parent(raw.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    if (!(raw[e.from].normalized == raw[e.to].normalized)) {
      throw VerificationFailure("identified modules " + raw[e.from].label + " and " + raw[e.to].label +
                                " normalize differently");
    }
    auto x = root(e.from), y = root(e.to);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }

  std::map<std::size_t, std::size_t> class_of_root;
  std::vector<SpecialModuleClass> classes;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto rt = root(i);
    auto [it, inserted] = class_of_root.emplace(rt, classes.size());
    if (inserted) {
      SpecialModuleClass c;
      c.class_id = static_cast<int>(classes.size());
      c.normalized = raw[i].normalized;
      classes.push_back(std::move(c));
    }
    auto& cls = classes[it->second];
    if (!(raw[i].normalized == cls.normalized)) {
      throw VerificationFailure("class of " + raw[i].label + " has more than one normalized module");
    }
    cls.representatives.push_back(raw[i]);
  }
  return classes;
}

}  // namespace rca
