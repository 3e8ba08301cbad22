#pragma once

// C[x,y]^G for G = 1/r(1,a): generators Z_0..Z_{l+1} with their monomials and the
// quasi-determinantal relations Z_i Z_{j+1} = Z_{i+1} (prod_{i<b<=j} Z_b^{b_b-2}) Z_j.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rca/monomial.hpp"
#include "rca/numtheory.hpp"
#include "rca/polynomial.hpp"

namespace rca {

/// Monomials (c_e, d_e) of the generators Z_0, ..., Z_{l+1}, from the recursion
/// (c,d)_{e+1} = b_e (c,d)_e - (c,d)_{e-1} started at (r,0), (r-a,1).
inline std::vector<LaurentMonomial> ring_generators(long r, long a) {
  const auto b = hj_dual(r, a).entries;
  std::vector<LaurentMonomial> z{{r, 0}, {r - a, 1}};
  for (std::size_t e = 1; e <= b.size(); ++e) z.push_back(z[e] * b[e - 1] - z[e - 1]);
  return z;
}

/// Presentation of a commutative ring by generators and relations, optionally with the
/// monomial each generator stands for and a grading.
struct RingPresentation {
  PolyRing ring;
  std::vector<std::optional<LaurentMonomial>> realizations;  // empty when absent
  std::vector<Polynomial> relations;
  std::vector<long> gradings;  // empty when ungraded

  bool has_realizations() const { return !realizations.empty(); }

  /// The realization as a polynomial map into Q[x,y] (x = variable 0, y = variable 1).
  std::vector<std::optional<Polynomial>> realization_map() const {
    std::vector<std::optional<Polynomial>> m;
    for (const auto& z : realizations) {
      if (!z || !z->nonnegative()) {
        m.emplace_back();
        continue;
      }
      m.emplace_back(Polynomial::monomial({static_cast<int>(z->x), static_cast<int>(z->y)}));
    }
    return m;
  }

  /// Image of p in Q[x,y] under the realization.
  Polynomial realize(const Polynomial& p) const { return substitute(p, realization_map(), 2); }
};

inline std::string z_name(std::size_t e) { return "Z" + std::to_string(e); }

inline RingPresentation ring_presentation(long r, long a) {
  const auto b = hj_dual(r, a).entries;
  const std::size_t l = b.size();
  const auto z = ring_generators(r, a);

  RingPresentation P;
  for (std::size_t e = 0; e < z.size(); ++e) {
    P.ring.add_variable(z_name(e));
    P.realizations.emplace_back(z[e]);
    P.gradings.push_back(z[e].degree());
  }
  const std::size_t n = P.ring.nvars();
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j <= l; ++j) {
      Exponents lhs(n, 0), rhs(n, 0);
      lhs[i] += 1;
      lhs[j + 1] += 1;
      rhs[i + 1] += 1;
      for (std::size_t beta = i + 1; beta <= j; ++beta) rhs[beta] += static_cast<int>(b[beta - 1] - 2);
      rhs[j] += 1;
      P.relations.push_back(Polynomial::monomial(lhs) - Polynomial::monomial(rhs));
    }
  }
  return P;
}

inline nlohmann::json to_json(const RingPresentation& P) {
  nlohmann::json vars = nlohmann::json::array();
  for (std::size_t i = 0; i < P.ring.nvars(); ++i) {
    nlohmann::json v{{"name", display_name(P.ring.name(i))}};
    if (P.has_realizations() && P.realizations[i]) {
      v["xexp"] = P.realizations[i]->x;
      v["yexp"] = P.realizations[i]->y;
    }
    if (!P.gradings.empty()) v["degree"] = P.gradings[i];
    vars.push_back(std::move(v));
  }
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& rel : P.relations) rels.push_back(P.ring.format(rel));
  return {{"variables", vars}, {"relations", rels}};
}

inline std::string to_text(const RingPresentation& P) {
  std::string s = "variables:";
  for (std::size_t i = 0; i < P.ring.nvars(); ++i) {
    s += "\n  " + display_name(P.ring.name(i));
    if (P.has_realizations() && P.realizations[i]) s += " = " + to_string(*P.realizations[i]);
    if (!P.gradings.empty()) s += "  (degree " + std::to_string(P.gradings[i]) + ")";
  }
  s += "\nrelations:";
  for (const auto& rel : P.relations) s += "\n  " + P.ring.format(rel);
  return s + "\n";
}

}  // namespace rca
