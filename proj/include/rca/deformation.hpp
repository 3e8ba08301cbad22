#pragma once

// Deformations over the Artin component: the ring generated by Z_i^(j), its Weyl-group
// symmetries, the lifted special modules and the lifted quiver with certified labels.
//
// m_0 = m_{l+1} = 1 and m_i = b_i otherwise. Column e of the deformed 2 x (l+1) matrix has top
// entry Z_e^(m_e) and bottom entry Z_{e+1}^(1); the interior variables Z_b^(m), 1 < m < b_b,
// replace the powers Z_b^{b_b-2}.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rca/errors.hpp"
#include "rca/groebner.hpp"
#include "rca/invariant_ring.hpp"
#include "rca/lattice.hpp"
#include "rca/quiver.hpp"
#include "rca/specials.hpp"

namespace rca {

/// A permutation of ring variables: variable k maps to image[k].
struct VariablePermutation {
  std::vector<std::size_t> image;
  std::string description;  // "(Z1^(1) Z1^(2))"
};

inline Polynomial apply(const VariablePermutation& w, const Polynomial& p) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Exponents e(t.exps.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) e[w.image[k]] += t.exps[k];
    terms.push_back({e, t.coeff});
  }
  return Polynomial::from_terms(p.nvars(), std::move(terms));
}

struct DeformedRingPresentation {
  long r = 0;
  long a = 0;
  PolyRing ring;
  std::vector<std::vector<std::size_t>> variables;  // variables[i][j-1] = index of Z_i^(j)
  std::vector<Polynomial> relations;
  std::vector<VariablePermutation> weyl;

  std::size_t var(std::size_t i, std::size_t j) const { return variables.at(i).at(j - 1); }
  std::size_t multiplicity(std::size_t i) const { return variables.at(i).size(); }
  /// Undeformed index i of each deformed variable.
  std::vector<std::size_t> base_index() const {
    std::vector<std::size_t> out(ring.nvars());
    for (std::size_t i = 0; i < variables.size(); ++i) {
      for (auto v : variables[i]) out[v] = i;
    }
    return out;
  }
  /// Z_i^(j) -> Z_i as an exponent map.
  Exponents specialize(const Exponents& e) const {
    Exponents out(variables.size(), 0);
    const auto base = base_index();
    for (std::size_t k = 0; k < e.size(); ++k) out[base[k]] += e[k];
    return out;
  }
};

/// Adjacent transpositions generating S on {Z_1^(1..b_1-1)}, on {Z_i^(2..b_i-1)} for 1 < i < l and
/// on {Z_l^(2..b_l)}. For l = 1 the end factors coincide and only the first is emitted.
inline std::vector<VariablePermutation> weyl_generators(const DeformedRingPresentation& D) {
  const std::size_t l = D.variables.size() - 2;
  std::vector<std::vector<std::size_t>> factors;
  auto range = [&](std::size_t i, std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> f;
    for (std::size_t j = lo; j <= hi; ++j) f.push_back(D.var(i, j));
    return f;
  };
  const std::size_t b1 = D.multiplicity(1);
  factors.push_back(range(1, 1, b1 - 1));
  for (std::size_t i = 2; i < l; ++i) factors.push_back(range(i, 2, D.multiplicity(i) - 1));
  if (l >= 2) factors.push_back(range(l, 2, D.multiplicity(l)));

  std::vector<VariablePermutation> out;
  for (const auto& f : factors) {
    for (std::size_t k = 0; k + 1 < f.size(); ++k) {
      VariablePermutation w;
      w.image.resize(D.ring.nvars());
      std::iota(w.image.begin(), w.image.end(), 0);
      std::swap(w.image[f[k]], w.image[f[k + 1]]);
      w.description =
          "(" + display_name(D.ring.name(f[k])) + " " + display_name(D.ring.name(f[k + 1])) + ")";
      out.push_back(std::move(w));
    }
  }
  return out;
}

inline DeformedRingPresentation deformed_ring(long r, long a) {
  const auto b = hj_dual(r, a).entries;
  const std::size_t l = b.size();
  DeformedRingPresentation D;
  D.r = r;
  D.a = a;
  std::vector<std::size_t> m(l + 2, 1);
  for (std::size_t i = 1; i <= l; ++i) m[i] = static_cast<std::size_t>(b[i - 1]);
  for (std::size_t i = 0; i < l + 2; ++i) {
    D.variables.emplace_back();
    for (std::size_t j = 1; j <= m[i]; ++j) {
      D.variables.back().push_back(D.ring.add_variable(internal_name(z_name(i), static_cast<int>(j))));
    }
  }
  const std::size_t n = D.ring.nvars();
  auto top = [&](std::size_t e) { return D.var(e, m[e]); };
  auto bottom = [&](std::size_t e) { return D.var(e + 1, 1); };
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j <= l; ++j) {
      Exponents lhs(n, 0), rhs(n, 0);
      lhs[top(i)] += 1;
      lhs[bottom(j)] += 1;
      rhs[bottom(i)] += 1;
      for (std::size_t beta = i + 1; beta <= j; ++beta) {
        for (std::size_t mm = 2; mm < m[beta]; ++mm) rhs[D.var(beta, mm)] += 1;
      }
      rhs[top(j)] += 1;
      D.relations.push_back(Polynomial::monomial(lhs) - Polynomial::monomial(rhs));
    }
  }
  D.weyl = weyl_generators(D);
  return D;
}

/// Applies Z_i^(j) -> Z_i; the image must be the undeformed relation set up to sign.
inline RingPresentation specialize_central_fiber(const DeformedRingPresentation& D) {
  RingPresentation P = ring_presentation(D.r, D.a);
  const std::size_t n = P.ring.nvars();
  std::vector<std::optional<Polynomial>> map;
  for (auto base : D.base_index()) map.emplace_back(Polynomial::variable(n, base));

  std::vector<Polynomial> image;
  for (const auto& rel : D.relations) {
    const auto s = substitute(rel, map, n);
    const bool known = std::any_of(P.relations.begin(), P.relations.end(),
                                   [&](const auto& u) { return s == u || s == -u; });
    if (!known) {
      throw VerificationFailure("deformed relation " + D.ring.format(rel) + " specializes to " + P.ring.format(s) +
                                ", which is not an undeformed relation");
    }
    if (std::none_of(image.begin(), image.end(), [&](const auto& u) { return u == s || u == -s; })) {
      image.push_back(s);
    }
  }
  for (const auto& u : P.relations) {
    const bool hit = std::any_of(image.begin(), image.end(), [&](const auto& s) { return s == u || s == -u; });
    if (!hit) throw VerificationFailure("undeformed relation " + P.ring.format(u) + " is not in the central fiber image");
  }
  return P;
}

inline std::string to_text(const DeformedRingPresentation& D) {
  std::string s = "variables:";
  for (std::size_t i = 0; i < D.ring.nvars(); ++i) s += "\n  " + display_name(D.ring.name(i));
  s += "\nrelations:";
  for (const auto& rel : D.relations) s += "\n  " + D.ring.format(rel);
  s += "\nweyl generators:";
  if (D.weyl.empty()) s += " none";
  for (const auto& w : D.weyl) s += "\n  " + w.description;
  return s + "\n";
}

inline nlohmann::json to_json(const DeformedRingPresentation& D) {
  nlohmann::json vars = nlohmann::json::array();
  const auto base = D.base_index();
  for (std::size_t i = 0; i < D.ring.nvars(); ++i) {
    vars.push_back({{"name", display_name(D.ring.name(i))}, {"specializes_to", z_name(base[i])}});
  }
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& rel : D.relations) rels.push_back(D.ring.format(rel));
  nlohmann::json weyl = nlohmann::json::array();
  for (const auto& w : D.weyl) weyl.push_back(w.description);
  return {{"deformed", true}, {"variables", vars}, {"relations", rels}, {"weyl", weyl}};
}

// ---------------------------------------------------------------------------------------------
// Deformed modules

struct DeformedModule {
  std::vector<Exponents> generators;  // monomials in the deformed variables
  std::string label;                  // "(Z0^(1),Z1^(1)*Z1^(2))"
  int class_id = 0;
  RawModule lifts;                    // the undeformed module it specializes to
};

struct DeformedModuleClass {
  int class_id = 0;
  std::vector<DeformedModule> representatives;
  const DeformedModule& canonical() const { return representatives.front(); }
};

/// Lifts in the order of raw_special_modules, each tagged with its undeformed class.
inline std::vector<DeformedModule> deformed_modules(long r, long a) {
  const auto D = deformed_ring(r, a);
  const auto classes = module_classes(r, a);
  const std::size_t l = D.variables.size() - 2;
  const std::size_t n = D.ring.nvars();

  std::vector<DeformedModule> out;
  auto make = [&](std::vector<Exponents> gens) {
    DeformedModule M;
    M.label = "(";
    for (std::size_t k = 0; k < gens.size(); ++k) M.label += (k ? "," : "") + D.ring.format_monomial(gens[k]);
    M.label += ")";
    M.generators = std::move(gens);
    std::vector<Exponents> base;
    for (const auto& g : M.generators) base.push_back(D.specialize(g));
    bool found = false;
    for (const auto& c : classes) {
      for (const auto& rep : c.representatives) {
        if (rep.z_generators == base) {
          M.class_id = c.class_id;
          M.lifts = rep;
          found = true;
        }
      }
    }
    if (!found) throw VerificationFailure("lift " + M.label + " specializes outside the special modules");
    out.push_back(std::move(M));
  };
  make({Exponents(n, 0)});
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t k = 1; k < D.multiplicity(i + 1); ++k) {
      Exponents u(n, 0), v(n, 0);
      u[D.var(i, D.multiplicity(i))] = 1;
      for (std::size_t j = 1; j <= k; ++j) v[D.var(i + 1, j)] = 1;
      make({u, v});
    }
  }
  Exponents u(n, 0), v(n, 0);
  u[D.var(l, D.multiplicity(l))] = 1;
  v[D.var(l + 1, 1)] = 1;
  make({u, v});
  return out;
}

inline std::vector<DeformedModuleClass> deformed_module_classes(long r, long a) {
  std::vector<DeformedModuleClass> out;
  for (auto& M : deformed_modules(r, a)) {
    if (static_cast<std::size_t>(M.class_id) >= out.size()) {
      out.resize(M.class_id + 1);
      out[M.class_id].class_id = M.class_id;
    }
    out[M.class_id].representatives.push_back(std::move(M));
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// Deformed quiver

namespace detail {

/// All multisets of size k from {0, ..., choices-1}, as nondecreasing sequences in lex order.
inline std::vector<std::vector<std::size_t>> multisets(std::size_t choices, int k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t c = from; c < choices; ++c) {
      cur.push_back(c);
      rec(c);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Every deformed monomial specializing to the Z-exponent vector e, in deterministic order.
inline std::vector<Exponents> deformed_lifts(const DeformedRingPresentation& D, const Exponents& e,
                                             std::size_t limit) {
  std::vector<Exponents> out{Exponents(D.ring.nvars(), 0)};
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    const auto choices = multisets(D.multiplicity(i), e[i]);
    std::vector<Exponents> next;
    for (const auto& partial : out) {
      for (const auto& ms : choices) {
        Exponents x = partial;
        for (auto j : ms) x[D.var(i, j + 1)] += 1;
        next.push_back(std::move(x));
        if (next.size() > limit) throw LiftSearchExhausted("deformed lift search space exceeds its bound");
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::pair<Exponents, Exponents> cancel(Exponents num, Exponents den) {
  for (std::size_t i = 0; i < num.size(); ++i) {
    const int c = std::min(num[i], den[i]);
    num[i] -= c;
    den[i] -= c;
  }
  return {num, den};
}

inline std::string fraction_text(const PolyRing& ring, const Exponents& num, const Exponents& den) {
  const bool one_den = total_degree(den) == 0;
  if (one_den && total_degree(num) == 0) return "inc";
  if (one_den) return ring.format_monomial(num);
  return ring.format_monomial(num) + "/" + ring.format_monomial(den);
}

}  // namespace detail

/// n/d maps the source module into the target: n*g lies in d*(target) + I for every source generator g.
inline bool is_deformed_hom(const GroebnerBasis& target_plus_ideal, const std::vector<Exponents>& source,
                            const Exponents& num) {
  return std::all_of(source.begin(), source.end(),
                     [&](const auto& g) { return target_plus_ideal.contains(Polynomial::monomial(num + g)); });
}

inline constexpr long kDeformedQuiverMaxR = 12;

/// Lifts every undeformed arrow of 1/r(1,a) to a certified deformed label, then computes path
/// relations with each emitted relation certified by normal form modulo the deformed ideal.
inline QuiverPresentation deformed_quiver(long r, long a, std::optional<long> hom_bound = std::nullopt,
                                          std::optional<long> path_bound = std::nullopt,
                                          bool with_relations = true, std::size_t lift_limit = 4096) {
  check_group_parameters(r, a);
  if (r > kDeformedQuiverMaxR) {
    throw DomainError("deformed quivers are supported for r <= " + std::to_string(kDeformedQuiverMaxR));
  }
  const auto D = deformed_ring(r, a);
  const auto classes = module_classes(r, a);
  const auto dclasses = deformed_module_classes(r, a);
  const auto z = ring_generators(r, a);
  const std::size_t n = D.ring.nvars();
  const auto order = MonomialOrder::degrevlex();
  const auto ideal = buchberger(D.relations, order, n);

  QuiverPresentation base = reconstruction_quiver(r, a, hom_bound, path_bound, false);
  QuiverPresentation Q;
  Q.name = base.name;
  Q.r = r;
  Q.a = a;
  Q.deformed = true;
  Q.hom_bound = base.hom_bound;
  Q.path_bound = base.path_bound;
  for (const auto& c : dclasses) {
    QuiverVertex v;
    v.name = "M" + std::to_string(c.class_id) + "'";
    for (const auto& rep : c.representatives) v.representatives.push_back(rep.label);
    Q.vertices.push_back(std::move(v));
  }

  std::map<std::pair<int, int>, GroebnerBasis> cache;
  auto target_basis = [&](int src, int dst, const Exponents& den) -> const GroebnerBasis& {
    auto key = std::make_pair(src, dst);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Polynomial> gens = D.relations;
    for (const auto& t : dclasses[dst].canonical().generators) gens.push_back(Polynomial::monomial(den + t));
    return cache.emplace(key, buchberger(gens, order, n)).first->second;
  };

  std::vector<Exponents> nums, dens;
  for (const auto& x : base.arrows) {
    const auto& src = classes[x.src];
    const auto& dsrc = dclasses[x.src].canonical();
    const LaurentMonomial F = representative_map(src, classes[x.dst], *x.monomial);
    const auto& zgens = src.canonical().z_generators;

    // Label over the first source generator u: n/u with n*g in u*(target) + I.
    auto lift = [&]() -> std::optional<Exponents> {
      const auto image = F + detail::realize(zgens[0], z);
      const auto& basis = target_basis(x.src, x.dst, dsrc.generators[0]);
      for (const auto& expr : detail::z_expressions(image, z)) {
        for (const auto& cand : detail::deformed_lifts(D, expr, lift_limit)) {
          if (is_deformed_hom(basis, dsrc.generators, cand)) return cand;
        }
      }
      return std::nullopt;
    };
    auto num = lift();
    if (!num) {
      throw LiftSearchExhausted("no certified deformed lift for arrow a" + std::to_string(x.id) + " " +
                                base.vertices[x.src].name + " -> " + base.vertices[x.dst].name + " (" + x.label + ")");
    }
    const auto& u = dsrc.generators[0];
    auto [cn, cd] = detail::cancel(*num, u);

    // Alternative label over the second source generator: m*u - n*v in I.
    std::string zlabel = detail::fraction_text(D.ring, cn, cd);
    if (dsrc.generators.size() > 1) {
      const auto& v = dsrc.generators[1];
      const auto image = F + detail::realize(zgens[1], z);
      std::optional<Exponents> alt;
      for (const auto& expr : detail::z_expressions(image, z)) {
        for (const auto& m : detail::deformed_lifts(D, expr, lift_limit)) {
          if (ideal.contains(Polynomial::monomial(m + u) - Polynomial::monomial(*num + v))) {
            alt = m;
            break;
          }
        }
        if (alt) break;
      }
      if (!alt) {
        throw LiftSearchExhausted("no alternative deformed label for arrow a" + std::to_string(x.id));
      }
      auto [an, ad] = detail::cancel(*alt, v);
      const auto alt_text = detail::fraction_text(D.ring, an, ad);
      if (alt_text != zlabel) zlabel += "=" + alt_text;
    }

    QuiverArrow y;
    y.id = x.id;
    y.src = x.src;
    y.dst = x.dst;
    y.degree = x.degree;
    y.label = detail::fraction_text(D.ring, cn, cd);
    y.zlabel = zlabel;
    Q.arrows.push_back(y);
    nums.push_back(cn);
    dens.push_back(cd);
  }

  if (with_relations) {
    std::vector<std::vector<long>> differences;
    for (const auto& rel : D.relations) {
      const auto& t = rel.terms();
      std::vector<long> d(n);
      for (std::size_t k = 0; k < n; ++k) d[k] = t[0].exps[k] - t[1].exps[k];
      differences.push_back(std::move(d));
    }
    const Lattice L(n, differences);

    PathAlgebraData data;
    data.vertices = static_cast<int>(Q.vertices.size());
    for (std::size_t k = 0; k < Q.arrows.size(); ++k) {
      data.src.push_back(Q.arrows[k].src);
      data.dst.push_back(Q.arrows[k].dst);
      data.degree.push_back(Q.arrows[k].degree);
      std::vector<long> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = nums[k][i] - dens[k][i];
      data.value.push_back(std::move(v));
    }
    data.canonicalize = [&L](std::vector<long>& v) { L.reduce(v); };
    auto result = path_relations(data, Q.path_bound);

    auto evaluate = [&](const Path& p) {
      Exponents num(n, 0), den(n, 0);
      for (int id : p) {
        num = num + nums[id];
        den = den + dens[id];
      }
      return std::make_pair(num, den);
    };
    for (const auto& rel : result.relations) {
      const auto [n1, d1] = evaluate(rel.lhs);
      const auto [n2, d2] = evaluate(rel.rhs);
      if (ideal.contains(Polynomial::monomial(d1)) || ideal.contains(Polynomial::monomial(d2))) {
        throw VerificationFailure("path denominator vanishes modulo the deformed relations");
      }
      if (!ideal.contains(Polynomial::monomial(n1 + d2) - Polynomial::monomial(n2 + d1))) {
        throw VerificationFailure("deformed path relation " + path_text(Q, rel.lhs) + " = " + path_text(Q, rel.rhs) +
                                  " does not hold modulo the deformed relations");
      }
    }
    Q.relations = std::move(result.relations);
    Q.min_relation_degree = result.min_degree;
  }
  return Q;
}

}  // namespace rca
