#pragma once

// Buchberger's algorithm over Q: reduced Groebner bases, normal forms, ideal membership,
// intersection and quotient.
//
// Pairs are selected by the sugar strategy and pruned with the product (coprime leading
// terms) and chain criteria. Everything is exact and deterministic: the reduced basis is
// returned sorted by decreasing leading monomial.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rca/errors.hpp"
#include "rca/polynomial.hpp"

namespace rca {

class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex, Elimination };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Block order: degrevlex on the first `block` variables, ties broken by degrevlex on the rest.
  /// Any polynomial whose leading term is free of the block is free of it entirely.
  static MonomialOrder elimination(std::size_t block) { return MonomialOrder(Kind::Elimination, block); }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  std::strong_ordering compare(const Exponents& a, const Exponents& b) const {
    switch (kind_) {
      case Kind::Lex:
        return a <=> b;
      case Kind::DegRevLex:
        return grevlex(a, b, 0, a.size());
      case Kind::Elimination: {
        const std::size_t k = std::min(block_, a.size());
        if (auto c = grevlex(a, b, 0, k); c != 0) return c;
        return grevlex(a, b, k, a.size());
      }
    }
    return std::strong_ordering::equal;
  }

  bool greater(const Exponents& a, const Exponents& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder&) const = default;

  std::string name() const {
    switch (kind_) {
      case Kind::Lex:
        return "lex";
      case Kind::DegRevLex:
        return "degrevlex";
      case Kind::Elimination:
        return "elimination(" + std::to_string(block_) + ")";
    }
    return "?";
  }

 private:
  MonomialOrder(Kind k, std::size_t block) : kind_(k), block_(block) {}

  static std::strong_ordering grevlex(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }

  Kind kind_;
  std::size_t block_;
};

namespace detail {

/// Terms sorted strictly decreasing in a monomial order.
struct OrderedPoly {
  std::vector<Term> terms;
  int sugar = 0;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
};

inline OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
  OrderedPoly o;
  o.terms = p.terms();
  std::sort(o.terms.begin(), o.terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.exps, b.exps); });
  o.sugar = std::max(p.degree(), 0);
  return o;
}

inline Polynomial to_polynomial(const OrderedPoly& o, std::size_t nvars) {
  return Polynomial::from_terms(nvars, o.terms);
}

inline void make_monic(OrderedPoly& p) {
  if (p.is_zero()) return;
  const Rational c = p.lead().coeff;
  if (c == 1) return;
  for (auto& t : p.terms) t.coeff /= c;
}

/// f - c * x^shift * g, merging in the given order.
inline std::vector<Term> sub_multiple(const std::vector<Term>& f, std::size_t f_start, const Rational& c,
                                      const Exponents& shift, const std::vector<Term>& g,
                                      const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(f.size() - f_start + g.size());
  std::size_t i = f_start, j = 0;
  Exponents gj;
  while (i < f.size() || j < g.size()) {
    if (j < g.size()) gj = g[j].exps + shift;
    std::strong_ordering cmp = std::strong_ordering::equal;
    if (i >= f.size()) {
      cmp = std::strong_ordering::less;
    } else if (j >= g.size()) {
      cmp = std::strong_ordering::greater;
    } else {
      cmp = order.compare(f[i].exps, gj);
    }
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gj, -c * g[j].coeff});
      ++j;
    } else {
      Rational v = f[i].coeff - c * g[j].coeff;
      if (v != 0) out.push_back({f[i].exps, v});
      ++i;
      ++j;
    }
  }
  return out;
}

/// Full reduction of f modulo monic polynomials `basis`.
inline OrderedPoly reduce(OrderedPoly f, const std::vector<const OrderedPoly*>& basis,
                          const MonomialOrder& order) {
  std::vector<Term> remainder;
  std::vector<Term> work = std::move(f.terms);
  std::size_t head = 0;
  while (head < work.size()) {
    const Term& lt = work[head];
    const OrderedPoly* divisor = nullptr;
    for (const auto* g : basis) {
      if (divides(g->lead().exps, lt.exps)) {
        divisor = g;
        break;
      }
    }
    if (!divisor) {
      remainder.push_back(lt);
      ++head;
      continue;
    }
    const Exponents shift = lt.exps - divisor->lead().exps;
    f.sugar = std::max(f.sugar, total_degree(shift) + divisor->sugar);
    work = sub_multiple(work, head, lt.coeff, shift, divisor->terms, order);
    head = 0;
  }
  f.terms = std::move(remainder);
  return f;
}

inline OrderedPoly s_polynomial(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
  const Exponents l = lcm(f.lead().exps, g.lead().exps);
  const Exponents sf = l - f.lead().exps;
  const Exponents sg = l - g.lead().exps;
  std::vector<Term> a;
  a.reserve(f.terms.size());
  for (const auto& t : f.terms) a.push_back({t.exps + sf, t.coeff / f.lead().coeff});
  OrderedPoly s;
  s.terms = sub_multiple(a, 0, 1 / g.lead().coeff, sg, g.terms, order);
  s.sugar = std::max(f.sugar + total_degree(sf), g.sugar + total_degree(sg));
  return s;
}

}  // namespace detail

class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  bool reduced() const { return reduced_; }
  std::size_t size() const { return basis_.size(); }
  bool is_unit_ideal() const {
    return basis_.size() == 1 && total_degree(basis_.front().lead().exps) == 0;
  }

  std::vector<Polynomial> generators() const {
    std::vector<Polynomial> out;
    for (const auto& g : basis_) out.push_back(detail::to_polynomial(g, nvars_));
    return out;
  }

  std::vector<Exponents> leading_monomials() const {
    std::vector<Exponents> out;
    for (const auto& g : basis_) out.push_back(g.lead().exps);
    return out;
  }

  /// Leading monomial of p in this basis' order (p nonzero).
  Exponents leading_monomial(const Polynomial& p) const { return detail::to_ordered(p, order_).lead().exps; }

  Polynomial normal_form(const Polynomial& p) const {
    if (p.nvars() != nvars_) throw DomainError("polynomial does not belong to the basis ring");
    auto r = detail::reduce(detail::to_ordered(p, order_), pointers(), order_);
    return detail::to_polynomial(r, nvars_);
  }

  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

  /// Every S-polynomial of basis pairs reduces to zero.
  bool s_pairs_reduce_to_zero() const {
    const auto ptrs = pointers();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      for (std::size_t j = i + 1; j < basis_.size(); ++j) {
        if (!detail::reduce(detail::s_polynomial(basis_[i], basis_[j], order_), ptrs, order_).is_zero()) {
          return false;
        }
      }
    }
    return true;
  }

  /// Leading coefficients are 1 and no term of any element is divisible by another leading term.
  bool is_reduced() const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].lead().coeff != 1) return false;
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : basis_[i].terms) {
          if (divides(basis_[j].lead().exps, t.exps)) return false;
        }
      }
    }
    return true;
  }

 private:
  friend GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                  std::size_t nvars);

  std::vector<const detail::OrderedPoly*> pointers() const {
    std::vector<const detail::OrderedPoly*> ptrs;
    for (const auto& g : basis_) ptrs.push_back(&g);
    return ptrs;
  }

  std::size_t nvars_;
  MonomialOrder order_;
  bool reduced_ = false;
  std::vector<detail::OrderedPoly> basis_;
};

/// Reduced Groebner basis of the ideal generated by `gens` (nvars is used only when gens is
/// empty or all zero, giving the zero ideal).
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                std::size_t nvars) {
  using detail::OrderedPoly;
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw DomainError("generator from a different ring");
  }

  std::vector<OrderedPoly> G;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    G.push_back(detail::to_ordered(g, order));
    detail::make_monic(G.back());
  }

  struct Pair {
    int sugar;
    Exponents lcm;
    std::size_t i, j;
  };
  auto key = [](std::size_t i, std::size_t j) { return std::make_pair(std::min(i, j), std::max(i, j)); };
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;

  auto add_pair = [&](std::size_t i, std::size_t j) {
    const Exponents l = lcm(G[i].lead().exps, G[j].lead().exps);
    const int s = std::max(G[i].sugar + total_degree(l) - total_degree(G[i].lead().exps),
                           G[j].sugar + total_degree(l) - total_degree(G[j].lead().exps));
    pending.push_back({s, l, i, j});
    pending_keys.insert(key(i, j));
  };

  for (std::size_t j = 0; j < G.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) add_pair(i, j);
  }

  auto all_ptrs = [&] {
    std::vector<const OrderedPoly*> ptrs;
    for (const auto& g : G) ptrs.push_back(&g);
    return ptrs;
  };

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (auto c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair p = *best;
    pending.erase(best);
    pending_keys.erase(key(p.i, p.j));

    if (coprime(G[p.i].lead().exps, G[p.j].lead().exps)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (divides(G[k].lead().exps, p.lcm) && !pending_keys.count(key(p.i, k)) &&
          !pending_keys.count(key(p.j, k))) {
        chain = true;
      }
    }
    if (chain) continue;

    OrderedPoly h = detail::reduce(detail::s_polynomial(G[p.i], G[p.j], order), all_ptrs(), order);
    if (h.is_zero()) continue;
    detail::make_monic(h);
    G.push_back(std::move(h));
    const std::size_t n = G.size() - 1;
    for (std::size_t k = 0; k < n; ++k) add_pair(k, n);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<OrderedPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !divides(G[j].lead().exps, G[i].lead().exps)) continue;
      redundant = G[j].lead().exps != G[i].lead().exps || j < i;
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // Interreduce tails.
  GroebnerBasis result(nvars, order);
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const OrderedPoly*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(&minimal[j]);
    }
    OrderedPoly g = detail::reduce(minimal[i], others, order);
    detail::make_monic(g);
    result.basis_.push_back(std::move(g));
  }
  std::sort(result.basis_.begin(), result.basis_.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return order.greater(a.lead().exps, b.lead().exps);
  });
  result.reduced_ = true;
  return result;
}

inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw DomainError("empty generator list: pass the variable count explicitly");
  return buchberger(gens, order, gens.front().nvars());
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) { return G.normal_form(p); }

/// Prepends `k` new variables (exponent 0) to every term.
inline Polynomial prepend_variables(const Polynomial& p, std::size_t k) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Exponents e(k, 0);
    e.insert(e.end(), t.exps.begin(), t.exps.end());
    terms.push_back({std::move(e), t.coeff});
  }
  return Polynomial::from_terms(p.nvars() + k, std::move(terms));
}

/// Removes the first `k` variables; they must not occur in p.
inline Polynomial drop_leading_variables(const Polynomial& p, std::size_t k) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < k; ++i) {
      if (t.exps[i] != 0) throw DomainError("polynomial still involves an eliminated variable");
    }
    terms.push_back({Exponents(t.exps.begin() + static_cast<long>(k), t.exps.end()), t.coeff});
  }
  return Polynomial::from_terms(p.nvars() - k, std::move(terms));
}

/// Generators of the elimination ideal I ∩ k[x_k, ..., x_n] (first `k` variables removed).
inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, std::size_t k, std::size_t nvars) {
  const auto G = buchberger(gens, MonomialOrder::elimination(k), nvars);
  std::vector<Polynomial> out;
  for (const auto& g : G.generators()) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (std::size_t i = 0; i < k; ++i) free = free && t.exps[i] == 0;
    }
    if (free) out.push_back(drop_leading_variables(g, k));
  }
  return out;
}

/// Generators of I ∩ J via t*I + (1-t)*J and elimination of t.
inline std::vector<Polynomial> ideal_intersection(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J,
                                                  std::size_t nvars) {
  const std::size_t n = nvars + 1;
  const Polynomial t = Polynomial::variable(n, 0);
  const Polynomial one_minus_t = Polynomial::constant(n, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I) gens.push_back(t * prepend_variables(f, 1));
  for (const auto& g : J) gens.push_back(one_minus_t * prepend_variables(g, 1));
  return eliminate(gens, 1, n);
}

/// Exact quotient p / f; throws if f does not divide p.
inline Polynomial exact_divide(const Polynomial& p, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("division by zero polynomial");
  const auto order = MonomialOrder::lex();
  const auto fo = detail::to_ordered(f, order);
  const Term& lf = fo.lead();
  Polynomial q(p.nvars());
  Polynomial rem = p;
  while (!rem.is_zero()) {
    const Term lt = detail::to_ordered(rem, order).lead();
    if (!divides(lf.exps, lt.exps)) throw DomainError("polynomial division is not exact");
    Polynomial step = Polynomial::monomial(lt.exps - lf.exps, lt.coeff / lf.coeff);
    q += step;
    rem -= step * f;
  }
  return q;
}

/// Generators of the colon ideal (I : f) = { g : g*f in I }, reduced in `order`.
inline std::vector<Polynomial> ideal_quotient(const std::vector<Polynomial>& I, const Polynomial& f,
                                              const MonomialOrder& order) {
  if (f.is_zero()) throw DomainError("ideal quotient by the zero polynomial");
  std::vector<Polynomial> quotients;
  for (const auto& g : ideal_intersection(I, {f}, f.nvars())) quotients.push_back(exact_divide(g, f));
  if (quotients.empty()) return {};
  return buchberger(quotients, order, f.nvars()).generators();
}

}  // namespace rca
