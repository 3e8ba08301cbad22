#pragma once

// Invariant suite for one group 1/r(1,a), shared by the CLI and the acceptance suite.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rca/deformation.hpp"
#include "rca/errors.hpp"
#include "rca/quiver.hpp"

namespace rca {

struct InvariantCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct InvariantReport {
  long r = 0;
  long a = 0;
  std::vector<InvariantCheck> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

/// Runs every invariant for (r,a). BoundExhausted propagates; other failures become report entries.
inline InvariantReport verify_group(long r, long a, std::optional<long> hom_bound = std::nullopt,
                                    std::optional<long> path_bound = std::nullopt) {
  check_group_parameters(r, a);
  InvariantReport rep;
  rep.r = r;
  rep.a = a;
  auto check = [&](const std::string& name, const std::function<std::string()>& body) {
    try {
      const auto failure = body();
      rep.checks.push_back({name, failure.empty(), failure});
    } catch (const BoundExhausted&) {
      throw;
    } catch (const std::exception& e) {
      rep.checks.push_back({name, false, e.what()});
    }
  };

  const auto cf = hj_expand(r, a);
  const auto dual = hj_dual(r, a);
  check("continued fractions", [&]() -> std::string {
    if (evaluate(cf.entries) != Rational(r) / a) return "expansion does not evaluate to r/a";
    if (evaluate(dual.entries) != Rational(r) / (r - a)) return "dual does not evaluate to r/(r-a)";
    long s = 0, t = 0;
    for (long x : cf.entries) s += x - 1;
    for (long x : dual.entries) t += x - 1;
    if (s != t) return "entry excesses differ";
    if (static_cast<long>(cf.size() + dual.size()) != s + 1) return "length identity fails";
    return "";
  });
  check("generators are the minimal semigroup generators", [&]() -> std::string {
    auto z = ring_generators(r, a);
    auto m = minimal_semigroup_generators(InvariantSemigroup(r, a));
    std::sort(z.begin(), z.end());
    std::sort(m.begin(), m.end());
    return z == m ? "" : "generator sets differ";
  });
  const auto P = ring_presentation(r, a);
  check("relations vanish on monomials", [&]() -> std::string {
    for (const auto& rel : P.relations) {
      if (!P.realize(rel).is_zero()) return "relation " + P.ring.format(rel) + " does not vanish";
    }
    return "";
  });
  check("special module classes", [&]() -> std::string {
    const auto classes = module_classes(r, a);
    if (classes.size() != cf.size() + 1) return "class count " + std::to_string(classes.size());
    for (const auto& c : classes) {
      if (!c.normalized.is_normalized() || !c.normalized.is_minimal() || !c.normalized.is_saturated()) {
        return "class " + to_string(c.normalized) + " is not a normalized saturated module";
      }
    }
    return "";
  });
  const auto D = deformed_ring(r, a);
  check("deformed variable excess", [&]() -> std::string {
    const long excess = static_cast<long>(D.ring.nvars()) - static_cast<long>(P.ring.nvars());
    return excess == versal_dimension(r, a) ? "" : "excess " + std::to_string(excess);
  });
  check("central fiber", [&]() -> std::string {
    specialize_central_fiber(D);
    return "";
  });
  check("weyl invariance", [&]() -> std::string {
    for (const auto& w : D.weyl) {
      for (const auto& rel : D.relations) {
        if (!(apply(w, rel) == rel)) return D.ring.format(rel) + " moved by " + w.description;
      }
    }
    return "";
  });
  const auto Q = reconstruction_quiver(r, a, hom_bound, path_bound);
  check("arrows well defined", [&]() -> std::string {
    for (const auto& x : Q.arrows) {
      if (!is_hom(*Q.vertices[x.src].normalized, *Q.vertices[x.dst].normalized, *x.monomial)) return "arrow " + x.label;
      if (x.degree != x.monomial->degree()) return "degree of arrow " + x.label;
    }
    return "";
  });
  check("factorization witnesses", [&]() -> std::string {
    for (const auto& w : Q.witnesses) {
      const auto& src = *Q.vertices[w.src].normalized;
      const auto& via = *Q.vertices[w.via].normalized;
      const auto& dst = *Q.vertices[w.dst].normalized;
      if (w.first + w.second != w.element || w.first.degree() <= 0 || w.second.degree() <= 0 ||
          !is_hom(src, via, w.first) || !is_hom(via, dst, w.second)) {
        return "witness for " + to_string(w.element);
      }
    }
    return "";
  });
  check("relations evaluate equally", [&]() -> std::string {
    for (const auto& rel : Q.relations) {
      LaurentMonomial x, y;
      for (int id : rel.lhs) x += *Q.arrows[id].monomial;
      for (int id : rel.rhs) y += *Q.arrows[id].monomial;
      const bool ends = Q.arrows[rel.lhs.front()].src == Q.arrows[rel.rhs.front()].src &&
                        Q.arrows[rel.lhs.back()].dst == Q.arrows[rel.rhs.back()].dst;
      if (x != y || !ends) return "relation " + path_text(Q, rel.lhs) + " = " + path_text(Q, rel.rhs);
    }
    return "";
  });
  return rep;
}

inline std::string to_text(const InvariantReport& rep) {
  std::ostringstream os;
  os << "verify 1/" << rep.r << "(1," << rep.a << ")\n";
  for (const auto& c : rep.checks) {
    os << (c.passed ? "  ok    " : "  FAIL  ") << c.name;
    if (!c.passed) os << ": " << c.detail;
    os << "\n";
  }
  os << (rep.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

inline nlohmann::json to_json(const InvariantReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"r", rep.r}, {"a", rep.a}, {"passed", rep.passed()}, {"checks", checks}};
}

}  // namespace rca
