// Acceptance suite: one PASS/FAIL line per criterion, each under a pinned wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "geometry_oracles.hpp"
#include "rca/rca.hpp"

namespace {

using rca::Exponents;
using rca::LaurentMonomial;
using rca::Polynomial;

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<std::string()> run;  // empty string on success, otherwise the first failure
};

template <class F>
void for_coprime(long max_r, F&& f) {
  for (long r = 2; r <= max_r; ++r) {
    for (long a = 1; a < r; ++a) {
      if (std::gcd(r, a) == 1) f(r, a);
    }
  }
}

std::string pair_text(long r, long a) { return "(" + std::to_string(r) + "," + std::to_string(a) + ")"; }

std::string continued_fractions() {
  if (rca::hj_expand(12, 7).entries != std::vector<long>{2, 4, 2}) return "12/7";
  if (rca::hj_expand(12, 5).entries != std::vector<long>{3, 2, 3}) return "12/5";
  for (long r = 2; r <= 10; ++r) {
    if (rca::hj_expand(r, 1).entries != std::vector<long>{r}) return pair_text(r, 1);
  }
  return "";
}

std::string generator_oracle() {
  std::string err;
  for_coprime(30, [&](long r, long a) {
    const auto z = rca::ring_generators(r, a);
    if (err.empty() && (z != rca::minimal_semigroup_generators(rca::InvariantSemigroup(r, a)) ||
                        z != oracle::invariant_generators(r, a))) {
      err = pair_text(r, a);
    }
  });
  return err;
}

std::string relation_identity() {
  std::string err;
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> val(1, 11);
  for_coprime(30, [&](long r, long a) {
    const auto P = rca::ring_presentation(r, a);
    const rca::Rational x = rca::Rational(val(rng)) / 13, y = rca::Rational(val(rng)) / 7;
    std::vector<rca::Rational> point;
    for (const auto& m : oracle::invariant_generators(r, a)) {
      rca::Rational v = 1;
      for (long k = 0; k < m.x; ++k) v *= x;
      for (long k = 0; k < m.y; ++k) v *= y;
      point.push_back(v);
    }
    for (const auto& rel : P.relations) {
      if (err.empty() && (!P.realize(rel).is_zero() || oracle::evaluate(rel, point) != 0)) {
        err = pair_text(r, a) + ": " + P.ring.format(rel);
      }
    }
  });
  return err;
}

std::set<std::pair<long, long>> generator_set(const rca::MonomialModule& M) {
  std::set<std::pair<long, long>> s;
  for (const auto& g : M.generators()) s.insert({g.x, g.y});
  return s;
}

std::string special_modules() {
  std::string err;
  for_coprime(30, [&](long r, long a) {
    if (err.empty() && rca::module_classes(r, a).size() != rca::hj_expand(r, a).size() + 1) err = pair_text(r, a);
  });
  if (!err.empty()) return "class count " + err;
  const auto C = rca::module_classes(12, 7);
  const std::vector<std::set<std::pair<long, long>>> expected{
      {{0, 0}}, {{7, 0}, {0, 1}}, {{2, 0}, {0, 2}}, {{1, 0}, {0, 7}}};
  std::vector<std::set<std::pair<long, long>>> got;
  for (const auto& c : C) got.push_back(generator_set(c.normalized));
  if (std::set(got.begin(), got.end()) != std::set(expected.begin(), expected.end())) return "(12,7) classes";
  return "";
}

std::string quiver_figures() {
  const auto Q = rca::reconstruction_quiver(12, 7, std::nullopt, std::nullopt, false);
  if (Q.vertices.size() != 4) return "(12,7) vertex count";
  const std::vector<std::vector<int>> expected{{0, 1, 0, 1}, {1, 0, 1, 0}, {2, 1, 0, 1}, {1, 0, 1, 0}};
  if (Q.adjacency() != expected || Q.arrows.size() != 10) return "(12,7) adjacency";
  for (long r = 2; r <= 6; ++r) {
    const auto A = rca::reconstruction_quiver(r, 1, std::nullopt, std::nullopt, false);
    if (A.count(0, 1) != 2 || A.count(1, 0) != r || A.arrows.size() != static_cast<std::size_t>(r + 2)) {
      return pair_text(r, 1) + " arrow counts";
    }
    for (const auto& x : A.arrows) {
      if (x.degree != (x.src == 0 ? 1 : r - 1)) return pair_text(r, 1) + " arrow degree";
    }
  }
  return "";
}

std::string relation_degrees() {
  for (long r = 2; r <= 4; ++r) {
    const auto Q = rca::reconstruction_quiver(r, 1);
    if (Q.min_relation_degree != r) return pair_text(r, 1) + " undeformed";
    const auto D = rca::deformed_quiver(r, 1);
    if (D.min_relation_degree != r + 1) return pair_text(r, 1) + " deformed";
  }
  return "";
}

std::string deformation_invariants() {
  std::string err;
  for_coprime(20, [&](long r, long a) {
    if (!err.empty()) return;
    const auto D = rca::deformed_ring(r, a);
    const auto P = rca::ring_presentation(r, a);
    long excess = 0;
    for (long x : rca::hj_expand(r, a).entries) excess += x - 1;
    if (static_cast<long>(D.ring.nvars() - P.ring.nvars()) != excess ||
        excess != rca::versal_dimension(r, a)) {
      err = pair_text(r, a) + " excess";
      return;
    }
    std::set<std::set<Exponents>> base, special;
    for (const auto& rel : P.relations) base.insert({rel.terms()[0].exps, rel.terms()[1].exps});
    for (const auto& rel : D.relations) {
      special.insert({D.specialize(rel.terms()[0].exps), D.specialize(rel.terms()[1].exps)});
    }
    if (base != special || D.relations.size() != P.relations.size()) {
      err = pair_text(r, a) + " central fiber";
      return;
    }
    for (const auto& w : D.weyl) {
      for (const auto& rel : D.relations) {
        if (!(rca::apply(w, rel) == rel)) err = pair_text(r, a) + " weyl " + w.description;
      }
    }
  });
  return err;
}

std::string deformed_lifts() {
  const auto C = rca::deformed_module_classes(12, 7);
  const std::vector<std::vector<std::string>> expected{
      {"(1)"},
      {"(Z0^(1),Z1^(1))"},
      {"(Z0^(1),Z1^(1)*Z1^(2))", "(Z1^(3),Z2^(1))", "(Z2^(2),Z3^(1))"},
      {"(Z2^(2),Z3^(1)*Z3^(2))", "(Z3^(3),Z4^(1))"}};
  if (C.size() != expected.size()) return "class count";
  for (std::size_t i = 0; i < C.size(); ++i) {
    std::vector<std::string> got;
    for (const auto& m : C[i].representatives) got.push_back(m.label);
    if (got != expected[i]) return "module M" + std::to_string(i) + "'";
  }
  const auto D = rca::deformed_ring(12, 7);
  const auto Q = rca::deformed_quiver(12, 7, std::nullopt, std::nullopt, false);
  bool found = false;
  for (const auto& x : Q.arrows) {
    if (x.src == 3 && x.dst == 0) found = x.zlabel == "Z3^(3)/Z2^(2)=Z4^(1)/Z3^(1)*Z3^(2)";
    const auto parts = oracle::split(x.zlabel, '=');
    const auto f = oracle::label_fraction(D.ring, parts[0]);
    // Gröbner reduction and the linear-algebra oracle must both accept the lift.
    std::vector<Polynomial> gens = D.relations;
    for (const auto& t : C[x.dst].canonical().generators) gens.push_back(f.denominator * Polynomial::monomial(t));
    const auto G = rca::buchberger(gens, rca::MonomialOrder::degrevlex(), D.ring.nvars());
    for (const auto& g : C[x.src].canonical().generators) {
      if (!G.contains(f.numerator * Polynomial::monomial(g))) return "arrow a" + std::to_string(x.id) + " by reduction";
    }
    if (!oracle::deformed_maps_into(D, C[x.src].canonical().generators, C[x.dst].canonical().generators, f)) {
      return "arrow a" + std::to_string(x.id) + " by linear algebra";
    }
    if (parts.size() == 2) {
      const auto g = oracle::label_fraction(D.ring, parts[1]);
      const auto I = rca::buchberger(D.relations, rca::MonomialOrder::degrevlex(), D.ring.nvars());
      if (!I.contains(f.numerator * g.denominator - g.numerator * f.denominator)) {
        return "alternative label of a" + std::to_string(x.id);
      }
    }
  }
  return found ? "" : "3 -> 0 label";
}

std::string golden_fixtures() {
  const std::vector<std::pair<std::string, std::size_t>> expected{{"D5_2", 12}, {"nonquotient_minus4", 16}};
  for (const auto& [name, arrows] : expected) {
    const auto f = rca::load_fixture(name);
    if (f.undeformed.arrows.size() != arrows || f.deformed.arrows.size() != arrows) return name + " arrow count";
    if (name == "nonquotient_minus4" && f.parameters.at("lambda") != 2) return name + " lambda";
    const auto rep = rca::verify_fixture(f);
    for (const std::string kind : {"identity", "well-defined", "specialization"}) {
      if (rep.count(kind) == 0 || rep.count(kind, true) != 0) return name + " " + kind;
    }
    if (!rep.passed()) return name;
  }
  return "";
}

std::string groebner_suite() {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::vector<Polynomial> gens;
    const int count = 1 + (trial / 3) % 3;
    for (int k = 0; k < count; ++k) gens.push_back(oracle::random_homogeneous(rng, n, 1 + (trial + 2 * k) % 3));
    const auto G = rca::buchberger(gens, rca::MonomialOrder::degrevlex(), n);
    const std::string tag = "ideal " + std::to_string(trial);
    if (!G.s_pairs_reduce_to_zero()) return tag + " S-pairs";
    for (int probe = 0; probe < 4; ++probe) {
      Polynomial p(n);
      if (probe % 2 == 0) {
        for (const auto& g : gens) p += oracle::random_homogeneous(rng, n, 4 - g.degree()) * g;
      } else {
        p = oracle::random_homogeneous(rng, n, 2 + probe, 4);
      }
      const auto r = G.normal_form(p);
      if (!(G.normal_form(r) == r)) return tag + " idempotence";
      if (G.contains(p) != oracle::homogeneous_member(gens, p)) return tag + " membership";
    }
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "continued fractions", 1.0, continued_fractions},
      {2, "generators equal minimal semigroup generators, r <= 30", 30.0, generator_oracle},
      {3, "relations vanish on monomials, r <= 30", 30.0, relation_identity},
      {4, "special module classes", 10.0, special_modules},
      {5, "quiver arrows for (12,7) and (r,1)", 60.0, quiver_figures},
      {6, "minimal relation degrees r and r+1", 60.0, relation_degrees},
      {7, "deformation invariants, r <= 20", 60.0, deformation_invariants},
      {8, "deformed lifts for (12,7)", 120.0, deformed_lifts},
      {9, "golden fixtures", 120.0, golden_fixtures},
      {10, "Groebner property suite", 60.0, groebner_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string err;
    try {
      err = c.run();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (err.empty() && seconds > c.limit_seconds) err = "time limit exceeded";
    std::printf("criterion %2d %-56s %s  %.3fs / %.0fs%s%s\n", c.id, c.name.c_str(), err.empty() ? "PASS" : "FAIL",
                seconds, c.limit_seconds, err.empty() ? "" : "  ", err.c_str());
    if (!err.empty()) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
