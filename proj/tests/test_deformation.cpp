#include <catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "geometry_oracles.hpp"

using rca::Exponents;
using rca::Polynomial;

using oracle::deformed_maps_into;
using oracle::in_deformed_ideal;
using oracle::label_fraction;
using oracle::split;

TEST_CASE("deformed ring of 1/12(1,7)") {
  const auto D = rca::deformed_ring(12, 7);
  CHECK(D.ring.nvars() == 10);
  CHECK(D.relations.size() == 6);
  CHECK(D.relations.front() == D.ring.parse("Z0^(1)*Z2^(1) - Z1^(1)*Z1^(2)*Z1^(3)"));
  REQUIRE(D.weyl.size() == 2);
  CHECK(D.weyl[0].description == "(Z1^(1) Z1^(2))");
  CHECK(D.weyl[1].description == "(Z3^(2) Z3^(3))");
  CHECK(rca::to_json(D)["relations"].size() == 6);
}

TEST_CASE("deformed ring of the A_1 singularity") {
  const auto D = rca::deformed_ring(2, 1);
  REQUIRE(D.relations.size() == 1);
  CHECK(D.relations[0] == D.ring.parse("Z0^(1)*Z2^(1) - Z1^(1)*Z1^(2)"));
  CHECK(D.weyl.empty());
}

TEST_CASE("deformation invariants for r <= 20") {
  for (long r = 2; r <= 20; ++r) {
    for (long a = 1; a < r; ++a) {
      if (std::gcd(r, a) != 1) continue;
      INFO("r=" << r << " a=" << a);
      const auto D = rca::deformed_ring(r, a);
      const auto P = rca::ring_presentation(r, a);
      long sum = 0;
      for (long x : rca::hj_expand(r, a).entries) sum += x - 1;
      CHECK(static_cast<long>(D.ring.nvars() - P.ring.nvars()) == sum);

      // Central fiber, compared as sets up to sign.
      std::set<std::pair<Exponents, Exponents>> base, special;
      auto key = [](const Polynomial& p) {
        auto u = p.terms()[0].exps, v = p.terms()[1].exps;
        if (v < u) std::swap(u, v);
        return std::pair{u, v};
      };
      for (const auto& rel : P.relations) base.insert(key(rel));
      for (const auto& rel : D.relations) {
        REQUIRE(rel.size() == 2);
        special.insert(key(Polynomial::monomial(D.specialize(rel.terms()[0].exps)) -
                           Polynomial::monomial(D.specialize(rel.terms()[1].exps))));
      }
      CHECK(base == special);
      CHECK_NOTHROW(rca::specialize_central_fiber(D));

      const auto bases = D.base_index();
      for (const auto& w : D.weyl) {
        std::size_t moved = 0;
        for (std::size_t k = 0; k < w.image.size(); ++k) {
          if (w.image[k] != k) {
            ++moved;
            CHECK(bases[w.image[k]] == bases[k]);
          }
        }
        CHECK(moved == 2);
        for (const auto& rel : D.relations) CHECK(rca::apply(w, rel) == rel);
      }
    }
  }
}

TEST_CASE("lifted modules of 1/12(1,7)") {
  const auto C = rca::deformed_module_classes(12, 7);
  REQUIRE(C.size() == 4);
  auto labels = [](const rca::DeformedModuleClass& c) {
    std::vector<std::string> s;
    for (const auto& m : c.representatives) s.push_back(m.label);
    return s;
  };
  CHECK(labels(C[0]) == std::vector<std::string>{"(1)"});
  CHECK(labels(C[1]) == std::vector<std::string>{"(Z0^(1),Z1^(1))"});
  CHECK(labels(C[2]) == std::vector<std::string>{"(Z0^(1),Z1^(1)*Z1^(2))", "(Z1^(3),Z2^(1))", "(Z2^(2),Z3^(1))"});
  CHECK(labels(C[3]) == std::vector<std::string>{"(Z2^(2),Z3^(1)*Z3^(2))", "(Z3^(3),Z4^(1))"});
}

TEST_CASE("identified lifts are isomorphic") {
  for (auto [r, a] : std::vector<std::pair<long, long>>{{12, 7}, {7, 3}, {5, 2}, {4, 1}}) {
    const auto D = rca::deformed_ring(r, a);
    for (const auto& c : rca::deformed_module_classes(r, a)) {
      for (std::size_t i = 1; i < c.representatives.size(); ++i) {
        const auto& p = c.representatives[0].generators;
        const auto& q = c.representatives[i].generators;
        REQUIRE(p.size() == 2);
        REQUIRE(q.size() == 2);
        INFO(c.representatives[0].label << " ~ " << c.representatives[i].label);
        // (u1,v1) ~ (u2,v2) through multiplication by u2/u1 = v2/v1.
        CHECK(in_deformed_ideal(D, Polynomial::monomial(p[0]) * Polynomial::monomial(q[1]) - Polynomial::monomial(p[1]) * Polynomial::monomial(q[0])));
      }
    }
  }
}

TEST_CASE("lifted arrows of 1/12(1,7)") {
  const auto Q = rca::deformed_quiver(12, 7, std::nullopt, std::nullopt, false);
  const auto D = rca::deformed_ring(12, 7);
  const auto C = rca::deformed_module_classes(12, 7);
  const auto base = rca::reconstruction_quiver(12, 7, std::nullopt, std::nullopt, false);
  REQUIRE(Q.arrows.size() == 10);
  CHECK(Q.vertices[1].name == "M1'");
  for (const auto& x : Q.arrows) {
    INFO(x.zlabel);
    if (x.src == 3 && x.dst == 0) CHECK(x.zlabel == "Z3^(3)/Z2^(2)=Z4^(1)/Z3^(1)*Z3^(2)");
    const auto parts = split(x.zlabel.empty() ? x.label : x.zlabel, '=');
    const auto f = label_fraction(D.ring, parts[0]);
    CHECK(deformed_maps_into(D, C[x.src].canonical().generators, C[x.dst].canonical().generators, f));
    if (parts.size() == 2) {
      const auto g = label_fraction(D.ring, parts[1]);
      CHECK(in_deformed_ideal(D, f.numerator * g.denominator - g.numerator * f.denominator));
    }
    // Central fiber of the label is the undeformed label.
    const auto& y = base.arrows[x.id];
    CHECK(y.src == x.src);
    CHECK(y.dst == x.dst);
    const auto central = [&](const Polynomial& p) { return D.specialize(p.terms()[0].exps); };
    const auto P = rca::ring_presentation(12, 7);
    const auto ztext = split(y.zlabel, '=')[0];
    const auto expected = label_fraction(P.ring, ztext);
    CHECK(Polynomial::monomial(central(f.numerator)) * expected.denominator ==
          expected.numerator * Polynomial::monomial(central(f.denominator)));
  }
}

TEST_CASE("wrong lifts of the 3 -> 0 label are rejected") {
  const auto D = rca::deformed_ring(12, 7);
  const auto C = rca::deformed_module_classes(12, 7);
  const auto& src = C[3].canonical().generators;
  const auto& dst = C[0].canonical().generators;
  CHECK(deformed_maps_into(D, src, dst, D.ring.parse_fraction("Z3^(3)/Z2^(2)")));
  CHECK_FALSE(deformed_maps_into(D, src, dst, D.ring.parse_fraction("Z3^(1)/Z2^(2)")));
  CHECK_FALSE(deformed_maps_into(D, src, dst, D.ring.parse_fraction("Z3^(2)/Z2^(2)")));
}

TEST_CASE("deformed relation degree is one more than undeformed") {
  for (long r = 2; r <= 4; ++r) {
    const auto Q = rca::deformed_quiver(r, 1);
    REQUIRE(Q.min_relation_degree);
    CHECK(*Q.min_relation_degree == r + 1);
  }
}

TEST_CASE("deformed relations hold in the deformed ring") {
  for (long r = 2; r <= 3; ++r) {
    const auto Q = rca::deformed_quiver(r, 1, std::nullopt, r + 2);
    const auto D = rca::deformed_ring(r, 1);
    auto value = [&](const rca::Path& p) {
      rca::Fraction v{D.ring.one(), D.ring.one()};
      for (int id : p) {
        const auto f = label_fraction(D.ring, Q.arrows[id].label);
        v.numerator *= f.numerator;
        v.denominator *= f.denominator;
      }
      return v;
    };
    REQUIRE_FALSE(Q.relations.empty());
    for (const auto& rel : Q.relations) {
      const auto u = value(rel.lhs), v = value(rel.rhs);
      CHECK(in_deformed_ideal(D, u.numerator * v.denominator - v.numerator * u.denominator));
    }
    // No two distinct paths of degree <= r agree: the undeformed relations in degree r deform away.
    std::vector<rca::Path> paths;
    std::vector<rca::Path> frontier;
    for (const auto& x : Q.arrows) frontier.push_back({x.id});
    while (!frontier.empty()) {
      std::vector<rca::Path> next;
      for (const auto& p : frontier) {
        if (Q.path_degree(p) > r) continue;
        paths.push_back(p);
        for (const auto& x : Q.arrows) {
          if (x.src == Q.arrows[p.back()].dst) {
            auto q = p;
            q.push_back(x.id);
            next.push_back(std::move(q));
          }
        }
      }
      frontier = std::move(next);
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (std::size_t j = i + 1; j < paths.size(); ++j) {
        const auto& p = paths[i];
        const auto& q = paths[j];
        if (Q.arrows[p.front()].src != Q.arrows[q.front()].src || Q.arrows[p.back()].dst != Q.arrows[q.back()].dst ||
            Q.path_degree(p) != Q.path_degree(q)) {
          continue;
        }
        const auto u = value(p), v = value(q);
        CHECK_FALSE(in_deformed_ideal(D, u.numerator * v.denominator - v.numerator * u.denominator));
      }
    }
  }
}

TEST_CASE("deformed quiver limits") {
  CHECK_THROWS_AS(rca::deformed_quiver(13, 5), rca::DomainError);
  const auto D = rca::deformed_ring(12, 7);
  CHECK_THROWS_AS(rca::detail::deformed_lifts(D, rca::Exponents{0, 6, 0, 0, 0}, 4), rca::LiftSearchExhausted);
}
