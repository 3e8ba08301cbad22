#include <catch_amalgamated.hpp>

#include <numeric>

#include "rca/monomial.hpp"

using rca::InvariantSemigroup;
using rca::LaurentMonomial;
using rca::MonomialModule;

TEST_CASE("semigroup membership and weights") {
  const InvariantSemigroup s(12, 7);
  CHECK(rca::semigroup_member(s, {12, 0}));
  CHECK(rca::semigroup_member(s, {5, 1}));
  CHECK(rca::semigroup_member(s, {0, 12}));
  CHECK_FALSE(rca::semigroup_member(s, {1, 1}));
  CHECK_FALSE(rca::semigroup_member(s, {-12, 24}));
  CHECK(s.weight({7, 0}) == 7);
  CHECK(s.weight({0, 1}) == 7);
  CHECK(s.weight({-1, 0}) == 11);
}

TEST_CASE("minimal generators of 1/12(1,7)") {
  const auto g = rca::minimal_semigroup_generators(InvariantSemigroup(12, 7));
  const std::vector<LaurentMonomial> expected{{12, 0}, {5, 1}, {3, 3}, {1, 5}, {0, 12}};
  CHECK(g == expected);
}

TEST_CASE("minimal generators generate every member up to degree 2r") {
  // Oracle: dynamic programming over the box marks members reachable as sums of generators.
  for (long r = 2; r <= 14; ++r) {
    for (long a = 1; a < r; ++a) {
      if (std::gcd(r, a) != 1) continue;
      const InvariantSemigroup s(r, a);
      const auto gens = rca::minimal_semigroup_generators(s);
      const long n = 2 * r;
      std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(n + 1, false));
      reach[0][0] = true;
      for (long c = 0; c <= n; ++c) {
        for (long d = 0; d <= n; ++d) {
          for (const auto& g : gens) {
            if (c >= g.x && d >= g.y && reach[c - g.x][d - g.y]) reach[c][d] = true;
          }
          CHECK(reach[c][d] == rca::semigroup_member(s, {c, d}));
        }
      }
      // minimality: no generator is reachable from the others
      for (const auto& g : gens) {
        std::vector<LaurentMonomial> others;
        for (const auto& h : gens) {
          if (h != g) others.push_back(h);
        }
        std::vector<std::vector<bool>> r2(g.x + 1, std::vector<bool>(g.y + 1, false));
        r2[0][0] = true;
        for (long c = 0; c <= g.x; ++c) {
          for (long d = 0; d <= g.y; ++d) {
            for (const auto& h : others) {
              if (c >= h.x && d >= h.y && r2[c - h.x][d - h.y]) r2[c][d] = true;
            }
          }
        }
        CHECK_FALSE(r2[g.x][g.y]);
      }
    }
  }
}

TEST_CASE("normalized modules") {
  const InvariantSemigroup s(12, 7);
  // (Z0, Z1) = (x^12, x^5 y)
  const auto M = MonomialModule::normalized(s, {{12, 0}, {5, 1}});
  CHECK(rca::to_string(M) == "(x^7,y)");
  CHECK(M.shift() == LaurentMonomial{5, 0});
  CHECK(M.is_normalized());
  CHECK(M.is_minimal());
  CHECK(M.is_saturated());
  CHECK(M.weight() == 7);
  CHECK(M.grading() == std::vector<long>{1, 7});
  CHECK(rca::module_member(M, {0, 1}));
  CHECK(rca::module_member(M, {12, 1}));
  CHECK_FALSE(rca::module_member(M, {1, 0}));

  // redundant generator dropped: x^7 * (x^12) is a multiple of x^7
  const auto N = MonomialModule::normalized(s, {{7, 0}, {0, 1}, {19, 0}});
  CHECK(N == M);

  const auto T = MonomialModule::normalized(s, {{3, 3}});
  CHECK(rca::to_string(T) == "(1)");
  CHECK(T.is_saturated());

  CHECK_THROWS_AS(MonomialModule::normalized(s, {{1, 0}, {0, 1}}), rca::DomainError);
  CHECK_THROWS_AS(MonomialModule::normalized(s, {}), rca::DomainError);
}

TEST_CASE("monomial formatting and order") {
  CHECK(rca::to_string(LaurentMonomial{0, 0}) == "1");
  CHECK(rca::to_string(LaurentMonomial{7, 1}) == "x^7*y");
  CHECK(LaurentMonomial{2, 3}.degree() == 5);
  CHECK(LaurentMonomial{1, 0}.divides({2, 0}));
  CHECK_FALSE(LaurentMonomial{1, 1}.divides({2, 0}));
}
