#include <catch_amalgamated.hpp>

#include <random>

#include "rca/lattice.hpp"

TEST_CASE("coset representatives are canonical") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> small(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    std::vector<std::vector<long>> gens(1 + trial % 3, std::vector<long>(n));
    for (auto& g : gens) {
      for (auto& x : g) x = small(rng);
    }
    const rca::Lattice L(n, gens);
    std::vector<long> v(n);
    for (auto& x : v) x = small(rng) * 3;
    auto w = v;
    for (const auto& g : gens) {
      const long c = small(rng);
      for (std::size_t i = 0; i < n; ++i) w[i] += c * g[i];
    }
    CHECK(L.reduced(v) == L.reduced(w));
    for (const auto& g : gens) CHECK(L.contains(g));
    CHECK(L.reduced(L.reduced(v)) == L.reduced(v));
    CHECK(L.rank() <= gens.size());
  }
}

TEST_CASE("index-2 sublattice") {
  const rca::Lattice L(2, {{2, 0}, {0, 2}, {2, 2}});
  CHECK(L.rank() == 2);
  CHECK(L.contains({4, -2}));
  CHECK_FALSE(L.contains({1, 0}));
  CHECK(L.reduced({3, 5}) == std::vector<long>{1, 1});
  CHECK(L.reduced({-1, -3}) == std::vector<long>{1, 1});
}

TEST_CASE("distinguishes cosets") {
  // Oracle: x - y is in L = span{(3, 0), (1, 1)} iff (x0 - x1) - (y0 - y1) is divisible by 3.
  const rca::Lattice L(2, {{3, 0}, {1, 1}});
  for (long a = -5; a <= 5; ++a) {
    for (long b = -5; b <= 5; ++b) {
      const bool same = (((a - b) % 3) + 3) % 3 == 0;
      CHECK((L.reduced({a, b}) == L.reduced({0, 0})) == same);
    }
  }
}

TEST_CASE("lattice errors") {
  CHECK_THROWS_AS(rca::Lattice(2, {{1, 2, 3}}), rca::DomainError);
  const rca::Lattice L(2, {{1, 0}});
  std::vector<long> bad{1};
  CHECK_THROWS_AS(L.reduce(bad), rca::DomainError);
}
