#include <catch_amalgamated.hpp>

#include <fstream>
#include <regex>
#include <sstream>

#include "oracles.hpp"
#include "rca/fixtures.hpp"

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(RCA_FIXTURE_DIR) + "/" + name + ".txt");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

rca::FixtureReport verify_text(const std::string& text) {
  std::istringstream in(text);
  return rca::verify_fixture(rca::parse_fixture("variant", in));
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("both fixtures verify") {
  for (const auto& name : rca::fixture_names()) {
    INFO(name);
    const auto f = rca::load_fixture(name);
    const auto rep = rca::verify_fixture(f);
    INFO(rca::to_text(rep));
    CHECK(rep.passed());
    CHECK(rep.count("identity") > 0);
    CHECK(rep.count("well-defined") > 0);
    CHECK(rep.count("specialization") > 0);
  }
  CHECK(rca::load_fixture("D5_2").undeformed.arrows.size() == 12);
  CHECK(rca::load_fixture("D5_2").deformed.arrows.size() == 12);
  CHECK(rca::load_fixture("nonquotient_minus4").undeformed.arrows.size() == 16);
  CHECK(rca::load_fixture("nonquotient_minus4").deformed.arrows.size() == 16);
}

TEST_CASE("fixture identities by linear algebra") {
  // Homogeneous weights: t = 1, X_i = Y_i = 2.
  const auto f = rca::load_fixture("D5_2");
  const auto& R = f.undeformed.ring;
  CHECK(oracle::weighted_member(f.undeformed.relations, R.parse("Y3*X2 - t^2*X3"), {1, 2, 2, 2, 2, 2, 2}));
  CHECK_FALSE(oracle::weighted_member(f.undeformed.relations, R.parse("Y3*X2 - t^2*Y3"), {1, 2, 2, 2, 2, 2, 2}));
  const auto& S = f.deformed.ring;
  const std::vector<long> w{1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2};
  CHECK(oracle::weighted_member(f.deformed.relations, S.parse("Y3*X2 - t1*t1'*X3"), w));
  CHECK(oracle::weighted_member(f.deformed.relations, S.parse("X3*Y1 - t2*t2'*Y3"), w));
}

TEST_CASE("verbatim deformed relations of the determinantal example fail") {
  auto text = read_fixture("D5_2");
  text = replace(text, "X1 - t2*t2'", "X1 - t1*t1'");
  text = replace(text, "Y2 - t1*t1'", "Y2 - t2*t2'");
  const auto rep = verify_text(text);
  CHECK_FALSE(rep.passed());
  CHECK(rep.count("well-defined", true) > 0);
}

TEST_CASE("verbatim alternative label over Y2 fails") {
  const auto base = read_fixture("D5_2");
  const auto a = verify_text(replace(base, "M- -> M1 : X3/t = t*Y3/Y1", "M- -> M1 : X3/t = t*Y3/Y2"));
  CHECK(a.count("identity", true) == 1);
  const auto b = verify_text(replace(base, "M- -> M1 : X3/t2 = t2'*Y3/Y1", "M- -> M1 : X3/t2 = t2'*Y3/Y2"));
  CHECK(b.count("identity", true) == 1);
}

TEST_CASE("broken arrows are detected") {
  const auto base = read_fixture("D5_2");
  const auto rep = verify_text(replace(base, "M0 -> M+ : t\n", "M0 -> M+ : 1\n"));
  CHECK(rep.count("well-defined", true) > 0);
}

TEST_CASE("lambda parameter") {
  const auto f = rca::load_fixture("nonquotient_minus4");
  CHECK(f.parameters.at("lambda") == 2);
  const auto g = rca::load_fixture("nonquotient_minus4", RCA_FIXTURE_DIR, rca::Rational(3));
  CHECK(g.parameters.at("lambda") == 3);
  CHECK(rca::verify_fixture(g).passed());
  CHECK_THROWS_AS(rca::load_fixture("nonquotient_minus4", RCA_FIXTURE_DIR, rca::Rational(0)), rca::DomainError);
  CHECK_THROWS_AS(rca::load_fixture("nonquotient_minus4", RCA_FIXTURE_DIR, rca::Rational(1)), rca::DomainError);
  CHECK_THROWS_AS(rca::load_fixture("D5_2", RCA_FIXTURE_DIR, rca::Rational(2)), rca::DomainError);
}

TEST_CASE("malformed fixtures are rejected") {
  CHECK_THROWS_AS(rca::load_fixture("no_such_fixture"), rca::DomainError);
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return rca::parse_fixture("bad", in);
  };
  CHECK_THROWS_AS(parse("[variables]\nx\n[bogus]\n"), rca::DomainError);
  CHECK_THROWS_AS(parse("x\n"), rca::DomainError);
  CHECK_THROWS_AS(parse("[variables\nx\n"), rca::DomainError);
  CHECK_THROWS_AS(parse("[variables]\nx\n[modules]\nM0 1\n[deformed variables]\nx\n"), rca::DomainError);
  CHECK_THROWS_AS(parse("[variables]\nx\n[modules]\nM0: 1\n[arrows]\nM0 -> M9 : x\n[deformed variables]\nx\n"),
                  rca::DomainError);
  CHECK_THROWS_AS(parse("[variables]\nx\n[relations]\nx + y\n[deformed variables]\nx\n"), rca::DomainError);
}

TEST_CASE("report serializations") {
  const auto rep = rca::verify_fixture(rca::load_fixture("D5_2"));
  const auto j = rca::to_json(rep);
  CHECK(j["passed"] == true);
  CHECK(std::regex_search(rca::to_text(rep), std::regex("PASS")));
}
