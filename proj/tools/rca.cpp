// Command-line front end. Exit codes: 0 ok, 1 verification failure, 2 usage or domain error,
// 3 search bound exhausted.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rca/rca.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;
constexpr int kBoundExhausted = 3;

struct Options {
  long r = 0;
  long a = 0;
  bool json = false;
  bool deformed = false;
  std::string format = "text";
  std::optional<long> bound;
  std::optional<long> path_degree;
  std::string fixture;
  std::optional<std::string> lambda;
  std::string fixture_dir = RCA_FIXTURE_DIR;
};

void add_group(CLI::App* cmd, Options& o) {
  cmd->add_option("r", o.r, "group order")->required();
  cmd->add_option("a", o.a, "weight, 0 < a < r, coprime to r")->required();
}

void print(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int run_fraction(const Options& o) {
  const auto cf = rca::hj_expand(o.r, o.a);
  const auto dual = rca::hj_dual(o.r, o.a);
  const long dim = rca::versal_dimension(o.r, o.a);
  if (o.json) {
    print({{"r", o.r}, {"a", o.a}, {"expansion", cf.entries}, {"dual", dual.entries}, {"versal_dimension", dim}});
  } else {
    std::cout << rca::format_entries(cf.entries) << " / dual " << rca::format_entries(dual.entries) << " / dim " << dim
              << "\n";
  }
  return kOk;
}

int run_ring(const Options& o) {
  if (o.deformed) {
    const auto D = rca::deformed_ring(o.r, o.a);
    if (o.json) print(rca::to_json(D));
    else std::cout << rca::to_text(D);
  } else {
    const auto P = rca::ring_presentation(o.r, o.a);
    if (o.json) print(rca::to_json(P));
    else std::cout << rca::to_text(P);
  }
  return kOk;
}

int run_modules(const Options& o) {
  const auto classes = rca::module_classes(o.r, o.a);
  if (o.json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : classes) {
      nlohmann::json gens = nlohmann::json::array();
      for (const auto& g : c.normalized.generators()) gens.push_back({g.x, g.y});
      nlohmann::json reps = nlohmann::json::array();
      for (const auto& rep : c.representatives) reps.push_back(rep.label);
      out.push_back({{"id", c.class_id},
                     {"normalized", rca::to_string(c.normalized)},
                     {"generators", gens},
                     {"grading", c.normalized.grading()},
                     {"representatives", reps}});
    }
    print({{"r", o.r}, {"a", o.a}, {"classes", out}});
    return kOk;
  }
  for (const auto& c : classes) {
    std::cout << "M" << c.class_id << " " << rca::to_string(c.normalized) << "  grading [";
    const auto g = c.normalized.grading();
    for (std::size_t k = 0; k < g.size(); ++k) std::cout << (k ? "," : "") << g[k];
    std::cout << "]  ";
    for (std::size_t k = 0; k < c.representatives.size(); ++k) {
      std::cout << (k ? " ~ " : "") << c.representatives[k].label;
    }
    std::cout << "\n";
  }
  return kOk;
}

int run_quiver(const Options& o) {
  const auto Q = o.deformed ? rca::deformed_quiver(o.r, o.a, o.bound, o.path_degree)
                            : rca::reconstruction_quiver(o.r, o.a, o.bound, o.path_degree);
  if (o.format == "json") print(rca::to_json(Q));
  else if (o.format == "dot") std::cout << rca::to_dot(Q);
  else std::cout << rca::to_text(Q);
  return kOk;
}

int run_verify(const Options& o) {
  const auto rep = rca::verify_group(o.r, o.a, o.bound, o.path_degree);
  if (o.json) print(rca::to_json(rep));
  else std::cout << rca::to_text(rep);
  return rep.passed() ? kOk : kVerificationFailed;
}

int run_golden(const Options& o) {
  std::optional<rca::Rational> lambda;
  if (o.lambda) lambda = rca::parse_rational(*o.lambda);
  const auto f = rca::load_fixture(o.fixture, o.fixture_dir, lambda);
  const auto rep = rca::verify_fixture(f);
  if (o.json) print(rca::to_json(rep));
  else std::cout << rca::to_text(rep);
  return rep.passed() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruction algebras of cyclic quotient surface singularities"};
  app.require_subcommand(1);
  Options o;

  auto* fraction = app.add_subcommand("fraction", "continued fraction expansions and versal dimension");
  add_group(fraction, o);
  fraction->add_flag("--json", o.json, "machine-readable output");

  auto* ring = app.add_subcommand("ring", "presentation of the invariant ring");
  add_group(ring, o);
  ring->add_flag("--deformed", o.deformed, "Artin-component deformation");
  ring->add_flag("--json", o.json, "machine-readable output");

  auto* modules = app.add_subcommand("modules", "special module classes");
  add_group(modules, o);
  modules->add_flag("--json", o.json, "machine-readable output");

  auto* quiver = app.add_subcommand("quiver", "reconstruction algebra as a quiver with relations");
  add_group(quiver, o);
  quiver->add_flag("--deformed", o.deformed, "lift arrows and relations to the Artin-component deformation");
  quiver->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
  quiver->add_option("--bound", o.bound, "Hom search degree bound (default 2r)")->check(CLI::PositiveNumber);
  quiver->add_option("--path-degree", o.path_degree, "path degree bound for relations (default 3r)")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  add_group(verify, o);
  verify->add_flag("--json", o.json, "machine-readable output");
  verify->add_option("--bound", o.bound, "Hom search degree bound (default 2r)")->check(CLI::PositiveNumber);
  verify->add_option("--path-degree", o.path_degree, "path degree bound for relations (default 3r)")->check(CLI::PositiveNumber);

  auto* golden = app.add_subcommand("golden", "load and verify a golden fixture");
  golden->add_option("name", o.fixture)->required()->check(CLI::IsMember(rca::fixture_names()));
  golden->add_option("--lambda", o.lambda, "parameter override p/q");
  golden->add_option("--fixtures", o.fixture_dir, "fixture directory");
  golden->add_flag("--json", o.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*fraction) return run_fraction(o);
    if (*ring) return run_ring(o);
    if (*modules) return run_modules(o);
    if (*quiver) return run_quiver(o);
    if (*verify) return run_verify(o);
    if (*golden) return run_golden(o);
  } catch (const rca::BoundExhausted& e) {
    std::cerr << "bound exhausted: " << e.what() << "\n";
    return kBoundExhausted;
  } catch (const rca::VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
