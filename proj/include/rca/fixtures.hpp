#pragma once

// Golden presentations of non-type-A examples, read from text files, with Gröbner-backed
// verification of every label identity, every arrow and the specialization map.
//
// File format (one item per line, '#' starts a comment):
//   [parameters]            name = rational        (constants usable in polynomials)
//   [variables]             whitespace-separated names
//   [relations]             one polynomial per line
//   [modules]               Name: g1, g2 ~ h1, h2  (isomorphic representatives, canonical first)
//   [arrows]                Src -> Dst : n/d = n2/d2 = ...   ("inc" is 1/1)
//   [deformed variables] [deformed relations] [deformed modules] [deformed arrows]
//   [specialization]        deformed_var -> undeformed polynomial (unlisted names map to themselves)

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rca/errors.hpp"
#include "rca/groebner.hpp"
#include "rca/polynomial.hpp"
#include "rca/rational.hpp"

#ifndef RCA_FIXTURE_DIR
#define RCA_FIXTURE_DIR "fixtures"
#endif

namespace rca {

struct FixtureModule {
  std::string name;
  std::vector<std::vector<Polynomial>> representatives;
  std::vector<std::string> text;
  const std::vector<Polynomial>& canonical() const { return representatives.front(); }
};

struct FixtureArrow {
  int src = 0;
  int dst = 0;
  std::vector<Fraction> labels;  // equal as elements of the fraction field
  std::string text;
};

struct FixtureLayer {
  PolyRing ring;
  std::vector<Polynomial> relations;
  std::vector<FixtureModule> modules;
  std::vector<FixtureArrow> arrows;

  int module_index(const std::string& name) const {
    for (std::size_t i = 0; i < modules.size(); ++i) {
      if (modules[i].name == name) return static_cast<int>(i);
    }
    throw DomainError("unknown vertex '" + name + "'");
  }
};

struct GoldenFixture {
  std::string name;
  std::map<std::string, Rational> parameters;
  FixtureLayer undeformed;
  FixtureLayer deformed;
  std::vector<std::optional<Polynomial>> specialization;  // deformed variable -> undeformed polynomial
};

namespace detail {

inline std::string trim_copy(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

inline std::vector<std::string> split(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto at = s.find(sep, start);
    out.push_back(trim_copy(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
    if (at == std::string_view::npos) break;
    start = at + sep.size();
  }
  return out;
}

/// Splits on top-level occurrences of `sep` (outside parentheses).
inline std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == sep && depth == 0)) {
      out.push_back(trim_copy(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

/// Parses polynomials over `vars` in which parameter names stand for rational constants.
class ParameterizedParser {
 public:
  ParameterizedParser(const PolyRing& vars, const std::map<std::string, Rational>& params) : vars_(vars) {
    for (const auto& name : vars.names()) extended_.add_variable(name);
    for (const auto& [name, value] : params) {
      extended_.add_variable(name);
      values_.push_back(value);
    }
  }

  Polynomial parse(std::string_view text) const { return project(extended_.parse(text)); }

  Fraction parse_fraction(std::string_view text) const {
    auto f = extended_.parse_fraction(text);
    return {project(f.numerator), project(f.denominator)};
  }

 private:
  Polynomial project(const Polynomial& p) const {
    const std::size_t n = vars_.nvars();
    std::vector<std::optional<Polynomial>> map;
    for (std::size_t i = 0; i < n; ++i) map.emplace_back(Polynomial::variable(n, i));
    for (const auto& v : values_) map.emplace_back(Polynomial::constant(n, v));
    return substitute(p, map, n);
  }

  const PolyRing& vars_;
  PolyRing extended_;
  std::vector<Rational> values_;
};

}  // namespace detail

inline GoldenFixture parse_fixture(std::string name, std::istream& in,
                                   const std::map<std::string, Rational>& overrides = {}) {
  GoldenFixture f;
  f.name = std::move(name);
  std::map<std::string, std::vector<std::string>> sections;
  std::string section, line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = detail::trim_copy(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw DomainError("malformed section header at line " + std::to_string(lineno));
      section = line.substr(1, line.size() - 2);
      sections[section];
      continue;
    }
    if (section.empty()) throw DomainError("content before the first section at line " + std::to_string(lineno));
    sections[section].push_back(line);
  }
  static const std::vector<std::string> known{"parameters",         "variables",          "relations",
                                              "modules",            "arrows",             "deformed variables",
                                              "deformed relations", "deformed modules",   "deformed arrows",
                                              "specialization"};
  for (const auto& [s, lines] : sections) {
    if (std::find(known.begin(), known.end(), s) == known.end()) throw DomainError("unknown section [" + s + "]");
  }

  for (const auto& l : sections["parameters"]) {
    auto parts = detail::split(l, "=");
    if (parts.size() != 2) throw DomainError("malformed parameter line '" + l + "'");
    f.parameters[parts[0]] = parse_rational(parts[1]);
  }
  for (const auto& [k, v] : overrides) {
    if (!f.parameters.count(k)) throw DomainError("fixture " + f.name + " has no parameter '" + k + "'");
    f.parameters[k] = v;
  }

  auto load_layer = [&](FixtureLayer& layer, const std::string& prefix) {
    for (const auto& l : sections[prefix + "variables"]) {
      std::istringstream words(l);
      std::string w;
      while (words >> w) layer.ring.add_variable(w);
    }
    if (layer.ring.nvars() == 0) throw DomainError("fixture " + f.name + " has no [" + prefix + "variables]");
    const detail::ParameterizedParser parser(layer.ring, f.parameters);
    for (const auto& l : sections[prefix + "relations"]) layer.relations.push_back(parser.parse(l));
    for (const auto& l : sections[prefix + "modules"]) {
      auto colon = l.find(':');
      if (colon == std::string::npos) throw DomainError("malformed module line '" + l + "'");
      FixtureModule m;
      m.name = detail::trim_copy(std::string_view(l).substr(0, colon));
      for (const auto& rep : detail::split(std::string_view(l).substr(colon + 1), "~")) {
        std::vector<Polynomial> gens;
        for (const auto& g : detail::split_top(rep, ',')) gens.push_back(parser.parse(g));
        m.representatives.push_back(std::move(gens));
        m.text.push_back("(" + rep + ")");
      }
      layer.modules.push_back(std::move(m));
    }
    for (const auto& l : sections[prefix + "arrows"]) {
      auto colon = l.find(':');
      auto arrow = l.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow > colon) {
        throw DomainError("malformed arrow line '" + l + "'");
      }
      FixtureArrow a;
      a.src = layer.module_index(detail::trim_copy(std::string_view(l).substr(0, arrow)));
      a.dst = layer.module_index(detail::trim_copy(std::string_view(l).substr(arrow + 2, colon - arrow - 2)));
      a.text = detail::trim_copy(std::string_view(l).substr(colon + 1));
      for (const auto& lab : detail::split_top(a.text, '=')) a.labels.push_back(parser.parse_fraction(lab));
      layer.arrows.push_back(std::move(a));
    }
  };
  load_layer(f.undeformed, "");
  load_layer(f.deformed, "deformed ");

  const detail::ParameterizedParser target(f.undeformed.ring, f.parameters);
  f.specialization.resize(f.deformed.ring.nvars());
  for (const auto& l : sections["specialization"]) {
    auto parts = detail::split(l, "->");
    if (parts.size() != 2) throw DomainError("malformed specialization line '" + l + "'");
    f.specialization.at(f.deformed.ring.index(parts[0])) = target.parse(parts[1]);
  }
  for (std::size_t i = 0; i < f.deformed.ring.nvars(); ++i) {
    if (!f.specialization[i]) f.specialization[i] = f.undeformed.ring.var(f.deformed.ring.name(i));
  }
  return f;
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"D5_2", "nonquotient_minus4"};
  return names;
}

/// Loads fixtures/<name>.txt; `lambda` overrides the parameter of that name when present.
inline GoldenFixture load_fixture(const std::string& name, const std::filesystem::path& dir = RCA_FIXTURE_DIR,
                                  std::optional<Rational> lambda = std::nullopt) {
  const auto& names = fixture_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw DomainError("unknown fixture '" + name + "'");
  const auto path = dir / (name + ".txt");
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open fixture file " + path.string());
  std::map<std::string, Rational> overrides;
  if (lambda) {
    if (*lambda == 0 || *lambda == 1) throw DomainError("lambda must differ from 0 and 1");
    overrides["lambda"] = *lambda;
  }
  return parse_fixture(name, in, overrides);
}

// ---------------------------------------------------------------------------------------------
// Verification

struct FixtureCheck {
  std::string kind;  // identity | well-defined | identification | specialization
  std::string layer;  // undeformed | deformed
  std::string item;
  bool passed = false;
};

struct FixtureReport {
  std::string name;
  std::vector<FixtureCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  std::size_t count(const std::string& kind, bool only_failed = false) const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) {
      return c.kind == kind && (!only_failed || !c.passed);
    }));
  }
};

namespace detail {

inline std::string arrow_name(const FixtureLayer& L, const FixtureArrow& a) {
  return L.modules[a.src].name + " -> " + L.modules[a.dst].name + " : " + a.text;
}

inline void verify_layer(const FixtureLayer& L, const std::string& layer, FixtureReport& report) {
  const auto order = MonomialOrder::degrevlex();
  const std::size_t n = L.ring.nvars();
  const auto ideal = buchberger(L.relations, order, n);

  // Isomorphic representatives: R_k = (g_k0 / g_00) * R_0 generator by generator.
  for (const auto& m : L.modules) {
    const auto& base = m.canonical();
    for (std::size_t k = 1; k < m.representatives.size(); ++k) {
      const auto& rep = m.representatives[k];
      bool ok = rep.size() == base.size();
      for (std::size_t i = 1; ok && i < rep.size(); ++i) ok = ideal.contains(rep[i] * base[0] - rep[0] * base[i]);
      report.checks.push_back({"identification", layer, m.name + " " + m.text[0] + " ~ " + m.text[k], ok});
    }
  }
  for (const auto& a : L.arrows) {
    const auto& first = a.labels.front();
    for (std::size_t k = 1; k < a.labels.size(); ++k) {
      const auto& other = a.labels[k];
      const bool ok = ideal.contains(first.numerator * other.denominator - other.numerator * first.denominator);
      report.checks.push_back({"identity", layer, arrow_name(L, a) + " [" + L.ring.format(first) + " = " +
                                                      L.ring.format(other) + "]", ok});
    }
    std::vector<Polynomial> gens = L.relations;
    for (const auto& t : L.modules[a.dst].canonical()) gens.push_back(first.denominator * t);
    const auto target = buchberger(gens, order, n);
    bool ok = !ideal.contains(first.denominator);
    for (const auto& g : L.modules[a.src].canonical()) ok = ok && target.contains(first.numerator * g);
    report.checks.push_back({"well-defined", layer, arrow_name(L, a), ok});
  }
}

}  // namespace detail

inline FixtureReport verify_fixture(const GoldenFixture& f) {
  FixtureReport report;
  report.name = f.name;
  detail::verify_layer(f.undeformed, "undeformed", report);
  detail::verify_layer(f.deformed, "deformed", report);

  const auto& U = f.undeformed;
  const auto& V = f.deformed;
  const std::size_t n = U.ring.nvars();
  const auto ideal = buchberger(U.relations, MonomialOrder::degrevlex(), n);
  auto special = [&](const Polynomial& p) { return substitute(p, f.specialization, n); };

  for (const auto& rel : V.relations) {
    report.checks.push_back({"specialization", "deformed", "relation " + V.ring.format(rel), ideal.contains(special(rel))});
  }
  if (V.modules.size() != U.modules.size()) {
    report.checks.push_back({"specialization", "deformed", "vertex count", false});
  } else {
    for (std::size_t i = 0; i < V.modules.size(); ++i) {
      const auto& dv = V.modules[i].canonical();
      const auto& uv = U.modules[i].canonical();
      bool ok = dv.size() == uv.size();
      for (std::size_t k = 0; ok && k < dv.size(); ++k) ok = ideal.contains(special(dv[k]) - uv[k]);
      report.checks.push_back({"specialization", "deformed", "module " + V.modules[i].name + " -> " + U.modules[i].name, ok});
    }
  }
  if (V.arrows.size() != U.arrows.size()) {
    report.checks.push_back({"specialization", "deformed", "arrow count", false});
  } else {
    for (std::size_t k = 0; k < V.arrows.size(); ++k) {
      const auto& d = V.arrows[k].labels.front();
      const auto& u = U.arrows[k].labels.front();
      const bool same_ends = V.arrows[k].src == U.arrows[k].src && V.arrows[k].dst == U.arrows[k].dst;
      const bool ok = same_ends && ideal.contains(special(d.numerator) * u.denominator - u.numerator * special(d.denominator));
      report.checks.push_back({"specialization", "deformed", "arrow " + detail::arrow_name(V, V.arrows[k]), ok});
    }
  }
  return report;
}

inline std::string to_text(const FixtureReport& r) {
  std::ostringstream os;
  os << "fixture " << r.name << "\n";
  for (const auto& c : r.checks) {
    os << (c.passed ? "  ok    " : "  FAIL  ") << c.kind << " (" << c.layer << "): " << c.item << "\n";
  }
  for (const std::string kind : {"identity", "well-defined", "identification", "specialization"}) {
    os << kind << ": " << (r.count(kind) - r.count(kind, true)) << "/" << r.count(kind) << " passed\n";
  }
  os << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

inline nlohmann::json to_json(const FixtureReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"kind", c.kind}, {"layer", c.layer}, {"item", c.item}, {"passed", c.passed}});
  }
  return {{"name", r.name}, {"passed", r.passed()}, {"checks", checks}};
}

}  // namespace rca
