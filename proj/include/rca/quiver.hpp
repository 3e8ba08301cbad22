#pragma once

// The reconstruction algebra End(⊕ M_i) as a quiver with relations.
//
// Hom spaces between normalized monomial modules are sets of Laurent monomials. Arrows are
// the Hom generators of positive degree that do not factor through another vertex; relations
// are coincidences between parallel paths, reduced to a minimal generating set of the
// two-sided ideal degree by degree.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "rca/errors.hpp"
#include "rca/monomial.hpp"
#include "rca/specials.hpp"

namespace rca {

/// f maps M into N: f*g lies in N for every generator g of M.
inline bool is_hom(const MonomialModule& M, const MonomialModule& N, const LaurentMonomial& f) {
  return std::all_of(M.generators().begin(), M.generators().end(),
                     [&](const auto& g) { return N.contains(f + g); });
}

/// Minimal generators, as a module over the invariant semigroup, of the Hom elements M -> N of
/// total degree <= bound, found by scanning the box [-bound, bound]^2. Sorted by degree.
inline std::vector<LaurentMonomial> hom_generators(const MonomialModule& M, const MonomialModule& N, long bound) {
  if (!(M.parent() == N.parent())) throw DomainError("modules over different semigroups");
  if (bound < 1) throw DomainError("hom search bound must be at least 1");
  const auto& s = M.parent();
  std::vector<LaurentMonomial> homs;
  for (long p = -bound; p <= bound; ++p) {
    for (long q = -bound; p + q <= bound && q <= bound; ++q) {
      if (is_hom(M, N, {p, q})) homs.push_back({p, q});
    }
  }
  std::vector<LaurentMonomial> gens;
  for (const auto& f : homs) {
    bool multiple = std::any_of(homs.begin(), homs.end(), [&](const auto& h) {
      const auto d = f - h;
      return !d.is_identity() && semigroup_member(s, d);
    });
    if (!multiple) gens.push_back(f);
  }
  std::sort(gens.begin(), gens.end(), ByDegree{});
  return gens;
}

/// Largest degree of a minimal Hom generator M -> N. Valid for saturated modules, where Hom is
/// the full weight class w_N - w_M in N^2 and its minimal elements lie in [0, r-1]^2.
inline long hom_certification_degree(const MonomialModule& M, const MonomialModule& N) {
  if (!M.is_saturated() || !N.is_saturated()) {
    throw VerificationFailure("module is not saturated; Hom generator bound cannot be certified");
  }
  const auto& s = M.parent();
  const long w = ((N.weight() - M.weight()) % s.r + s.r) % s.r;
  long best = 0;
  for (long c = 0; c < s.r; ++c) {
    for (long d = 0; d < s.r; ++d) {
      if (s.weight({c, d}) != w) continue;
      // minimal in the weight class: subtracting any nonzero semigroup element leaves N^2
      bool minimal = true;
      for (long c2 = 0; c2 <= c && minimal; ++c2) {
        for (long d2 = 0; d2 <= d && minimal; ++d2) {
          LaurentMonomial sub{c - c2, d - d2};
          if (!sub.is_identity() && semigroup_member(s, sub)) minimal = false;
        }
      }
      if (minimal) best = std::max(best, c + d);
    }
  }
  return best;
}

/// A vertex of a quiver: a module class, or a named fixture vertex.
struct QuiverVertex {
  std::string name;
  std::vector<std::string> representatives;
  std::optional<MonomialModule> normalized;
};

struct QuiverArrow {
  int id = 0;
  int src = 0;
  int dst = 0;
  std::string label;                      // normalized monomial, or a fraction in ring variables
  std::string zlabel;                     // in generator notation, "a/b=c/d"
  long degree = 0;
  std::optional<LaurentMonomial> monomial;  // set for undeformed type-A quivers
};

/// Path = sequence of arrow ids, traversed left to right.
using Path = std::vector<int>;

struct PathRelation {
  Path lhs;
  Path rhs;
  long degree = 0;
};

/// Why a Hom generator is not an arrow: f = (first: src -> via) followed by (second: via -> dst).
struct FactorizationWitness {
  int src = 0;
  int dst = 0;
  LaurentMonomial element;
  int via = 0;
  LaurentMonomial first;
  LaurentMonomial second;
};

struct QuiverPresentation {
  std::string name;  // "1/12(1,7)" or fixture name
  long r = 0;
  long a = 0;
  bool deformed = false;
  std::vector<QuiverVertex> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<PathRelation> relations;
  std::optional<long> min_relation_degree;
  long hom_bound = 0;
  long path_bound = 0;
  std::vector<FactorizationWitness> witnesses;

  /// Number of arrows src -> dst.
  int count(int src, int dst) const {
    return static_cast<int>(std::count_if(arrows.begin(), arrows.end(),
                                          [&](const auto& x) { return x.src == src && x.dst == dst; }));
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> m(vertices.size(), std::vector<int>(vertices.size(), 0));
    for (const auto& x : arrows) ++m[x.src][x.dst];
    return m;
  }

  long path_degree(const Path& p) const {
    long d = 0;
    for (int id : p) d += arrows.at(id).degree;
    return d;
  }
};

/// Computed arrows of the quiver on `classes`, with the witness for every excluded Hom generator.
struct ArrowSet {
  std::vector<QuiverArrow> arrows;
  std::vector<FactorizationWitness> witnesses;
};

inline ArrowSet arrows(const std::vector<SpecialModuleClass>& classes, long bound) {
  const std::size_t n = classes.size();
  if (n == 0) return {};
  const auto& s = classes.front().normalized.parent();
  const auto loops = minimal_semigroup_generators(s);

  auto hom = [&](std::size_t i, std::size_t j, const LaurentMonomial& f) {
    return is_hom(classes[i].normalized, classes[j].normalized, f);
  };

  ArrowSet out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& M = classes[i].normalized;
      const auto& N = classes[j].normalized;
      const long needed = hom_certification_degree(M, N);
      if (bound < needed) {
        throw BoundExhausted("hom bound " + std::to_string(bound) + " is below the generator degree " +
                             std::to_string(needed) + " of Hom(M" + std::to_string(i) + ", M" +
                             std::to_string(j) + ")");
      }
      auto gens = hom_generators(M, N, bound);
      std::vector<LaurentMonomial> candidates;
      for (const auto& f : gens) {
        if (f.degree() == 0) {
          if (i != j || !f.is_identity()) {
            throw VerificationFailure("unexpected degree-0 homomorphism M" + std::to_string(i) + " -> M" +
                                      std::to_string(j));
          }
          continue;
        }
        candidates.push_back(f);
      }
      if (i == j) {
        if (gens.size() != 1 || !gens.front().is_identity()) {
          throw VerificationFailure("End(M" + std::to_string(i) + ") is not generated by the identity");
        }
        candidates.insert(candidates.end(), loops.begin(), loops.end());
      }
      for (const auto& f : candidates) {
        if (!f.nonnegative()) throw VerificationFailure("Hom element with negative exponent: " + to_string(f));
        std::optional<FactorizationWitness> witness;
        for (std::size_t k = 0; k < n && !witness; ++k) {
          for (long hx = 0; hx <= f.x && !witness; ++hx) {
            for (long hy = 0; hy <= f.y && !witness; ++hy) {
              LaurentMonomial h{hx, hy};
              if (h.is_identity() || h == f) continue;
              if (hom(i, k, h) && hom(k, j, f - h)) {
                witness = FactorizationWitness{static_cast<int>(i), static_cast<int>(j), f, static_cast<int>(k), h, f - h};
              }
            }
          }
        }
        if (witness) {
          out.witnesses.push_back(*witness);
        } else {
          QuiverArrow a;
          a.src = static_cast<int>(i);
          a.dst = static_cast<int>(j);
          a.monomial = f;
          a.label = to_string(f);
          a.degree = f.degree();
          out.arrows.push_back(a);
        }
      }
    }
  }
  std::sort(out.arrows.begin(), out.arrows.end(), [](const QuiverArrow& p, const QuiverArrow& q) {
    if (p.src != q.src) return p.src < q.src;
    if (p.dst != q.dst) return p.dst < q.dst;
    return ByDegree{}(*p.monomial, *q.monomial);
  });
  for (std::size_t k = 0; k < out.arrows.size(); ++k) out.arrows[k].id = static_cast<int>(k);
  return out;
}

// ---------------------------------------------------------------------------------------------
// Path relations

/// Input to the path-relation engine: every arrow carries an integer evaluation vector; a
/// path's evaluation is the sum. `canonicalize` maps a vector to a canonical representative of
/// its equality class (identity for exact monomial evaluations).
struct PathAlgebraData {
  int vertices = 0;
  std::vector<int> src, dst;
  std::vector<long> degree;
  std::vector<std::vector<long>> value;
  std::function<void(std::vector<long>&)> canonicalize;
};

struct RelationResult {
  std::vector<PathRelation> relations;
  std::optional<long> min_degree;
  std::size_t paths_examined = 0;
};

namespace detail {

struct VectorHash {
  std::size_t operator()(const std::vector<long>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (long x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace detail

/// Minimal binomial relations among paths of degree <= max_degree.
///
/// Equal paths have equal degree, so the relation ideal is graded. In degree d, two paths are
/// equal modulo lower relations iff they share a first arrow and have equivalent tails, or share
/// a last arrow and have equivalent initial segments; remaining components within an evaluation
/// class are joined by new relations.
inline RelationResult path_relations(const PathAlgebraData& q, long max_degree) {
  const int narrows = static_cast<int>(q.src.size());
  for (int a = 0; a < narrows; ++a) {
    if (q.degree[a] < 1) throw DomainError("arrows must have positive degree");
  }

  // Paths form a trie: (parent = path without its last arrow, last arrow).
  struct Node {
    int parent;
    int arrow;
    int start;
    int end;
    long degree;
    int length;
    int group;
    int tail;  // path without its first arrow, -1 for single arrows
  };
  std::vector<Node> nodes;
  std::vector<std::unordered_map<int, int>> children;
  std::vector<int> roots(narrows, -1);

  std::unordered_map<std::vector<long>, int, detail::VectorHash> group_ids;
  auto group_of = [&](int start, int end, long degree, std::vector<long> v) {
    q.canonicalize(v);
    v.push_back(start);
    v.push_back(end);
    v.push_back(degree);
    auto [it, inserted] = group_ids.emplace(std::move(v), static_cast<int>(group_ids.size()));
    return it->second;
  };

  std::vector<std::vector<long>> values;
  std::vector<int> frontier;
  for (int a = 0; a < narrows; ++a) {
    if (q.degree[a] > max_degree) continue;
    roots[a] = static_cast<int>(nodes.size());
    nodes.push_back({-1, a, q.src[a], q.dst[a], q.degree[a], 1, group_of(q.src[a], q.dst[a], q.degree[a], q.value[a]), -1});
    children.emplace_back();
    values.push_back(q.value[a]);
    frontier.push_back(roots[a]);
  }
  // Breadth-first by length, so a path's tail is created before the path itself.
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int p : frontier) {
      for (int a = 0; a < narrows; ++a) {
        if (q.src[a] != nodes[p].end || nodes[p].degree + q.degree[a] > max_degree) continue;
        std::vector<long> v = values[p];
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += q.value[a][k];
        const int tail_parent = nodes[p].tail;
        const int tail = tail_parent < 0 ? roots[a] : children[tail_parent].at(a);
        const int id = static_cast<int>(nodes.size());
        Node node{p, a, nodes[p].start, q.dst[a], nodes[p].degree + q.degree[a], nodes[p].length + 1, 0, tail};
        node.group = group_of(node.start, node.end, node.degree, v);
        nodes.push_back(node);
        children.emplace_back();
        children[p].emplace(a, id);
        values.push_back(std::move(v));
        next.push_back(id);
      }
    }
    frontier = std::move(next);
  }
  values.clear();

  auto sequence = [&](int id) {
    Path p(nodes[id].length);
    for (int k = nodes[id].length - 1; k >= 0; --k, id = nodes[id].parent) p[k] = nodes[id].arrow;
    return p;
  };
  auto first_arrow = [&](int id) {
    while (nodes[id].parent >= 0) id = nodes[id].parent;
    return nodes[id].arrow;
  };

  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = root(x);
    y = root(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };

  std::vector<int> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    if (nodes[x].degree != nodes[y].degree) return nodes[x].degree < nodes[y].degree;
    return nodes[x].group < nodes[y].group;
  });

  RelationResult result;
  result.paths_examined = nodes.size();
  std::unordered_map<std::int64_t, int> left_key, right_key;
  auto key = [](int a, int b) { return (static_cast<std::int64_t>(a) << 32) | static_cast<std::uint32_t>(b); };

  for (std::size_t pos = 0; pos < order.size();) {
    std::size_t end = pos;
    const long d = nodes[order[pos]].degree;
    while (end < order.size() && nodes[order[end]].degree == d) ++end;

    // Lower-degree components are final here: unions below only touch degree-d paths.
    for (std::size_t k = pos; k < end; ++k) {
      const int id = order[k];
      if (nodes[id].length < 2) continue;
      auto [l, lnew] = left_key.emplace(key(first_arrow(id), root(nodes[id].tail)), id);
      if (!lnew) unite(id, l->second);
      auto [r, rnew] = right_key.emplace(key(root(nodes[id].parent), nodes[id].arrow), id);
      if (!rnew) unite(id, r->second);
    }
    for (std::size_t g = pos; g < end;) {
      std::size_t gend = g;
      while (gend < end && nodes[order[gend]].group == nodes[order[g]].group) ++gend;
      std::map<int, int> component_rep;  // root -> first member in canonical order
      for (std::size_t k = g; k < gend; ++k) component_rep.emplace(root(order[k]), order[k]);
      if (component_rep.size() > 1) {
        auto it = component_rep.begin();
        const int anchor = it->second;
        for (++it; it != component_rep.end(); ++it) {
          result.relations.push_back({sequence(anchor), sequence(it->second), d});
        }
        for (const auto& [rt, id] : component_rep) unite(anchor, id);
      }
      g = gend;
    }
    pos = end;
  }
  for (const auto& rel : result.relations) {
    if (!result.min_degree || rel.degree < *result.min_degree) result.min_degree = rel.degree;
  }
  return result;
}

/// Relations of a monomial-labelled quiver (every arrow has `monomial` set).
inline RelationResult relations(const std::vector<QuiverArrow>& arrow_list, int vertex_count, long max_path_degree) {
  PathAlgebraData q;
  q.vertices = vertex_count;
  for (const auto& a : arrow_list) {
    if (!a.monomial) throw DomainError("relations() needs monomial arrow labels");
    q.src.push_back(a.src);
    q.dst.push_back(a.dst);
    q.degree.push_back(a.degree);
    q.value.push_back({a.monomial->x, a.monomial->y});
  }
  q.canonicalize = [](std::vector<long>&) {};
  return path_relations(q, max_path_degree);
}

// ---------------------------------------------------------------------------------------------
// Generator-notation labels

namespace detail {

/// All ways to write the monomial `target` as a product of the Z generators, ordered by
/// number of factors and then with lower-index generators first. At most `limit` results.
inline std::vector<Exponents> z_expressions(const LaurentMonomial& target, const std::vector<LaurentMonomial>& z,
                                            std::size_t limit = 64) {
  std::vector<Exponents> out;
  if (!target.nonnegative()) return out;
  Exponents e(z.size(), 0);
  std::function<void(std::size_t, LaurentMonomial)> rec = [&](std::size_t k, LaurentMonomial rest) {
    if (out.size() >= limit * 8) return;
    if (k == z.size()) {
      if (rest.is_identity()) out.push_back(e);
      return;
    }
    for (int m = 0;; ++m) {
      LaurentMonomial left = rest - z[k] * m;
      if (!left.nonnegative()) break;
      e[k] = m;
      rec(k + 1, left);
      if (z[k].is_identity()) break;
    }
    e[k] = 0;
  };
  rec(0, target);
  std::sort(out.begin(), out.end(), [](const Exponents& p, const Exponents& q) {
    if (total_degree(p) != total_degree(q)) return total_degree(p) < total_degree(q);
    return p > q;
  });
  if (out.size() > limit) out.resize(limit);
  return out;
}

inline std::string z_fraction(const PolyRing& zring, Exponents num, Exponents den) {
  for (std::size_t i = 0; i < num.size(); ++i) {
    const int c = std::min(num[i], den[i]);
    num[i] -= c;
    den[i] -= c;
  }
  const bool trivial_den = total_degree(den) == 0;
  if (trivial_den && total_degree(num) == 0) return "inc";
  if (trivial_den) return zring.format_monomial(num);
  return zring.format_monomial(num) + "/" + zring.format_monomial(den);
}

}  // namespace detail

/// The unnormalized map between canonical representatives induced by the normalized label f.
inline LaurentMonomial representative_map(const SpecialModuleClass& src, const SpecialModuleClass& dst,
                                          const LaurentMonomial& f) {
  return f + dst.canonical().shift() - src.canonical().shift();
}

/// Label such as "Z3/Z2=Z4/Z3^2": image over preimage for each generator of the source representative.
inline std::string z_label(const SpecialModuleClass& src, const SpecialModuleClass& dst, const LaurentMonomial& f,
                           const PolyRing& zring, const std::vector<LaurentMonomial>& z) {
  const LaurentMonomial F = representative_map(src, dst, f);
  std::vector<std::string> parts;
  for (const auto& g : src.canonical().z_generators) {
    const auto image = F + detail::realize(g, z);
    const auto exprs = detail::z_expressions(image, z, 1);
    if (exprs.empty()) throw VerificationFailure("image " + to_string(image) + " is not an invariant monomial");
    const auto part = detail::z_fraction(zring, exprs.front(), g);
    if (std::find(parts.begin(), parts.end(), part) == parts.end()) parts.push_back(part);
  }
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "=" : "") + parts[i];
  return s;
}

/// Undeformed reconstruction-algebra quiver of 1/r(1,a).
inline QuiverPresentation reconstruction_quiver(long r, long a, std::optional<long> hom_bound = std::nullopt,
                                                std::optional<long> path_bound = std::nullopt,
                                                bool with_relations = true) {
  const auto classes = module_classes(r, a);
  const auto P = ring_presentation(r, a);
  const auto z = ring_generators(r, a);

  QuiverPresentation Q;
  Q.name = "1/" + std::to_string(r) + "(1," + std::to_string(a) + ")";
  Q.r = r;
  Q.a = a;
  Q.hom_bound = hom_bound.value_or(2 * r);
  Q.path_bound = path_bound.value_or(3 * r);
  for (const auto& c : classes) {
    QuiverVertex v;
    v.name = "M" + std::to_string(c.class_id);
    for (const auto& rep : c.representatives) v.representatives.push_back(rep.label);
    v.normalized = c.normalized;
    Q.vertices.push_back(std::move(v));
  }
  auto found = arrows(classes, Q.hom_bound);
  Q.arrows = std::move(found.arrows);
  Q.witnesses = std::move(found.witnesses);
  for (auto& x : Q.arrows) x.zlabel = z_label(classes[x.src], classes[x.dst], *x.monomial, P.ring, z);
  if (with_relations) {
    auto rel = relations(Q.arrows, static_cast<int>(Q.vertices.size()), Q.path_bound);
    Q.relations = std::move(rel.relations);
    Q.min_relation_degree = rel.min_degree;
  }
  return Q;
}

// ---------------------------------------------------------------------------------------------
// Serialization

inline nlohmann::json to_json(const QuiverPresentation& Q) {
  using nlohmann::json;
  json vertices = json::array();
  for (std::size_t i = 0; i < Q.vertices.size(); ++i) {
    const auto& v = Q.vertices[i];
    json jv{{"id", i}, {"name", v.name}, {"representatives", v.representatives}};
    if (v.normalized) {
      json gens = json::array();
      for (const auto& g : v.normalized->generators()) gens.push_back({g.x, g.y});
      jv["generators"] = gens;
      jv["grading"] = v.normalized->grading();
    }
    vertices.push_back(std::move(jv));
  }
  json arrow_list = json::array();
  for (const auto& x : Q.arrows) {
    arrow_list.push_back(
        {{"id", x.id}, {"src", x.src}, {"dst", x.dst}, {"label", x.label}, {"zlabel", x.zlabel}, {"degree", x.degree}});
  }
  json rels = json::array();
  for (const auto& rel : Q.relations) rels.push_back({{"lhs", rel.lhs}, {"rhs", rel.rhs}, {"degree", rel.degree}});
  json out{{"name", Q.name},
           {"deformed", Q.deformed},
           {"vertices", vertices},
           {"arrows", arrow_list},
           {"relations", rels},
           {"hom_bound", Q.hom_bound},
           {"path_bound", Q.path_bound}};
  if (Q.r) out["r"] = Q.r, out["a"] = Q.a;
  out["min_relation_degree"] = Q.min_relation_degree ? json(*Q.min_relation_degree) : json(nullptr);
  return out;
}

inline std::string dot_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '"' || c == '\\') o += '\\';
    o += c;
  }
  return o;
}

inline std::string to_dot(const QuiverPresentation& Q) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(Q.name) << "\" {\n";
  for (std::size_t i = 0; i < Q.vertices.size(); ++i) {
    const auto& v = Q.vertices[i];
    std::string label = v.name;
    if (v.normalized) label += " " + to_string(*v.normalized);
    else if (!v.representatives.empty()) label += " " + v.representatives.front();
    os << "  v" << i << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (const auto& x : Q.arrows) {
    os << "  v" << x.src << " -> v" << x.dst << " [label=\"" << dot_escape(x.label) << " (deg " << x.degree
       << ")\"];\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string path_text(const QuiverPresentation& Q, const Path& p) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "." : "") + std::string("a") + std::to_string(p[k]);
  (void)Q;
  return s;
}

inline std::string to_text(const QuiverPresentation& Q) {
  std::ostringstream os;
  os << "quiver " << Q.name << (Q.deformed ? " (deformed)" : "") << "\n";
  os << "vertices:\n";
  for (const auto& v : Q.vertices) {
    os << "  " << v.name;
    if (v.normalized) os << " " << to_string(*v.normalized);
    if (!v.representatives.empty()) {
      os << "  [";
      for (std::size_t k = 0; k < v.representatives.size(); ++k) os << (k ? " ~ " : "") << v.representatives[k];
      os << "]";
    }
    os << "\n";
  }
  os << "arrows:\n";
  for (const auto& x : Q.arrows) {
    os << "  a" << x.id << ": " << Q.vertices[x.src].name << " -> " << Q.vertices[x.dst].name << "  " << x.label;
    if (!x.zlabel.empty() && x.zlabel != x.label) os << "  [" << x.zlabel << "]";
    os << "  (deg " << x.degree << ")\n";
  }
  os << "relations (path degree <= " << Q.path_bound << "):\n";
  for (const auto& rel : Q.relations) {
    os << "  " << path_text(Q, rel.lhs) << " = " << path_text(Q, rel.rhs) << "  (deg " << rel.degree << ")\n";
  }
  if (Q.min_relation_degree) os << "minimal relation degree: " << *Q.min_relation_degree << "\n";
  return os.str();
}

}  // namespace rca
