#pragma once

// Sparse multivariate polynomials over Q with named variables.
//
// A Polynomial is a list of (exponent vector, coefficient) pairs kept in strictly decreasing
// lexicographic order with no zero coefficients. It carries only its variable count; names
// live in a PolyRing, which also parses and prints the text syntax
//
//   Z0*Z2 - Z1^3      3*t1*t1' - X1      Z1^(2)^2*Z3^(1)
//
// where `name^(j)` is a superscripted variable, stored internally as `name_j_`.

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rca/errors.hpp"
#include "rca/rational.hpp"

namespace rca {

/// Exponent vector over a ring's variable table.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Exponents operator+(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Exponents operator-(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

struct Term {
  Exponents exps;
  Rational coeff;

  bool operator==(const Term&) const = default;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.push_back({Exponents(nvars, 0), c});
    return p;
  }

  static Polynomial monomial(Exponents e, const Rational& c = 1) {
    Polynomial p(e.size());
    if (c != 0) p.terms_.push_back({std::move(e), c});
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t index) {
    Exponents e(nvars, 0);
    e.at(index) = 1;
    return monomial(std::move(e));
  }

  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms) {
    std::map<Exponents, Rational, std::greater<>> acc;
    for (auto& t : terms) {
      if (t.exps.size() != nvars) throw DomainError("term has wrong number of variables");
      acc[std::move(t.exps)] += t.coeff;
    }
    Polynomial p(nvars);
    for (auto& [e, c] : acc) {
      if (c != 0) p.terms_.push_back({e, c});
    }
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.front().exps) == 0);
  }

  bool is_monomial() const { return terms_.size() == 1; }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.exps));
    return d;
  }

  bool is_homogeneous(const std::vector<long>& weights) const {
    std::optional<long> w;
    for (const auto& t : terms_) {
      long tw = 0;
      for (std::size_t i = 0; i < nvars_; ++i) tw += weights.at(i) * t.exps[i];
      if (w && *w != tw) return false;
      w = tw;
    }
    return true;
  }

  /// Variables occurring with nonzero exponent.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (const auto& t : terms_) {
        if (t.exps[i] != 0) {
          vars.push_back(i);
          break;
        }
      }
    }
    return vars;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, 1); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, -1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    std::map<Exponents, Rational, std::greater<>> acc;
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) acc[s.exps + t.exps] += s.coeff * t.coeff;
    }
    Polynomial p(a.nvars_);
    for (auto& [e, c] : acc) {
      if (c != 0) p.terms_.push_back({e, c});
    }
    return p;
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c == 0) return Polynomial(p.nvars_);
    Polynomial r = p;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned k) const {
    Polynomial result = constant(nvars_, 1);
    for (unsigned i = 0; i < k; ++i) result *= *this;
    return result;
  }

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  static void check_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw DomainError("polynomials from different rings");
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, int sign) {
    check_compatible(a, b);
    Polynomial r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->exps > j->exps)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->exps > i->exps) {
        r.terms_.push_back({j->exps, sign * j->coeff});
        ++j;
      } else {
        Rational c = i->coeff + sign * j->coeff;
        if (c != 0) r.terms_.push_back({i->exps, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

inline bool is_identically_zero(const Polynomial& p) { return p.is_zero(); }

/// Image of p under x_i -> assignment[i]. All assignments must share one target ring.
inline Polynomial substitute(const Polynomial& p, const std::vector<std::optional<Polynomial>>& assignment,
                             std::size_t target_nvars) {
  if (assignment.size() != p.nvars()) throw DomainError("assignment size does not match ring");
  std::vector<std::vector<Polynomial>> powers(p.nvars());
  Polynomial result(target_nvars);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target_nvars, t.coeff);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!assignment[i]) throw DomainError("no assignment for variable " + std::to_string(i));
      if (assignment[i]->nvars() != target_nvars) throw DomainError("assignment from wrong ring");
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Polynomial::constant(target_nvars, 1));
      while (static_cast<int>(pw.size()) <= t.exps[i]) pw.push_back(pw.back() * *assignment[i]);
      term *= pw[t.exps[i]];
    }
    result += term;
  }
  return result;
}

/// Internal form of a display name: `Z1^(2)` becomes `Z1_2_`.
inline std::string internal_name(std::string_view base, std::optional<int> superscript) {
  std::string s(base);
  if (superscript) s += "_" + std::to_string(*superscript) + "_";
  return s;
}

/// Display form of an internal name: `Z1_2_` becomes `Z1^(2)`.
inline std::string display_name(std::string_view name) {
  if (name.size() >= 4 && name.back() == '_') {
    auto open = name.rfind('_', name.size() - 2);
    if (open != std::string_view::npos && open > 0 && open + 1 < name.size() - 1) {
      auto digits = name.substr(open + 1, name.size() - open - 2);
      if (std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        return std::string(name.substr(0, open)) + "^(" + std::string(digits) + ")";
      }
    }
  }
  return std::string(name);
}

/// Fraction numerator/denominator, used for arrow labels.
struct Fraction {
  Polynomial numerator;
  Polynomial denominator;
};

/// Ordered table of variable names; parses and prints polynomials over it.
class PolyRing {
 public:
  PolyRing() = default;
  explicit PolyRing(std::vector<std::string> names) {
    for (auto& n : names) add_variable(std::move(n));
  }

  std::size_t add_variable(std::string name) {
    if (index_.count(name)) throw DomainError("duplicate variable '" + name + "'");
    index_.emplace(name, names_.size());
    names_.push_back(std::move(name));
    return names_.size() - 1;
  }

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index(std::string_view name) const {
    auto i = find(name);
    if (!i) throw DomainError("unknown variable '" + std::string(name) + "'");
    return *i;
  }

  Polynomial var(std::string_view name) const { return Polynomial::variable(nvars(), index(name)); }
  Polynomial var(std::size_t i) const { return Polynomial::variable(nvars(), i); }
  Polynomial zero() const { return Polynomial(nvars()); }
  Polynomial one() const { return Polynomial::constant(nvars(), 1); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(nvars(), c); }

  Polynomial parse(std::string_view text) const {
    Parser p{*this, text, 0};
    Polynomial result = p.expression();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("unexpected input");
    return result;
  }

  /// Parses `num/den` (a bare polynomial has denominator 1; `inc` is 1/1).
  Fraction parse_fraction(std::string_view text) const {
    auto trimmed = trim(text);
    if (trimmed == "inc") return {one(), one()};
    int depth = 0;
    std::optional<std::size_t> slash;
    for (std::size_t i = 0; i < trimmed.size(); ++i) {
      if (trimmed[i] == '(') ++depth;
      if (trimmed[i] == ')') --depth;
      if (trimmed[i] == '/' && depth == 0) {
        if (slash) throw DomainError("more than one '/' in fraction '" + std::string(text) + "'");
        slash = i;
      }
    }
    if (!slash) return {parse(trimmed), one()};
    return {parse(trimmed.substr(0, *slash)), parse(trimmed.substr(*slash + 1))};
  }

  std::string format_monomial(const Exponents& e) const {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += display_name(names_[i]);
      if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
  }

  std::string format(const Polynomial& p) const {
    if (p.nvars() != nvars()) throw DomainError("polynomial does not belong to this ring");
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
      Rational c = t.coeff;
      const bool negative = c < 0;
      if (negative) c = -c;
      if (first) {
        if (negative) s += "-";
      } else {
        s += negative ? " - " : " + ";
      }
      first = false;
      const bool unit_monomial = total_degree(t.exps) == 0;
      if (unit_monomial) {
        s += c.get_str();
      } else if (c == 1) {
        s += format_monomial(t.exps);
      } else {
        s += c.get_str() + "*" + format_monomial(t.exps);
      }
    }
    return s;
  }

  std::string format(const Fraction& f) const {
    auto wrap = [&](const Polynomial& p) {
      std::string s = format(p);
      return p.size() > 1 ? "(" + s + ")" : s;
    };
    if (f.denominator == one()) return format(f.numerator);
    return wrap(f.numerator) + "/" + wrap(f.denominator);
  }

 private:
  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  struct Parser {
    const PolyRing& ring;
    std::string_view text;
    std::size_t pos;

    [[noreturn]] void fail(const std::string& what) const {
      throw DomainError(what + " at position " + std::to_string(pos) + " in '" + std::string(text) + "'");
    }

    void skip_ws() {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool accept(char c) {
      skip_ws();
      if (pos < text.size() && text[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }

    long integer() {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("expected integer");
      return std::stol(std::string(text.substr(start, pos - start)));
    }

    Polynomial expression() {
      Polynomial acc = ring.zero();
      bool negate = false;
      if (accept('-')) {
        negate = true;
      } else {
        accept('+');
      }
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      for (;;) {
        if (accept('+')) {
          acc += term();
        } else if (accept('-')) {
          acc -= term();
        } else {
          return acc;
        }
      }
    }

    Polynomial term() {
      Polynomial acc = factor();
      while (accept('*')) acc *= factor();
      return acc;
    }

    Polynomial factor() {
      Polynomial b = base();
      if (accept('^')) {
        long k = integer();
        if (k < 0) fail("negative exponent");
        b = b.pow(static_cast<unsigned>(k));
      }
      return b;
    }

    Polynomial base() {
      skip_ws();
      if (pos >= text.size()) fail("unexpected end of input");
      char c = text[pos];
      if (c == '(') {
        ++pos;
        Polynomial inner = expression();
        if (!accept(')')) fail("expected ')'");
        return inner;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) return ring.constant(Rational(integer()));
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_' || text[pos] == '\'')) {
          ++pos;
        }
        auto base_name = text.substr(start, pos - start);
        std::optional<int> sup;
        // `^(` directly after a name is a superscript, `^2` is a power.
        if (pos + 1 < text.size() && text[pos] == '^' && text[pos + 1] == '(') {
          pos += 2;
          sup = static_cast<int>(integer());
          if (!accept(')')) fail("expected ')' after superscript");
        }
        auto name = internal_name(base_name, sup);
        auto idx = ring.find(name);
        if (!idx) fail("unknown variable '" + display_name(name) + "'");
        return ring.var(*idx);
      }
      fail(std::string("unexpected character '") + c + "'");
    }
  };

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace rca
