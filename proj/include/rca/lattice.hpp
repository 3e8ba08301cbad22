#pragma once

// Integer lattices L in Z^n with canonical coset representatives of Z^n / L.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "rca/errors.hpp"

namespace rca {

namespace detail {

inline long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("lattice arithmetic overflow");
  return r;
}

inline long checked_sub(long a, long b) {
  long r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("lattice arithmetic overflow");
  return r;
}

/// floor(a / b) for b > 0.
inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

}  // namespace detail

/// Row-echelon basis with positive pivots; rows above a pivot are reduced into [0, pivot).
class Lattice {
 public:
  explicit Lattice(std::size_t dim = 0) : dim_(dim) {}

  Lattice(std::size_t dim, std::vector<std::vector<long>> generators) : dim_(dim) {
    for (auto& g : generators) {
      if (g.size() != dim_) throw DomainError("lattice generator has wrong dimension");
    }
    echelonize(std::move(generators));
  }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<long>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Canonical representative of v + L: entry at each pivot column lies in [0, pivot).
  void reduce(std::vector<long>& v) const {
    if (v.size() != dim_) throw DomainError("vector has wrong dimension");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t c = pivots_[k];
      const long q = detail::floor_div(v[c], rows_[k][c]);
      if (q == 0) continue;
      for (std::size_t j = c; j < dim_; ++j) v[j] = detail::checked_sub(v[j], detail::checked_mul(q, rows_[k][j]));
    }
  }

  std::vector<long> reduced(std::vector<long> v) const {
    reduce(v);
    return v;
  }

  bool contains(std::vector<long> v) const {
    reduce(v);
    for (long x : v) {
      if (x != 0) return false;
    }
    return true;
  }

 private:
  void echelonize(std::vector<std::vector<long>> work) {
    std::size_t top = 0;
    for (std::size_t c = 0; c < dim_ && top < work.size(); ++c) {
      // Euclid on column c over rows [top, end) until one nonzero entry remains.
      while (true) {
        std::size_t best = work.size();
        for (std::size_t i = top; i < work.size(); ++i) {
          if (work[i][c] != 0 && (best == work.size() || std::labs(work[i][c]) < std::labs(work[best][c]))) best = i;
        }
        if (best == work.size()) break;
        std::swap(work[top], work[best]);
        bool done = true;
        for (std::size_t i = top + 1; i < work.size(); ++i) {
          if (work[i][c] == 0) continue;
          const long q = work[i][c] / work[top][c];
          for (std::size_t j = c; j < dim_; ++j) {
            work[i][j] = detail::checked_sub(work[i][j], detail::checked_mul(q, work[top][j]));
          }
          if (work[i][c] != 0) done = false;
        }
        if (done) break;
      }
      if (top < work.size() && work[top][c] != 0) {
        if (work[top][c] < 0) {
          for (auto& x : work[top]) x = -x;
        }
        pivots_.push_back(c);
        ++top;
      }
    }
    work.resize(top);
    rows_ = std::move(work);
    // Reduce entries above each pivot.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t c = pivots_[k];
      for (std::size_t i = 0; i < k; ++i) {
        const long q = detail::floor_div(rows_[i][c], rows_[k][c]);
        if (q == 0) continue;
        for (std::size_t j = c; j < dim_; ++j) {
          rows_[i][j] = detail::checked_sub(rows_[i][j], detail::checked_mul(q, rows_[k][j]));
        }
      }
    }
  }

  std::size_t dim_;
  std::vector<std::vector<long>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace rca
