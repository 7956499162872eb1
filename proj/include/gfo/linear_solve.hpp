#pragma once

// Fraction-free (Bareiss) elimination over a polynomial ring.  Every
// intermediate entry stays a polynomial; the solution comes back as
// numerators over one common denominator.

#include <utility>
#include <vector>

#include "gfo/ratfun.hpp"

namespace gfo {

using PolyMatrix = std::vector<std::vector<Poly>>;

struct LinearSolution {
  std::vector<Poly> numerators;
  Poly denominator;

  std::vector<RatFun> values() const {
    std::vector<RatFun> out;
    out.reserve(numerators.size());
    for (const auto& n : numerators) out.emplace_back(n, denominator);
    return out;
  }
};

/// True when m * (numerators / denominator) == b, checked by cross-multiplication.
inline bool satisfies(const PolyMatrix& m, const std::vector<Poly>& b, const LinearSolution& s) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    Poly lhs(s.denominator.nvars());
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (!m[i][j].is_zero()) lhs += m[i][j] * s.numerators[j];
    }
    if (lhs != b[i] * s.denominator) return false;
  }
  return true;
}

/// Solves m v = b.  Throws SingularMatrix (carrying the 1-based stage)
/// when no pivot exists.
inline LinearSolution solve_linear(const PolyMatrix& m, const std::vector<Poly>& b, bool verify = true) {
  const std::size_t n = m.size();
  if (n == 0) throw Error("empty linear system");
  if (b.size() != n) throw Error("right-hand side length mismatch");
  const std::size_t nvars = b[0].nvars();
  for (const auto& row : m) {
    if (row.size() != n) throw Error("matrix is not square");
  }

  PolyMatrix a(n, std::vector<Poly>(n + 1, Poly(nvars)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n] = b[i];
  }

  Poly prev = Poly::constant(1, nvars);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r) {
      if (a[r][k].is_zero()) continue;
      if (pivot == n || a[r][k].term_count() < a[pivot][k].term_count()) pivot = r;
    }
    if (pivot == n) throw SingularMatrix(k + 1);
    std::swap(a[k], a[pivot]);

    for (std::size_t i = k + 1; i < n; ++i) {
      const bool eliminate = !a[i][k].is_zero();
      for (std::size_t j = k + 1; j <= n; ++j) {
        const bool left = !a[i][j].is_zero();
        const bool right = eliminate && !a[k][j].is_zero();
        if (!left && !right) continue;
        Poly v = left ? a[k][k] * a[i][j] : Poly(nvars);
        if (right) v -= a[i][k] * a[k][j];
        a[i][j] = divide_exact(v, prev);
      }
      a[i][k] = Poly(nvars);
    }
    prev = a[k][k];
  }

  LinearSolution s;
  s.denominator = a[n - 1][n - 1];
  s.numerators.assign(n, Poly(nvars));
  for (std::size_t i = n; i-- > 0;) {
    Poly acc = s.denominator * a[i][n];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!a[i][j].is_zero() && !s.numerators[j].is_zero()) acc -= a[i][j] * s.numerators[j];
    }
    s.numerators[i] = divide_exact(acc, a[i][i]);
  }
  if (verify && !satisfies(m, b, s)) throw Error("internal fault: linear solution failed back-substitution check");
  return s;
}

}  // namespace gfo
