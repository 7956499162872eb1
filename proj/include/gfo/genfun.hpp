#pragma once

// Closed forms for the weight generating functions S, F, A, W of the
// generalized factor order on P*, with wt(w) = t^|w| x^Sigma(w).

#include <cstdint>
#include <optional>
#include <vector>

#include "gfo/ratfun.hpp"
#include "gfo/word.hpp"

namespace gfo {

/// (1-x)/(1-x-tx): the weight generating function of all of P*.
inline RatFun all_words() { return RatFun(tx::one() - tx::x(), tx::one() - tx::x() - tx::t() * tx::x()); }

/// S(u;t,x) for u with an increasing/decreasing factorization:
///
///   t^n x^S(u) / ( t^n x^S(u) + (1-x-tx) * sum_{i=1..n} t^{n-i} x^{d_i + S(s_i)} (1-x)^{i-1} )
///
/// where s_i = u_{i+1}..u_n, and the i = n summand is the constant 1.
inline RatFun S_incdec(const Word& u) {
  require_pattern(u);
  if (!has_incdec_factorization(u)) {
    throw Error("word " + u.str() + " has no increasing/decreasing factorization; use S_bac or the automaton");
  }
  const auto n = static_cast<std::uint32_t>(u.size());
  const auto sigma = static_cast<std::uint32_t>(u.sigma());
  const Poly lead = tx::term(1, n, sigma);
  const Poly one_minus_x = tx::one() - tx::x();
  const auto prof = profile(u);
  Poly sum = tx::zero();
  Poly power = tx::one();  // (1-x)^{i-1}
  for (std::uint32_t i = 1; i <= n; ++i) {
    sum += tx::term(1, n - i, static_cast<std::uint32_t>(prof[i - 1])) * power;
    power = power * one_minus_x;
  }
  const Poly kernel = tx::one() - tx::x() - tx::t() * tx::x();
  return RatFun(lead, lead + kernel * sum);
}

/// S(bac;t,x) for a < b <= c, written as phi / ((1-x-tx) psi + phi) with
///   phi = t^3 x^{a+b+c} (1 + t x^c G),  G = 1 + x + ... + x^{b-a-1}
///   psi = (1-x)^2 + t x^c (1-x) + t^2 x^{a+c} + t^3 x^{a+2c} G.
inline RatFun S_bac(Letter a, Letter b, Letter c) {
  if (a == 0) throw Error("letters must be positive");
  if (!(a < b) || !(b <= c)) throw Error("S_bac requires a < b <= c");
  const Poly one_minus_x = tx::one() - tx::x();
  const Poly g = tx::x_range(0, b - a - 1);
  const Poly phi = tx::term(1, 3, a + b + c) * (tx::one() + tx::term(1, 1, c) * g);
  const Poly psi = one_minus_x * one_minus_x + tx::term(1, 1, c) * one_minus_x + tx::term(1, 2, a + c) +
                   tx::term(1, 3, a + 2 * c) * g;
  const Poly kernel = tx::one() - tx::x() - tx::t() * tx::x();
  return RatFun(phi, kernel * psi + phi);
}

/// When u = bac with a < b <= c (or its reverse cab), the triple (a, b, c).
struct BacShape {
  Letter a = 0, b = 0, c = 0;
  bool reversed = false;
};
inline std::optional<BacShape> bac_shape(const Word& u) {
  if (u.size() != 3) return std::nullopt;
  if (u[1] < u[0] && u[0] <= u[2]) return BacShape{u[1], u[0], u[2], false};
  if (u[1] < u[2] && u[2] <= u[0]) return BacShape{u[1], u[2], u[0], true};
  return std::nullopt;
}

struct GenFunBundle {
  Word u;
  RatFun S, F, A, W;
};

/// W(u;t,x) = t^n x^S(u) / (1-x)^n.
inline RatFun W_of(const Word& u) {
  require_pattern(u);
  const auto n = static_cast<std::uint32_t>(u.size());
  return RatFun(tx::term(1, n, static_cast<std::uint32_t>(u.sigma())), (tx::one() - tx::x()).pow(n));
}

/// F = S (1-x)/(1-x-tx) and A = (1-x)/(1-x-tx) - F, stored unreduced.
inline GenFunBundle derive_FAW(const RatFun& S, const Word& u) {
  if (S.nvars() != 2) throw Error("derive_FAW expects a function of (t, x)");
  GenFunBundle bundle{u, S, S * all_words(), RatFun(), W_of(u)};
  bundle.A = all_words() - bundle.F;
  return bundle;
}

/// A(i;t,x) = 1 / (1 - t (x + x^2 + ... + x^{i-1})).
inline RatFun A_single(Letter i) {
  if (i == 0) throw Error("letters must be positive");
  return RatFun(tx::one(), tx::one() - tx::t() * tx::x_range(1, i - 1));
}

/// F^k_1..F^k_count: F^k_j = 0 for j <= 0, F^k_1 = F^k_2 = 1, and each
/// later term sums the previous k.
inline std::vector<BigInt> k_step_fib(unsigned k, std::size_t count) {
  if (k == 0) throw Error("step count must be at least 1");
  std::vector<BigInt> f;
  f.reserve(count);
  for (std::size_t j = 1; j <= count; ++j) {
    if (j <= 2) {
      f.emplace_back(1);
      continue;
    }
    BigInt s = 0;
    for (std::size_t back = 1; back <= k && back < j; ++back) s += f[j - 1 - back];
    f.push_back(s);
  }
  return f;
}

/// Value of F^k_j for any integer index j (zero at nonpositive indices).
inline BigInt k_step_fib_at(unsigned k, long j) {
  if (j <= 0) return 0;
  return k_step_fib(k, static_cast<std::size_t>(j)).back();
}

/// sum_{j=lo..m} x_j in Z[x_1..x_m].
inline Poly letters_at_least(Letter lo, std::size_t m) {
  Poly p(m);
  for (std::size_t j = lo; j <= m; ++j) p += Poly::variable(j - 1, m);
  return p;
}

/// S(u;x_1..x_m) for weakly increasing u over [m]:
///
///   P / ( (1 + sum_{i=1}^{n-1} prod_{j=i+1}^{n} L_j) (1 - x_1 - ... - x_m) + P ),
///   L_j = sum_{l=u_j..m} x_l,  P = prod_{i=1}^{n} L_i.
inline RatFun S_finite_increasing(const Word& u, std::size_t m) {
  require_pattern(u);
  if (!is_weakly_increasing(u)) throw Error("S_finite_increasing requires a weakly increasing word");
  if (u.max_letter() > m) throw Error("letter exceeds the alphabet bound m");
  if (m == 0 || m > kMaxVars) throw Error("alphabet bound out of supported range");
  const std::size_t n = u.size();
  Poly product = Poly::constant(1, m);
  Poly tails = Poly::constant(1, m);  // 1 + sum of suffix products
  Poly suffix = Poly::constant(1, m);
  for (std::size_t j = n; j >= 1; --j) {
    suffix = suffix * letters_at_least(u[j - 1], m);
    if (j >= 2) tails += suffix;
  }
  product = suffix;
  const Poly all = Poly::constant(1, m) - letters_at_least(1, m);
  return RatFun(product, tails * all + product);
}

}  // namespace gfo
