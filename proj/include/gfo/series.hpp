#pragma once

// Power-series expansion of rational functions around 0.

#include <string>
#include <vector>

#include "gfo/ratfun.hpp"

namespace gfo {

/// Coefficients c_0..c_K of a univariate expansion.  `offset` is the
/// lowest degree with a nonzero coefficient (K+1 when all vanish).
struct SeriesPrefix {
  std::vector<BigInt> coefficients;
  std::size_t offset = 0;

  std::size_t order() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  std::vector<BigInt> from_offset() const {
    return {coefficients.begin() + static_cast<std::ptrdiff_t>(std::min(offset, coefficients.size())), coefficients.end()};
  }
  /// "offset 4: 1 4 10 20"
  std::string str() const {
    std::string out = "offset " + std::to_string(offset) + ":";
    for (std::size_t k = offset; k < coefficients.size(); ++k) out += " " + coefficients[k].get_str();
    return out;
  }
  friend bool operator==(const SeriesPrefix&, const SeriesPrefix&) = default;

  static SeriesPrefix from(std::vector<BigInt> coeffs) {
    SeriesPrefix s;
    s.coefficients = std::move(coeffs);
    s.offset = s.coefficients.size();
    for (std::size_t k = 0; k < s.coefficients.size(); ++k) {
      if (s.coefficients[k] != 0) {
        s.offset = k;
        break;
      }
    }
    return s;
  }
};

/// Solves den * c = num degree by degree; q0 is the constant coefficient.
template <class Coeff, class DivideExact>
std::vector<Coeff> convolution_inverse(const std::vector<Coeff>& num, const std::vector<Coeff>& den,
                                       std::size_t order, const Coeff& zero, DivideExact divide) {
  std::vector<Coeff> c(order + 1, zero);
  for (std::size_t k = 0; k <= order; ++k) {
    Coeff acc = k < num.size() ? num[k] : zero;
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) acc = acc - den[j] * c[k - j];
    c[k] = divide(acc, k);
  }
  return c;
}

/// Expands a bivariate f(t,x) in x after substituting t := t_value.
inline SeriesPrefix series_x(const RatFun& f, std::size_t order, const Rational& t_value = Rational(1)) {
  if (f.nvars() != 2) throw Error("series_x expects a function of (t, x)");
  const std::uint32_t clear = std::max(f.num().degree(tx::kT), f.den().degree(tx::kT));
  auto p = f.num().substitute(tx::kT, t_value, clear).poly;
  auto q = f.den().substitute(tx::kT, t_value, clear).poly;
  auto flatten = [](const Poly& poly) {
    std::vector<BigInt> v(poly.degree(tx::kX) + 1);
    for (const auto& term : poly.terms()) v[term.mono.exp(tx::kX)] += term.coeff;
    return v;
  };
  std::vector<BigInt> pn = flatten(p);
  std::vector<BigInt> qd = flatten(q);
  if (qd[0] == 0) throw Error("denominator has zero constant term after substituting t");
  const BigInt q0 = qd[0];
  auto coeffs = convolution_inverse<BigInt>(pn, qd, order, BigInt(0), [&](const BigInt& a, std::size_t k) {
    if (!mpz_divisible_p(a.get_mpz_t(), q0.get_mpz_t())) {
      throw Error("non-integral series coefficient at degree " + std::to_string(k));
    }
    BigInt r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), q0.get_mpz_t());
    return r;
  });
  return SeriesPrefix::from(std::move(coeffs));
}

namespace detail {
inline Poly divide_by_integer(const Poly& p, const BigInt& c, std::size_t degree) {
  try {
    return divide_exact(p, Poly::constant(c, p.nvars()));
  } catch (const Error&) {
    throw Error("non-integral series coefficient at degree " + std::to_string(degree));
  }
}
}  // namespace detail

/// Expands f in `var`, keeping the other variables symbolic; returns the
/// truncation at var-degree `order`.  The var-free part of the
/// denominator must be a nonzero integer.
inline Poly series_in(const RatFun& f, std::size_t var, std::uint32_t order) {
  auto pn = f.num().coefficients_in(var);
  auto qd = f.den().coefficients_in(var);
  if (qd[0].is_zero() || !qd[0].is_constant()) {
    throw Error("denominator must have a nonzero constant part in the expansion variable");
  }
  const BigInt q0 = qd[0].constant_term();
  const std::size_t n = f.nvars();
  auto coeffs = convolution_inverse<Poly>(pn, qd, order, Poly(n),
                                          [&](const Poly& a, std::size_t k) { return detail::divide_by_integer(a, q0, k); });
  Poly out(n);
  for (std::uint32_t k = 0; k <= order; ++k) out += coeffs[k] * Poly::variable(var, n, k);
  return out;
}

/// Expands a multivariate f by total degree up to `order` (the series by
/// word length for finite-alphabet generating functions).
inline Poly series_total(const RatFun& f, std::uint32_t order) {
  const std::size_t n = f.nvars();
  auto homogeneous = [&](const Poly& p) {
    std::vector<std::vector<Poly::Term>> parts(p.total_degree() + 1);
    for (const auto& t : p.terms()) parts[t.mono.total()].push_back(t);
    std::vector<Poly> out;
    for (auto& part : parts) out.push_back(Poly::from_terms(n, std::move(part)));
    return out;
  };
  auto pn = homogeneous(f.num());
  auto qd = homogeneous(f.den());
  const BigInt q0 = f.den().constant_term();
  if (q0 == 0) throw Error("denominator has zero constant term");
  auto coeffs = convolution_inverse<Poly>(pn, qd, order, Poly(n),
                                          [&](const Poly& a, std::size_t k) { return detail::divide_by_integer(a, q0, k); });
  Poly out(n);
  for (auto& c : coeffs) out += c;
  return out;
}

}  // namespace gfo
