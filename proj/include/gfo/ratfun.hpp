#pragma once

#include <string>
#include <utility>

#include "gfo/poly.hpp"

namespace gfo {

/// A quotient of polynomials kept unreduced; equality is decided by
/// cross-multiplication, so no gcd machinery is needed.
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(Poly num) : num_(std::move(num)), den_(Poly::constant(1, num_.nvars())) {}
  RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) throw Error("numerator and denominator live in different rings");
    if (den_.is_zero()) throw Error("zero denominator");
  }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  std::size_t nvars() const noexcept { return num_.nvars(); }
  bool is_zero() const noexcept { return num_.is_zero(); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num_ * b.num_, a.den_ * b.den_); }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.num_.is_zero()) throw Error("division by the zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFun operator-() const { return RatFun(-num_, den_); }

  /// Semantic equality: a.num * b.den == b.num * a.den.
  friend bool operator==(const RatFun& a, const RatFun& b) {
    if (a.nvars() != b.nvars()) return false;
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  RatFun substitute(std::size_t var, const BigInt& value) const {
    return RatFun(num_.substitute(var, value), den_.substitute(var, value));
  }

  std::string str(std::span<const std::string> names) const {
    std::string n = num_.str(names);
    if (den_ == Poly::constant(1, den_.nvars())) return n;
    return "(" + n + ") / (" + den_.str(names) + ")";
  }
  std::string str() const { return str(Poly::default_names(nvars())); }

 private:
  Poly num_;
  Poly den_;
};

inline bool ratfun_equal(const RatFun& f, const RatFun& g) { return f == g; }

}  // namespace gfo
