#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients.  The same type serves the bivariate ring Z[t,x]
// (variable 0 = t, variable 1 = x) and the finite-alphabet ring
// Z[x_1..x_m].
//
// Terms are stored sorted ascending in graded-lex order with no zero
// coefficients, so the zero polynomial is the empty term list and
// structural equality is polynomial equality.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gfo/error.hpp"

namespace gfo {

using BigInt = mpz_class;
using Rational = mpq_class;

inline constexpr std::size_t kMaxVars = 6;
inline constexpr unsigned kExpBits = 10;
inline constexpr std::uint32_t kMaxExp = (1u << kExpBits) - 1;

/// Exponent vector packed into one word.  Variable 0 sits in the most
/// significant field, so integer order on the packed value is lex order.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial from(std::span<const std::uint32_t> exps) {
    if (exps.size() > kMaxVars) throw Error("too many variables");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > kMaxExp) throw Error("exponent exceeds representable range");
      m.bits_ |= static_cast<std::uint64_t>(exps[i]) << shift(i);
    }
    return m;
  }
  static Monomial variable(std::size_t var, std::uint32_t e = 1) {
    if (var >= kMaxVars || e > kMaxExp) throw Error("monomial out of range");
    Monomial m;
    m.bits_ = static_cast<std::uint64_t>(e) << shift(var);
    return m;
  }

  std::uint32_t exp(std::size_t var) const noexcept {
    return static_cast<std::uint32_t>((bits_ >> shift(var)) & kMaxExp);
  }
  std::uint32_t total() const noexcept {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) s += exp(i);
    return s;
  }
  std::uint64_t bits() const noexcept { return bits_; }
  bool is_one() const noexcept { return bits_ == 0; }

  /// Caller guarantees no field overflows.
  Monomial times_unchecked(Monomial o) const noexcept {
    Monomial m;
    m.bits_ = bits_ + o.bits_;
    return m;
  }
  Monomial times(Monomial o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp(i) + o.exp(i) > kMaxExp) throw Error("exponent overflow in monomial product");
    }
    return times_unchecked(o);
  }
  bool divides(Monomial o) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp(i) > o.exp(i)) return false;
    }
    return true;
  }
  /// Requires divides(o) in the sense o / *this.
  Monomial quotient_of(Monomial o) const noexcept {
    Monomial m;
    m.bits_ = o.bits_ - bits_;
    return m;
  }

  friend bool operator==(Monomial, Monomial) = default;

 private:
  static constexpr unsigned shift(std::size_t var) noexcept {
    return static_cast<unsigned>((kMaxVars - 1 - var) * kExpBits);
  }
  std::uint64_t bits_ = 0;
};

struct GrlexLess {
  bool operator()(Monomial a, Monomial b) const noexcept {
    auto ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    return a.bits() < b.bits();
  }
};

class Poly {
 public:
  struct Term {
    Monomial mono;
    BigInt coeff;
    friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
  };

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(check_nvars(nvars)) {}

  static Poly constant(const BigInt& c, std::size_t nvars) {
    Poly p(nvars);
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static Poly variable(std::size_t var, std::size_t nvars, std::uint32_t e = 1) {
    if (var >= nvars) throw Error("variable index out of range");
    Poly p(nvars);
    p.terms_.push_back({Monomial::variable(var, e), BigInt(1)});
    return p;
  }
  static Poly monomial(const BigInt& c, std::span<const std::uint32_t> exps) {
    Poly p(exps.size());
    if (c != 0) p.terms_.push_back({Monomial::from(exps), c});
    return p;
  }
  static Poly monomial(const BigInt& c, std::initializer_list<std::uint32_t> exps) {
    return monomial(c, std::span<const std::uint32_t>(exps.begin(), exps.size()));
  }
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms) {
    Poly p(nvars);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return GrlexLess{}(a.mono, b.mono); });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
      } else {
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  BigInt constant_term() const {
    if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
    return 0;
  }
  BigInt coeff(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial key) { return GrlexLess{}(t.mono, key); });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return 0;
  }
  BigInt coeff(std::initializer_list<std::uint32_t> exps) const {
    return coeff(Monomial::from(std::span<const std::uint32_t>(exps.begin(), exps.size())));
  }

  std::uint32_t degree(std::size_t var) const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exp(var));
    return d;
  }
  std::uint32_t min_degree(std::size_t var) const noexcept {
    if (terms_.empty()) return 0;
    std::uint32_t d = kMaxExp;
    for (const auto& t : terms_) d = std::min(d, t.mono.exp(var));
    return d;
  }
  std::uint32_t total_degree() const noexcept { return terms_.empty() ? 0 : terms_.back().mono.total(); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
  friend Poly operator*(const Poly& a, const BigInt& c) {
    if (c == 0) return Poly(a.nvars_);
    Poly r = a;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  friend Poly operator*(const BigInt& c, const Poly& a) { return a * c; }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned k) const {
    Poly result = constant(1, nvars_);
    Poly base = *this;
    while (k) {
      if (k & 1u) result = result * base;
      k >>= 1u;
      if (k) base = base * base;
    }
    return result;
  }

  /// Multiplies by a monomial.
  Poly shifted(Monomial m) const {
    Poly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono.times(m), t.coeff});
    return r;  // grlex is a monomial order, so the order is preserved
  }

  /// Exact quotient a / b; throws if b does not divide a in Z[vars].
  friend Poly divide_exact(const Poly& a, const Poly& b);

  /// Substitutes var := value (an integer), leaving the variable count unchanged.
  Poly substitute(std::size_t var, const BigInt& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    BigInt power;
    for (const auto& t : terms_) {
      std::uint32_t e = t.mono.exp(var);
      mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), e);
      out.push_back({Monomial::from(zeroed(t.mono, var)), t.coeff * power});
    }
    return from_terms(nvars_, std::move(out));
  }

  struct Cleared;
  /// Substitutes var := p/q and multiplies by q^clear_degree so the result is
  /// integral.  clear_degree must be at least degree(var).
  Cleared substitute(std::size_t var, const Rational& value, std::uint32_t clear_degree) const;

  /// Coefficient polynomials with respect to `var`: result[k] collects the
  /// terms of var-degree k with that variable's exponent removed.
  std::vector<Poly> coefficients_in(std::size_t var) const {
    std::vector<Poly> out(degree(var) + 1, Poly(nvars_));
    std::vector<std::vector<Term>> buckets(out.size());
    for (const auto& t : terms_) {
      buckets[t.mono.exp(var)].push_back({Monomial::from(zeroed(t.mono, var)), t.coeff});
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = from_terms(nvars_, std::move(buckets[k]));
    return out;
  }

  /// Drops every term whose `var`-degree exceeds max_degree.
  Poly truncated(std::size_t var, std::uint32_t max_degree) const {
    Poly r(nvars_);
    for (const auto& t : terms_) {
      if (t.mono.exp(var) <= max_degree) r.terms_.push_back(t);
    }
    return r;
  }
  /// Drops every term of total degree above max_degree.
  Poly truncated_total(std::uint32_t max_degree) const {
    Poly r(nvars_);
    for (const auto& t : terms_) {
      if (t.mono.total() <= max_degree) r.terms_.push_back(t);
    }
    return r;
  }

  std::vector<std::uint32_t> exponents(Monomial m) const {
    std::vector<std::uint32_t> e(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) e[i] = m.exp(i);
    return e;
  }

  /// Human-readable form, terms in descending graded-lex order,
  /// e.g. "t^3*x^6 - t*x + 1".
  std::string str(std::span<const std::string> names) const;
  std::string str() const { return str(default_names(nvars_)); }

  static std::vector<std::string> default_names(std::size_t nvars) {
    if (nvars == 2) return {"t", "x"};
    if (nvars == 1) return {"x"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
  }

 private:
  static std::size_t check_nvars(std::size_t n) {
    if (n > kMaxVars) throw Error("at most " + std::to_string(kMaxVars) + " variables supported");
    return n;
  }
  static std::vector<std::uint32_t> zeroed(Monomial m, std::size_t var) {
    std::vector<std::uint32_t> e(kMaxVars);
    for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = (i == var) ? 0 : m.exp(i);
    return e;
  }

  static void require_same_ring(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) {
      throw Error("variable-count mismatch: " + std::to_string(a.nvars_) + " vs " + std::to_string(b.nvars_));
    }
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    require_same_ring(a, b);
    Poly r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    GrlexLess less;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && less(a.terms_[i].mono, b.terms_[j].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || less(b.terms_[j].mono, a.terms_[i].mono)) {
        r.terms_.push_back({b.terms_[j].mono, subtract ? BigInt(-b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        BigInt c = subtract ? BigInt(a.terms_[i].coeff - b.terms_[j].coeff) : BigInt(a.terms_[i].coeff + b.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  // Box geometry for the dense kernels: strides with variable 0 most
  // significant, so linear index order equals lex order.
  struct Box {
    std::array<std::uint64_t, kMaxVars> dims{};
    std::array<std::uint64_t, kMaxVars> stride{};
    std::uint64_t size = 1;
    std::size_t nvars = 0;

    explicit Box(std::span<const std::uint32_t> max_exps) : nvars(max_exps.size()) {
      for (std::size_t i = nvars; i-- > 0;) {
        dims[i] = max_exps[i] + 1ull;
        stride[i] = size;
        size = (size > (1ull << 40) / dims[i]) ? (1ull << 41) : size * dims[i];
      }
    }
    std::uint64_t index(Monomial m) const noexcept {
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < nvars; ++i) idx += m.exp(i) * stride[i];
      return idx;
    }
    Monomial decode(std::uint64_t idx) const {
      std::array<std::uint32_t, kMaxVars> e{};
      for (std::size_t i = 0; i < nvars; ++i) {
        e[i] = static_cast<std::uint32_t>(idx / stride[i]);
        idx %= stride[i];
      }
      return Monomial::from(std::span<const std::uint32_t>(e.data(), nvars));
    }
  };

  static constexpr std::uint64_t kDenseLimit = 1ull << 20;

  std::vector<std::uint32_t> degrees() const {
    std::vector<std::uint32_t> d(nvars_, 0);
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) d[i] = std::max(d[i], t.mono.exp(i));
    }
    return d;
  }

  static Poly multiply(const Poly& a, const Poly& b) {
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.nvars_);
    auto da = a.degrees();
    auto db = b.degrees();
    std::vector<std::uint32_t> dr(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      dr[i] = da[i] + db[i];
      if (dr[i] > kMaxExp) throw Error("exponent overflow in polynomial product");
    }
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
      const Poly& mono = a.terms_.size() == 1 ? a : b;
      const Poly& other = a.terms_.size() == 1 ? b : a;
      Poly r(a.nvars_);
      r.terms_.reserve(other.terms_.size());
      for (const auto& t : other.terms_) {
        r.terms_.push_back({t.mono.times_unchecked(mono.terms_[0].mono), t.coeff * mono.terms_[0].coeff});
      }
      return r;
    }

    Box box(dr);
    if (box.size <= kDenseLimit && box.size <= 64 * a.terms_.size() * b.terms_.size()) {
      std::vector<BigInt> acc(box.size);
      std::vector<char> used(box.size, 0);
      std::vector<std::uint64_t> ib(b.terms_.size());
      for (std::size_t j = 0; j < b.terms_.size(); ++j) ib[j] = box.index(b.terms_[j].mono);
      for (const auto& ta : a.terms_) {
        std::uint64_t base = box.index(ta.mono);
        for (std::size_t j = 0; j < b.terms_.size(); ++j) {
          std::uint64_t k = base + ib[j];
          mpz_addmul(acc[k].get_mpz_t(), ta.coeff.get_mpz_t(), b.terms_[j].coeff.get_mpz_t());
          used[k] = 1;
        }
      }
      std::vector<Term> out;
      for (std::uint64_t k = 0; k < box.size; ++k) {
        if (used[k] && acc[k] != 0) out.push_back({box.decode(k), std::move(acc[k])});
      }
      Poly r(a.nvars_);
      std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return GrlexLess{}(x.mono, y.mono); });
      r.terms_ = std::move(out);
      return r;
    }

    std::unordered_map<std::uint64_t, BigInt> acc;
    acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 1);
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        auto& slot = acc[ta.mono.times_unchecked(tb.mono).bits()];
        mpz_addmul(slot.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
      }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [bits, c] : acc) {
      if (c != 0) {
        Monomial m = decode_bits(bits);
        out.push_back({m, std::move(c)});
      }
    }
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return GrlexLess{}(x.mono, y.mono); });
    Poly r(a.nvars_);
    r.terms_ = std::move(out);
    return r;
  }

  static Monomial decode_bits(std::uint64_t bits) {
    std::array<std::uint32_t, kMaxVars> e{};
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      e[i] = static_cast<std::uint32_t>((bits >> ((kMaxVars - 1 - i) * kExpBits)) & kMaxExp);
    }
    return Monomial::from(e);
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

struct Poly::Cleared {
  Poly poly;     // scale * P(var := p/q), integral
  BigInt scale;  // q^clear_degree
};

inline Poly::Cleared Poly::substitute(std::size_t var, const Rational& value, std::uint32_t clear_degree) const {
  if (clear_degree < degree(var)) throw Error("clearing degree below polynomial degree");
  Rational v = value;
  v.canonicalize();
  const BigInt& p = v.get_num();
  const BigInt& q = v.get_den();
  std::vector<Term> out;
  out.reserve(terms_.size());
  BigInt pp, qq;
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono.exp(var);
    mpz_pow_ui(pp.get_mpz_t(), p.get_mpz_t(), e);
    mpz_pow_ui(qq.get_mpz_t(), q.get_mpz_t(), clear_degree - e);
    out.push_back({Monomial::from(zeroed(t.mono, var)), t.coeff * pp * qq});
  }
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), q.get_mpz_t(), clear_degree);
  return {from_terms(nvars_, std::move(out)), scale};
}

inline Poly divide_exact(const Poly& a, const Poly& b) {
  Poly::require_same_ring(a, b);
  if (b.is_zero()) throw Error("division by the zero polynomial");
  Poly q(a.nvars_);
  if (a.is_zero()) return q;
  if (b.is_constant()) {
    const BigInt& c = b.terms_[0].coeff;
    q.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) throw Error("inexact polynomial division");
      BigInt qc;
      mpz_divexact(qc.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
      q.terms_.push_back({t.mono, std::move(qc)});
    }
    return q;
  }

  auto da = a.degrees();
  auto db = b.degrees();
  std::vector<std::uint32_t> dq(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    if (db[i] > da[i]) throw Error("inexact polynomial division");
    dq[i] = da[i] - db[i];
  }
  // Lex-leading term of b: packed order is lex order.
  const Poly::Term* lead = &b.terms_[0];
  for (const auto& t : b.terms_) {
    if (t.mono.bits() > lead->mono.bits()) lead = &t;
  }
  const Monomial lt = lead->mono;
  const BigInt& lc = lead->coeff;

  auto within_quotient_box = [&](Monomial g) {
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      if (g.exp(i) > dq[i]) return false;
    }
    return true;
  };

  std::vector<Poly::Term> out;
  Poly::Box box(da);
  if (box.size <= Poly::kDenseLimit) {
    std::vector<BigInt> r(box.size);
    for (const auto& t : a.terms_) r[box.index(t.mono)] = t.coeff;
    std::vector<std::uint64_t> ib(b.terms_.size());
    for (std::size_t j = 0; j < b.terms_.size(); ++j) ib[j] = box.index(b.terms_[j].mono);
    const std::uint64_t ilt = box.index(lt);
    BigInt qc;
    for (std::uint64_t idx = box.size; idx-- > 0;) {
      if (r[idx] == 0) continue;
      Monomial e = box.decode(idx);
      if (!lt.divides(e)) throw Error("inexact polynomial division");
      Monomial g = lt.quotient_of(e);
      if (!within_quotient_box(g)) throw Error("inexact polynomial division");
      if (!mpz_divisible_p(r[idx].get_mpz_t(), lc.get_mpz_t())) throw Error("inexact polynomial division");
      mpz_divexact(qc.get_mpz_t(), r[idx].get_mpz_t(), lc.get_mpz_t());
      const std::uint64_t base = idx - ilt;
      for (std::size_t j = 0; j < b.terms_.size(); ++j) {
        mpz_submul(r[base + ib[j]].get_mpz_t(), qc.get_mpz_t(), b.terms_[j].coeff.get_mpz_t());
      }
      out.push_back({g, qc});
    }
  } else {
    auto lex_greater = [](Monomial x, Monomial y) { return x.bits() > y.bits(); };
    std::map<Monomial, BigInt, decltype(lex_greater)> r(lex_greater);
    for (const auto& t : a.terms_) r.emplace(t.mono, t.coeff);
    BigInt qc;
    while (!r.empty()) {
      auto it = r.begin();
      Monomial e = it->first;
      if (!lt.divides(e)) throw Error("inexact polynomial division");
      Monomial g = lt.quotient_of(e);
      if (!within_quotient_box(g)) throw Error("inexact polynomial division");
      if (!mpz_divisible_p(it->second.get_mpz_t(), lc.get_mpz_t())) throw Error("inexact polynomial division");
      mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lc.get_mpz_t());
      for (const auto& t : b.terms_) {
        auto [slot, inserted] = r.try_emplace(t.mono.times_unchecked(g));
        mpz_submul(slot->second.get_mpz_t(), qc.get_mpz_t(), t.coeff.get_mpz_t());
        if (slot->second == 0) r.erase(slot);
      }
      out.push_back({g, qc});
    }
  }
  std::sort(out.begin(), out.end(), [](const Poly::Term& x, const Poly::Term& y) { return GrlexLess{}(x.mono, y.mono); });
  q.terms_ = std::move(out);
  return q;
}

inline std::string Poly::str(std::span<const std::string> names) const {
  if (names.size() < nvars_) throw Error("not enough variable names");
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const BigInt& c = it->coeff;
    bool negative = c < 0;
    BigInt mag = negative ? BigInt(-c) : c;
    if (it == terms_.rbegin()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t v = 0; v < nvars_; ++v) {
      std::uint32_t e = it->mono.exp(v);
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += names[v];
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mag.get_str() + "*" + factors;
    }
  }
  return out;
}

/// Parses the format produced by Poly::str over the given variable names.
inline Poly parse_poly(std::string_view text, std::span<const std::string> names) {
  const std::size_t nvars = names.size();
  std::vector<Poly::Term> terms;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> Poly {
    throw Error("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto read_uint = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  skip();
  if (text.substr(pos) == "0") return Poly(nvars);
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) {
      if (first) fail("empty input");
      break;
    }
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    BigInt coeff = 1;
    std::vector<std::uint32_t> exps(nvars, 0);
    bool need_factor = true;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = BigInt(read_uint());
      need_factor = false;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        need_factor = true;
      }
    }
    while (need_factor) {
      skip();
      std::size_t best = nvars;
      std::size_t best_len = 0;
      for (std::size_t v = 0; v < nvars; ++v) {
        const auto& nm = names[v];
        if (text.substr(pos, nm.size()) == nm && nm.size() > best_len) {
          std::size_t after = pos + nm.size();
          if (after < text.size() && std::isalnum(static_cast<unsigned char>(text[after])) &&
              !(text[after] == '^')) {
            continue;
          }
          best = v;
          best_len = nm.size();
        }
      }
      if (best == nvars) fail("unknown variable");
      pos += best_len;
      std::uint32_t e = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::string digits = read_uint();
        if (digits.empty()) fail("missing exponent");
        e = static_cast<std::uint32_t>(std::stoul(digits));
      }
      exps[best] += e;
      skip();
      need_factor = pos < text.size() && text[pos] == '*';
      if (need_factor) ++pos;
    }
    if (negative) coeff = -coeff;
    terms.push_back({Monomial::from(exps), coeff});
  }
  return Poly::from_terms(nvars, std::move(terms));
}

/// Bivariate ring Z[t,x] helpers.
namespace tx {
inline constexpr std::size_t kT = 0;
inline constexpr std::size_t kX = 1;
inline Poly one() { return Poly::constant(1, 2); }
inline Poly zero() { return Poly(2); }
inline Poly constant(const BigInt& c) { return Poly::constant(c, 2); }
inline Poly t(std::uint32_t e = 1) { return Poly::variable(kT, 2, e); }
inline Poly x(std::uint32_t e = 1) { return Poly::variable(kX, 2, e); }
/// c * t^a * x^b
inline Poly term(const BigInt& c, std::uint32_t a, std::uint32_t b) { return Poly::monomial(c, {a, b}); }
/// x^lo + x^(lo+1) + ... + x^hi (zero when lo > hi)
inline Poly x_range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<Poly::Term> terms;
  for (std::uint32_t e = lo; e <= hi && lo <= hi; ++e) terms.push_back({Monomial::variable(kX, e), BigInt(1)});
  return Poly::from_terms(2, std::move(terms));
}
inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"t", "x"};
  return n;
}
}  // namespace tx

}  // namespace gfo
