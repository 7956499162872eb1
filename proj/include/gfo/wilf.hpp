#pragma once

// Wilf-equivalence decisions, the length-3 classification, and bounded
// probes of the rearrangement conjectures.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gfo/automaton.hpp"
#include "gfo/genfun.hpp"
#include "gfo/oracle.hpp"
#include "gfo/word.hpp"

namespace gfo {

enum class Method { ClosedForm, AutomatonExact, SeriesBounded };
enum class Outcome { Equivalent, NotEquivalent, Inconclusive };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::AutomatonExact: return "automaton-exact";
    case Method::SeriesBounded: return "series-bounded";
  }
  return "?";
}

inline const char* method_tag(Method m) {
  switch (m) {
    case Method::ClosedForm: return "CLOSED_FORM";
    case Method::AutomatonExact: return "AUTOMATON_EXACT";
    case Method::SeriesBounded: return "SERIES_BOUNDED";
  }
  return "?";
}

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Equivalent: return "EQUIVALENT";
    case Outcome::NotEquivalent: return "NOT_EQUIVALENT";
    case Outcome::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

/// A series-bounded verdict is never Equivalent; exact methods are never
/// Inconclusive.
struct EquivalenceVerdict {
  Word u, v;
  Method method = Method::AutomatonExact;
  Outcome result = Outcome::Inconclusive;
  unsigned order = 0;  // series order examined (SeriesBounded only)
  std::string certificate;

  std::string result_str() const {
    if (result == Outcome::Inconclusive) return "INCONCLUSIVE(" + std::to_string(order) + ")";
    return to_string(result);
  }
  /// "NOT_EQUIVALENT (automaton-exact)"
  std::string str() const { return result_str() + " (" + to_string(method) + ")"; }
};

/// The Wilf classes among the distinct rearrangements of {a, b, c}.  Each
/// class is sorted lexicographically and classes are ordered by their
/// smallest member.
inline std::vector<std::vector<Word>> classify_length3(Letter a, Letter b, Letter c) {
  if (a == 0 || b == 0 || c == 0) throw Error("letters must be positive");
  std::array<Letter, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  std::vector<std::vector<Word>> classes;
  auto w = [](Letter p, Letter q, Letter r) { return Word{p, q, r}; };
  if (s[0] == s[2]) {
    classes = {{w(s[0], s[0], s[0])}};
  } else if (s[0] == s[1] || s[1] == s[2]) {
    const Letter twice = s[1];
    const Letter once = s[0] == s[1] ? s[2] : s[0];
    if (twice < once) {
      classes = {{w(twice, twice, once), w(twice, once, twice), w(once, twice, twice)}};
    } else {
      classes = {{w(twice, twice, once), w(once, twice, twice)}, {w(twice, once, twice)}};
    }
  } else {
    const Letter lo = s[0], mid = s[1], hi = s[2];
    classes = {{w(mid, lo, hi), w(hi, lo, mid)}, {w(lo, mid, hi), w(lo, hi, mid), w(hi, mid, lo), w(mid, hi, lo)}};
  }
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  std::sort(classes.begin(), classes.end());
  return classes;
}

/// u ~ v for words that both have increasing/decreasing factorizations:
/// equivalent exactly when they are rearrangements.  With cross_check the
/// closed forms are compared as well and a disagreement throws.  Pairs
/// outside the precondition fall through to the exact automaton test.
inline bool wilf_equal_incdec(const Word& u, const Word& v, bool cross_check = false) {
  require_pattern(u);
  require_pattern(v);
  if (!has_incdec_factorization(u) || !has_incdec_factorization(v)) return wilf_equal_exact(u, v);
  const bool same = is_rearrangement(u, v);
  if (cross_check && same != (S_incdec(u) == S_incdec(v))) {
    throw Error("internal fault: rearrangement test and closed forms disagree on " + u.str() + ", " + v.str());
  }
  return same;
}

namespace detail {
/// The closed form of S when one is available.
inline std::optional<RatFun> closed_form_S(const Word& u) {
  if (has_incdec_factorization(u)) return S_incdec(u);
  if (auto shape = bac_shape(u)) return S_bac(shape->a, shape->b, shape->c);
  return std::nullopt;
}

inline std::string monomial_str(Monomial m) {
  std::string out;
  const std::uint32_t a = m.exp(tx::kT), b = m.exp(tx::kX);
  out += "t^" + std::to_string(a) + "*x^" + std::to_string(b);
  return out;
}

/// Lowest (graded-lex) monomial where two truncations differ.
inline std::optional<std::string> series_difference(const Poly& p, const Poly& q) {
  const Poly d = p - q;
  if (d.is_zero()) return std::nullopt;
  const Monomial m = d.terms().front().mono;
  return "coefficient of " + monomial_str(m) + ": " + p.coeff(m).get_str() + " vs " + q.coeff(m).get_str();
}
}  // namespace detail

struct CompareOptions {
  unsigned series_order = 12;  // weight bound for the series stage; 0 skips it
  bool allow_exact = true;     // fall back to the automaton when series agree
  bool closed_form = true;     // use closed forms when both words have one
  OracleLimits limits{};
};

/// Decides u ~ v with the cheapest conclusive method: closed forms, then a
/// bounded series comparison (which can only refute), then the automaton.
inline EquivalenceVerdict compare(const Word& u, const Word& v, const CompareOptions& options = {}) {
  require_pattern(u);
  require_pattern(v);
  EquivalenceVerdict verdict{u, v, Method::AutomatonExact, Outcome::Inconclusive, 0, {}};
  if (options.closed_form) {
    if (has_incdec_factorization(u) && has_incdec_factorization(v)) {
      verdict.method = Method::ClosedForm;
      const bool same = is_rearrangement(u, v);
      verdict.result = same ? Outcome::Equivalent : Outcome::NotEquivalent;
      verdict.certificate = same ? "rearrangements with increasing/decreasing factorizations"
                                 : "letter multisets differ (both factorizable)";
      return verdict;
    }
    auto fu = detail::closed_form_S(u);
    auto fv = detail::closed_form_S(v);
    if (fu && fv) {
      verdict.method = Method::ClosedForm;
      const bool same = *fu == *fv;
      verdict.result = same ? Outcome::Equivalent : Outcome::NotEquivalent;
      verdict.certificate = same ? "closed forms agree by cross-multiplication"
                                 : "closed forms differ by cross-multiplication";
      return verdict;
    }
  }
  if (options.series_order > 0) {
    const auto cu = weight_census(u, options.series_order, options.limits);
    const auto cv = weight_census(v, options.series_order, options.limits);
    if (auto diff = detail::series_difference(cu.s_poly, cv.s_poly)) {
      verdict.method = Method::SeriesBounded;
      verdict.result = Outcome::NotEquivalent;
      verdict.order = options.series_order;
      verdict.certificate = "S " + *diff;
      return verdict;
    }
    if (!options.allow_exact) {
      verdict.method = Method::SeriesBounded;
      verdict.result = Outcome::Inconclusive;
      verdict.order = options.series_order;
      verdict.certificate = "S series agree through weight " + std::to_string(options.series_order);
      return verdict;
    }
  }
  verdict.method = Method::AutomatonExact;
  const bool same = wilf_equal_exact(u, v);
  verdict.result = same ? Outcome::Equivalent : Outcome::NotEquivalent;
  verdict.certificate = same ? "S(u) = S(v) by cross-multiplication" : "S(u) != S(v) by cross-multiplication";
  return verdict;
}

/// The exact automaton decision as a verdict.
inline EquivalenceVerdict compare_exact(const Word& u, const Word& v) {
  CompareOptions o;
  o.closed_form = false;
  o.series_order = 0;
  return compare(u, v, o);
}

/// Every pattern with letter sum at most max_sigma, ordered by weight then
/// lexicographically.
inline std::vector<Word> patterns_up_to_weight(unsigned max_sigma) {
  std::vector<Word> out;
  for (unsigned k = 1; k <= max_sigma; ++k) for_each_word_of_weight(k, [&](const Word& w) { out.push_back(w); });
  return out;
}

struct ProfileMismatch {
  Word u, v;
  std::vector<std::uint64_t> pu, pv;
};

struct WeakProbeReport {
  unsigned max_sigma = 0;
  unsigned series_order = 0;
  std::size_t patterns = 0;
  std::size_t pairs = 0;  // non-rearrangement pairs examined
  std::size_t series_certificates = 0;
  std::size_t exact_certificates = 0;
  std::vector<EquivalenceVerdict> violations;    // equivalent but not rearrangements
  std::vector<EquivalenceVerdict> inconclusive;  // neither certificate available
  // Rearrangement pairs, decided exactly, feeding the profile check.
  std::size_t rearrangement_pairs = 0;
  std::vector<EquivalenceVerdict> equivalent_rearrangements;
  std::vector<ProfileMismatch> profile_mismatches;

  bool clean() const { return violations.empty() && inconclusive.empty(); }
};

struct WeakProbeOptions {
  unsigned series_order = 0;  // 0: max_sigma + 6, capped by the oracle limit
  bool allow_exact = true;
  OracleLimits limits{};
};

/// Every exact-equivalent pair should share a profile.  This is an
/// observation, so disagreements are collected rather than thrown.
inline void check_profiles(const EquivalenceVerdict& v, std::vector<ProfileMismatch>& out) {
  if (v.result != Outcome::Equivalent || v.u.size() != v.v.size()) return;
  auto pu = profile(v.u);
  auto pv = profile(v.v);
  if (pu != pv) out.push_back({v.u, v.v, std::move(pu), std::move(pv)});
}

/// Looks for pairs u ~ v that are not rearrangements among all patterns
/// of letter sum <= max_sigma.  Each such pair is refuted by a differing
/// S coefficient from the oracle, else by the exact automaton; a pair with
/// neither is reported inconclusive.
inline WeakProbeReport weak_conjecture_probe(unsigned max_sigma, const WeakProbeOptions& options = {}) {
  if (max_sigma == 0) throw Error("weight bound must be at least 1");
  WeakProbeReport report;
  report.max_sigma = max_sigma;
  report.series_order =
      options.series_order ? options.series_order : std::min(max_sigma + 6, options.limits.max_weight);
  if (report.series_order > options.limits.max_weight) throw Error("series order exceeds the oracle cap");
  if (report.series_order < max_sigma) throw Error("series order below the weight bound");

  const auto patterns = patterns_up_to_weight(max_sigma);
  report.patterns = patterns.size();
  std::vector<Poly> series;
  series.reserve(patterns.size());
  for (const auto& u : patterns) series.push_back(weight_census(u, report.series_order, options.limits).s_poly);

  std::map<std::size_t, RatFun> exact_cache;
  auto exact_S = [&](std::size_t idx) -> const RatFun& {
    auto it = exact_cache.find(idx);
    if (it == exact_cache.end()) it = exact_cache.emplace(idx, S_automaton(patterns[idx])).first;
    return it->second;
  };

  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t j = i + 1; j < patterns.size(); ++j) {
      const Word& u = patterns[i];
      const Word& v = patterns[j];
      const bool rearr = is_rearrangement(u, v);
      EquivalenceVerdict verdict{u, v, Method::AutomatonExact, Outcome::Inconclusive, 0, {}};
      if (auto diff = detail::series_difference(series[i], series[j])) {
        verdict.method = Method::SeriesBounded;
        verdict.result = Outcome::NotEquivalent;
        verdict.order = report.series_order;
        verdict.certificate = "S " + *diff;
      } else if (options.allow_exact) {
        verdict.method = Method::AutomatonExact;
        const bool same = exact_S(i) == exact_S(j);
        verdict.result = same ? Outcome::Equivalent : Outcome::NotEquivalent;
        verdict.certificate = same ? "S(u) = S(v) by cross-multiplication" : "S(u) != S(v) by cross-multiplication";
      } else {
        verdict.method = Method::SeriesBounded;
        verdict.result = Outcome::Inconclusive;
        verdict.order = report.series_order;
        verdict.certificate = "S series agree through weight " + std::to_string(report.series_order);
      }

      if (rearr) {
        ++report.rearrangement_pairs;
        if (verdict.result == Outcome::Equivalent) {
          report.equivalent_rearrangements.push_back(verdict);
          check_profiles(verdict, report.profile_mismatches);
        }
        continue;
      }
      ++report.pairs;
      switch (verdict.result) {
        case Outcome::Equivalent: report.violations.push_back(verdict); break;
        case Outcome::Inconclusive: report.inconclusive.push_back(verdict); break;
        case Outcome::NotEquivalent:
          ++(verdict.method == Method::SeriesBounded ? report.series_certificates : report.exact_certificates);
          break;
      }
    }
  }
  return report;
}

struct StrongProbeMismatch {
  Word u, v;
  std::string reason;
};

struct StrongProbeReport {
  std::size_t m = 0;
  std::size_t max_pattern_length = 0;
  std::size_t max_length = 0;
  std::size_t patterns = 0;
  std::size_t equivalent_pairs = 0;  // exact Wilf-equivalent pairs examined
  std::size_t symbolic_checks = 0;
  std::vector<StrongProbeMismatch> mismatches;
  std::vector<ProfileMismatch> profile_mismatches;

  bool clean() const { return mismatches.empty(); }
};

struct StrongProbeOptions {
  std::size_t m = 3;
  std::size_t max_pattern_length = 3;
  std::size_t max_length = 7;  // content census bound L
  bool symbolic = true;        // also compare S(u;x_1..x_m) exactly
  OracleLimits limits{};
  DfaOptions dfa{};
};

/// For every exact Wilf-equivalent pair of patterns over [m] of length at
/// most n, a rearrangement map exists iff the pair is [m]-equivalent.  This
/// checks that per-content F counts agree over [m]^{<=L} and, optionally,
/// that the finite-alphabet S functions agree exactly.
inline StrongProbeReport strong_conjecture_probe(const StrongProbeOptions& options = {}) {
  if (options.m == 0 || options.max_pattern_length == 0) throw Error("alphabet and length bounds must be positive");
  StrongProbeReport report;
  report.m = options.m;
  report.max_pattern_length = options.max_pattern_length;
  report.max_length = options.max_length;

  std::vector<Word> patterns;
  for (std::size_t len = 1; len <= options.max_pattern_length; ++len) {
    for_each_word_of_length(options.m, len, [&](const Word& w) { patterns.push_back(w); });
  }
  report.patterns = patterns.size();

  // Group by exact S(u;t,x).
  std::vector<RatFun> biv;
  for (const auto& u : patterns) biv.push_back(S_automaton(u));
  std::map<std::size_t, ContentCensus> census;
  auto census_of = [&](std::size_t idx) -> const ContentCensus& {
    auto it = census.find(idx);
    if (it == census.end()) {
      it = census.emplace(idx, multivar_census(patterns[idx], options.m, options.max_length, options.limits)).first;
    }
    return it->second;
  };

  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t j = i + 1; j < patterns.size(); ++j) {
      if (patterns[i].size() != patterns[j].size() || patterns[i].sigma() != patterns[j].sigma()) continue;
      if (!(biv[i] == biv[j])) continue;
      ++report.equivalent_pairs;
      EquivalenceVerdict v{patterns[i], patterns[j], Method::AutomatonExact, Outcome::Equivalent, 0, {}};
      check_profiles(v, report.profile_mismatches);

      const auto& a = census_of(i);
      const auto& b = census_of(j);
      for (const auto& [content, ta] : a.counts) {
        const auto& tb = b.counts.at(content);
        if (ta.in_f != tb.in_f) {
          std::string c;
          for (auto e : content) c += (c.empty() ? "" : ",") + std::to_string(e);
          report.mismatches.push_back({patterns[i], patterns[j],
                                       "F counts differ on content (" + c + "): " + std::to_string(ta.in_f) +
                                           " vs " + std::to_string(tb.in_f)});
          break;
        }
      }
      if (options.symbolic) {
        ++report.symbolic_checks;
        if (!(S_automaton_finite(patterns[i], options.m, options.dfa) ==
              S_automaton_finite(patterns[j], options.m, options.dfa))) {
          report.mismatches.push_back({patterns[i], patterns[j], "S(u;x_1..x_m) differs"});
        }
      }
    }
  }
  return report;
}

/// Univariate polynomial over Q, coefficient k at index k.
using QPoly = std::vector<Rational>;

namespace detail {
inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qpoly_rem(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

inline QPoly qpoly_div(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return q;
}

inline QPoly qpoly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = qpoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline QPoly univariate_at_t1(const Poly& p) {
  QPoly out(p.degree(tx::kX) + 1, Rational(0));
  for (const auto& t : p.terms()) out[t.mono.exp(tx::kX)] += Rational(t.coeff);
  trim(out);
  return out;
}

/// Scales p and q by one rational so both become primitive integer
/// polynomials jointly, with p's lowest coefficient positive.
inline std::pair<std::vector<BigInt>, std::vector<BigInt>> integral_pair(const QPoly& p, const QPoly& q) {
  BigInt lcm = 1;
  for (const auto* poly : {&p, &q}) {
    for (const auto& c : *poly) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<BigInt> ip, iq;
  BigInt g = 0;
  for (const auto& c : p) {
    ip.push_back(BigInt(c * lcm));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ip.back().get_mpz_t());
  }
  for (const auto& c : q) {
    iq.push_back(BigInt(c * lcm));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iq.back().get_mpz_t());
  }
  int sign = 1;
  for (const auto& c : ip) {
    if (c != 0) {
      sign = c < 0 ? -1 : 1;
      break;
    }
  }
  for (auto& c : ip) c = c / g * sign;
  for (auto& c : iq) c = c / g * sign;
  return {std::move(ip), std::move(iq)};
}
}  // namespace detail

struct MonomialProbe {
  Word u;
  bool monomial = false;
  std::vector<BigInt> numerator;    // reduced S(u;1,x) numerator, coefficient k at index k
  std::vector<BigInt> denominator;  // reduced denominator
  static constexpr const char* kNote =
      "heuristic: reduction at t = 1 stands in for the bivariate reduced form";

  static std::string poly_str(const std::vector<BigInt>& c) {
    std::vector<Poly::Term> terms;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] != 0) terms.push_back({Monomial::from(std::array<std::uint32_t, 1>{static_cast<std::uint32_t>(k)}), c[k]});
    }
    static const std::vector<std::string> names{"x"};
    return Poly::from_terms(1, std::move(terms)).str(names);
  }
  std::string numerator_str() const { return poly_str(numerator); }
  std::string denominator_str() const { return poly_str(denominator); }
};

/// Whether S(u;1,x), reduced over Q, has a monomial numerator.
inline MonomialProbe numerator_monomial_probe(const Word& u) {
  require_pattern(u);
  const RatFun s = S_automaton(u);
  QPoly p = detail::univariate_at_t1(s.num());
  QPoly q = detail::univariate_at_t1(s.den());
  if (q.empty()) throw Error("internal fault: S(u;1,x) has a vanishing denominator");
  const QPoly g = detail::qpoly_gcd(p, q);
  if (g.size() > 1) {
    p = detail::qpoly_div(p, g);
    q = detail::qpoly_div(q, g);
  }
  MonomialProbe probe;
  probe.u = u;
  std::tie(probe.numerator, probe.denominator) = detail::integral_pair(p, q);
  probe.monomial = std::count_if(probe.numerator.begin(), probe.numerator.end(), [](const BigInt& c) { return c != 0; }) == 1;
  return probe;
}

}  // namespace gfo
