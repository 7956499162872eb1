#pragma once

// Exhaustive ground truth: enumerate words by weight (compositions) or by
// length over a finite alphabet and classify them against a pattern.

#include <array>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gfo/poly.hpp"
#include "gfo/series.hpp"
#include "gfo/word.hpp"

namespace gfo {

struct OracleLimits {
  unsigned max_weight = 22;             // 2^21 words at the top weight
  std::uint64_t max_words = 1ull << 22;  // cap for finite-alphabet censuses
  bool parallel = false;                 // one task per weight class
};

/// Calls f on every word of letter sum N, in lexicographic order.  Each
/// composition of N is one binary choice vector of length N-1, so there are
/// exactly 2^(N-1) of them.
template <class F>
void for_each_word_of_weight(unsigned n, F&& f) {
  if (n == 0) {
    f(Word());
    return;
  }
  std::vector<Letter> buffer;
  buffer.reserve(n);
  std::function<void(unsigned)> rec = [&](unsigned remaining) {
    if (remaining == 0) {
      f(Word(buffer));
      return;
    }
    for (Letter a = 1; a <= remaining; ++a) {
      buffer.push_back(a);
      rec(remaining - a);
      buffer.pop_back();
    }
  };
  rec(n);
}

inline std::vector<Word> words_of_weight(unsigned n) {
  if (n == 0) throw Error("weight must be at least 1");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << (n - 1));
  for_each_word_of_weight(n, [&](const Word& w) { out.push_back(w); });
  return out;
}

/// Calls f on every word over [m] of length exactly len, lexicographically.
template <class F>
void for_each_word_of_length(std::size_t m, std::size_t len, F&& f) {
  std::vector<Letter> w(len, 1);
  while (true) {
    f(Word(w));
    std::size_t pos = len;
    while (pos > 0 && w[pos - 1] == m) {
      w[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) return;
    ++w[pos - 1];
  }
}

enum class GfSet { S, F, A, W };

inline const char* to_string(GfSet s) {
  switch (s) {
    case GfSet::S: return "S";
    case GfSet::F: return "F";
    case GfSet::A: return "A";
    case GfSet::W: return "W";
  }
  return "?";
}

inline GfSet parse_gf_set(std::string_view s) {
  if (s == "S") return GfSet::S;
  if (s == "F") return GfSet::F;
  if (s == "A") return GfSet::A;
  if (s == "W") return GfSet::W;
  throw Error("unknown generating-function set '" + std::string(s) + "' (expected S, F, A or W)");
}

struct WeightTally {
  std::uint64_t in_s = 0;
  std::uint64_t in_f_not_s = 0;
  std::uint64_t in_a = 0;
  std::uint64_t total() const noexcept { return in_s + in_f_not_s + in_a; }
  std::uint64_t in_f() const noexcept { return in_s + in_f_not_s; }
  friend bool operator==(const WeightTally&, const WeightTally&) = default;
};

/// Per-weight membership counts; counts[k] covers the words of weight k
/// (k = 0 is the empty word, which always avoids).
struct WeightCensus {
  Word pattern;
  unsigned bound = 0;
  std::vector<WeightTally> counts;
  /// Bivariate truncations (variable 0 = t, 1 = x) of S, F and A.
  Poly s_poly{2}, f_poly{2}, a_poly{2};

  const Poly& poly(GfSet set) const {
    switch (set) {
      case GfSet::S: return s_poly;
      case GfSet::F: return f_poly;
      case GfSet::A: return a_poly;
      default: throw Error("the oracle tracks S, F and A only");
    }
  }
};

namespace detail {
struct WeightClassResult {
  WeightTally tally;
  std::vector<Poly::Term> s, f, a;
};

inline WeightClassResult census_one_weight(const Word& u, unsigned k) {
  WeightClassResult r;
  std::map<std::uint32_t, std::array<std::uint64_t, 3>> by_length;
  for_each_word_of_weight(k, [&](const Word& w) {
    auto& slot = by_length[static_cast<std::uint32_t>(w.size())];
    switch (classify_word(u, w)) {
      case Membership::InS: ++r.tally.in_s; ++slot[0]; break;
      case Membership::InFNotS: ++r.tally.in_f_not_s; ++slot[1]; break;
      case Membership::InA: ++r.tally.in_a; ++slot[2]; break;
    }
  });
  for (const auto& [len, c] : by_length) {
    std::array<std::uint32_t, 2> e{len, k};
    Monomial m = Monomial::from(e);
    if (c[0]) r.s.push_back({m, BigInt(static_cast<unsigned long>(c[0]))});
    if (c[0] + c[1]) r.f.push_back({m, BigInt(static_cast<unsigned long>(c[0] + c[1]))});
    if (c[2]) r.a.push_back({m, BigInt(static_cast<unsigned long>(c[2]))});
  }
  return r;
}
}  // namespace detail

/// Exhaustive census of all words of weight 0..n against u.
inline WeightCensus weight_census(const Word& u, unsigned n, const OracleLimits& limits = {}) {
  require_pattern(u);
  if (n > limits.max_weight) {
    throw Error("order " + std::to_string(n) + " exceeds the oracle cap " + std::to_string(limits.max_weight));
  }
  WeightCensus c;
  c.pattern = u;
  c.bound = n;
  c.counts.resize(n + 1);
  c.counts[0].in_a = 1;
  std::vector<Poly::Term> s, f, a{{Monomial{}, BigInt(1)}};

  std::vector<detail::WeightClassResult> results(n + 1);
  if (limits.parallel && n > 1) {
    std::vector<std::future<detail::WeightClassResult>> jobs;
    for (unsigned k = 1; k <= n; ++k) {
      jobs.push_back(std::async(std::launch::async, detail::census_one_weight, u, k));
    }
    for (unsigned k = 1; k <= n; ++k) results[k] = jobs[k - 1].get();
  } else {
    for (unsigned k = 1; k <= n; ++k) results[k] = detail::census_one_weight(u, k);
  }
  for (unsigned k = 1; k <= n; ++k) {
    c.counts[k] = results[k].tally;
    s.insert(s.end(), results[k].s.begin(), results[k].s.end());
    f.insert(f.end(), results[k].f.begin(), results[k].f.end());
    a.insert(a.end(), results[k].a.begin(), results[k].a.end());
  }
  c.s_poly = Poly::from_terms(2, std::move(s));
  c.f_poly = Poly::from_terms(2, std::move(f));
  c.a_poly = Poly::from_terms(2, std::move(a));
  return c;
}

/// Coefficients at t = 1: the number of words of each weight 0..n in the set.
inline SeriesPrefix series_oracle(GfSet set, const Word& u, unsigned n, const OracleLimits& limits = {}) {
  auto census = weight_census(u, n, limits);
  std::vector<BigInt> coeffs(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    const auto& t = census.counts[k];
    std::uint64_t v = 0;
    switch (set) {
      case GfSet::S: v = t.in_s; break;
      case GfSet::F: v = t.in_f(); break;
      case GfSet::A: v = t.in_a; break;
      case GfSet::W: throw Error("the oracle tracks S, F and A only");
    }
    coeffs[k] = BigInt(static_cast<unsigned long>(v));
  }
  return SeriesPrefix::from(std::move(coeffs));
}

struct ContentTally {
  std::uint64_t in_f = 0;
  std::uint64_t in_s = 0;
  std::uint64_t in_a = 0;
  friend bool operator==(const ContentTally&, const ContentTally&) = default;
};

/// Membership counts over [m]^{<=L}, keyed by content vector (c_1..c_m).
struct ContentCensus {
  Word pattern;
  std::size_t m = 0;
  std::size_t max_length = 0;
  std::map<std::vector<std::uint32_t>, ContentTally> counts;

  /// The truncated generating function in Z[x_1..x_m] for S, F or A.
  Poly poly(GfSet set) const {
    std::vector<Poly::Term> terms;
    for (const auto& [content, t] : counts) {
      std::uint64_t v = set == GfSet::S ? t.in_s : set == GfSet::F ? t.in_f : t.in_a;
      if (set == GfSet::W) throw Error("the content census tracks S, F and A only");
      if (v) terms.push_back({Monomial::from(content), BigInt(static_cast<unsigned long>(v))});
    }
    return Poly::from_terms(m, std::move(terms));
  }
};

inline std::vector<std::uint32_t> content_of(const Word& w, std::size_t m) {
  std::vector<std::uint32_t> c(m, 0);
  for (Letter a : w) {
    if (a == 0 || a > m) throw Error("letter outside the alphabet [m]");
    ++c[a - 1];
  }
  return c;
}

inline ContentCensus multivar_census(const Word& u, std::size_t m, std::size_t max_length,
                                     const OracleLimits& limits = {}) {
  require_pattern(u);
  if (u.max_letter() > m) throw Error("pattern letter exceeds the alphabet bound m");
  if (m == 0 || m > kMaxVars) throw Error("alphabet bound out of supported range");
  std::uint64_t total = 0, layer = 1;
  for (std::size_t len = 0; len <= max_length; ++len) {
    total += layer;
    if (total > limits.max_words) throw Error("census of [m]^{<=L} exceeds the configured word cap");
    layer *= m;
  }
  ContentCensus c;
  c.pattern = u;
  c.m = m;
  c.max_length = max_length;
  for (std::size_t len = 0; len <= max_length; ++len) {
    for_each_word_of_length(m, len, [&](const Word& w) {
      auto& slot = c.counts[content_of(w, m)];
      switch (classify_word(u, w)) {
        case Membership::InS: ++slot.in_s; ++slot.in_f; break;
        case Membership::InFNotS: ++slot.in_f; break;
        case Membership::InA: ++slot.in_a; break;
      }
    });
  }
  return c;
}

struct DecrementCounterexample {
  Word source;
  Word image;
  bool forward = true;  // increment S(u) -> barS(i) failed (else decrement failed)
};

struct DecrementVerdict {
  bool pass = true;
  std::vector<DecrementCounterexample> counterexamples;  // by weight, then lex order
  std::uint64_t checked = 0;
  std::optional<DecrementCounterexample> first() const {
    if (counterexamples.empty()) return std::nullopt;
    return counterexamples.front();
  }
};

/// Checks the weight-shift bijection between S(u) and barS^(i)(u), the set
/// of words in S(u) whose last i letters also dominate u_1..u_i: raising
/// letter p-i+j by u_j - u_{n-i+j} for every n-i+j in D^(i)(u) must land in
/// barS^(i)(u), and lowering must land back in S(u).  Every word of weight
/// at most n is tried in both directions.
inline DecrementVerdict decrement_map_check(const Word& u, std::size_t i, unsigned max_weight,
                                            const OracleLimits& limits = {}) {
  require_pattern(u);
  const std::size_t n = u.size();
  if (i == 0 || i >= n) throw Error("overlap index must lie in 1..|u|-1");
  if (max_weight > limits.max_weight) throw Error("weight bound exceeds the oracle cap");
  const Deficiency d = deficiency(u, i);
  const Word head = u.factor(1, i);

  auto in_bar = [&](const Word& v) {
    return classify_word(u, v) == Membership::InS && dominates_at(head, v, v.size() - i + 1);
  };
  auto shift = [&](const Word& w, bool up) {
    std::vector<Letter> out(w.begin(), w.end());
    const std::size_t p = w.size();
    for (std::size_t pos : d.positions) {
      const std::size_t j = pos - (n - i);
      const Letter delta = u.at(j) - u.at(pos);
      Letter& slot = out[p - i + j - 1];
      slot = up ? slot + delta : slot - delta;
    }
    return Word(std::move(out));
  };

  DecrementVerdict verdict;
  for (unsigned k = 1; k <= max_weight; ++k) {
    for_each_word_of_weight(k, [&](const Word& w) {
      if (w.size() < n) return;
      if (classify_word(u, w) == Membership::InS) {
        ++verdict.checked;
        Word v = shift(w, true);
        if (!in_bar(v)) verdict.counterexamples.push_back({w, v, true});
      }
      if (in_bar(w)) {
        ++verdict.checked;
        Word back = shift(w, false);
        if (classify_word(u, back) != Membership::InS) verdict.counterexamples.push_back({w, back, false});
      }
    });
  }
  verdict.pass = verdict.counterexamples.empty();
  return verdict;
}

}  // namespace gfo
