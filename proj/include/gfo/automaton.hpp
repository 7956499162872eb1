#pragma once

// Subset-construction recognizer for S(u) and the exact rational S(u) it
// yields through a weighted linear system.
//
// A state J is the set of j in {1..n-1} such that the last j letters read
// dominate u_1..u_j.  Reading a letter of class c moves J to
// { j+1 : j in J or j = 0, c >= u_{j+1} }; producing n completes the first
// embedding, which ends the word when it lies in S(u).  Because embeddings
// have distinct start positions, "the leftmost embedding ends at the last
// letter" is exactly "the only embedding is the suffix".

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gfo/linear_solve.hpp"
#include "gfo/oracle.hpp"
#include "gfo/ratfun.hpp"
#include "gfo/series.hpp"
#include "gfo/word.hpp"

namespace gfo {

/// A set of letters that compare identically against every pattern letter.
struct LetterClass {
  Letter lo = 1;        // smallest (representative) letter
  bool lumped = false;  // the class is {lo, lo+1, ...}
  RatFun weight;

  std::string label() const { return (lumped ? ">=" : "") + std::to_string(lo); }
};

struct Alphabet {
  enum class Kind { Bivariate, Finite } kind = Kind::Bivariate;
  Letter bound = 0;  // bivariate: lumping bound (0 = max(u)); finite: m

  static Alphabet bivariate(Letter lumping_bound = 0) { return {Kind::Bivariate, lumping_bound}; }
  static Alphabet finite(Letter m) { return {Kind::Finite, m}; }
};

/// Bivariate: {1}, ..., {M-1}, {>=M} with weights t x^a and t x^M/(1-x),
/// where M = max(u) unless a larger lumping bound is requested.
/// Finite(m): one class per letter a in [m] with weight x_a.
inline std::vector<LetterClass> letter_classes(const Word& u, Alphabet alphabet = Alphabet::bivariate()) {
  require_pattern(u);
  std::vector<LetterClass> out;
  if (alphabet.kind == Alphabet::Kind::Finite) {
    const Letter m = alphabet.bound;
    if (u.max_letter() > m) throw Error("pattern letter exceeds the alphabet bound m");
    if (m == 0 || m > kMaxVars) throw Error("alphabet bound out of supported range");
    for (Letter a = 1; a <= m; ++a) out.push_back({a, false, RatFun(Poly::variable(a - 1, m))});
    return out;
  }
  const Letter top = alphabet.bound == 0 ? u.max_letter() : alphabet.bound;
  if (top < u.max_letter()) throw Error("lumping bound below the largest pattern letter");
  for (Letter a = 1; a < top; ++a) out.push_back({a, false, RatFun(tx::term(1, 1, a))});
  out.push_back({top, true, RatFun(tx::term(1, 1, top), tx::one() - tx::x())});
  return out;
}

class EmbedDFA {
 public:
  static constexpr std::int32_t kComplete = -1;

  const Word& pattern() const noexcept { return pattern_; }
  const std::vector<LetterClass>& classes() const noexcept { return classes_; }
  /// Canonical states as bitsets (bit j-1 set iff j in J), ascending;
  /// the start state, the empty set, is index 0.
  const std::vector<std::uint64_t>& states() const noexcept { return states_; }
  std::size_t state_count() const noexcept { return states_.size(); }
  /// Target state index, or kComplete.
  std::int32_t next(std::size_t state, std::size_t cls) const { return delta_.at(state).at(cls); }
  bool finite_alphabet() const noexcept { return finite_; }

  std::string state_label(std::size_t s) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t j = 1; j < pattern_.size(); ++j) {
      if (states_[s] >> (j - 1) & 1u) {
        if (!first) out += ",";
        out += std::to_string(j);
        first = false;
      }
    }
    return out + "}";
  }

  /// Graphviz rendering; completion edges go to a shared accepting node.
  std::string dot() const {
    std::string out = "digraph embed_dfa {\n  rankdir=LR;\n  node [shape=circle];\n";
    out += "  done [shape=doublecircle, label=\"S\"];\n";
    for (std::size_t s = 0; s < states_.size(); ++s) {
      out += "  q" + std::to_string(s) + " [label=\"" + state_label(s) + "\"];\n";
    }
    for (std::size_t s = 0; s < states_.size(); ++s) {
      std::map<std::int32_t, std::string> edges;
      for (std::size_t c = 0; c < classes_.size(); ++c) {
        auto& label = edges[delta_[s][c]];
        if (!label.empty()) label += ",";
        label += classes_[c].label();
      }
      for (const auto& [target, label] : edges) {
        out += "  q" + std::to_string(s) + " -> " +
               (target == kComplete ? std::string("done") : "q" + std::to_string(target)) + " [label=\"" + label +
               "\"];\n";
      }
    }
    return out + "}\n";
  }

 private:
  friend EmbedDFA build_dfa(const Word& u, std::vector<LetterClass> classes);

  Word pattern_;
  std::vector<LetterClass> classes_;
  std::vector<std::uint64_t> states_;
  std::vector<std::vector<std::int32_t>> delta_;
  bool finite_ = false;
};

inline EmbedDFA build_dfa(const Word& u, std::vector<LetterClass> classes) {
  require_pattern(u);
  const std::size_t n = u.size();
  if (n > 64) throw Error("patterns longer than 64 letters are not supported");
  if (classes.empty()) throw Error("no letter classes");

  auto step = [&](std::uint64_t state, Letter rep) -> std::optional<std::uint64_t> {
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const bool active = j == 0 || (state >> (j - 1) & 1u);
      if (!active || rep < u[j]) continue;
      if (j + 1 == n) return std::nullopt;
      out |= std::uint64_t{1} << j;
    }
    return out;
  };

  std::map<std::uint64_t, std::vector<std::optional<std::uint64_t>>> raw;
  std::vector<std::uint64_t> frontier{0};
  raw[0];
  while (!frontier.empty()) {
    std::uint64_t s = frontier.back();
    frontier.pop_back();
    std::vector<std::optional<std::uint64_t>> row;
    for (const auto& c : classes) {
      auto target = step(s, c.lo);
      row.push_back(target);
      if (target && !raw.contains(*target)) {
        raw[*target];
        frontier.push_back(*target);
      }
    }
    raw[s] = std::move(row);
  }

  EmbedDFA dfa;
  dfa.pattern_ = u;
  dfa.finite_ = !classes.back().lumped;
  dfa.classes_ = std::move(classes);
  std::map<std::uint64_t, std::int32_t> index;
  for (const auto& [bits, row] : raw) {
    index[bits] = static_cast<std::int32_t>(dfa.states_.size());
    dfa.states_.push_back(bits);
  }
  for (const auto& [bits, row] : raw) {
    std::vector<std::int32_t> out;
    for (const auto& target : row) out.push_back(target ? index.at(*target) : EmbedDFA::kComplete);
    dfa.delta_.push_back(std::move(out));
  }
  return dfa;
}

struct DfaOptions {
  /// When nonzero, the bivariate result's t = 1 series is compared with the
  /// brute-force oracle up to this weight and a mismatch throws.
  unsigned verify_order = 0;
  std::size_t max_finite_alphabet = 3;
  std::size_t max_finite_length = 4;
};

/// S(u) as a rational function: with G_J the generating function of the
/// non-completed prefixes that end in state J,
///   G_J = [J = start] + sum over non-completing edges J' -c-> J of G_J' w_c,
///   S   = sum_J G_J * (total weight of completing classes out of J).
inline RatFun dfa_ratfun(const EmbedDFA& dfa, const DfaOptions& options = {}) {
  const auto& classes = dfa.classes();
  const std::size_t nvars = classes.front().weight.nvars();
  if (dfa.finite_alphabet()) {
    if (nvars > options.max_finite_alphabet || dfa.pattern().size() > options.max_finite_length) {
      throw Error("finite-alphabet solve beyond the configured limits (m <= " +
                  std::to_string(options.max_finite_alphabet) + ", n <= " +
                  std::to_string(options.max_finite_length) + ")");
    }
  }

  // Common denominator of the class weights.
  std::vector<Poly> dens;
  for (const auto& c : classes) {
    if (std::find(dens.begin(), dens.end(), c.weight.den()) == dens.end()) dens.push_back(c.weight.den());
  }
  Poly common = Poly::constant(1, nvars);
  for (const auto& d : dens) common = common * d;
  std::vector<Poly> scaled;  // w_c * common, polynomial
  for (const auto& c : classes) scaled.push_back(divide_exact(c.weight.num() * common, c.weight.den()));

  const std::size_t k = dfa.state_count();
  PolyMatrix m(k, std::vector<Poly>(k, Poly(nvars)));
  std::vector<Poly> rhs(k, Poly(nvars));
  std::vector<Poly> completing(k, Poly(nvars));
  for (std::size_t j = 0; j < k; ++j) m[j][j] = common;
  rhs[0] = common;
  for (std::size_t src = 0; src < k; ++src) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const std::int32_t dst = dfa.next(src, c);
      if (dst == EmbedDFA::kComplete) {
        completing[src] += scaled[c];
      } else {
        m[static_cast<std::size_t>(dst)][src] -= scaled[c];
      }
    }
  }

  LinearSolution sol;
  try {
    sol = solve_linear(m, rhs);
  } catch (const SingularMatrix& e) {
    throw Error(std::string("internal fault: embedding system is singular (") + e.what() + ")");
  }
  Poly num(nvars);
  for (std::size_t j = 0; j < k; ++j) {
    if (!completing[j].is_zero() && !sol.numerators[j].is_zero()) num += sol.numerators[j] * completing[j];
  }
  RatFun s(num, sol.denominator * common);

  if (options.verify_order > 0 && !dfa.finite_alphabet()) {
    auto expected = series_oracle(GfSet::S, dfa.pattern(), options.verify_order);
    if (series_x(s, options.verify_order) != expected) {
      throw Error("internal fault: automaton series disagrees with the oracle for " + dfa.pattern().str());
    }
  }
  return s;
}

/// S(u;t,x) through the automaton with the default letter classes.
inline RatFun S_automaton(const Word& u, const DfaOptions& options = {}) {
  return dfa_ratfun(build_dfa(u, letter_classes(u)), options);
}

/// S(u;x_1..x_m) through the finite-alphabet automaton.
inline RatFun S_automaton_finite(const Word& u, std::size_t m, const DfaOptions& options = {}) {
  return dfa_ratfun(build_dfa(u, letter_classes(u, Alphabet::finite(static_cast<Letter>(m)))), options);
}

/// u ~ v decided exactly: S(u;t,x) == S(v;t,x) by cross-multiplication.
inline bool wilf_equal_exact(const Word& u, const Word& v) {
  require_pattern(u);
  require_pattern(v);
  if (u == v) return true;
  // The lowest term of S(u;t,x) is t^|u| x^Sigma(u).
  if (u.sigma() != v.sigma() || u.size() != v.size()) return false;
  return S_automaton(u) == S_automaton(v);
}

}  // namespace gfo
