#pragma once

// Words over the positive integers and the generalized factor order.
//
// Positions are 1-indexed in every public result (embedding starts,
// deficiency positions, split points) so they line up with the usual
// mathematical notation u = u_1 ... u_n.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gfo/error.hpp"

namespace gfo {

using Letter = std::uint32_t;

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) { validate(); }
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) { validate(); }

  /// Parses "24153" (every letter a single digit 1-9) or "2,4,15,3".
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// 1-indexed access.
  Letter at(std::size_t position) const {
    if (position == 0 || position > letters_.size()) {
      throw std::out_of_range("word position out of range");
    }
    return letters_[position - 1];
  }
  Letter operator[](std::size_t index) const noexcept { return letters_[index]; }

  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Sigma(w), the letter sum.
  std::uint64_t sigma() const noexcept {
    return std::accumulate(letters_.begin(), letters_.end(), std::uint64_t{0});
  }
  Letter max_letter() const noexcept {
    return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
  }

  Word reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }
  /// Letters i..j inclusive, 1-indexed; empty when i > j.
  Word factor(std::size_t first, std::size_t last) const;
  Word sorted() const {
    std::vector<Letter> copy = letters_;
    std::sort(copy.begin(), copy.end());
    return Word(std::move(copy));
  }
  Word concat(const Word& other) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(out));
  }

  /// Digit string when every letter is at most 9, comma separated otherwise.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  void validate() const {
    for (Letter a : letters_) {
      if (a == 0) throw Error("letters must be positive integers");
    }
  }

  std::vector<Letter> letters_;
};

inline Word Word::parse(std::string_view text) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);

  std::vector<Letter> out;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw Error("invalid word '" + std::string(text) + "': expected digits 1-9 or comma-separated integers");
      }
      out.push_back(static_cast<Letter>(c - '0'));
    }
    return Word(std::move(out));
  }

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view field = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!field.empty() && is_space(field.front())) field.remove_prefix(1);
    while (!field.empty() && is_space(field.back())) field.remove_suffix(1);
    if (field.empty()) throw Error("invalid word '" + std::string(text) + "': empty letter");
    std::uint64_t value = 0;
    for (char c : field) {
      if (c < '0' || c > '9') throw Error("invalid word '" + std::string(text) + "': non-digit letter");
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > UINT32_MAX) throw Error("invalid word '" + std::string(text) + "': letter too large");
    }
    if (value == 0) throw Error("invalid word '" + std::string(text) + "': letters must be positive");
    out.push_back(static_cast<Letter>(value));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Word(std::move(out));
}

inline Word Word::factor(std::size_t first, std::size_t last) const {
  if (first > last) return Word();
  if (first == 0 || last > letters_.size()) throw std::out_of_range("factor bounds out of range");
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(first - 1),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(last)));
}

inline std::string Word::str() const {
  std::string out;
  bool small = std::all_of(letters_.begin(), letters_.end(), [](Letter a) { return a <= 9; });
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (small) {
      out.push_back(static_cast<char>('0' + letters_[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(letters_[i]);
    }
  }
  return out;
}

inline void require_pattern(const Word& u) {
  if (u.empty()) throw Error("the empty word is not a valid pattern");
}

/// True when the rearrangement (multiset) classes of u and v coincide.
inline bool is_rearrangement(const Word& u, const Word& v) { return u.sorted() == v.sorted(); }

inline bool is_weakly_increasing(const Word& w) {
  return std::is_sorted(w.begin(), w.end());
}

/// Does the factor of w starting at 1-indexed position `start` dominate u pointwise?
inline bool dominates_at(const Word& u, const Word& w, std::size_t start) {
  if (start == 0 || start + u.size() - 1 > w.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (w[start - 1 + i] < u[i]) return false;
  }
  return true;
}

/// All 1-indexed start positions of embeddings of u into w, ascending.
inline std::vector<std::size_t> embeddings(const Word& u, const Word& w) {
  require_pattern(u);
  std::vector<std::size_t> starts;
  if (w.size() < u.size()) return starts;
  for (std::size_t s = 1; s + u.size() - 1 <= w.size(); ++s) {
    if (dominates_at(u, w, s)) starts.push_back(s);
  }
  return starts;
}

inline bool embeds(const Word& u, const Word& w) {
  require_pattern(u);
  if (w.size() < u.size()) return false;
  for (std::size_t s = 1; s + u.size() - 1 <= w.size(); ++s) {
    if (dominates_at(u, w, s)) return true;
  }
  return false;
}

enum class Membership { InS, InFNotS, InA };

inline const char* to_string(Membership m) {
  switch (m) {
    case Membership::InS: return "IN_S";
    case Membership::InFNotS: return "IN_F_NOT_S";
    case Membership::InA: return "IN_A";
  }
  return "?";
}

/// Which of S(u), F(u)\S(u), A(u) the text w belongs to.
inline Membership classify_word(const Word& u, const Word& w) {
  require_pattern(u);
  if (w.size() < u.size()) return Membership::InA;
  const std::size_t last = w.size() - u.size() + 1;
  bool any = false;
  for (std::size_t s = 1; s <= last; ++s) {
    if (dominates_at(u, w, s)) {
      if (s != last) return Membership::InFNotS;
      any = true;
    }
  }
  return any ? Membership::InS : Membership::InA;
}

struct IncDecSplit {
  std::size_t k = 0;  // length of the longest weakly increasing prefix
  Word inc;
  Word dec;
  bool valid = false;
};

inline IncDecSplit incdec_factorization(const Word& u) {
  require_pattern(u);
  IncDecSplit split;
  std::size_t k = 1;
  while (k < u.size() && u[k - 1] <= u[k]) ++k;
  split.k = k;
  split.inc = u.factor(1, k);
  split.dec = u.factor(k + 1, u.size());
  split.valid = std::is_sorted(split.dec.begin(), split.dec.end(), std::greater<>());
  return split;
}

inline bool has_incdec_factorization(const Word& u) { return incdec_factorization(u).valid; }

struct Deficiency {
  std::size_t i = 0;
  std::vector<std::size_t> positions;  // D^(i)(u), 1-indexed, ascending
  std::uint64_t total = 0;             // d_i(u)
};

/// D^(i)(u) = { n-i+j : u_j > u_{n-i+j} } and d_i(u) = sum of the excesses.
inline Deficiency deficiency(const Word& u, std::size_t i) {
  require_pattern(u);
  const std::size_t n = u.size();
  if (i == 0 || i > n) throw Error("overlap length must lie in 1..|u|");
  Deficiency d;
  d.i = i;
  for (std::size_t j = 1; j <= i; ++j) {
    Letter top = u.at(j);
    Letter bottom = u.at(n - i + j);
    if (top > bottom) {
      d.positions.push_back(n - i + j);
      d.total += top - bottom;
    }
  }
  return d;
}

/// The vector d_i(u) + Sigma(s_i(u)) for i = 1..n, where s_i = u_{i+1}..u_n.
inline std::vector<std::uint64_t> profile(const Word& u) {
  require_pattern(u);
  const std::size_t n = u.size();
  std::vector<std::uint64_t> out(n);
  std::uint64_t suffix = 0;
  for (std::size_t i = n; i >= 1; --i) {
    out[i - 1] = deficiency(u, i).total + suffix;
    suffix += u.at(i);
  }
  return out;
}

}  // namespace gfo

template <>
struct std::hash<gfo::Word> {
  std::size_t operator()(const gfo::Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (gfo::Letter a : w) h = (h ^ a) * 0x100000001b3ull;
    return h;
  }
};
