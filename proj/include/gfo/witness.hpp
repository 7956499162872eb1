#pragma once

// Rearrangement maps built from [m]-Wilf equivalence: a content-preserving
// bijection between F(u) and F(v) inside [m]^{<=L}, lifted to arbitrary
// words by parking every letter >= m on the letter m.

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gfo/oracle.hpp"
#include "gfo/word.hpp"

namespace gfo {

enum class Side { F, A };

inline const char* to_string(Side s) { return s == Side::F ? "F" : "A"; }

/// Raised when some (content, side) class holds different numbers of words
/// for the two patterns, so no content-preserving bijection exists.
class WitnessMismatch : public Error {
 public:
  WitnessMismatch(std::vector<std::uint32_t> content, Side side, std::size_t left, std::size_t right)
      : Error(describe(content, side, left, right)), content_(std::move(content)), side_(side) {}
  const std::vector<std::uint32_t>& content() const noexcept { return content_; }
  Side side() const noexcept { return side_; }

 private:
  static std::string describe(const std::vector<std::uint32_t>& content, Side side, std::size_t l, std::size_t r) {
    std::string c;
    for (auto e : content) c += (c.empty() ? "" : ",") + std::to_string(e);
    return "not [m]-Wilf-equivalent: class (" + c + ") on side " + to_string(side) + " has " + std::to_string(l) +
           " vs " + std::to_string(r) + " words";
  }
  std::vector<std::uint32_t> content_;
  Side side_;
};

struct WitnessClassKey {
  std::vector<std::uint32_t> content;
  Side side = Side::F;
  friend auto operator<=>(const WitnessClassKey&, const WitnessClassKey&) = default;
};

/// Immutable after construction.  Pairs are (source in F(u) or A(u),
/// image in F(v) or A(v)), matched by lexicographic rank in each class.
class WitnessTable {
 public:
  static constexpr int kSchemaVersion = 1;

  WitnessTable(Word u, Word v, std::size_t m, std::size_t max_length,
               std::map<WitnessClassKey, std::vector<std::pair<Word, Word>>> classes)
      : u_(std::move(u)), v_(std::move(v)), m_(m), max_length_(max_length), classes_(std::move(classes)) {
    for (const auto& [key, pairs] : classes_) {
      for (const auto& [src, dst] : pairs) {
        if (!forward_.emplace(src, dst).second) throw Error("witness table lists a source word twice");
      }
    }
  }

  const Word& u() const noexcept { return u_; }
  const Word& v() const noexcept { return v_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t max_length() const noexcept { return max_length_; }
  const std::map<WitnessClassKey, std::vector<std::pair<Word, Word>>>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return forward_.size(); }

  /// Image of a word of [m]^{<=L}.
  const Word& image(const Word& w) const {
    auto it = forward_.find(w);
    if (it == forward_.end()) throw Error("word " + w.str() + " is not covered by the witness table");
    return it->second;
  }

  bool is_identity() const {
    for (const auto& [src, dst] : forward_) {
      if (!(src == dst)) return false;
    }
    return true;
  }

 private:
  Word u_, v_;
  std::size_t m_;
  std::size_t max_length_;
  std::map<WitnessClassKey, std::vector<std::pair<Word, Word>>> classes_;
  std::unordered_map<Word, Word> forward_;
};

/// Pairs F(u) with F(v) and A(u) with A(v) over [m]^{<=L}, class by class.
/// Throws WitnessMismatch on the first class whose sizes differ.
inline WitnessTable witness_build(const Word& u, const Word& v, std::size_t m, std::size_t max_length,
                                  const OracleLimits& limits = {}) {
  require_pattern(u);
  require_pattern(v);
  if (m == 0 || m > kMaxVars) throw Error("alphabet bound out of supported range");
  if (u.max_letter() > m || v.max_letter() > m) throw Error("pattern letter exceeds the alphabet bound m");
  std::uint64_t total = 0, layer = 1;
  for (std::size_t len = 0; len <= max_length; ++len) {
    total += layer;
    if (total > limits.max_words) throw Error("witness over [m]^{<=L} exceeds the configured word cap");
    layer *= m;
  }

  std::map<WitnessClassKey, std::pair<std::vector<Word>, std::vector<Word>>> members;
  for (std::size_t len = 0; len <= max_length; ++len) {
    // Enumeration is lexicographic, so every member list arrives sorted.
    for_each_word_of_length(m, len, [&](const Word& w) {
      auto content = content_of(w, m);
      members[{content, embeds(u, w) ? Side::F : Side::A}].first.push_back(w);
      members[{std::move(content), embeds(v, w) ? Side::F : Side::A}].second.push_back(w);
    });
  }

  std::map<WitnessClassKey, std::vector<std::pair<Word, Word>>> classes;
  for (auto& [key, lists] : members) {
    auto& [left, right] = lists;
    if (left.size() != right.size()) throw WitnessMismatch(key.content, key.side, left.size(), right.size());
    auto& pairs = classes[key];
    pairs.reserve(left.size());
    for (std::size_t r = 0; r < left.size(); ++r) pairs.emplace_back(std::move(left[r]), std::move(right[r]));
  }
  return WitnessTable(u, v, m, max_length, std::move(classes));
}

/// Lifts the table to any word: letters >= m become m, the compressed word
/// is mapped, and the original large letters return, in order, to the
/// image's positions holding m.
inline Word witness_apply(const WitnessTable& table, const Word& w) {
  if (w.size() > table.max_length()) {
    throw Error("word of length " + std::to_string(w.size()) + " exceeds the witness length bound " +
                std::to_string(table.max_length()));
  }
  const Letter m = static_cast<Letter>(table.m());
  std::vector<Letter> compressed;
  std::vector<Letter> parked;
  compressed.reserve(w.size());
  for (Letter a : w) {
    if (a >= m) {
      parked.push_back(a);
      compressed.push_back(m);
    } else {
      compressed.push_back(a);
    }
  }
  const Word& image = table.image(Word(std::move(compressed)));
  std::vector<Letter> out(image.begin(), image.end());
  std::size_t k = 0;
  for (Letter& a : out) {
    if (a == m) a = parked[k++];
  }
  return Word(std::move(out));
}

}  // namespace gfo
