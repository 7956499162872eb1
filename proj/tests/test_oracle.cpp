#include <gtest/gtest.h>

#include "gfo/automaton.hpp"
#include "gfo/genfun.hpp"
#include "gfo/oracle.hpp"
#include "gfo/series.hpp"
#include "gfo/wilf.hpp"

using namespace gfo;

namespace {

Word W(const char* s) { return Word::parse(s); }

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long v : xs) out.emplace_back(v);
  return out;
}

Poly content_monomial(std::initializer_list<std::uint32_t> c) { return Poly::monomial(1, c); }

}  // namespace

TEST(WordsOfWeight, Compositions) {
  EXPECT_EQ(words_of_weight(3), (std::vector<Word>{W("111"), W("12"), W("21"), W("3")}));
  EXPECT_EQ(words_of_weight(1), (std::vector<Word>{W("1")}));
  EXPECT_EQ(words_of_weight(5).size(), 16u);
  for (unsigned n = 1; n <= 12; ++n) {
    const auto ws = words_of_weight(n);
    EXPECT_EQ(ws.size(), std::size_t{1} << (n - 1));
    EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end()));
    for (const auto& w : ws) EXPECT_EQ(w.sigma(), n);
  }
}

TEST(SeriesOracle, Examples) {
  EXPECT_EQ(series_oracle(GfSet::A, W("3"), 6).coefficients, ints({1, 1, 2, 3, 5, 8, 13}));
  const SeriesPrefix s121 = series_oracle(GfSet::S, W("121"), 8);
  EXPECT_EQ(s121.offset, 4u);
  EXPECT_EQ(s121.from_offset(), ints({1, 4, 10, 20, 35}));
  const SeriesPrefix s213 = series_oracle(GfSet::S, W("213"), 10);
  EXPECT_EQ(s213.offset, 6u);
  EXPECT_EQ(s213.from_offset(), ints({1, 4, 11, 26, 55}));
}

TEST(SeriesOracle, RespectsCap) {
  OracleLimits small;
  small.max_weight = 10;
  EXPECT_THROW(series_oracle(GfSet::S, W("1"), 11, small), Error);
  EXPECT_THROW(weight_census(W("1"), 23), Error);
  EXPECT_THROW(series_oracle(GfSet::S, Word(), 3), Error);
}

TEST(WeightCensus, PartitionsCompositions) {
  for (const char* s : {"1", "2", "21", "2112", "132"}) {
    const WeightCensus c = weight_census(W(s), 14);
    for (unsigned k = 1; k <= 14; ++k) {
      EXPECT_EQ(c.counts[k].total(), std::uint64_t{1} << (k - 1)) << s << " weight " << k;
    }
  }
}

TEST(WeightCensus, ParallelMatchesSerial) {
  OracleLimits par;
  par.parallel = true;
  const WeightCensus a = weight_census(W("2112"), 16);
  const WeightCensus b = weight_census(W("2112"), 16, par);
  EXPECT_EQ(a.counts, b.counts);
}

TEST(SeriesOracle, FIsSConvolvedWithAllWords) {
  for (const char* s : {"2", "13", "212", "2112"}) {
    const auto sc = series_oracle(GfSet::S, W(s), 14).coefficients;
    const auto fc = series_oracle(GfSet::F, W(s), 14).coefficients;
    for (std::size_t k = 0; k <= 14; ++k) {
      BigInt conv = 0;
      for (std::size_t j = 0; j <= k; ++j) {
        const std::size_t r = k - j;
        conv += sc[j] * (r == 0 ? BigInt(1) : BigInt(1) << static_cast<mp_bitcnt_t>(r - 1));
      }
      EXPECT_EQ(fc[k], conv) << s << " at x^" << k;
    }
  }
}

TEST(SeriesOracle, AgreesWithClosedForms) {
  for (std::size_t len = 1; len <= 3; ++len) {
    for_each_word_of_length(4, len, [&](const Word& u) {
      const auto s = detail::closed_form_S(u);
      if (!s) return;
      const GenFunBundle b = derive_FAW(*s, u);
      EXPECT_EQ(series_x(b.S, 18), series_oracle(GfSet::S, u, 18)) << u.str();
      EXPECT_EQ(series_x(b.A, 18), series_oracle(GfSet::A, u, 18)) << u.str();
    });
  }
}

TEST(MultivarCensus, Examples) {
  const ContentCensus c2 = multivar_census(W("12"), 2, 2);
  EXPECT_EQ(c2.poly(GfSet::F), content_monomial({1, 1}) + content_monomial({0, 2}));

  const ContentCensus c3 = multivar_census(W("12"), 2, 3);
  const Poly f3 = c3.poly(GfSet::F).truncated_total(3) - c3.poly(GfSet::F).truncated_total(2);
  EXPECT_EQ(f3, Poly::monomial(2, {2, 1}) + Poly::monomial(3, {1, 2}) + Poly::monomial(1, {0, 3}));

  const ContentCensus ones = multivar_census(W("1"), 1, 3);
  EXPECT_EQ(ones.poly(GfSet::F), content_monomial({1}) + content_monomial({2}) + content_monomial({3}));
  EXPECT_THROW(ones.poly(GfSet::W), Error);
}

TEST(MultivarCensus, TotalsPerLength) {
  const ContentCensus c = multivar_census(W("121"), 3, 6);
  std::vector<std::uint64_t> per_length(7, 0);
  for (const auto& [content, t] : c.counts) {
    std::uint32_t len = 0;
    for (auto e : content) len += e;
    per_length[len] += t.in_f + t.in_a;
    EXPECT_LE(t.in_s, t.in_f);
  }
  std::uint64_t expected = 1;
  for (std::size_t len = 0; len <= 6; ++len, expected *= 3) EXPECT_EQ(per_length[len], expected);
}

TEST(MultivarCensus, Errors) {
  EXPECT_THROW(multivar_census(W("13"), 2, 3), Error);
  OracleLimits small;
  small.max_words = 100;
  EXPECT_THROW(multivar_census(W("1"), 3, 6, small), Error);
}

TEST(DecrementMap, FailsForNonFactorizablePattern) {
  const DecrementVerdict v = decrement_map_check(W("2112"), 2, 12);
  EXPECT_FALSE(v.pass);
  const auto hit = std::find_if(v.counterexamples.begin(), v.counterexamples.end(), [](const auto& c) {
    return c.forward && c.source == W("122112") && c.image == W("122122");
  });
  EXPECT_NE(hit, v.counterexamples.end());
  ASSERT_TRUE(v.first());
  EXPECT_EQ(v.first()->source, W("22112"));
}

TEST(DecrementMap, PassesForFactorizablePatterns) {
  EXPECT_TRUE(decrement_map_check(W("121"), 1, 12).pass);
  EXPECT_TRUE(decrement_map_check(W("123"), 2, 12).pass);
  EXPECT_GT(decrement_map_check(W("123"), 2, 12).checked, 0u);
  EXPECT_THROW(decrement_map_check(W("12"), 2, 8), Error);
  EXPECT_THROW(decrement_map_check(W("12"), 0, 8), Error);
}

TEST(DecrementMap, FailureCountWithoutFactorization) {
  std::size_t words = 0, failing = 0;
  for (std::size_t len = 3; len <= 4; ++len) {
    for_each_word_of_length(4, len, [&](const Word& u) {
      if (has_incdec_factorization(u)) return;
      ++words;
      bool any_fail = false;
      for (std::size_t i = 1; i < len && !any_fail; ++i) any_fail = !decrement_map_check(u, i, 14).pass;
      if (any_fail) ++failing;
    });
  }
  RecordProperty("non_factorizable", static_cast<int>(words));
  RecordProperty("some_index_fails", static_cast<int>(failing));
  EXPECT_EQ(words, 140u);
  EXPECT_GT(failing, 0u);
  EXPECT_FALSE(decrement_map_check(W("324"), 2, 14).pass);
  EXPECT_TRUE(decrement_map_check(W("324"), 2, 12).pass);
}
