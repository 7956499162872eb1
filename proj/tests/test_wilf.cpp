#include <gtest/gtest.h>

#include "gfo/automaton.hpp"
#include "gfo/genfun.hpp"
#include "gfo/wilf.hpp"

using namespace gfo;

namespace {

Word W(const char* s) { return Word::parse(s); }

std::vector<Word> words(std::initializer_list<const char*> xs) {
  std::vector<Word> out;
  for (const char* s : xs) out.push_back(W(s));
  return out;
}

}  // namespace

TEST(ClassifyLength3, TheFourCases) {
  EXPECT_EQ(classify_length3(2, 2, 2), (std::vector<std::vector<Word>>{words({"222"})}));
  EXPECT_EQ(classify_length3(1, 1, 2), (std::vector<std::vector<Word>>{words({"112", "121", "211"})}));
  EXPECT_EQ(classify_length3(2, 2, 1), (std::vector<std::vector<Word>>{words({"122", "221"}), words({"212"})}));
  EXPECT_EQ(classify_length3(3, 1, 2),
            (std::vector<std::vector<Word>>{words({"123", "132", "231", "321"}), words({"213", "312"})}));
  EXPECT_EQ(classify_length3(1, 2, 1), classify_length3(1, 1, 2));
  EXPECT_THROW(classify_length3(0, 1, 2), Error);
}

TEST(ClassifyLength3, AgreesWithExactComparison) {
  for (Letter a = 1; a <= 3; ++a)
    for (Letter b = a; b <= 3; ++b)
      for (Letter c = b; c <= 3; ++c) {
        const auto classes = classify_length3(a, b, c);
        for (std::size_t i = 0; i < classes.size(); ++i)
          for (std::size_t j = i; j < classes.size(); ++j)
            for (const auto& u : classes[i])
              for (const auto& v : classes[j]) {
                EXPECT_EQ(wilf_equal_exact(u, v), i == j) << u.str() << " " << v.str();
              }
      }
}

TEST(WilfIncDec, Examples) {
  EXPECT_TRUE(wilf_equal_incdec(W("112"), W("121")));
  EXPECT_TRUE(wilf_equal_incdec(W("121"), W("211")));
  EXPECT_FALSE(wilf_equal_incdec(W("123"), W("124")));
  EXPECT_FALSE(wilf_equal_incdec(W("123"), W("213")));
  EXPECT_TRUE(wilf_equal_incdec(W("213"), W("312")));
}

TEST(WilfIncDec, RearrangementIffEqualClosedForms) {
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<Word> ws;
    for_each_word_of_length(4, len, [&](const Word& u) {
      if (has_incdec_factorization(u)) ws.push_back(u);
    });
    std::vector<RatFun> forms;
    for (const auto& u : ws) forms.push_back(S_incdec(u));
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = i + 1; j < ws.size(); ++j) {
        const bool same = forms[i] == forms[j];
        EXPECT_EQ(is_rearrangement(ws[i], ws[j]), same) << ws[i].str() << " " << ws[j].str();
        EXPECT_EQ(wilf_equal_incdec(ws[i], ws[j], true), same);
      }
  }
}

TEST(Compare, VerdictsAndMethods) {
  const EquivalenceVerdict v = compare(W("24153"), W("24315"));
  EXPECT_EQ(v.result, Outcome::NotEquivalent);
  EXPECT_EQ(v.method, Method::AutomatonExact);
  EXPECT_EQ(v.str(), "NOT_EQUIVALENT (automaton-exact)");

  const EquivalenceVerdict cf = compare(W("112"), W("211"));
  EXPECT_EQ(cf.method, Method::ClosedForm);
  EXPECT_EQ(cf.result, Outcome::Equivalent);

  const EquivalenceVerdict bac = compare(W("213"), W("312"));
  EXPECT_EQ(bac.method, Method::ClosedForm);
  EXPECT_EQ(bac.result, Outcome::Equivalent);

  CompareOptions series_only;
  series_only.closed_form = false;
  series_only.allow_exact = false;
  const EquivalenceVerdict s = compare(W("123"), W("213"), series_only);
  EXPECT_EQ(s.method, Method::SeriesBounded);
  EXPECT_EQ(s.result, Outcome::NotEquivalent);
  const EquivalenceVerdict open = compare(W("2113"), W("3112"), series_only);
  EXPECT_EQ(open.result, Outcome::Inconclusive);
  EXPECT_EQ(open.result_str(), "INCONCLUSIVE(12)");
}

TEST(Compare, VerdictInvariants) {
  CompareOptions series_only;
  series_only.closed_form = false;
  series_only.allow_exact = false;
  series_only.series_order = 10;
  const auto ps = patterns_up_to_weight(5);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const auto bounded = compare(ps[i], ps[j], series_only);
      EXPECT_EQ(bounded.method, Method::SeriesBounded);
      EXPECT_NE(bounded.result, Outcome::Equivalent);
      const auto exact = compare_exact(ps[i], ps[j]);
      EXPECT_EQ(exact.method, Method::AutomatonExact);
      EXPECT_NE(exact.result, Outcome::Inconclusive);
      if (bounded.result == Outcome::NotEquivalent) {
        EXPECT_EQ(exact.result, Outcome::NotEquivalent);
      }
      EXPECT_EQ(compare(ps[i], ps[j]).result, exact.result) << ps[i].str() << " " << ps[j].str();
    }
}

TEST(WeakProbe, NoViolationsUpToWeightSix) {
  const WeakProbeReport four = weak_conjecture_probe(4);
  EXPECT_TRUE(four.clean());
  EXPECT_TRUE(four.inconclusive.empty());
  EXPECT_EQ(four.patterns, 15u);
  EXPECT_GT(four.pairs, 0u);

  const WeakProbeReport six = weak_conjecture_probe(6);
  EXPECT_TRUE(six.violations.empty());
  EXPECT_TRUE(six.profile_mismatches.empty());
  EXPECT_EQ(six.pairs, six.series_certificates + six.exact_certificates + six.inconclusive.size());
  EXPECT_THROW(weak_conjecture_probe(0), Error);
}

TEST(WeakProbe, EquivalentRearrangementsShareProfiles) {
  const WeakProbeReport r = weak_conjecture_probe(6);
  EXPECT_FALSE(r.equivalent_rearrangements.empty());
  for (const auto& v : r.equivalent_rearrangements) {
    if (v.u.size() == v.v.size()) {
      EXPECT_EQ(profile(v.u), profile(v.v)) << v.u.str() << " " << v.v.str();
    }
  }
}

TEST(StrongProbe, SmallAlphabetIsClean) {
  StrongProbeOptions o;
  o.m = 2;
  o.max_pattern_length = 4;
  o.max_length = 8;
  const StrongProbeReport r = strong_conjecture_probe(o);
  EXPECT_TRUE(r.clean());
  EXPECT_EQ(r.patterns, 30u);
  EXPECT_GT(r.equivalent_pairs, 0u);
  EXPECT_EQ(r.symbolic_checks, r.equivalent_pairs);
  EXPECT_TRUE(r.profile_mismatches.empty());
}

TEST(MonomialProbe, Examples) {
  const MonomialProbe inc = numerator_monomial_probe(W("123"));
  EXPECT_TRUE(inc.monomial);
  EXPECT_EQ(inc.numerator_str(), "x^6");

  const MonomialProbe bac = numerator_monomial_probe(W("213"));
  EXPECT_FALSE(bac.monomial);
  EXPECT_EQ(bac.numerator_str(), "x^9 + x^6");

  EXPECT_FALSE(numerator_monomial_probe(W("212")).monomial);
}

TEST(MonomialProbe, FactorizableWordsHaveMonomialNumerators) {
  for (std::size_t len = 1; len <= 3; ++len) {
    for_each_word_of_length(3, len, [&](const Word& u) {
      if (has_incdec_factorization(u)) {
        EXPECT_TRUE(numerator_monomial_probe(u).monomial) << u.str();
      }
    });
  }
}
