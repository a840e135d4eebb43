#include <gtest/gtest.h>

#include <algorithm>

#include "regdissect/automata.hpp"
#include "regdissect/corpus.hpp"
#include "regdissect/errors.hpp"
#include "regdissect/language.hpp"
#include "support.hpp"

namespace regdissect {
namespace {

using testing::all_strings;

// Enumeration up to `n` must equal the exhaustive filter by `contains`.
void expect_enumeration_exact(const LanguageHandle& h, Natural n) {
  std::vector<std::string> expected;
  for (const auto& w : all_strings(h.alphabet(), n)) {
    if (h.contains(w)) expected.push_back(w);
  }
  EXPECT_EQ(h.enumerate(n).members, expected) << h.describe();
  LengthBits census(n + 1);
  for (const auto& w : expected) census.set(w.size());
  EXPECT_EQ(h.length_spectrum(n), census) << h.describe();
}

TEST(Builtins, Names) {
  const auto& names = LanguageHandle::builtin_names();
  EXPECT_EQ(names.size(), 5u);
  for (const auto& n : names) {
    const auto h = LanguageHandle::builtin(n);
    EXPECT_EQ(h.kind(), LanguageKind::kBuiltin);
    EXPECT_EQ(h.id(), n);
  }
  EXPECT_THROW(LanguageHandle::builtin("nope"), Error);
}

TEST(Builtins, EnumerationMatchesMembership) {
  for (const auto& n : LanguageHandle::builtin_names()) {
    const auto h = LanguageHandle::builtin(n);
    expect_enumeration_exact(h, h.alphabet().size() == 1 ? 30 : 12);
  }
}

TEST(Builtins, KnownMembers) {
  const auto fu = LanguageHandle::builtin("factorial_unary");
  EXPECT_TRUE(fu.contains(std::string(120, '0')));
  EXPECT_FALSE(fu.contains(std::string(121, '0')));
  EXPECT_FALSE(fu.contains(""));

  const auto fw = LanguageHandle::builtin("factorial_words");
  EXPECT_TRUE(fw.contains("abababababab"));
  EXPECT_FALSE(fw.contains("ababab"));
  EXPECT_FALSE(fw.contains("aabb"));
  EXPECT_EQ(fw.enumerate(48).members.size(), 16u);

  const auto ap = LanguageHandle::builtin("ab_power");
  EXPECT_TRUE(ap.contains(""));
  EXPECT_TRUE(ap.contains("abbabb"));
  EXPECT_FALSE(ap.contains("abab"));
  // n = 0..24, since 24 * 25 = 600.
  EXPECT_EQ(ap.enumerate(600).members.size(), 25u);

  const auto s2 = LanguageHandle::builtin("semilin2_counterexample");
  EXPECT_TRUE(s2.contains("000000111111"));
  EXPECT_FALSE(s2.contains("000111"));

  const auto l2 = LanguageHandle::builtin("l2_union");
  EXPECT_TRUE(l2.contains(""));
  EXPECT_TRUE(l2.contains("111000"));
  EXPECT_TRUE(l2.contains("0011"));
  EXPECT_FALSE(l2.contains("000111"));
}

TEST(Handles, ForeignSymbolsRejected) {
  const auto h = corpus_language("l1");
  EXPECT_FALSE(h.contains("0a1"));
}

TEST(Handles, CompositesArePointwise) {
  const auto l1 = corpus_language("l1");
  const auto even = corpus_language("l1_even");
  const auto mirror = corpus_language("l1_or_mirror");
  const Dfa mod4 = length_modulus_dfa(4, 0, "01");

  const auto u = unite(even, corpus_language("l2_union"));
  const auto d = subtract(l1, even);
  const auto r = restrict_to(mirror, mod4);
  const auto v = reverse(l1);
  for (const auto& w : all_strings("01", 12)) {
    ASSERT_EQ(u.contains(w), even.contains(w) || LanguageHandle::builtin("l2_union").contains(w));
    ASSERT_EQ(d.contains(w), l1.contains(w) && !even.contains(w));
    ASSERT_EQ(r.contains(w), mirror.contains(w) && mod4.accepts(w));
    ASSERT_EQ(v.contains(w), l1.contains(std::string(w.rbegin(), w.rend())));
  }
  for (const auto& h : {u, d, r, v}) expect_enumeration_exact(h, 12);
  EXPECT_EQ(u.kind(), LanguageKind::kUnion);
  EXPECT_EQ(d.kind(), LanguageKind::kDifference);
  EXPECT_EQ(r.kind(), LanguageKind::kIntersection);
  EXPECT_EQ(v.kind(), LanguageKind::kReversal);
  EXPECT_EQ(d.operands().size(), 2u);
  EXPECT_EQ(r.dfa()->num_states(), 4u);
}

TEST(Handles, Describe) {
  const auto l1 = corpus_language("l1");
  const auto even = corpus_language("l1_even");
  EXPECT_EQ(l1.describe(), "grammar:l1");
  EXPECT_EQ(subtract(l1, even).describe(), "(grammar:l1 - grammar:l1_even)");
  EXPECT_EQ(reverse(l1).describe(), "rev(grammar:l1)");
}

TEST(Handles, DfaHandle) {
  const auto h = LanguageHandle::from_dfa("mod3", length_modulus_dfa(3, 1, "ab"));
  EXPECT_EQ(h.kind(), LanguageKind::kDfa);
  // Length 7 would exceed the per-length cap of 64.
  expect_enumeration_exact(h, 6);
}

TEST(Handles, RestrictAlphabetMismatch) {
  try {
    restrict_to(corpus_language("l1"), length_modulus_dfa(2, 0, "0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAlphabetMismatch);
  }
}

TEST(ConstantGrowth, FactorialFirstViolation) {
  // Frozen from tests/oracles/derive_values.py: gaps 14..23 exceed 10.
  ConstantGrowthWitness w{2, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}};
  const auto v = check_constant_growth(LanguageHandle::builtin("factorial_unary"), w, 400);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.first_violation.has_value());
  EXPECT_EQ(*v.first_violation, 24u);
}

TEST(ConstantGrowth, PairsHold) {
  const auto v = check_constant_growth(corpus_language("ss_aa"), {3, {2}}, 400);
  EXPECT_TRUE(v.holds);
  EXPECT_FALSE(v.first_violation.has_value());
  const auto bad = check_constant_growth(corpus_language("ss_aa"), {1, {2}}, 400);
  EXPECT_FALSE(bad.holds);
  EXPECT_EQ(bad.first_violation, std::optional<Natural>(2));
}

TEST(Corpus, NestedPairsAreNested) {
  for (const auto& [small, big] : nested_corpus_pairs()) {
    const auto l = corpus_language(small);
    const auto b = corpus_language(big);
    EXPECT_EQ(l.alphabet(), b.alphabet());
    for (const auto& w : l.enumerate(40).members) EXPECT_TRUE(b.contains(w)) << w;
  }
  EXPECT_THROW(corpus_language("missing"), Error);
}

TEST(Builtins, FactorialPairSpectrumDefeatsInference) {
  const auto h = LanguageHandle::builtin("semilin2_counterexample");
  try {
    infer_upset(h.length_spectrum(10080), 10080);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInferenceFailed);
  }
}

TEST(ConstantGrowth, MoreExamples) {
  EXPECT_TRUE(check_constant_growth(corpus_language("l1"), {3, {2}}, 100).holds);
  EXPECT_TRUE(check_constant_growth(corpus_language("ss_aa"), {3, {2}}, 60).holds);
  // Frozen from tests/oracles/derive_values.py; the first gap over 10 ends at 24.
  const auto v = check_constant_growth(LanguageHandle::builtin("factorial_unary"),
                                       {2, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}, 720);
  EXPECT_EQ(v.first_violation, std::optional<Natural>(24));
}

}  // namespace
}  // namespace regdissect
