#include <gtest/gtest.h>

#include "regdissect/corpus.hpp"
#include "regdissect/separation.hpp"
#include "support.hpp"

namespace regdissect {
namespace {

CoveringPair pair_of(const std::string& cover, const std::string& inner) {
  return {corpus_language(cover), corpus_language(inner)};
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::kInvalidArgument;
}

TEST(Cover, L1OverEven) {
  // Frozen from tests/oracles/derive_values.py: odd n <= 100 at N = 200.
  DissectionConfig c;
  c.max_length = 200;
  const auto v = check_icover(pair_of("l1", "l1_even"), c);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.margin, 50u);
  EXPECT_FALSE(v.violation.has_value());
}

TEST(Cover, Violation) {
  const auto v = check_icover(pair_of("l1", "l1_or_mirror"));
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.violation.has_value());
  EXPECT_EQ(*v.violation, "10");
}

TEST(Cover, IdenticalHasNoMargin) {
  const auto v = check_icover(pair_of("l1", "l1"));
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.margin, 0u);
}

TEST(Separator, PointwiseDefinition) {
  const auto pair = pair_of("l1", "l1_even");
  const Dfa c = length_modulus_dfa(8, 2, "01");
  const auto e = build_separator(pair, c);
  for (const auto& w : testing::all_strings("01", 14)) {
    ASSERT_EQ(e.contains(w),
              pair.inner.contains(w) || (pair.cover.contains(w) && c.accepts(w)));
  }
}

TEST(Separate, L1OverEven) {
  const auto pair = pair_of("l1", "l1_even");
  const auto r = iseparate(pair);
  EXPECT_TRUE(r.margin_certificate.verified());
  ASSERT_TRUE(r.margin_certificate.witness.has_value());
  EXPECT_EQ(r.margin_certificate.witness->num_states(), 8u);
  EXPECT_TRUE(r.separation.holds(20));
  // Frozen from tests/oracles/derive_values.py.
  EXPECT_EQ(r.separation.cover_margin, 50u);
  EXPECT_EQ(r.separation.separator_margin, 50u);
  // E = {0^n 1^n : n mod 4 in {0, 1, 2}}.
  for (Natural n = 0; n <= 40; ++n) {
    const std::string w = std::string(n, '0') + std::string(n, '1');
    EXPECT_EQ(r.separator.contains(w), n % 4 != 3) << n;
  }
}

TEST(Separate, NestedCorpusPairs) {
  for (const auto& [inner, cover] : nested_corpus_pairs()) {
    const CoveringPair pair{corpus_language(cover), corpus_language(inner)};
    const auto r = iseparate(pair);
    EXPECT_TRUE(r.separation.holds(20)) << inner << " in " << cover;
    for (const auto& w : testing::all_strings(pair.cover.alphabet(), 10)) {
      if (pair.inner.contains(w)) ASSERT_TRUE(r.separator.contains(w)) << w;
      if (r.separator.contains(w)) ASSERT_TRUE(pair.cover.contains(w)) << w;
    }
  }
}

TEST(Separate, Failures) {
  EXPECT_EQ(kind_of([] { iseparate(pair_of("l1", "l1")); }), ErrorKind::kCoverCheckFailed);
  EXPECT_EQ(kind_of([] { iseparate(pair_of("l1", "l1_or_mirror")); }),
            ErrorKind::kCoverCheckFailed);
  EXPECT_EQ(kind_of([] { iseparate(pair_of("l1", "dyck")); }),
            ErrorKind::kAlphabetMismatch);
}

TEST(Separate, MarginNotDissectable) {
  const auto b = corpus_language("unary_4n3");
  const CoveringPair pair{unite(b, LanguageHandle::builtin("factorial_unary")), b};
  DissectionConfig c;
  c.max_length = 720;
  c.threshold = 5;
  EXPECT_TRUE(check_icover(pair, c).holds);
  try {
    iseparate(pair, c);
    FAIL();
  } catch (const StrategyFailedError& e) {
    EXPECT_FALSE(e.certificate().verified());
  }
}

TEST(VerifySeparation, DetectsBadSeparator) {
  const auto pair = pair_of("l1", "l1_even");
  const auto v = verify_iseparation(pair, corpus_language("l1_or_mirror"));
  EXPECT_FALSE(v.separator_in_cover);
  EXPECT_FALSE(v.holds(20));
  const auto w = verify_iseparation(pair, pair.inner);
  EXPECT_TRUE(w.inner_in_separator);
  EXPECT_EQ(w.separator_margin, 0u);
  EXPECT_FALSE(w.holds(20));
}

TEST(Separator, ExtremeWitnesses) {
  const auto pair = pair_of("l1", "l1_even");
  const Dfa everything = length_modulus_dfa(1, 0, "01");
  const Dfa nothing = complement(everything);
  const auto e_all = build_separator(pair, everything);
  const auto e_none = build_separator(pair, nothing);
  for (const auto& w : pair.cover.enumerate(400).members) {
    EXPECT_TRUE(e_all.contains(w));
    EXPECT_EQ(e_none.contains(w), pair.inner.contains(w));
  }
  EXPECT_EQ(e_all.enumerate(400).members, pair.cover.enumerate(400).members);
  EXPECT_EQ(e_none.enumerate(400).members, pair.inner.enumerate(400).members);
}

TEST(Separator, MonotoneInWitness) {
  const auto pair = pair_of("l1", "l1_even");
  const Dfa small = length_modulus_dfa(8, 2, "01");
  const Dfa big = product(small, length_modulus_dfa(8, 6, "01"), ProductKind::kUnion);
  const auto e_small = build_separator(pair, small);
  const auto e_big = build_separator(pair, big);
  for (const auto& w : e_small.enumerate(400).members) EXPECT_TRUE(e_big.contains(w));
}

TEST(VerifySeparation, CoverAsSeparatorHasNoCoverMargin) {
  const auto pair = pair_of("l1", "l1_even");
  const auto v = verify_iseparation(pair, pair.cover);
  EXPECT_EQ(v.cover_margin, 0u);
  EXPECT_FALSE(v.holds(20));
}

}  // namespace
}  // namespace regdissect
