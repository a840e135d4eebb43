#include <gtest/gtest.h>

#include <random>

#include "regdissect/corpus.hpp"
#include "regdissect/dissector.hpp"
#include "support.hpp"

namespace regdissect {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::kInvalidArgument;
}

// Recount a certificate directly from the enumeration and the witness.
void expect_counts_match(const LanguageHandle& h, const DissectionCertificate& cert) {
  ASSERT_TRUE(cert.witness.has_value());
  const auto members = h.enumerate(cert.max_length).members;
  for (const auto& cp : cert.checkpoints) {
    std::size_t in = 0, out = 0;
    for (const auto& w : members) {
      if (w.size() > cp.length) continue;
      (cert.witness->accepts(w) ? in : out) += 1;
    }
    EXPECT_EQ(cp.inside, in) << "at " << cp.length;
    EXPECT_EQ(cp.outside, out) << "at " << cp.length;
  }
}

TEST(ChooseResidues, SplitsSingleClass) {
  // Frozen from tests/oracles/derive_values.py.
  EXPECT_EQ(choose_residues(from_progression({2, 0, 0})), (ResidueChoice{4, 0, 2}));
  EXPECT_EQ(choose_residues(UltimatelyPeriodicSet::naturals()), (ResidueChoice{2, 0, 1}));
}

TEST(ChooseResidues, UsesCanonicalPeriod) {
  const ArithmeticProgression ps[] = {{3, 0, 0}, {3, 2, 0}};
  EXPECT_EQ(choose_residues(from_progressions(ps)), (ResidueChoice{3, 0, 2}));
}

TEST(ChooseResidues, FiniteRejected) {
  const Natural pts[] = {1, 5};
  EXPECT_EQ(kind_of([&] { choose_residues(UltimatelyPeriodicSet::finite(pts)); }),
            ErrorKind::kFiniteSet);
}

TEST(ChooseResidues, BothClassesInfinite) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 300; ++i) {
    const auto x = testing::random_upset(rng);
    if (!is_infinite(x)) continue;
    const auto c = choose_residues(x);
    ASSERT_NE(c.first, c.second);
    const auto live = infinite_residues(x, c.modulus);
    EXPECT_TRUE(std::count(live.begin(), live.end(), c.first));
    EXPECT_TRUE(std::count(live.begin(), live.end(), c.second));
  }
}

TEST(Verify, L1ModFour) {
  const auto l1 = corpus_language("l1");
  const auto cert = verify_dissection(l1, length_modulus_dfa(4, 0, "01"));
  EXPECT_TRUE(cert.verified());
  EXPECT_EQ(cert.window_start, 300u);
  // Frozen from tests/oracles/derive_values.py.
  EXPECT_EQ(cert.final_counts(), (Checkpoint{400, 101, 100}));
  DissectionConfig c200;
  c200.max_length = 200;
  const auto at200 = verify_dissection(l1, length_modulus_dfa(4, 0, "01"), c200);
  EXPECT_EQ(at200.final_counts(), (Checkpoint{200, 51, 50}));
  EXPECT_EQ(at200.checkpoints.at(1), (Checkpoint{100, 26, 25}));
  EXPECT_EQ(at200.window_start, 150u);
  expect_counts_match(l1, at200);
}

TEST(Verify, CheckpointsAscendAndCoverWindow) {
  DissectionConfig c;
  c.max_length = 203;
  const auto cert = verify_dissection(corpus_language("l1"), length_modulus_dfa(4, 0, "01"), c);
  std::vector<Natural> lengths;
  for (const auto& cp : cert.checkpoints) lengths.push_back(cp.length);
  EXPECT_TRUE(std::is_sorted(lengths.begin(), lengths.end()));
  for (Natural want : {Natural{50}, Natural{101}, Natural{152}, Natural{203}, cert.window_start}) {
    EXPECT_TRUE(std::count(lengths.begin(), lengths.end(), want)) << want;
  }
}

TEST(Verify, EvenLengthWitnessFails) {
  const auto cert = verify_dissection(corpus_language("l1"), length_modulus_dfa(2, 0, "01"));
  EXPECT_FALSE(cert.verified());
  EXPECT_EQ(cert.final_counts().outside, 0u);
  EXPECT_FALSE(cert.notes.empty());
}

TEST(Verify, RejectsBadConfig) {
  DissectionConfig c;
  c.max_length = 40;  // below 4 * threshold
  EXPECT_EQ(kind_of([&] {
              verify_dissection(corpus_language("l1"), length_modulus_dfa(4, 0, "01"), c);
            }),
            ErrorKind::kInvalidArgument);
  c = {};
  c.window_fraction = 0.75;
  EXPECT_EQ(kind_of([&] {
              verify_dissection(corpus_language("l1"), length_modulus_dfa(4, 0, "01"), c);
            }),
            ErrorKind::kInvalidArgument);
}

TEST(ByLength, KnownAndInferred) {
  const auto l1 = corpus_language("l1");
  const auto known = dissect_by_length(l1, from_progression({2, 0, 0}));
  const auto inferred = dissect_by_length(l1);
  EXPECT_TRUE(known.verified());
  EXPECT_TRUE(inferred.verified());
  EXPECT_EQ(known.strategy, "length-modulus");
  EXPECT_EQ(*known.witness, *inferred.witness);
  EXPECT_EQ(known.witness->num_states(), 4u);
}

TEST(ByLength, FactorialUnary) {
  const auto h = LanguageHandle::builtin("factorial_unary");
  EXPECT_EQ(kind_of([&] { dissect_by_length(h); }), ErrorKind::kFiniteLanguage);
  DissectionConfig c;
  c.max_length = 720;
  c.threshold = 2;
  try {
    dissect_by_length(h, c);
    FAIL();
  } catch (const StrategyFailedError& e) {
    EXPECT_FALSE(e.certificate().verified());
    EXPECT_EQ(e.certificate().strategy, "length-modulus");
  }
}

TEST(ByLength, UpsetLanguagesVerifyWhenLarge) {
  std::mt19937_64 rng(47);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 25; ++i) {
    const auto x = testing::random_upset(rng);
    if (!is_infinite(x)) continue;
    const auto h = LanguageHandle::from_dfa("u", upset_length_dfa(x, "a"));
    DissectionConfig c;
    c.max_length = 800;
    c.threshold = 20;
    const auto cert = dissect_by_length(h, x, c);
    EXPECT_TRUE(cert.verified()) << x.to_string();
    expect_counts_match(h, cert);
    ++checked;
  }
  EXPECT_EQ(checked, 25);
}

TEST(Auto, Strategies) {
  const auto l1 = dissect_auto(corpus_language("l1"));
  EXPECT_TRUE(l1.verified());
  EXPECT_EQ(l1.strategy, "length-modulus");

  DissectionConfig c;
  c.max_length = 600;
  c.threshold = 9;
  const auto ap = dissect_auto(LanguageHandle::builtin("ab_power"), c);
  EXPECT_TRUE(ap.verified());
  EXPECT_EQ(ap.strategy, "symbol-count");
  // Frozen from tests/oracles/derive_values.py.
  EXPECT_EQ(ap.final_counts().inside + ap.final_counts().outside, 25u);
  EXPECT_EQ(std::max(ap.final_counts().inside, ap.final_counts().outside), 13u);
  expect_counts_match(LanguageHandle::builtin("ab_power"), ap);

  c.max_length = 1440;
  const auto fw = dissect_auto(LanguageHandle::builtin("factorial_words"), c);
  EXPECT_TRUE(fw.verified());
  EXPECT_EQ(fw.strategy, "prefix");
  EXPECT_EQ(fw.final_counts(), (Checkpoint{1440, 12, 12}));
}

TEST(Auto, FailureListsAttempts) {
  const auto cert = dissect_auto(LanguageHandle::builtin("factorial_unary"));
  EXPECT_FALSE(cert.verified());
  EXPECT_FALSE(cert.attempts.empty());
  const auto s2 = dissect_auto(LanguageHandle::builtin("semilin2_counterexample"));
  EXPECT_FALSE(s2.verified());
}

TEST(Auto, TruncationFlagged) {
  const auto cert = dissect_auto(corpus_language("dyck"));
  EXPECT_TRUE(cert.verified());
  EXPECT_TRUE(cert.truncated);
}

TEST(SemilinearSplit, DisjointAndBothInfinite) {
  const std::vector<Vector> matrix{{1, 0}, {0, 0}, {1, 1}, {2, 0}};
  const auto [c0, c1] = dissect_semilinear_difference(matrix, "ab");
  const LinearSet set = LinearSet::from_matrix(matrix);
  std::size_t hit0 = 0, hit1 = 0;
  for (Natural n = 0; n <= 200; ++n) {
    const std::string w(n, 'a');
    EXPECT_FALSE(c0.accepts(w) && c1.accepts(w)) << n;
  }
  // Lengths 1 + 2z for z in N lie in the set (all z on the first row).
  for (Natural z = 0; z <= 100; ++z) {
    const std::string w = "a" + std::string(z, 'a') + std::string(z, 'b');
    ASSERT_TRUE(set.contains(parikh_of(w, "ab")));
    hit0 += c0.accepts(w);
    hit1 += c1.accepts(w);
  }
  EXPECT_GE(hit0, 50u);
  EXPECT_GE(hit1, 50u);
}

TEST(SemilinearSplit, NoPeriodRow) {
  EXPECT_EQ(kind_of([] { dissect_semilinear_difference({{1, 1}, {0, 0}}, "ab"); }),
            ErrorKind::kNoPeriodRow);
}

TEST(Factorial, EvensSide) {
  // Frozen from tests/oracles/derive_values.py: 1! is odd, m! is even for m >= 2.
  const auto o = factorial_dissection_decision({{2, 0, 0}});
  EXPECT_TRUE(o.inside_cofinite);
  EXPECT_FALSE(o.dissects);
  EXPECT_EQ(o.cutoff, 2u);
  EXPECT_EQ(o.finite_side, std::vector<Natural>{1});
  EXPECT_EQ(o.summary, "C∩S cofinite; does not dissect");
}

TEST(Factorial, NoZeroResidue) {
  // Frozen from tests/oracles/derive_values.py: only 1! lands in C.
  const auto o = factorial_dissection_decision({{3, 1, 0}, {5, 2, 4}});
  EXPECT_FALSE(o.inside_cofinite);
  EXPECT_FALSE(o.dissects);
  EXPECT_EQ(o.cutoff, 5u);
  EXPECT_EQ(o.finite_side, std::vector<Natural>{1});
  EXPECT_EQ(o.summary, "C∩S finite; does not dissect");
}

TEST(Factorial, LargeStartIndex) {
  // 2 * 1000 <= m! first at m = 7 (5040).
  const auto o = factorial_dissection_decision({{2, 0, 1000}});
  EXPECT_EQ(o.cutoff, 7u);
  EXPECT_EQ(o.finite_side, (std::vector<Natural>{1, 2, 3, 4, 5, 6}));
}

TEST(Factorial, BadTriple) {
  EXPECT_EQ(kind_of([] { factorial_dissection_decision({{3, 4, 0}}); }),
            ErrorKind::kBadTriple);
  EXPECT_EQ(kind_of([] { factorial_dissection_decision({{0, 0, 0}}); }),
            ErrorKind::kBadTriple);
}

TEST(ChooseResidues, TwoLiveClasses) {
  const ArithmeticProgression ps[] = {{3, 1, 0}, {3, 2, 0}};
  EXPECT_EQ(choose_residues(from_progressions(ps)), (ResidueChoice{3, 1, 2}));
  const Natural small[] = {0, 1, 2, 3, 4};
  EXPECT_EQ(kind_of([&] { choose_residues(UltimatelyPeriodicSet::finite(small)); }),
            ErrorKind::kFiniteSet);
}

TEST(Verify, PairsModThree) {
  const auto cert = verify_dissection(corpus_language("ss_aa"), length_modulus_dfa(3, 0, "a"));
  EXPECT_TRUE(cert.verified());
  EXPECT_EQ(cert.final_counts(), (Checkpoint{400, 66, 134}));
}

TEST(Verify, FactorialUnaryDefeatsEveryLengthModulus) {
  const auto h = LanguageHandle::builtin("factorial_unary");
  DissectionConfig c;
  c.max_length = 720;
  c.threshold = 2;
  for (Natural m = 1; m <= 64; ++m) {
    for (Natural r = 0; r < m; ++r) {
      ASSERT_FALSE(verify_dissection(h, length_modulus_dfa(m, r, "0"), c).verified())
          << m << " " << r;
    }
  }
}

TEST(Verify, FiniteHandleCountsStayConstant) {
  const Natural small[] = {0, 1, 2, 3, 4};
  const auto h = LanguageHandle::from_dfa(
      "short", upset_length_dfa(UltimatelyPeriodicSet::finite(small), "ab"));
  const auto cert = verify_dissection(h, length_modulus_dfa(2, 0, "ab"));
  EXPECT_FALSE(cert.verified());
  for (const auto& cp : cert.checkpoints) {
    EXPECT_EQ(cp.inside, cert.final_counts().inside);
    EXPECT_EQ(cp.outside, cert.final_counts().outside);
  }
}

TEST(Auto, AbPowerEvenA) {
  DissectionConfig c;
  c.max_length = 600;
  c.threshold = 9;
  const auto ap = dissect_auto(LanguageHandle::builtin("ab_power"), c);
  ASSERT_TRUE(ap.witness.has_value());
  EXPECT_EQ(*ap.witness, symbol_count_modulus_dfa('a', 2, 0, "ab"));
}

TEST(SemilinearSplit, Examples) {
  const auto [c0, c1] = dissect_semilinear_difference({{1, 1}, {2, 0}}, "ab");
  for (Natural n = 0; n <= 40; ++n) {
    const std::string w(n, 'a');
    EXPECT_EQ(c0.accepts(w), n % 4 == 2) << n;
    EXPECT_EQ(c1.accepts(w), n > 0 && n % 4 == 0) << n;
  }
  // Every member of {(n, n)} has even length, so the split is mod 4.
  const auto [d0, d1] = dissect_semilinear_difference({{0, 0}, {1, 1}}, "ab");
  for (Natural n = 0; n <= 40; ++n) {
    const std::string w(n, 'a');
    EXPECT_EQ(d0.accepts(w), n % 4 == 0) << n;
    EXPECT_EQ(d1.accepts(w), n % 4 == 2) << n;
  }
}

TEST(Factorial, EverythingInside) {
  const auto o = factorial_dissection_decision({{1, 0, 0}});
  EXPECT_TRUE(o.inside_cofinite);
  EXPECT_FALSE(o.dissects);
  EXPECT_TRUE(o.finite_side.empty());
}

}  // namespace
}  // namespace regdissect
