#include <gtest/gtest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "sdikit/decisions.hpp"
#include "sdikit/errors.hpp"
#include "sdikit/random.hpp"
#include "sdikit/sdi.hpp"

namespace sdikit {
namespace {

using oracle::SdiVariant;
using testing::words;

const Alphabet kAb("ab");
const Alphabet kAbc("abc");

// Independence by brute force: insert a nonempty z at an interior cut.
bool independent_by_oracle(const std::vector<Word>& xs, const Nfa& r, std::size_t max_len) {
  for (const auto& x : xs) {
    for (std::size_t cut = 1; cut < x.size(); ++cut) {
      for (const auto& z : oracle::all_words(kAb.symbols(), max_len - x.size())) {
        if (!z.empty() && accepts(r, x.substr(0, cut) + z + x.substr(cut))) return false;
      }
    }
  }
  return true;
}

TEST(Freeness, Examples) {
  const auto r = is_sdi_free(words(kAb, {"ab"}), words(kAb, {"ab"}));
  EXPECT_FALSE(r.answer);
  EXPECT_EQ(r.witness, Word{"ab"});
  const Alphabet unary("a");
  const Nfa plus = nonempty_words(unary);
  EXPECT_FALSE(is_sdi_free(plus, plus).answer);
  EXPECT_TRUE(is_sdi_free(empty_language(kAb), universal_language(kAb)).answer);
  EXPECT_FALSE(is_asdi_free(words(kAbc, {"ab"}), words(kAbc, {"acb"})).answer);
  EXPECT_TRUE(is_asdi_free(empty_language(kAb), universal_language(kAb)).answer);
  EXPECT_EQ(is_maxmin_sdi_free(SdiVariant::maximal, plus, plus).answer, false);
  EXPECT_THROW(is_maxmin_sdi_free(SdiVariant::general, plus, plus), InputError);
}

TEST(Independence, Examples) {
  const Nfa l = words(kAb, {"ab", "b"});
  EXPECT_TRUE(is_sdi_independent(l, l).answer);
  EXPECT_TRUE(is_asdi_independent(l, l).answer);
  const auto r = is_sdi_independent(words(kAbc, {"ab"}), words(kAbc, {"acb"}));
  EXPECT_FALSE(r.answer);
  EXPECT_EQ(r.witness, Word{"acb"});
  EXPECT_TRUE(is_sdi_independent(empty_language(kAb), universal_language(kAb)).answer);
  EXPECT_TRUE(is_maxmin_sdi_independent(SdiVariant::minimal, l, l).answer);
}

class DecisionRandom : public ::testing::TestWithParam<int> {};

TEST_P(DecisionRandom, IndependenceMatchesBruteForce) {
  std::mt19937_64 rng(500 + GetParam());
  const Nfa a = random_nfa(rng, 1 + GetParam() % 3, kAb, 0.4, 0.4);
  const Nfa r = random_nfa(rng, 1 + (GetParam() / 3) % 3, kAb, 0.4, 0.4);
  // Results of length ≤ 7 only come from x of length ≤ 6; the automaton
  // answer is exact, so compare it against a bounded search on a finite A.
  const auto xs = enumerate_language(a, 6);
  const Nfa bounded = words(kAb, xs);
  const auto report = is_sdi_independent(bounded, r);
  const auto r7 = product_intersection(r, words(kAb, oracle::all_words("ab", 7)));
  EXPECT_EQ(is_sdi_independent(bounded, r7).answer, independent_by_oracle(xs, r, 7));
  if (!report.answer) {
    ASSERT_TRUE(report.witness.has_value());
    EXPECT_TRUE(accepts(r, *report.witness));
  }
}

TEST_P(DecisionRandom, FreenessMatchesBoundedOracle) {
  std::mt19937_64 rng(600 + GetParam());
  const Nfa a = random_nfa(rng, 1 + GetParam() % 3, kAb, 0.4, 0.4);
  const Nfa b = random_nfa(rng, 1 + (GetParam() / 3) % 3, kAb, 0.4, 0.4);
  const auto free = is_sdi_free(a, b);
  if (!free.answer) {
    ASSERT_TRUE(free.witness.has_value());
    EXPECT_TRUE(find_insertion(*free.witness, a, b, SdiVariant::general).has_value());
  }
  // Emptiness over the bounded operands agrees across the three variants.
  const auto general = testing::oracle_bounded(SdiVariant::general, a, b, 8);
  EXPECT_EQ(general.empty(), testing::oracle_bounded(SdiVariant::maximal, a, b, 8).empty());
  EXPECT_EQ(general.empty(), testing::oracle_bounded(SdiVariant::minimal, a, b, 8).empty());
  if (!general.empty()) EXPECT_FALSE(free.answer);
  EXPECT_EQ(is_maxmin_sdi_free(SdiVariant::maximal, a, b).answer, free.answer);
}

TEST_P(DecisionRandom, ClosureMatchesBoundedOracle) {
  std::mt19937_64 rng(700 + GetParam());
  const Nfa a = random_nfa(rng, 1 + GetParam() % 3, kAb, 0.5, 0.5);
  const auto report = is_closed_under_sdi(a);
  const auto found = closure_counterexample_search(SdiVariant::general, a, 8);
  if (found) {
    EXPECT_FALSE(report.answer);
  }
  if (!report.answer) {
    ASSERT_TRUE(report.witness.has_value());
    EXPECT_FALSE(accepts(a, *report.witness));
    EXPECT_TRUE(find_insertion(*report.witness, a, a, SdiVariant::general).has_value());
    if (report.witness->size() <= 8) {
      EXPECT_TRUE(found.has_value());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Random, DecisionRandom, ::testing::Range(0, 30));

TEST(Closure, Examples) {
  EXPECT_TRUE(is_closed_under_sdi(universal_language(kAb)).answer);
  EXPECT_TRUE(is_closed_under_sdi(words(kAb, {"ab"})).answer);
  const Nfa a_plus_b = testing::pattern(kAb, "a+ b");
  const auto r = is_closed_under_sdi(a_plus_b);
  EXPECT_EQ(r.answer, !closure_counterexample_search(SdiVariant::general, a_plus_b, 8).has_value());
}

TEST(Closure, ResourceCapPropagates) {
  NfaBuilder b(kAb);
  const State start = b.add_state(false);
  b.add_transition(start, 'a', start);
  b.add_transition(start, 'b', start);
  State prev = b.add_state(false);
  b.add_transition(start, 'a', prev);
  for (int i = 0; i < 10; ++i) {
    const State next = b.add_state(false);
    b.add_transition(prev, 'a', next);
    b.add_transition(prev, 'b', next);
    prev = next;
  }
  b.set_final(prev);
  EXPECT_THROW(is_closed_under_sdi(std::move(b).build(start), 64), ResourceError);
}

TEST(FiniteClosure, Examples) {
  const Nfa host = words(kAbc, {"ababab"});
  const auto max = closed_under_finite_maxmin(SdiVariant::maximal, host, {"acbab"});
  EXPECT_FALSE(max.answer);
  ASSERT_TRUE(max.witness.has_value());
  EXPECT_TRUE((oracle::WordSet{"acbabab", "abacbab", "ababacbab"}).contains(*max.witness));
  EXPECT_TRUE(closed_under_finite_maxmin(SdiVariant::maximal, universal_language(kAbc), {"acbab"}).answer);

  // acbabab admits the maximal insertion acb·a·c·bab = acbacbab.
  const Nfa grown = words(kAbc, {"ababab", "acbabab", "abacbab", "ababacbab"});
  const auto grown_report = closed_under_finite_maxmin(SdiVariant::maximal, grown, {"acbab"});
  EXPECT_FALSE(grown_report.answer);
  EXPECT_TRUE(oracle::max_sdi_strings("acbabab", "acbab").contains("acbacbab"));
}

TEST(TwoVariable, Examples) {
  const Nfa long_words = prefix_suffix_pattern(kAb, "", "");
  EXPECT_FALSE(two_var_solvable(long_words).answer);
  const Nfa two_plus = concatenate(concatenate(nonempty_words(kAb), nonempty_words(kAb)),
                                   universal_language(kAb));
  EXPECT_TRUE(two_var_solvable(two_plus).answer);
  EXPECT_FALSE(two_var_solvable(words(kAb, {"a"})).answer);
  EXPECT_TRUE(two_var_solvable(empty_language(kAb)).answer);
}

TEST(CounterexampleSearch, Examples) {
  EXPECT_FALSE(closure_counterexample_search(SdiVariant::maximal, universal_language(kAb), 6));
  EXPECT_FALSE(closure_counterexample_search(SdiVariant::minimal, words(kAb, {"ab"}), 10));
  const auto found = closure_counterexample_search(SdiVariant::maximal, words(kAb, {"ababab"}), 12);
  const auto self = oracle::max_sdi_strings("ababab", "ababab");
  if (found) {
    EXPECT_TRUE(self.contains(*found));
  } else {
    EXPECT_TRUE(std::all_of(self.begin(), self.end(),
                            [](const Word& w) { return w == "ababab" || w.size() > 12; }));
  }
}

}  // namespace
}  // namespace sdikit
