#include <gtest/gtest.h>

#include "tlwb/eval.hpp"
#include "tlwb/syntax.hpp"

using namespace tlwb;

TEST(EvalLtl, StrictFutureReflexivePast) {
  Word w("ab");
  EXPECT_TRUE(eval_ltl(w, 1, parse_ltl("F b")));
  EXPECT_TRUE(eval_ltl(w, 1, parse_ltl("P a")));
  EXPECT_FALSE(eval_ltl(w, 1, parse_ltl("F a")));
  EXPECT_FALSE(eval_ltl(w, 2, parse_ltl("X TOP")));
  EXPECT_FALSE(eval_ltl(w, 2, parse_ltl("F TOP")));
  EXPECT_FALSE(eval_ltl(w, 1, parse_ltl("a S a")));
  EXPECT_TRUE(eval_ltl(w, 2, parse_ltl("b S a")));
}

TEST(EvalXy, UniqueParsingExampleIsFalse) {
  EXPECT_FALSE(eval_xy(Word("abadbc"), 1, parse_xy("EP(Y{a}(!X{b} TOP | NEXT c))")));
}

TEST(EvalXy, AgreesWithLtlOnExampleOne) {
  Word w("ab");
  EXPECT_TRUE(eval_ltl(w, 1, parse_ltl("G(a -> F b)")));
  EXPECT_TRUE(eval_xy(w, 1, parse_xy("!EP(Y{a} !X{b} TOP)")));
}

TEST(EvalXy, WeakAndShift) {
  Word w("abab");
  EXPECT_TRUE(eval_xy(w, 1, parse_xy("XW{a} SP(a)")));
  EXPECT_TRUE(eval_xy(w, 1, parse_xy("X{a} NEXT b")));
  EXPECT_FALSE(eval_xy(w, 3, parse_xy("X{a} TOP")));
  EXPECT_TRUE(eval_xy(w, 3, parse_xy("YW{a} PREV b")));
  EXPECT_FALSE(eval_xy(w, 4, parse_xy("NEXT TOP")));
  EXPECT_TRUE(eval_xy(w, 2, parse_xy("EP b")));
}

TEST(EvalUitl, MonomialExample) {
  EXPECT_TRUE(eval_uitl(Word("dcab"), {1, 4}, parse_uitl("(TOP L{c} ALO{a}) F{b} TOP")));
  EXPECT_FALSE(eval_uitl(Word("dbcab"), {1, 5}, parse_uitl("(TOP L{c} ALO{a}) F{b} TOP")));
}

TEST(EvalUitl, PointIntervalAndBetween) {
  EXPECT_TRUE(eval_uitl(Word("abc"), {2, 2}, parse_uitl("PT")));
  EXPECT_FALSE(eval_uitl(Word("cba"), {1, 3}, parse_uitl("(TOP L{b} !ALO{^c}) L{a} TOP")));
  EXPECT_TRUE(eval_uitl(Word("bca"), {1, 3}, parse_uitl("(TOP L{b} !ALO{^c}) L{a} TOP")));
}

TEST(EvalUitl, AtomsNeedPointIntervals) {
  Word w("ab");
  EXPECT_FALSE(eval_uitl(w, {1, 2}, parse_uitl("a")));
  EXPECT_TRUE(eval_uitl(w, {1, 2}, parse_uitl("SP a & EP b & UNIT")));
}

TEST(EvalUitl, PrimedChops) {
  Word w("abca");
  // First a at or after position 2 lies at 4 >= 3.
  EXPECT_TRUE(eval_uitl(w, {2, 3}, parse_uitl("TOP FP{a} UNIT")));
  EXPECT_FALSE(eval_uitl(w, {2, 2}, parse_uitl("TOP FP{a} UNIT")));
  // Last b at or before 3 is 2 <= 2.
  EXPECT_TRUE(eval_uitl(w, {2, 3}, parse_uitl("PT LM{b} UNIT")));
  EXPECT_FALSE(eval_uitl(w, {3, 4}, parse_uitl("PT LM{b} UNIT")));
}

TEST(EvalAtNext, RecursiveExample) {
  Word w("ccaccbccabbcacc");
  AtNextFormula psi1 = parse_atnext("a & Y[b] TOP & X[c] TOP");
  AtNextFormula psi2 = parse_atnext("X[c] !Y[b] TOP");
  auto s1 = satisfaction_set(w, psi1);
  auto s2 = satisfaction_set(w, psi2);
  int first = 0, last = 0;
  for (int j = 2; j <= w.length(); ++j) {
    if (s1[j]) {
      first = j;
      break;
    }
  }
  for (int j = first - 1; j >= 1; --j) {
    if (s2[j]) {
      last = j;
      break;
    }
  }
  EXPECT_EQ(first, 9);
  EXPECT_EQ(last, 4);
  AtNextFormula f = atnext::X(psi1, atnext::Y(psi2, atnext::top()));
  EXPECT_TRUE(eval_atnext(w, 1, f));
}

TEST(EvalAtNext, TopGuardIsNext) {
  for (const char* s : {"a", "ab", "ba", "bab", "aab"}) {
    Word w(s);
    for (int i = 1; i <= w.length(); ++i) {
      EXPECT_EQ(eval_atnext(w, i, parse_atnext("X[TOP] a")), i < w.length() && w[i + 1] == 'a');
    }
  }
}

TEST(EvalGuard, InteriorCounting) {
  Word w("abba");
  EXPECT_TRUE(eval_guard(w, {2, 3}, parse_guard("#[^]=0")));
  EXPECT_TRUE(eval_guard(w, {1, 4}, parse_guard("#[b] in {2} mod 3")));
  EXPECT_FALSE(eval_guard(w, {1, 4}, parse_guard("1<=#[b]<2")));
  EXPECT_TRUE(eval_guard(w, {1, 4}, parse_guard("#[b]=2 & !#[a]>0")));
}

TEST(EvalGuard, DependsOnlyOnInterior) {
  Guard g = parse_guard("#[a] in {1} mod 2 | #[b]>=2");
  for (const char* s : {"abba", "bbbb", "aaba", "babb"}) {
    Word w(s);
    std::string alt = s;
    alt.front() = alt.front() == 'a' ? 'b' : 'a';
    alt.back() = alt.back() == 'a' ? 'b' : 'a';
    EXPECT_EQ(eval_guard(w, {1, 4}, g), eval_guard(Word(alt), {1, 4}, g)) << s;
  }
}

TEST(EvalBlintl, ModuloUntilWitness) {
  EXPECT_TRUE(eval_blintl(Word("bab"), 1, parse_counting("<#[a] in {1} mod 2> U !X TOP")));
  EXPECT_FALSE(eval_blintl(Word("baab"), 1, parse_counting("<#[a] in {1} mod 2> U !X TOP")));
}

TEST(EvalBlintl, NextIsAllBlockedUntil) {
  for (const char* s : {"a", "ab", "ba", "abb", "bba"}) {
    Word w(s);
    for (int i = 1; i <= w.length(); ++i) {
      EXPECT_EQ(eval_blintl(w, i, parse_counting("<#[^]=0> U a")), eval_blintl(w, i, parse_counting("X a")));
    }
  }
}

TEST(EvalBlintl, ModuloCountingExample) {
  CountingFormula f = parse_counting("<#[b] in {1} mod 3> U (<#[a] in {0} mod 2> U !X TOP)");
  for (int n = 0; n < 3; ++n) {
    for (int m = 0; m < 3; ++m) {
      std::string good = "c" + std::string(3 * n + 1, 'b') + "c" + std::string(2 * m, 'a') + "c";
      std::string bad = "c" + std::string(3 * n + 2, 'b') + "c" + std::string(2 * m + 1, 'a') + "c";
      EXPECT_TRUE(eval_blintl(Word(good), 1, f)) << good;
      EXPECT_FALSE(eval_blintl(Word(bad), 1, f)) << bad;
    }
  }
}

TEST(EvalBlintl, NowCountsInclusive) {
  CountingFormula f = parse_counting("NOW(#[a] in {1} mod 2)");
  Word w("aba");
  EXPECT_TRUE(eval_blintl(w, 1, f));
  EXPECT_TRUE(eval_blintl(w, 2, f));
  EXPECT_FALSE(eval_blintl(w, 3, f));
}

TEST(EvalBlintl, StrictnessAtLastPosition) {
  Word w("abc");
  for (const char* s : {"F TOP", "X TOP", "F a | F b | F c"}) {
    EXPECT_FALSE(eval_blintl(w, 3, parse_counting(s)));
  }
}
