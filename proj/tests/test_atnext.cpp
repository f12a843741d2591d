#include <gtest/gtest.h>

#include "tlwb/atnext_translate.hpp"
#include "tlwb/eval.hpp"
#include "tlwb/fragments.hpp"
#include "tlwb/metrics.hpp"
#include "tlwb/oracle.hpp"
#include "tlwb/syntax.hpp"

using namespace tlwb;

namespace {
const OracleOptions kPointwise{.parallel = true, .mode = EquivMode::Pointwise};
}

TEST(Alpha, RuleInstance) {
  EXPECT_EQ(ltl_to_atnext(parse_ltl("a U b")), parse_atnext("X[!a | b] b"));
  EXPECT_EQ(ltl_to_atnext(parse_ltl("a")), parse_atnext("a"));
}

TEST(Beta, RuleInstance) {
  EXPECT_EQ(atnext_to_ltl(parse_atnext("X[a] TOP")), parse_ltl("!a U (a & TOP)"));
  EXPECT_EQ(atnext_to_ltl(AtNextFormula::top()), LtlFormula::top());
}

TEST(Alpha, RandomEquivalenceAndDepth) {
  std::mt19937_64 rng(101);
  const Alphabet abc("abc");
  for (int n = 0; n < 80; ++n) {
    LtlFormula f = random_ltl(rng, 1 + n % 10);
    AtNextFormula a = ltl_to_atnext(f);
    EXPECT_LE(recursion_depth(a), us_depth(f)) << print_formula(f);
    Verdict v = check_equiv(f, a, abc, 5, kPointwise);
    ASSERT_EQ(v.kind, Verdict::Kind::Equal) << print_formula(f) << " on " << v.word->str();
  }
}

TEST(Beta, RandomEquivalenceAndRoundTrip) {
  std::mt19937_64 rng(103);
  const Alphabet abc("abc");
  for (int n = 0; n < 80; ++n) {
    AtNextFormula f = random_atnext(rng, 1 + n % 10);
    Verdict v = check_equiv(f, atnext_to_ltl(f), abc, 5, kPointwise);
    ASSERT_EQ(v.kind, Verdict::Kind::Equal) << print_formula(f) << " on " << v.word->str();
    LtlFormula l = random_ltl(rng, 1 + n % 8);
    ASSERT_EQ(check_equiv(l, atnext_to_ltl(ltl_to_atnext(l)), abc, 5, kPointwise).kind, Verdict::Kind::Equal);
  }
}

TEST(Convexity, RectlRanker) {
  Word w("ccaccbccabbcacc");
  AtNextFormula r = parse_atnext("X[a & Y[b] TOP & X[c] TOP] TOP");
  EXPECT_FALSE(convexity_check(w, r).has_value());
  EXPECT_FALSE(convexity_check(Word("bbb"), parse_atnext("X[a] TOP")).has_value());
  EXPECT_THROW(convexity_check(w, parse_atnext("a")), std::invalid_argument);
}

TEST(Convexity, RandomRankers) {
  std::mt19937_64 rng(107);
  auto words = enumerate_words(Alphabet("abc"), 6);
  for (int n = 0; n < 150; ++n) {
    AtNextFormula r = random_recursive_ranker(rng, 2 + n % 9);
    for (const auto& w : words) {
      auto v = convexity_check(w, r);
      ASSERT_FALSE(v.has_value()) << print_formula(r) << " " << w.str();
    }
  }
}

TEST(TlPlus, AtIsFpAndEquivalent) {
  EXPECT_EQ(tlplus_to_fp(parse_atnext("a")), parse_ltl("a"));
  EXPECT_EQ(tlplus_to_fp(AtNextFormula::top()), LtlFormula::top());
  EXPECT_THROW(tlplus_to_fp(parse_atnext("X[a] b")), NotTlPlusError);
  std::mt19937_64 rng(109);
  const Alphabet abc("abc");
  for (int n = 0; n < 100; ++n) {
    AtNextFormula f = random_tlplus(rng, 1 + n % 10);
    LtlFormula g = tlplus_to_fp(f);
    EXPECT_FALSE(sublogic_violation(g, Logic::Fp).has_value());
    Verdict v = check_equiv(f, g, abc, 5, kPointwise);
    ASSERT_EQ(v.kind, Verdict::Kind::Equal) << print_formula(f) << " on " << v.word->str();
  }
  AtNextFormula rectl = parse_atnext("X[a & Y[b] TOP & X[c] TOP] Y[X[c] TOP & !X[c] Y[b] TOP] TOP");
  EXPECT_TRUE(eval_ltl(Word("ccaccbccabbcacc"), 1, tlplus_to_fp(rectl)));
}

TEST(Stair, FormulaMatchesScan) {
  EXPECT_FALSE(stair_language(Word("bacab"), 2));
  EXPECT_TRUE(stair_language(Word("bacaca"), 2));
  EXPECT_FALSE(stair_language(Word("bbcb"), 2));
  for (int k = 2; k <= 5; ++k) EXPECT_EQ(recursion_depth(stair_formula(k)), 2u);
  for (int k = 2; k <= 3; ++k) {
    Verdict v = check_language(stair_formula(k), [k](const Word& w) { return stair_language(w, k); },
                               Alphabet("abc"), 7);
    EXPECT_EQ(v.kind, Verdict::Kind::Equal) << k << " " << (v.word ? v.word->str() : "");
  }
}
