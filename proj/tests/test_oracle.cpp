#include <gtest/gtest.h>

#include <regex>

#include "tlwb/desugar.hpp"
#include "tlwb/eval.hpp"
#include "tlwb/metrics.hpp"
#include "tlwb/oracle.hpp"
#include "tlwb/ranker.hpp"
#include "tlwb/syntax.hpp"

using namespace tlwb;

TEST(Enumerate, LengthLexOrder) {
  auto ws = enumerate_words(Alphabet("a"), 3);
  ASSERT_EQ(ws.size(), 3u);
  EXPECT_EQ(ws[2].str(), "aaa");
  auto ab = enumerate_words(Alphabet("ba"), 2);
  ASSERT_EQ(ab.size(), 6u);
  EXPECT_EQ(ab[0].str(), "a");
  EXPECT_EQ(ab[2].str(), "aa");
  EXPECT_EQ(ab[5].str(), "bb");
  EXPECT_EQ(word_count(Alphabet("abc"), 3), 39u);
}

TEST(BruteSat, TrivialCases) {
  Verdict v = brute_sat(parse_xy("TOP"), Alphabet("ab"), 4);
  ASSERT_EQ(v.kind, Verdict::Kind::Sat);
  EXPECT_EQ(v.word->str(), "a");
  EXPECT_EQ(brute_sat(parse_xy("a & !a"), Alphabet("ab"), 4).kind, Verdict::Kind::NoneFound);
  Verdict s = brute_sat(parse_counting("X X b"), Alphabet("ab"), 4, {.parallel = false});
  EXPECT_EQ(s.word->str(), "aab");
}

TEST(CheckEquiv, ExampleOne) {
  // Strict G skips position 1 and Y_a skips the last position, so a trailing a separates the pair.
  Verdict lit = check_equiv(parse_ltl("G(a -> F b)"), parse_xy("!EP(Y{a} !X{b} TOP)"), Alphabet("ab"), 6);
  ASSERT_EQ(lit.kind, Verdict::Kind::Counterexample);
  EXPECT_EQ(lit.word->str(), "ba");
  EXPECT_EQ(check_equiv(parse_ltl("(a -> F b) & G(a -> F b)"), parse_xy("!EP(YW{a} !X{b} TOP)"), Alphabet("ab"), 6)
                .kind,
            Verdict::Kind::Equal);
  Verdict v = check_equiv(parse_ltl("F b"), parse_ltl("P b"), Alphabet("ab"), 3);
  ASSERT_EQ(v.kind, Verdict::Kind::Counterexample);
  EXPECT_EQ(v.word->str(), "b");
  EXPECT_FALSE(v.lhs);
  EXPECT_TRUE(v.rhs);
}

TEST(CheckLanguage, MonomialExample) {
  auto member = [](const Word& w) { return std::regex_match(w.str(), std::regex("[acd]*ca*b[abcd]*")); };
  // Strict X_b never inspects position 1, so a leading b slips through.
  Verdict lit = check_language(parse_xy("X{b} Y{c} !(X{d} X{b} !Y{b} TOP)"), member, Alphabet("abcd"), 6);
  ASSERT_EQ(lit.kind, Verdict::Kind::Counterexample);
  EXPECT_EQ(lit.word->str(), "bcb");
  Verdict fixed = check_language(parse_xy("XW{b} Y{c} !(X{d} X{b} !Y{b} TOP)"), member, Alphabet("abcd"), 6);
  EXPECT_EQ(fixed.kind, Verdict::Kind::Equal);
}

TEST(CheckEquiv, PointwiseFindsPosition) {
  Verdict v = check_equiv(parse_ltl("X a"), parse_ltl("F a"), Alphabet("ab"), 3,
                          {.parallel = true, .mode = EquivMode::Pointwise});
  ASSERT_EQ(v.kind, Verdict::Kind::Counterexample);
  EXPECT_EQ(v.word->str(), "aba");
  EXPECT_EQ(v.point->lo, 1);
}

TEST(CheckEquiv, SerialAndParallelAgree) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 40; ++n) {
    XyFormula a = random_xy(rng, 6);
    XyFormula b = random_xy(rng, 6);
    Verdict p = check_equiv(a, b, Alphabet("abc"), 5, {.parallel = true});
    Verdict s = check_equiv(a, b, Alphabet("abc"), 5, {.parallel = false});
    ASSERT_EQ(p.kind, s.kind);
    EXPECT_EQ(p.word, s.word);
  }
}

TEST(Random, DeterministicAndInFragment) {
  for (Logic l : {Logic::Xy, Logic::Uitl, Logic::Ltl, Logic::Fp, Logic::AtNext, Logic::TlPlus, Logic::BLinTL,
                  Logic::BThTL, Logic::BInvTL, Logic::InvTL, Logic::InvModTL}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      AnyFormula f = random_formula(l, 1 + static_cast<int>(seed % 12), seed);
      EXPECT_EQ(f, random_formula(l, 1 + static_cast<int>(seed % 12), seed));
      const std::string text = print_formula(f);
      EXPECT_NO_THROW(parse_formula(text, l)) << text;
    }
  }
  auto leaf = std::get<XyFormula>(random_formula(Logic::Xy, 1, 5));
  EXPECT_TRUE(leaf.op() == XyTag::Op::Atom || leaf.op() == XyTag::Op::Top);
}

TEST(Random, TlPlusGeneratorsStayInGrammar) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 300; ++n) {
    EXPECT_TRUE(is_tlplus(random_tlplus(rng, 1 + n % 10)));
    EXPECT_TRUE(is_recursive_ranker(random_recursive_ranker(rng, 1 + n % 10)));
  }
}

TEST(RoundTrip, ThousandRandomFormulas) {
  const Logic logics[] = {Logic::Xy, Logic::Uitl, Logic::Ltl, Logic::AtNext, Logic::BLinTL};
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Logic l = logics[seed % 5];
    AnyFormula f = random_formula(l, 1 + static_cast<int>(seed % 14), seed);
    EXPECT_EQ(parse_formula(print_formula(f), l), f) << print_formula(f);
    EXPECT_EQ(parse_formula(print_formula(f, {.full_parens = true}), l), f) << print_formula(f);
  }
}

TEST(Subterms, CountEqualsNodeCount) {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 100; ++n) {
    XyFormula f = random_xy(rng, 1 + n % 12);
    EXPECT_EQ(subterms(f).size(), f.node_count());
  }
}

TEST(Desugar, PreservesEvaluation) {
  const Alphabet abc("abc");
  std::mt19937_64 rng(5);
  for (int n = 0; n < 40; ++n) {
    LtlFormula l = random_ltl(rng, 7);
    EXPECT_EQ(check_equiv(l, desugar(l, abc), abc, 7, {.mode = EquivMode::Pointwise}).kind, Verdict::Kind::Equal);
    CountingFormula c = random_counting(rng, Logic::BLinTL, 6);
    EXPECT_EQ(check_equiv(c, desugar(c, abc), abc, 6, {.mode = EquivMode::Pointwise}).kind, Verdict::Kind::Equal)
        << print_formula(c);
    UitlFormula u = random_uitl(rng, 6);
    EXPECT_EQ(check_equiv(u, desugar(u, abc), abc, 5, {.mode = EquivMode::Pointwise}).kind, Verdict::Kind::Equal);
    XyFormula x = random_xy(rng, 7);
    EXPECT_EQ(check_equiv(x, desugar(x, abc), abc, 7, {.mode = EquivMode::Pointwise}).kind, Verdict::Kind::Equal);
    AtNextFormula a = random_atnext(rng, 7);
    EXPECT_EQ(check_equiv(a, desugar(a, abc), abc, 6, {.mode = EquivMode::Pointwise}).kind, Verdict::Kind::Equal);
  }
  for (const char* s : {"NOW(#[a] in {1} mod 2)", "F G a", "{ab} U c", "X Y H a"}) {
    CountingFormula c = parse_counting(s);
    EXPECT_EQ(check_equiv(c, desugar(c, abc), abc, 7, {.mode = EquivMode::Pointwise}).kind, Verdict::Kind::Equal) << s;
  }
}

TEST(Desugar, IdempotentOnRandom) {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 100; ++n) {
    CountingFormula c = desugar(random_counting(rng, Logic::BLinTL, 8), Alphabet("abc"));
    EXPECT_EQ(desugar(c, Alphabet("abc")), c);
    LtlFormula l = desugar(random_ltl(rng, 8));
    EXPECT_EQ(desugar(l), l);
  }
}

TEST(Eval, FastCheckAgreesOnSample) {
  std::mt19937_64 rng(2);
  auto words = enumerate_words(Alphabet("abc"), 4);
  for (int n = 0; n < 60; ++n) {
    XyFormula f = random_xy(rng, 10);
    for (const auto& w : words) ASSERT_EQ(fast_check(w, f), eval_xy(w, 1, f)) << print_formula(f) << " " << w.str();
  }
}
