#include <gtest/gtest.h>

#include "tlwb/desugar.hpp"
#include "tlwb/metrics.hpp"
#include "tlwb/syntax.hpp"

using namespace tlwb;

TEST(Word, RejectsEmptyAndForeignLetters) {
  EXPECT_THROW(Word(""), EmptyWordError);
  EXPECT_THROW(Word("aB"), std::invalid_argument);
  Word w("abadbc");
  EXPECT_EQ(w.length(), 6);
  EXPECT_EQ(w[1], 'a');
  EXPECT_EQ(w[6], 'c');
}

TEST(Alphabet, SortedUniqueAndFresh) {
  Alphabet a("cba");
  EXPECT_EQ(a.letters(), "abc");
  EXPECT_EQ(a.fresh_letter(), 'd');
  EXPECT_EQ(Alphabet("aab").size(), 2u);
}

TEST(LetterSet, ComplementMembership) {
  LetterSet s("ab", true);
  EXPECT_FALSE(s.contains('a'));
  EXPECT_TRUE(s.contains('c'));
  EXPECT_EQ(s.resolve(Alphabet("abcd")), "cd");
  EXPECT_TRUE(LetterSet::all().contains('z'));
  EXPECT_FALSE(LetterSet::none().contains('a'));
}

TEST(Guard, ModuloValidation) {
  EXPECT_THROW(Guard::modulo({{1, LetterSet("a")}}, {0}, 1), std::invalid_argument);
  EXPECT_THROW(Guard::modulo({{1, LetterSet()}}, {0}, 2), std::invalid_argument);
  Guard g = Guard::modulo({{1, LetterSet("a")}}, {5, -1, 1}, 3);
  ASSERT_EQ(g.residues().size(), 2u);
  EXPECT_EQ(g.residues()[0], 1);
  EXPECT_EQ(g.residues()[1], 2);
}

TEST(Size, WorkedGuardExample) {
  CountingFormula f = parse_counting("<!(#[bc]>1) & #[a]=17> U a");
  EXPECT_EQ(size(f), 6u);
}

TEST(Size, AtomAndRanker) {
  EXPECT_EQ(size(parse_xy("a")), 1u);
  EXPECT_EQ(size(parse_xy("X{a} Y{b} TOP")), 3u);
}

TEST(Size, ConstantsAreBinary) {
  EXPECT_EQ(constant_size(0), 1u);
  EXPECT_EQ(constant_size(1), 1u);
  EXPECT_EQ(constant_size(2), 1u);
  EXPECT_EQ(constant_size(3), 2u);
  EXPECT_EQ(constant_size(17), 5u);
  EXPECT_EQ(constant_size(BigInt("1000000000000000000000")), 70u);
}

TEST(RecursionDepth, Rules) {
  EXPECT_EQ(recursion_depth(parse_atnext("a")), 0u);
  EXPECT_EQ(recursion_depth(parse_atnext("X[X[b] TOP] TOP")), 2u);
  EXPECT_EQ(recursion_depth(parse_atnext("X[a] X[TOP] b")), 1u);
  EXPECT_EQ(recursion_depth(parse_atnext("!X[a] b | Y[c] TOP")), 1u);
}

TEST(Desugar, GloballyBecomesNegatedUntil) {
  LtlFormula g = desugar(parse_ltl("G a"));
  EXPECT_EQ(g, parse_ltl("!(TOP U !a)"));
}

TEST(Desugar, SetUntilBecomesComplementGuard) {
  CountingFormula f = desugar(parse_counting("{ab} U c"));
  EXPECT_EQ(f, parse_counting("<#[^ab]=0> U c"));
}

TEST(Desugar, FullAlphabetAloIsTop) {
  UitlFormula f = desugar(parse_uitl("ALO{abc}"), Alphabet("abc"));
  EXPECT_EQ(f, UitlFormula::top());
  EXPECT_EQ(desugar(parse_uitl("ALO{^}")), UitlFormula::top());
}

TEST(Desugar, Idempotent) {
  for (const char* s : {"G a -> H b", "a & (b U c) & P c", "X Y F !a"}) {
    LtlFormula once = desugar(parse_ltl(s));
    EXPECT_EQ(desugar(once), once) << s;
  }
  CountingFormula c = desugar(parse_counting("NOW(#[a] in {1} mod 2) & F a"), Alphabet("ab"));
  EXPECT_EQ(desugar(c, Alphabet("ab")), c);
}

TEST(Subterms, RankerPairs) {
  auto st = subterms(parse_xy("X{a} TOP"));
  ASSERT_EQ(st.size(), 2u);
  EXPECT_TRUE(st[0].context.empty());
  ASSERT_EQ(st[1].context.size(), 1u);
  EXPECT_EQ(st[1].context[0].op, XyTag::Op::X);
  EXPECT_EQ(st[1].context[0].letter, 'a');
  EXPECT_EQ(st[1].formula, XyFormula::top());
}

TEST(Subterms, ExampleHasAtomContexts) {
  XyFormula f = parse_xy("EP(Y{a}(!X{b} TOP | NEXT c))");
  auto st = subterms(f);
  EXPECT_EQ(st.size(), f.node_count());
  int atoms = 0;
  for (const auto& s : st) {
    if (s.formula.op() == XyTag::Op::Top || s.formula.op() == XyTag::Op::Atom) ++atoms;
  }
  EXPECT_EQ(atoms, 2);
}

TEST(Fragments, TlPlusGrammar) {
  EXPECT_TRUE(is_tlplus(parse_atnext("!X[a] TOP | b")));
  EXPECT_TRUE(is_tlplus(parse_atnext("X[a | b] TOP")));
  EXPECT_FALSE(is_tlplus(parse_atnext("X[a] (b | c)")));
  EXPECT_FALSE(is_tlplus(parse_atnext("X[a] b")));
  EXPECT_TRUE(is_tlplus(parse_atnext("X[a & Y[b] TOP & X[c] TOP] Y[X[c] TOP & !X[c] Y[b] TOP] TOP")));
}
