#include <gtest/gtest.h>

#include <random>

#include "tlwb/syntax.hpp"

using namespace tlwb;

TEST(Parse, UniqueParsingExample) {
  XyFormula f = parse_xy("EP(Y{a}(!X{b} TOP | NEXT c))");
  XyFormula expected = xy::EP(xy::Y('a', XyFormula::disj(XyFormula::negate(xy::X('b', xy::top())),
                                                         xy::next(xy::atom('c')))));
  EXPECT_EQ(f, expected);
}

TEST(Parse, TopInEveryLogic) {
  for (Logic l : {Logic::Xy, Logic::Uitl, Logic::Ltl, Logic::AtNext, Logic::BLinTL}) {
    EXPECT_EQ(print_formula(parse_formula("TOP", l)), "TOP");
  }
}

TEST(Parse, XyRejectsNestedGuards) {
  EXPECT_THROW(parse_xy("X[a] b"), ParseError);
}

TEST(Parse, ErrorCarriesLocation) {
  try {
    parse_xy("a &\n  & b");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
    EXPECT_EQ(e.found(), "'&'");
  }
}

TEST(Parse, FragmentErrors) {
  EXPECT_THROW(parse_formula("<#[a]<2> U b", Logic::InvTL), FragmentError);
  EXPECT_NO_THROW(parse_formula("<#[a]<2> U b", Logic::BThTL));
  EXPECT_THROW(parse_formula("<#[a] in {1} mod 2> U b", Logic::BThTL), FragmentError);
  EXPECT_NO_THROW(parse_formula("<#[a] in {1} mod 2> U b", Logic::InvModTL));
  EXPECT_THROW(parse_formula("X[a] b", Logic::TlPlus), FragmentError);
  EXPECT_THROW(parse_formula("a U b", Logic::Fp), FragmentError);
  EXPECT_NO_THROW(parse_formula("F a & P Y b", Logic::Fp));
}

TEST(Parse, Guards) {
  Guard g = parse_guard("sum(2#[ab],-1#[c]) in {1,3} mod 5");
  ASSERT_EQ(g.kind(), Guard::Kind::Modulo);
  EXPECT_EQ(g.terms().size(), 2u);
  EXPECT_EQ(g.terms()[1].coeff, -1);
  EXPECT_EQ(g.modulus(), 5);
  EXPECT_EQ(parse_guard("#[abc]=0").kind(), Guard::Kind::Simple);
  Guard t = parse_guard("1<=#[b]<3");
  ASSERT_EQ(t.kind(), Guard::Kind::Threshold);
  EXPECT_EQ(t.lower()->value, 1);
  EXPECT_TRUE(t.upper()->strict);
  EXPECT_THROW(parse_guard("#[a] in {1} mod 1"), ParseError);
  EXPECT_THROW(parse_guard("sum(1#[]) in {0} mod 2"), ParseError);
}

TEST(Print, NegatedExample) {
  XyFormula f = XyFormula::negate(xy::EP(xy::Y('a', XyFormula::negate(xy::X('b', xy::top())))));
  EXPECT_EQ(print_formula(f), "!EP(Y{a} !X{b} TOP)");
}

TEST(Print, RoundTripSamples) {
  for (const char* s : {"a -> b -> c", "(a -> b) -> c", "a | b & c", "(a | b) & c", "X{a}(b | c)",
                        "!!a", "SP(a) & EP(TOP)"}) {
    XyFormula f = parse_xy(s);
    EXPECT_EQ(parse_xy(print_formula(f)), f) << s;
    EXPECT_EQ(parse_xy(print_formula(f, {.full_parens = true})), f) << s;
  }
  for (const char* s : {"(TOP L{c} ALO{a}) F{b} TOP", "(TOP L{b} !ALO{^c}) L{a} TOP", "OPLUS a FP{b} OMINUSB PT",
                        "a F{b} (c F{d} UNIT)"}) {
    UitlFormula f = parse_uitl(s);
    EXPECT_EQ(parse_uitl(print_formula(f)), f) << s;
  }
  for (const char* s : {"a U b U c", "(a U b) U c", "X(a S b) & G P c"}) {
    LtlFormula f = parse_ltl(s);
    EXPECT_EQ(parse_ltl(print_formula(f)), f) << s;
  }
  for (const char* s : {"X[a & Y[b] TOP] Y[X[c] TOP] TOP", "SP(X[TOP] a)"}) {
    AtNextFormula f = parse_atnext(s);
    EXPECT_EQ(parse_atnext(print_formula(f)), f) << s;
  }
  for (const char* s : {"<!(#[bc]>1) & #[a]=17> U a", "{ab} S NOW(sum(2#[a],1#[^a]) in {0} mod 3)",
                        "<0<=#[a]<=0 | #[b]>=2> U (a UNTIL b)", "F G X Y P H a"}) {
    CountingFormula f = parse_counting(s);
    EXPECT_EQ(parse_counting(print_formula(f)), f) << s;
  }
}

TEST(Parse, TotalOnRandomBytes) {
  std::mt19937_64 rng(7);
  const std::string alphabet = "abcXYFLUSTOPNEW{}[]()!&|-><=#^,0123456789 \n\x01\xff";
  for (int n = 0; n < 3000; ++n) {
    std::string s;
    int len = static_cast<int>(rng() % 24);
    for (int k = 0; k < len; ++k) s.push_back(alphabet[rng() % alphabet.size()]);
    for (Logic l : {Logic::Xy, Logic::Uitl, Logic::Ltl, Logic::AtNext, Logic::BLinTL}) {
      try {
        parse_formula(s, l);
      } catch (const ParseError&) {
      } catch (const FragmentError&) {
      }
    }
  }
}

TEST(Words, ParseAndValidate) {
  EXPECT_EQ(parse_word("abadbc").length(), 6);
  EXPECT_EQ(parse_word("a").length(), 1);
  EXPECT_THROW(parse_word("  "), EmptyWordError);
  EXPECT_THROW(parse_word("ab1"), ParseError);
  auto ws = parse_words("ab\n\nc\n");
  ASSERT_EQ(ws.size(), 2u);
  EXPECT_EQ(ws[1].str(), "c");
}

TEST(Kripke, TwoStateSelfLoop) {
  KripkeStructure k = parse_kripke(
      "# two states\n"
      "states: s0 s1\n"
      "labels: s0=a s1=b\n"
      "edges: s0->s1 s1->s1\n"
      "initial: s0\n"
      "final: s1\n");
  EXPECT_EQ(k.state_count(), 2);
  EXPECT_EQ(k.edge_count(), 2u);
  auto words = k.generated_words(3);
  ASSERT_EQ(words.size(), 2u);
  EXPECT_EQ(words[0].str(), "ab");
  EXPECT_EQ(words[1].str(), "abb");
}

TEST(Kripke, Validation) {
  EXPECT_THROW(parse_kripke("states: s0\nlabels: s0=a\ninitial: s0\n"), ParseError);
  EXPECT_THROW(parse_kripke("states: s0\ninitial: s0\nfinal: s0\n"), ParseError);
  EXPECT_THROW(parse_kripke("states: s0\nlabels: s1=a\n"), ParseError);
  EXPECT_THROW(parse_kripke("bogus: x\n"), ParseError);
}
