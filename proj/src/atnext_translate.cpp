#include "tlwb/atnext_translate.hpp"

#include "tlwb/desugar.hpp"
#include "tlwb/eval.hpp"
#include "tlwb/fragments.hpp"

namespace tlwb {

namespace {

using AF = AtNextFormula;
using LF = LtlFormula;

AF alpha(const LF& f) {
  using Op = LtlTag::Op;
  switch (f.op()) {
    case Op::Top: return AF::top();
    case Op::Atom: return AF::atom(f.letter());
    case Op::Not: return AF::negate(alpha(f.child(0)));
    case Op::And: return AF::conj(alpha(f.child(0)), alpha(f.child(1)));
    case Op::Or: return AF::disj(alpha(f.child(0)), alpha(f.child(1)));
    case Op::Implies: return AF::implies(alpha(f.child(0)), alpha(f.child(1)));
    case Op::Until:
    case Op::Since: {
      AF lhs = alpha(f.child(0));
      AF rhs = alpha(f.child(1));
      AF guard = AF::disj(AF::negate(lhs), rhs);
      return f.op() == Op::Until ? atnext::X(guard, rhs) : atnext::Y(guard, rhs);
    }
    default: throw std::logic_error("alpha expects a desugared formula");
  }
}

LF beta(const AF& f) {
  using Op = AtNextTag::Op;
  switch (f.op()) {
    case Op::Top: return LF::top();
    case Op::Atom: return LF::atom(f.letter());
    case Op::Not: return LF::negate(beta(f.child(0)));
    case Op::And: return LF::conj(beta(f.child(0)), beta(f.child(1)));
    case Op::Or: return LF::disj(beta(f.child(0)), beta(f.child(1)));
    case Op::Implies: return LF::implies(beta(f.child(0)), beta(f.child(1)));
    case Op::X:
    case Op::Y: {
      LF g = beta(f.child(0));
      LF hit = LF::conj(g, beta(f.child(1)));
      return f.op() == Op::X ? ltl::U(LF::negate(g), hit) : ltl::S(LF::negate(g), hit);
    }
    case Op::SP: return ltl::P(LF::conj(LF::negate(ltl::Y(LF::top())), beta(f.child(0))));
    case Op::EP: {
      LF here = LF::conj(LF::negate(ltl::X(LF::top())), beta(f.child(0)));
      return LF::disj(here, ltl::F(here));
    }
  }
  throw std::logic_error("beta: unknown operator");
}

LF strict_past(LF f) { return ltl::Y(ltl::P(std::move(f))); }

LF at(const AF& f) {
  using Op = AtNextTag::Op;
  switch (f.op()) {
    case Op::Top: return LF::top();
    case Op::Atom: return LF::atom(f.letter());
    case Op::Not: return LF::negate(at(f.child(0)));
    case Op::And: return LF::conj(at(f.child(0)), at(f.child(1)));
    case Op::Or: return LF::disj(at(f.child(0)), at(f.child(1)));
    case Op::Implies: return LF::implies(at(f.child(0)), at(f.child(1)));
    case Op::X: {
      LF g = at(f.child(0));
      LF body = at(f.child(1));
      return LF::conj(ltl::F(LF::conj(g, body)),
                      LF::negate(ltl::F(LF::conj(LF::conj(g, LF::negate(body)), ltl::F(body)))));
    }
    case Op::Y: {
      LF g = at(f.child(0));
      LF body = at(f.child(1));
      return LF::conj(strict_past(LF::conj(g, body)),
                      LF::negate(strict_past(LF::conj(LF::conj(g, LF::negate(body)), strict_past(body)))));
    }
    case Op::SP: return ltl::P(LF::conj(LF::negate(ltl::Y(LF::top())), at(f.child(0))));
    case Op::EP: {
      LF here = LF::conj(LF::negate(ltl::F(LF::top())), at(f.child(0)));
      return LF::disj(here, ltl::F(here));
    }
  }
  throw std::logic_error("At: unknown operator");
}

}  // namespace

AtNextFormula ltl_to_atnext(const LtlFormula& f) { return alpha(desugar(f)); }

LtlFormula atnext_to_ltl(const AtNextFormula& f) { return beta(f); }

std::optional<ConvexityViolation> convexity_check(const Word& w, const AtNextFormula& f) {
  if (!is_recursive_ranker(f)) throw std::invalid_argument("convexity_check expects a recursive ranker");
  const auto sat = satisfaction_set(w, f);
  const int n = w.length();
  int first = 0;
  for (int p = 1; p <= n; ++p) {
    if (!sat[p]) continue;
    if (first == 0) {
      first = p;
      continue;
    }
    for (int k = first + 1; k < p; ++k) {
      if (!sat[k]) return ConvexityViolation{first, k, p};
    }
  }
  return std::nullopt;
}

LtlFormula tlplus_to_fp(const AtNextFormula& f) {
  if (!is_tlplus(f)) throw NotTlPlusError();
  return at(f);
}

AtNextFormula stair_formula(int k) {
  if (k < 1) throw std::invalid_argument("stair_formula needs k >= 1");
  const AF not_c = AF::negate(AF::atom('c'));
  AF psi = AF::atom('a');
  for (int i = 0; i < k; ++i) psi = AF::conj(AF::atom('a'), atnext::X(not_c, psi));
  return AF::disj(psi, atnext::X(psi, AF::top()));
}

bool stair_language(const Word& w, int k) {
  const int n = w.length();
  for (int p = 1; p <= n; ++p) {
    if (w[p] != 'a') continue;
    int hops = 0;
    int j = p;
    while (hops < k) {
      int q = j + 1;
      while (q <= n && w[q] == 'c') ++q;
      if (q > n || w[q] != 'a') break;
      j = q;
      ++hops;
    }
    if (hops >= k) return true;
  }
  return false;
}

}  // namespace tlwb
