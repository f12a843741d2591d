#include "tlwb/uitl_translate.hpp"

#include <stdexcept>

#include "tlwb/desugar.hpp"
#include "tlwb/fragments.hpp"

namespace tlwb {

namespace {

using XOp = XyTag::Op;
using UOp = UitlTag::Op;
using XF = XyFormula;

XF bottom() { return XF::bottom(); }
XF at_first() { return XF::negate(xy::prev(XF::top())); }
XF at_last() { return XF::negate(xy::next(XF::top())); }
XF none_before(Letter a) { return XF::negate(xy::Y(a, XF::top())); }
XF none_after(Letter a) { return XF::negate(xy::X(a, XF::top())); }

RankerStep st(XOp op, Letter a = 0) { return {op, a}; }

}  // namespace

XyFormula directionality(const Ranker& r, Rel rel) {
  if (r.empty()) return directionality(Ranker({st(XOp::SP)}), rel);
  const RankerStep s = r.last();
  const Ranker pre = r.prefix();
  const Letter a = s.letter;
  auto P = [](const Ranker& x, Rel q) { return directionality(x, q); };
  switch (s.op) {
    case XOp::SP:
      switch (rel) {
        case Rel::Lt: return bottom();
        case Rel::Le: return at_first();
        case Rel::Gt: return XF::negate(at_first());
        case Rel::Ge: return XF::top();
      }
      break;
    case XOp::EP:
      switch (rel) {
        case Rel::Lt: return XF::negate(at_last());
        case Rel::Le: return XF::top();
        case Rel::Gt: return bottom();
        case Rel::Ge: return at_last();
      }
      break;
    case XOp::XW:
    case XOp::X:
      switch (rel) {
        case Rel::Lt: return xy::X(a, P(r, Rel::Le));
        case Rel::Le:
          return XF::disj(none_before(a), xy::Y(a, P(pre, s.op == XOp::XW ? Rel::Lt : Rel::Le)));
        case Rel::Gt: return xy::Y(a, P(pre, s.op == XOp::XW ? Rel::Ge : Rel::Gt));
        case Rel::Ge: return XF::disj(none_after(a), xy::X(a, P(r, Rel::Gt)));
      }
      break;
    case XOp::YW:
    case XOp::Y:
      switch (rel) {
        case Rel::Lt: return xy::X(a, P(pre, s.op == XOp::YW ? Rel::Le : Rel::Lt));
        case Rel::Le: return XF::disj(none_before(a), xy::Y(a, P(r, Rel::Lt)));
        case Rel::Gt: return xy::Y(a, P(r, Rel::Ge));
        case Rel::Ge: return XF::disj(none_after(a), xy::X(a, P(pre, s.op == XOp::YW ? Rel::Gt : Rel::Ge)));
      }
      break;
    case XOp::Next:
      switch (rel) {
        case Rel::Lt: return P(pre, Rel::Le);
        case Rel::Le: return XF::disj(at_first(), xy::prev(P(pre, Rel::Le)));
        case Rel::Gt: return xy::prev(P(pre, Rel::Gt));
        case Rel::Ge: return P(pre, Rel::Gt);
      }
      break;
    case XOp::Prev:
      switch (rel) {
        case Rel::Lt: return xy::next(P(pre, Rel::Lt));
        case Rel::Le: return P(pre, Rel::Lt);
        case Rel::Gt: return P(pre, Rel::Ge);
        case Rel::Ge: return XF::disj(at_last(), xy::next(P(pre, Rel::Ge)));
      }
      break;
    default:
      break;
  }
  throw std::logic_error("directionality: not a ranker step");
}

XyFormula compose(const Ranker& r, const XyFormula& phi) {
  XF f = phi;
  for (auto it = r.steps().rbegin(); it != r.steps().rend(); ++it) f = XF::make(it->op, {f}, it->letter);
  return f;
}

XyFormula compose(const XyFormula& ranker, const XyFormula& phi) {
  return compose(Ranker::from_formula(ranker), phi);
}

namespace {

struct Children {
  Ranker l1, r1, l2, r2;
};

// Interval rankers of the children of a node whose own interval is [L, R].
Children child_rankers(const UitlFormula& f, const Ranker& L, const Ranker& R) {
  const Letter a = f.letter();
  switch (f.op()) {
    case UOp::SP: return {L, L, {}, {}};
    case UOp::EP: return {R, R, {}, {}};
    case UOp::First: return {L, L.then(st(XOp::XW, a)), L.then(st(XOp::XW, a)), R};
    case UOp::FirstPast: return {L, R.then(st(XOp::XW, a)), R, R.then(st(XOp::XW, a))};
    case UOp::Last: return {L, R.then(st(XOp::YW, a)), R.then(st(XOp::YW, a)), R};
    case UOp::LastMinus: return {L.then(st(XOp::YW, a)), L, L.then(st(XOp::YW, a)), R};
    case UOp::OPlus: return {L.then(st(XOp::Next)), R, {}, {}};
    case UOp::OPlusBar: return {L, R.then(st(XOp::Next)), {}, {}};
    case UOp::OMinus: return {L, R.then(st(XOp::Prev)), {}, {}};
    case UOp::OMinusBar: return {L.then(st(XOp::Prev)), R, {}, {}};
    default: return {L, R, L, R};
  }
}

void collect(const UitlFormula& f, const Ranker& L, const Ranker& R, ContextPath<UitlTag>& path,
             std::vector<IntervalRankerEntry>& out) {
  out.push_back({path, f, L, R});
  const Children c = child_rankers(f, L, R);
  for (std::size_t i = 0; i < f.arity(); ++i) {
    path.push_back({f.op(), f.letter(), i});
    if (i == 0) {
      collect(f.child(i), c.l1, c.r1, path, out);
    } else {
      collect(f.child(i), c.l2, c.r2, path, out);
    }
    path.pop_back();
  }
}

XF trans(const UitlFormula& f, const Ranker& L, const Ranker& R) {
  const Children c = child_rankers(f, L, R);
  const Letter a = f.letter();
  auto t1 = [&] { return trans(f.child(0), c.l1, c.r1); };
  auto t2 = [&] { return trans(f.child(1), c.l2, c.r2); };
  auto chop = [&](XF here) { return XF::conj(XF::conj(std::move(here), t1()), t2()); };
  switch (f.op()) {
    case UOp::Top: return XF::top();
    case UOp::Atom: return compose(L, XF::conj(xy::atom(a), directionality(R, Rel::Ge)));
    case UOp::Pt: return compose(L, directionality(R, Rel::Ge));
    case UOp::Unit:
      return compose(L, xy::next(XF::conj(directionality(R, Rel::Le), directionality(R, Rel::Ge))));
    case UOp::Alo: throw std::logic_error("ALO must be desugared before translation");
    case UOp::SP:
    case UOp::EP: return compose(c.l1, t1());
    case UOp::First: return chop(compose(L.then(st(XOp::XW, a)), directionality(R, Rel::Le)));
    case UOp::Last: return chop(compose(R.then(st(XOp::YW, a)), directionality(L, Rel::Ge)));
    case UOp::FirstPast: return chop(compose(L.then(st(XOp::XW, a)), directionality(R, Rel::Ge)));
    case UOp::LastMinus: return chop(compose(R.then(st(XOp::YW, a)), directionality(L, Rel::Le)));
    case UOp::OPlus: return XF::conj(compose(L.then(st(XOp::Next)), directionality(R, Rel::Le)), t1());
    case UOp::OMinus: return XF::conj(compose(R.then(st(XOp::Prev)), directionality(L, Rel::Ge)), t1());
    case UOp::OPlusBar: return XF::conj(compose(R.then(st(XOp::Next)), XF::top()), t1());
    case UOp::OMinusBar: return XF::conj(compose(L.then(st(XOp::Prev)), XF::top()), t1());
    case UOp::Not: return XF::negate(t1());
    case UOp::And: return XF::conj(t1(), t2());
    case UOp::Or: return XF::disj(t1(), t2());
    case UOp::Implies: return XF::implies(t1(), t2());
  }
  throw std::logic_error("trans_uitl: unknown operator");
}

}  // namespace

std::vector<IntervalRankerEntry> interval_rankers(const UitlFormula& f) {
  std::vector<IntervalRankerEntry> out;
  ContextPath<UitlTag> path;
  collect(f, Ranker({st(XOp::SP)}), Ranker({st(XOp::EP)}), path, out);
  return out;
}

XyFormula trans_uitl(const UitlFormula& f, const Alphabet& alphabet) {
  const UitlFormula core = desugar(f, alphabet.empty() ? letters_of(f) : alphabet);
  return trans(core, Ranker({st(XOp::SP)}), Ranker({st(XOp::EP)}));
}

}  // namespace tlwb
