#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "tlwb/guard.hpp"
#include "tlwb/word.hpp"

namespace tlwb {

// Every family shares Top, Atom, Not, And, Or, Implies so boolean handling can be generic.

/// TL[X_a, Y_a]: letter-indexed first/last-occurrence jumps.
struct XyTag {
  enum class Op : std::uint8_t { Top, Atom, Not, And, Or, Implies, X, Y, XW, YW, Next, Prev, SP, EP };
  static constexpr std::string_view name = "xy";
};

/// UITL+-: deterministic interval logic with first/last chops.
struct UitlTag {
  enum class Op : std::uint8_t {
    Top, Atom, Not, And, Or, Implies,
    Pt, Unit, Alo, SP, EP,
    First, Last, FirstPast, LastMinus,   // binary chops F_a, L_a, F'_a, L'_a
    OPlus, OMinus, OPlusBar, OMinusBar,
  };
  static constexpr std::string_view name = "uitl";
};

/// LTL with strict U/S; F strict, P reflexive.
struct LtlTag {
  enum class Op : std::uint8_t { Top, Atom, Not, And, Or, Implies, X, Y, F, P, G, H, Until, Since };
  static constexpr std::string_view name = "ltl";
};

/// TL[X_phi, Y_phi]: recursively guarded next/previous (child 0 guard, child 1 body).
struct AtNextTag {
  enum class Op : std::uint8_t { Top, Atom, Not, And, Or, Implies, X, Y, SP, EP };
  static constexpr std::string_view name = "atnext";
};

/// BLinTL: unary until/since guarded by interval counting constraints.
struct CountingTag {
  enum class Op : std::uint8_t {
    Top, Atom, Not, And, Or, Implies,
    Until, Since,          // g U phi, g S phi
    Now,                   // global counter test, counts positions 1..i inclusive
    F, G, X, Y, P, H,      // derived
    SetUntil, SetSince,    // B U phi = (#(A-B) = 0) U phi
    StrongUntil,           // binary phi U psi; closure bookkeeping for threshold constraints only
  };
  static constexpr std::string_view name = "blintl";
};

/// Immutable, structurally shared formula tree of one logic family.
template <class Tag>
class Formula {
 public:
  using Op = typename Tag::Op;

  static Formula make(Op op, std::vector<Formula> kids = {}, Letter letter = 0,
                      LetterSet set = {}, std::optional<Guard> guard = std::nullopt) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->kids = std::move(kids);
    n->letter = letter;
    n->set = std::move(set);
    n->guard = std::move(guard);
    n->count = 1;
    for (const auto& k : n->kids) n->count += k.node_count();
    return Formula(std::move(n));
  }

  static Formula top() { return make(Op::Top); }
  static Formula bottom() { return negate(top()); }
  static Formula atom(Letter c) { return make(Op::Atom, {}, c); }
  static Formula negate(Formula f) { return make(Op::Not, {std::move(f)}); }
  static Formula conj(Formula a, Formula b) { return make(Op::And, {std::move(a), std::move(b)}); }
  static Formula disj(Formula a, Formula b) { return make(Op::Or, {std::move(a), std::move(b)}); }
  static Formula implies(Formula a, Formula b) {
    return make(Op::Implies, {std::move(a), std::move(b)});
  }
  /// Left-nested conjunction; empty list gives TOP.
  static Formula conj_all(std::span<const Formula> fs) {
    if (fs.empty()) return top();
    Formula acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
    return acc;
  }
  /// Left-nested disjunction; empty list gives !TOP.
  static Formula disj_all(std::span<const Formula> fs) {
    if (fs.empty()) return bottom();
    Formula acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
    return acc;
  }

  Op op() const { return node_->op; }
  Letter letter() const { return node_->letter; }
  const LetterSet& letters() const { return node_->set; }
  const Guard& guard() const {
    if (!node_->guard) throw std::logic_error("formula node carries no guard");
    return *node_->guard;
  }
  bool has_guard() const { return node_->guard.has_value(); }
  std::size_t arity() const { return node_->kids.size(); }
  const Formula& child(std::size_t i) const { return node_->kids.at(i); }
  std::span<const Formula> children() const { return node_->kids; }
  /// Number of AST nodes.
  std::size_t node_count() const { return node_->count; }
  /// Stable identity of this node, for per-evaluation memo tables.
  const void* identity() const { return node_.get(); }

  /// Same node with new children.
  Formula with_children(std::vector<Formula> kids) const {
    return make(op(), std::move(kids), letter(), letters(), node_->guard);
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    return x.op == y.op && x.letter == y.letter && x.set == y.set && x.guard == y.guard &&
           x.count == y.count && x.kids == y.kids;
  }

 private:
  struct Node {
    Op op{};
    Letter letter = 0;
    LetterSet set;
    std::optional<Guard> guard;
    std::vector<Formula> kids;
    std::size_t count = 1;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

using XyFormula = Formula<XyTag>;
using UitlFormula = Formula<UitlTag>;
using LtlFormula = Formula<LtlTag>;
using AtNextFormula = Formula<AtNextTag>;
using CountingFormula = Formula<CountingTag>;

template <class Op>
constexpr bool is_boolean_op(Op op) {
  return op == Op::Top || op == Op::Atom || op == Op::Not || op == Op::And || op == Op::Or ||
         op == Op::Implies;
}

/// Letters mentioned anywhere in the formula (atoms, indices, listed set members, guard sets).
template <class Tag>
Alphabet letters_of(const Formula<Tag>& f);

extern template Alphabet letters_of(const XyFormula&);
extern template Alphabet letters_of(const UitlFormula&);
extern template Alphabet letters_of(const LtlFormula&);
extern template Alphabet letters_of(const AtNextFormula&);
extern template Alphabet letters_of(const CountingFormula&);

namespace xy {
inline XyFormula top() { return XyFormula::top(); }
inline XyFormula atom(Letter c) { return XyFormula::atom(c); }
inline XyFormula X(Letter a, XyFormula f) { return XyFormula::make(XyTag::Op::X, {std::move(f)}, a); }
inline XyFormula Y(Letter a, XyFormula f) { return XyFormula::make(XyTag::Op::Y, {std::move(f)}, a); }
inline XyFormula XW(Letter a, XyFormula f) { return XyFormula::make(XyTag::Op::XW, {std::move(f)}, a); }
inline XyFormula YW(Letter a, XyFormula f) { return XyFormula::make(XyTag::Op::YW, {std::move(f)}, a); }
inline XyFormula next(XyFormula f) { return XyFormula::make(XyTag::Op::Next, {std::move(f)}); }
inline XyFormula prev(XyFormula f) { return XyFormula::make(XyTag::Op::Prev, {std::move(f)}); }
inline XyFormula SP(XyFormula f) { return XyFormula::make(XyTag::Op::SP, {std::move(f)}); }
inline XyFormula EP(XyFormula f) { return XyFormula::make(XyTag::Op::EP, {std::move(f)}); }
}  // namespace xy

namespace uitl {
using Op = UitlTag::Op;
inline UitlFormula top() { return UitlFormula::top(); }
inline UitlFormula atom(Letter c) { return UitlFormula::atom(c); }
inline UitlFormula pt() { return UitlFormula::make(Op::Pt); }
inline UitlFormula unit() { return UitlFormula::make(Op::Unit); }
inline UitlFormula alo(LetterSet s) { return UitlFormula::make(Op::Alo, {}, 0, std::move(s)); }
inline UitlFormula SP(UitlFormula f) { return UitlFormula::make(Op::SP, {std::move(f)}); }
inline UitlFormula EP(UitlFormula f) { return UitlFormula::make(Op::EP, {std::move(f)}); }
inline UitlFormula chop(Op op, UitlFormula l, Letter a, UitlFormula r) {
  return UitlFormula::make(op, {std::move(l), std::move(r)}, a);
}
inline UitlFormula first(UitlFormula l, Letter a, UitlFormula r) { return chop(Op::First, std::move(l), a, std::move(r)); }
inline UitlFormula last(UitlFormula l, Letter a, UitlFormula r) { return chop(Op::Last, std::move(l), a, std::move(r)); }
inline UitlFormula unary(Op op, UitlFormula f) { return UitlFormula::make(op, {std::move(f)}); }
}  // namespace uitl

namespace ltl {
using Op = LtlTag::Op;
inline LtlFormula top() { return LtlFormula::top(); }
inline LtlFormula atom(Letter c) { return LtlFormula::atom(c); }
inline LtlFormula unary(Op op, LtlFormula f) { return LtlFormula::make(op, {std::move(f)}); }
inline LtlFormula X(LtlFormula f) { return unary(Op::X, std::move(f)); }
inline LtlFormula Y(LtlFormula f) { return unary(Op::Y, std::move(f)); }
inline LtlFormula F(LtlFormula f) { return unary(Op::F, std::move(f)); }
inline LtlFormula P(LtlFormula f) { return unary(Op::P, std::move(f)); }
inline LtlFormula G(LtlFormula f) { return unary(Op::G, std::move(f)); }
inline LtlFormula H(LtlFormula f) { return unary(Op::H, std::move(f)); }
inline LtlFormula U(LtlFormula a, LtlFormula b) { return LtlFormula::make(Op::Until, {std::move(a), std::move(b)}); }
inline LtlFormula S(LtlFormula a, LtlFormula b) { return LtlFormula::make(Op::Since, {std::move(a), std::move(b)}); }
}  // namespace ltl

namespace atnext {
using Op = AtNextTag::Op;
inline AtNextFormula top() { return AtNextFormula::top(); }
inline AtNextFormula atom(Letter c) { return AtNextFormula::atom(c); }
inline AtNextFormula X(AtNextFormula guard, AtNextFormula body) {
  return AtNextFormula::make(Op::X, {std::move(guard), std::move(body)});
}
inline AtNextFormula Y(AtNextFormula guard, AtNextFormula body) {
  return AtNextFormula::make(Op::Y, {std::move(guard), std::move(body)});
}
inline AtNextFormula SP(AtNextFormula f) { return AtNextFormula::make(Op::SP, {std::move(f)}); }
inline AtNextFormula EP(AtNextFormula f) { return AtNextFormula::make(Op::EP, {std::move(f)}); }
}  // namespace atnext

namespace counting {
using Op = CountingTag::Op;
inline CountingFormula top() { return CountingFormula::top(); }
inline CountingFormula atom(Letter c) { return CountingFormula::atom(c); }
inline CountingFormula until(Guard g, CountingFormula f) {
  return CountingFormula::make(Op::Until, {std::move(f)}, 0, {}, std::move(g));
}
inline CountingFormula since(Guard g, CountingFormula f) {
  return CountingFormula::make(Op::Since, {std::move(f)}, 0, {}, std::move(g));
}
inline CountingFormula now(Guard g) {
  return CountingFormula::make(Op::Now, {}, 0, {}, std::move(g));
}
inline CountingFormula unary(Op op, CountingFormula f) {
  return CountingFormula::make(op, {std::move(f)});
}
inline CountingFormula set_until(LetterSet b, CountingFormula f) {
  return CountingFormula::make(Op::SetUntil, {std::move(f)}, 0, std::move(b));
}
inline CountingFormula set_since(LetterSet b, CountingFormula f) {
  return CountingFormula::make(Op::SetSince, {std::move(f)}, 0, std::move(b));
}
/// F phi = (#{} = 0) U phi.
inline CountingFormula eventually(CountingFormula f) { return until(Guard::simple(LetterSet::none()), std::move(f)); }
/// Strict past: (#{} = 0) S phi.
inline CountingFormula once(CountingFormula f) { return since(Guard::simple(LetterSet::none()), std::move(f)); }
/// X phi = (#A = 0) U phi.
inline CountingFormula next(CountingFormula f) { return until(Guard::simple(LetterSet::all()), std::move(f)); }
/// Y phi = (#A = 0) S phi.
inline CountingFormula previous(CountingFormula f) { return since(Guard::simple(LetterSet::all()), std::move(f)); }
/// Holds exactly at position 1.
inline CountingFormula at_first() { return CountingFormula::negate(previous(top())); }
/// Holds exactly at the last position.
inline CountingFormula at_last() { return CountingFormula::negate(next(top())); }
}  // namespace counting

}  // namespace tlwb
