#include "tlwb/desugar.hpp"

namespace tlwb {

namespace {

template <class Tag>
class Desugarer {
 public:
  using F = Formula<Tag>;
  using Op = typename Tag::Op;

  explicit Desugarer(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  F run(const F& f) {
    std::vector<F> kids;
    kids.reserve(f.arity());
    for (const auto& k : f.children()) kids.push_back(run(k));

    switch (f.op()) {
      case Op::And:
        return F::negate(F::disj(F::negate(kids[0]), F::negate(kids[1])));
      case Op::Implies:
        return F::disj(F::negate(kids[0]), kids[1]);
      default:
        break;
    }
    if constexpr (std::is_same_v<Tag, LtlTag>) return ltl_step(f, kids);
    if constexpr (std::is_same_v<Tag, UitlTag>) return uitl_step(f, kids);
    if constexpr (std::is_same_v<Tag, CountingTag>) return counting_step(f, kids);
    return f.with_children(std::move(kids));
  }

 private:
  F ltl_step(const F& f, std::vector<F>& kids) {
    using ltl::Op;
    switch (f.op()) {
      case Op::X: return ltl::U(F::bottom(), kids[0]);
      case Op::Y: return ltl::S(F::bottom(), kids[0]);
      case Op::F: return ltl::U(F::top(), kids[0]);
      case Op::P: return F::disj(kids[0], ltl::S(F::top(), kids[0]));
      case Op::G: return F::negate(ltl::U(F::top(), F::negate(kids[0])));
      case Op::H: {
        F neg = F::negate(kids[0]);
        return F::negate(F::disj(neg, ltl::S(F::top(), neg)));
      }
      default:
        return f.with_children(std::move(kids));
    }
  }

  F uitl_step(const F& f, std::vector<F>& kids) {
    using uitl::Op;
    if (f.op() != Op::Alo) return f.with_children(std::move(kids));
    // Letters forbidden strictly inside the interval.
    std::string excluded;
    if (f.letters().complemented()) {
      excluded = f.letters().listed();
    } else {
      for (char c : alphabet_.letters()) {
        if (!f.letters().contains(c)) excluded.push_back(c);
      }
    }
    if (excluded.empty()) return F::top();
    std::vector<F> witnesses;
    for (char b : excluded) {
      F inside = uitl::first(F::top(), b, F::top());
      witnesses.push_back(uitl::unary(Op::OPlus, uitl::unary(Op::OMinus, inside)));
    }
    return F::disj(F::disj(uitl::pt(), uitl::unit()), F::negate(F::disj_all(witnesses)));
  }

  F counting_step(const F& f, std::vector<F>& kids) {
    using counting::Op;
    switch (f.op()) {
      case Op::F: return counting::eventually(kids[0]);
      case Op::X: return counting::next(kids[0]);
      case Op::Y: return counting::previous(kids[0]);
      case Op::P: return counting::once(kids[0]);
      case Op::G: return F::negate(counting::eventually(F::negate(kids[0])));
      case Op::H: return F::negate(counting::once(F::negate(kids[0])));
      case Op::SetUntil: return counting::until(Guard::simple(f.letters().complement()), kids[0]);
      case Op::SetSince: return counting::since(Guard::simple(f.letters().complement()), kids[0]);
      case Op::Now: return expand_now(f.guard());
      default:
        return f.with_children(std::move(kids));
    }
  }

  // Now g at i counts positions 1..i. At i = 1 that is the first letter alone; for
  // i > 1 it is weight(w[1]) + interior(1, i) + weight(w[i]).
  F expand_now(const Guard& g) {
    const BigInt& q = g.modulus();
    auto shifted = [&](const BigInt& delta) {
      std::vector<BigInt> rs;
      for (const auto& r : g.residues()) rs.push_back(r - delta);
      return Guard::modulo({g.terms().begin(), g.terms().end()}, std::move(rs), q);
    };
    auto in_residues = [&](const BigInt& v) {
      BigInt m = floor_mod(v, q);
      for (const auto& r : g.residues()) {
        if (r == m) return true;
      }
      return false;
    };
    F first = counting::at_first();
    std::vector<F> at_one;
    for (char a : alphabet_.letters()) {
      if (in_residues(g.weight(a))) at_one.push_back(F::atom(a));
    }
    std::vector<F> cases{F::conj(first, F::disj_all(at_one))};
    for (char a : alphabet_.letters()) {
      for (char b : alphabet_.letters()) {
        F anchored = counting::since(shifted(g.weight(a) + g.weight(b)), F::conj(F::atom(a), first));
        cases.push_back(F::conj(F::atom(b), anchored));
      }
    }
    return run(F::disj_all(cases));
  }

  Alphabet alphabet_;
};

}  // namespace

template <class Tag>
Formula<Tag> desugar(const Formula<Tag>& f, const Alphabet& alphabet) {
  Desugarer<Tag> d(alphabet.empty() ? letters_of(f) : alphabet);
  return d.run(f);
}

template XyFormula desugar(const XyFormula&, const Alphabet&);
template UitlFormula desugar(const UitlFormula&, const Alphabet&);
template LtlFormula desugar(const LtlFormula&, const Alphabet&);
template AtNextFormula desugar(const AtNextFormula&, const Alphabet&);
template CountingFormula desugar(const CountingFormula&, const Alphabet&);

}  // namespace tlwb
