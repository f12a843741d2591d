#include "tlwb/eval.hpp"

#include <map>
#include <tuple>
#include <unordered_map>

namespace tlwb {

namespace {

using Sat = std::vector<bool>;

// Bottom-up satisfaction vectors, shared subterms computed once.
template <class Tag, class Derived>
class PointEvaluator {
 public:
  explicit PointEvaluator(const Word& w) : w_(w), n_(w.length()) {}

  const Sat& sat(const Formula<Tag>& f) {
    auto it = memo_.find(f.identity());
    if (it != memo_.end()) return it->second;
    Sat s = compute(f);
    return memo_.emplace(f.identity(), std::move(s)).first->second;
  }

 protected:
  Sat compute(const Formula<Tag>& f) {
    using Op = typename Tag::Op;
    Sat out(n_ + 1, false);
    switch (f.op()) {
      case Op::Top:
        for (Position i = 1; i <= n_; ++i) out[i] = true;
        return out;
      case Op::Atom:
        for (Position i = 1; i <= n_; ++i) out[i] = w_[i] == f.letter();
        return out;
      case Op::Not: {
        const Sat& a = sat(f.child(0));
        for (Position i = 1; i <= n_; ++i) out[i] = !a[i];
        return out;
      }
      case Op::And:
      case Op::Or:
      case Op::Implies: {
        const Sat& a = sat(f.child(0));
        const Sat& b = sat(f.child(1));
        for (Position i = 1; i <= n_; ++i) {
          if (f.op() == Op::And) out[i] = a[i] && b[i];
          else if (f.op() == Op::Or) out[i] = a[i] || b[i];
          else out[i] = !a[i] || b[i];
        }
        return out;
      }
      default:
        return static_cast<Derived*>(this)->modal(f);
    }
  }

  // First position >= from (forward) or <= from (backward) in `s`.
  MaybePosition scan_forward(const Sat& s, Position from) const {
    for (Position j = std::max(from, 1); j <= n_; ++j) {
      if (s[j]) return j;
    }
    return std::nullopt;
  }
  MaybePosition scan_backward(const Sat& s, Position from) const {
    for (Position j = std::min(from, n_); j >= 1; --j) {
      if (s[j]) return j;
    }
    return std::nullopt;
  }

  const Word& w_;
  Position n_;
  std::unordered_map<const void*, Sat> memo_;
};

class XyEvaluator : public PointEvaluator<XyTag, XyEvaluator> {
 public:
  using PointEvaluator::PointEvaluator;

  Sat modal(const XyFormula& f) {
    using Op = XyTag::Op;
    const Sat& body = sat(f.child(0));
    Sat letter(n_ + 1, false);
    for (Position i = 1; i <= n_; ++i) letter[i] = w_[i] == f.letter();
    Sat out(n_ + 1, false);
    for (Position i = 1; i <= n_; ++i) {
      MaybePosition j;
      switch (f.op()) {
        case Op::X: j = scan_forward(letter, i + 1); break;
        case Op::XW: j = scan_forward(letter, i); break;
        case Op::Y: j = scan_backward(letter, i - 1); break;
        case Op::YW: j = scan_backward(letter, i); break;
        case Op::Next: if (i < n_) j = i + 1; break;
        case Op::Prev: if (i > 1) j = i - 1; break;
        case Op::SP: j = 1; break;
        case Op::EP: j = n_; break;
        default: break;
      }
      out[i] = j && body[*j];
    }
    return out;
  }
};

class AtNextEvaluator : public PointEvaluator<AtNextTag, AtNextEvaluator> {
 public:
  using PointEvaluator::PointEvaluator;

  Sat modal(const AtNextFormula& f) {
    using Op = AtNextTag::Op;
    Sat out(n_ + 1, false);
    if (f.op() == Op::SP || f.op() == Op::EP) {
      const Sat& body = sat(f.child(0));
      bool v = body[f.op() == Op::SP ? 1 : n_];
      for (Position i = 1; i <= n_; ++i) out[i] = v;
      return out;
    }
    const Sat& guard = sat(f.child(0));
    const Sat& body = sat(f.child(1));
    for (Position i = 1; i <= n_; ++i) {
      MaybePosition j = f.op() == Op::X ? scan_forward(guard, i + 1) : scan_backward(guard, i - 1);
      out[i] = j && body[*j];
    }
    return out;
  }
};

class CountingEvaluator : public PointEvaluator<CountingTag, CountingEvaluator> {
 public:
  using PointEvaluator::PointEvaluator;

  Sat modal(const CountingFormula& f) {
    using Op = CountingTag::Op;
    Sat out(n_ + 1, false);
    switch (f.op()) {
      case Op::Now:
        for (Position i = 1; i <= n_; ++i) out[i] = eval_guard_range(w_, 1, i, f.guard());
        return out;
      case Op::Until:
      case Op::Since:
        return guarded(sat(f.child(0)), f.guard(), f.op() == Op::Until);
      case Op::StrongUntil: {
        const Sat& a = sat(f.child(0));
        const Sat& b = sat(f.child(1));
        for (Position i = 1; i <= n_; ++i) {
          for (Position j = i + 1; j <= n_; ++j) {
            if (b[j]) {
              out[i] = true;
              break;
            }
            if (!a[j]) break;
          }
        }
        return out;
      }
      case Op::F:
      case Op::G:
      case Op::X:
      case Op::Y:
      case Op::P:
      case Op::H: {
        const Sat& body = sat(f.child(0));
        for (Position i = 1; i <= n_; ++i) {
          bool any_after = false, all_after = true, any_before = false, all_before = true;
          for (Position j = i + 1; j <= n_; ++j) {
            any_after = any_after || body[j];
            all_after = all_after && body[j];
          }
          for (Position j = i - 1; j >= 1; --j) {
            any_before = any_before || body[j];
            all_before = all_before && body[j];
          }
          switch (f.op()) {
            case Op::F: out[i] = any_after; break;
            case Op::G: out[i] = all_after; break;
            case Op::X: out[i] = i < n_ && body[i + 1]; break;
            case Op::Y: out[i] = i > 1 && body[i - 1]; break;
            case Op::P: out[i] = any_before; break;
            default: out[i] = all_before; break;
          }
        }
        return out;
      }
      case Op::SetUntil:
      case Op::SetSince:
        return guarded(sat(f.child(0)), Guard::simple(f.letters().complement()), f.op() == Op::SetUntil);
      default:
        return out;
    }
  }

 private:
  Sat guarded(const Sat& body, const Guard& g, bool future) const {
    Sat out(n_ + 1, false);
    for (Position i = 1; i <= n_; ++i) {
      if (future) {
        for (Position j = i + 1; j <= n_ && !out[i]; ++j) out[i] = body[j] && eval_guard(w_, {i, j}, g);
      } else {
        for (Position j = i - 1; j >= 1 && !out[i]; --j) out[i] = body[j] && eval_guard(w_, {j, i}, g);
      }
    }
    return out;
  }
};

class UitlEvaluator {
 public:
  explicit UitlEvaluator(const Word& w) : w_(w), n_(w.length()) {}

  bool eval(Position i, Position j, const UitlFormula& f) {
    auto key = std::make_tuple(f.identity(), i, j);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool v = compute(i, j, f);
    memo_.emplace(key, v);
    return v;
  }

 private:
  bool compute(Position i, Position j, const UitlFormula& f) {
    using Op = UitlTag::Op;
    Letter a = f.letter();
    switch (f.op()) {
      case Op::Top: return true;
      case Op::Atom: return i == j && w_[i] == a;
      case Op::Not: return !eval(i, j, f.child(0));
      case Op::And: return eval(i, j, f.child(0)) && eval(i, j, f.child(1));
      case Op::Or: return eval(i, j, f.child(0)) || eval(i, j, f.child(1));
      case Op::Implies: return !eval(i, j, f.child(0)) || eval(i, j, f.child(1));
      case Op::Pt: return i == j;
      case Op::Unit: return j == i + 1;
      case Op::Alo:
        for (Position k = i + 1; k < j; ++k) {
          if (!f.letters().contains(w_[k])) return false;
        }
        return true;
      case Op::SP: return eval(i, i, f.child(0));
      case Op::EP: return eval(j, j, f.child(0));
      case Op::First: {
        for (Position k = i; k <= j; ++k) {
          if (w_[k] == a) return eval(i, k, f.child(0)) && eval(k, j, f.child(1));
        }
        return false;
      }
      case Op::Last: {
        for (Position k = j; k >= i; --k) {
          if (w_[k] == a) return eval(i, k, f.child(0)) && eval(k, j, f.child(1));
        }
        return false;
      }
      case Op::FirstPast: {
        for (Position k = i; k <= n_; ++k) {
          if (w_[k] == a) return k >= j && eval(i, k, f.child(0)) && eval(j, k, f.child(1));
        }
        return false;
      }
      case Op::LastMinus: {
        for (Position k = j; k >= 1; --k) {
          if (w_[k] == a) return k <= i && eval(k, i, f.child(0)) && eval(k, j, f.child(1));
        }
        return false;
      }
      case Op::OPlus: return i < j && eval(i + 1, j, f.child(0));
      case Op::OMinus: return i < j && eval(i, j - 1, f.child(0));
      case Op::OPlusBar: return j < n_ && eval(i, j + 1, f.child(0));
      case Op::OMinusBar: return i > 1 && eval(i - 1, j, f.child(0));
    }
    return false;
  }

  const Word& w_;
  Position n_;
  std::map<std::tuple<const void*, Position, Position>, bool> memo_;
};

bool ltl_rec(const Word& w, Position i, const LtlFormula& f) {
  using Op = LtlTag::Op;
  const Position n = w.length();
  switch (f.op()) {
    case Op::Top: return true;
    case Op::Atom: return w[i] == f.letter();
    case Op::Not: return !ltl_rec(w, i, f.child(0));
    case Op::And: return ltl_rec(w, i, f.child(0)) && ltl_rec(w, i, f.child(1));
    case Op::Or: return ltl_rec(w, i, f.child(0)) || ltl_rec(w, i, f.child(1));
    case Op::Implies: return !ltl_rec(w, i, f.child(0)) || ltl_rec(w, i, f.child(1));
    case Op::X: return i < n && ltl_rec(w, i + 1, f.child(0));
    case Op::Y: return i > 1 && ltl_rec(w, i - 1, f.child(0));
    case Op::F:
      for (Position m = i + 1; m <= n; ++m) {
        if (ltl_rec(w, m, f.child(0))) return true;
      }
      return false;
    case Op::G:
      for (Position m = i + 1; m <= n; ++m) {
        if (!ltl_rec(w, m, f.child(0))) return false;
      }
      return true;
    case Op::P:
      for (Position m = i; m >= 1; --m) {
        if (ltl_rec(w, m, f.child(0))) return true;
      }
      return false;
    case Op::H:
      for (Position m = i; m >= 1; --m) {
        if (!ltl_rec(w, m, f.child(0))) return false;
      }
      return true;
    case Op::Until:
      for (Position m = i + 1; m <= n; ++m) {
        if (ltl_rec(w, m, f.child(1))) return true;
        if (!ltl_rec(w, m, f.child(0))) return false;
      }
      return false;
    case Op::Since:
      for (Position m = i - 1; m >= 1; --m) {
        if (ltl_rec(w, m, f.child(1))) return true;
        if (!ltl_rec(w, m, f.child(0))) return false;
      }
      return false;
  }
  return false;
}

}  // namespace

bool eval_guard_range(const Word& w, Position from, Position to, const Guard& g) {
  using K = Guard::Kind;
  switch (g.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Simple: return count_letters(w, g.set(), from, to) == 0;
    case K::Threshold: return g.admits_count(count_letters(w, g.set(), from, to));
    case K::Modulo: {
      BigInt r = g.residue_of(w, from, to);
      for (const auto& x : g.residues()) {
        if (x == r) return true;
      }
      return false;
    }
    case K::Not: return !eval_guard_range(w, from, to, g.child(0));
    case K::And: return eval_guard_range(w, from, to, g.child(0)) && eval_guard_range(w, from, to, g.child(1));
    case K::Or: return eval_guard_range(w, from, to, g.child(0)) || eval_guard_range(w, from, to, g.child(1));
  }
  return false;
}

bool eval_guard(const Word& w, Interval iv, const Guard& g) {
  return eval_guard_range(w, iv.lo + 1, iv.hi - 1, g);
}

bool eval_ltl(const Word& w, Position i, const LtlFormula& f) { return ltl_rec(w, i, f); }

std::vector<bool> satisfaction_set(const Word& w, const LtlFormula& f) {
  std::vector<bool> out(w.size() + 1, false);
  for (Position i = 1; i <= w.length(); ++i) out[i] = ltl_rec(w, i, f);
  return out;
}

std::vector<bool> satisfaction_set(const Word& w, const XyFormula& f) { return XyEvaluator(w).sat(f); }
std::vector<bool> satisfaction_set(const Word& w, const AtNextFormula& f) { return AtNextEvaluator(w).sat(f); }
std::vector<bool> satisfaction_set(const Word& w, const CountingFormula& f) { return CountingEvaluator(w).sat(f); }

bool eval_xy(const Word& w, Position i, const XyFormula& f) { return XyEvaluator(w).sat(f)[i]; }
bool eval_atnext(const Word& w, Position i, const AtNextFormula& f) { return AtNextEvaluator(w).sat(f)[i]; }
bool eval_blintl(const Word& w, Position i, const CountingFormula& f) { return CountingEvaluator(w).sat(f)[i]; }

bool eval_uitl(const Word& w, Interval iv, const UitlFormula& f) {
  return UitlEvaluator(w).eval(iv.lo, iv.hi, f);
}

}  // namespace tlwb
