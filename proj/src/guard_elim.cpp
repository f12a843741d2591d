#include "tlwb/guard_elim.hpp"

#include <boost/integer/common_factor.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>

namespace tlwb {

namespace {

using F = CountingFormula;
using Op = CountingTag::Op;

struct Range {
  BigInt lo = 0;
  std::optional<BigInt> hi;
  bool empty() const { return hi && *hi < lo; }
  bool contains(const BigInt& c) const { return c >= lo && (!hi || c <= *hi); }
};

using RangeConj = std::map<LetterSet, Range>;
using RangeDnf = std::vector<RangeConj>;

bool is_empty_set(const LetterSet& s) { return s.listed().empty() && !s.complemented(); }

Range range_of(const Guard& g) {
  if (g.kind() == Guard::Kind::Simple) return {0, BigInt(0)};
  Range r;
  if (g.lower()) r.lo = g.lower()->strict ? g.lower()->value + 1 : g.lower()->value;
  if (r.lo < 0) r.lo = 0;
  if (g.upper()) r.hi = g.upper()->strict ? g.upper()->value - 1 : g.upper()->value;
  return r;
}

RangeDnf constant(bool v) { return v ? RangeDnf{RangeConj{}} : RangeDnf{}; }

RangeDnf single(const LetterSet& s, const Range& r) {
  if (r.empty()) return {};
  if (is_empty_set(s)) return constant(r.contains(0));
  if (r.lo == 0 && !r.hi) return constant(true);
  return {RangeConj{{s, r}}};
}

RangeDnf disj(RangeDnf a, const RangeDnf& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

RangeDnf conj(const RangeDnf& a, const RangeDnf& b) {
  RangeDnf out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      RangeConj m = x;
      bool ok = true;
      for (const auto& [s, r] : y) {
        auto [it, fresh] = m.emplace(s, r);
        if (fresh) continue;
        Range& cur = it->second;
        cur.lo = std::max(cur.lo, r.lo);
        if (r.hi && (!cur.hi || *r.hi < *cur.hi)) cur.hi = r.hi;
        if (cur.empty()) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(std::move(m));
    }
  }
  return out;
}

RangeDnf to_dnf(const Guard& g, bool negated) {
  using K = Guard::Kind;
  switch (g.kind()) {
    case K::True: return constant(!negated);
    case K::False: return constant(negated);
    case K::Simple:
    case K::Threshold: {
      Range r = range_of(g);
      if (!negated) return single(g.set(), r);
      RangeDnf out;
      if (r.lo > 0) out = disj(out, single(g.set(), {0, r.lo - 1}));
      if (r.hi) out = disj(out, single(g.set(), {*r.hi + 1, std::nullopt}));
      if (r.empty()) out = constant(true);
      return out;
    }
    case K::Modulo: throw SublogicError("modulo constraints are not threshold guards");
    case K::Not: return to_dnf(g.child(0), !negated);
    case K::And:
      return negated ? disj(to_dnf(g.child(0), true), to_dnf(g.child(1), true))
                     : conj(to_dnf(g.child(0), false), to_dnf(g.child(1), false));
    case K::Or:
      return negated ? conj(to_dnf(g.child(0), true), to_dnf(g.child(1), true))
                     : disj(to_dnf(g.child(0), false), to_dnf(g.child(1), false));
  }
  throw std::logic_error("normalize_guard: unknown guard kind");
}

int small_int(const BigInt& v, const char* what) {
  if (v < 0 || v > (1 << 16)) throw std::length_error(std::string(what) + " out of range for unfolding");
  return v.convert_to<int>();
}

// A letter of the formula, or the class of all letters the formula never lists.
struct LetterClass {
  std::optional<Letter> letter;
  bool in(const LetterSet& s) const { return letter ? s.contains(*letter) : s.complemented(); }
};

std::vector<LetterClass> letter_classes(const std::string& known) {
  std::vector<LetterClass> out;
  for (char c : known) out.push_back({c});
  out.push_back({std::nullopt});
  return out;
}

F class_test(const LetterClass& a, const std::string& known) {
  if (a.letter) return F::atom(*a.letter);
  std::vector<F> listed;
  for (char c : known) listed.push_back(F::atom(c));
  return listed.empty() ? F::top() : F::negate(F::disj_all(listed));
}

std::string listed_letters(const std::vector<LetterSet>& sets) {
  std::string s;
  for (const auto& b : sets) s += b.listed();
  return Alphabet(s).letters();
}

F bottom() { return F::bottom(); }

F modal(bool until, Guard g, F body) {
  return until ? counting::until(std::move(g), std::move(body)) : counting::since(std::move(g), std::move(body));
}

F either(const std::vector<F>& parts) { return parts.empty() ? bottom() : F::disj_all(parts); }

// ---------------------------------------------------------------------------------
// BThTL -> InvTL

class InvTlCompiler {
 public:
  F run(const F& f) {
    auto it = memo_.find(f.identity());
    if (it != memo_.end()) return it->second;
    F out = step(f);
    memo_.emplace(f.identity(), out);
    return out;
  }

 private:
  F step(const F& f) {
    switch (f.op()) {
      case Op::Now: throw SublogicError("NOW tests need modulo counting");
      case Op::StrongUntil: throw SublogicError("binary UNTIL is outside BThTL");
      case Op::Until:
      case Op::Since: {
        F body = run(f.child(0));
        const Guard& g = f.guard();
        if (is_simple_guard(g)) return f.with_children({body});
        const bool until = f.op() == Op::Until;
        std::vector<F> parts;
        for (const auto& c : normalize_guard(g)) parts.push_back(ncn(c, body, until));
        return either(parts);
      }
      default: {
        std::vector<F> kids;
        for (const auto& k : f.children()) kids.push_back(run(k));
        return f.with_children(std::move(kids));
      }
    }
  }

  // (AC u BC u CC) U psi == OR_{a in (BC u CC) - AC} (#(all)=0) U (a & (AC u BC-a u CC-a) U psi)
  F ncn(NormalConjunction c, const F& body, bool until) {
    std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.set < y.set; });
    std::string key = std::to_string(reinterpret_cast<std::uintptr_t>(body.identity())) + (until ? "U" : "S");
    for (const auto& k : c) key += k.set.listed() + (k.set.complemented() ? "^" : "") + (k.at_least ? ">" : "=") + k.value.str() + ";";
    auto it = ncn_memo_.find(key);
    if (it != ncn_memo_.end()) return it->second;
    F out = ncn_step(c, body, until);
    ncn_memo_.emplace(std::move(key), out);
    return out;
  }

  F ncn_step(const NormalConjunction& c, const F& body, bool until) {
    std::vector<LetterSet> all, zero, counted;
    for (const auto& k : c) {
      all.push_back(k.set);
      (k.value == 0 && !k.at_least ? zero : counted).push_back(k.set);
    }
    LetterSet everything = LetterSet::none();
    for (const auto& s : all) everything = set_union(everything, s);
    if (counted.empty()) return modal(until, Guard::simple(everything), body);
    const std::string known = listed_letters(all);
    std::vector<F> parts;
    for (const auto& a : letter_classes(known)) {
      bool hits = false, blocked = false;
      for (const auto& s : counted) hits = hits || a.in(s);
      for (const auto& s : zero) blocked = blocked || a.in(s);
      if (!hits || blocked) continue;
      NormalConjunction rest;
      for (const auto& k : c) {
        if (!a.in(k.set)) {
          rest.push_back(k);
        } else if (k.at_least) {
          if (k.value > 1) rest.push_back({k.set, k.value - 1, true});
        } else {
          rest.push_back({k.set, k.value - 1, false});
        }
      }
      parts.push_back(modal(until, Guard::simple(everything), F::conj(class_test(a, known), ncn(rest, body, until))));
    }
    return either(parts);
  }

  std::unordered_map<const void*, F> memo_;
  std::unordered_map<std::string, F> ncn_memo_;
};

// ---------------------------------------------------------------------------------
// BLinTL -> InvModTL

struct Counter {
  std::vector<Guard::Term> terms;
  int modulus = 1;
};

// Guard tree with its constraints numbered.
struct GNode {
  enum Kind { True, False, Count, Mod, Not, And, Or } kind = True;
  int index = -1;
  Range range;
  std::vector<GNode> kids;
};

struct ModAtom {
  int counter = 0;
  int modulus = 2;
  std::vector<bool> residues;
};

class GuardUnfolder {
 public:
  GuardUnfolder(const Guard& g, F body, bool until) : body_(std::move(body)), until_(until) {
    root_ = build(g);
    for (std::size_t l = 0; l < sets_.size(); ++l) {
      int cap = 1;
      for (const auto& [set, r] : count_atoms_) {
        if (set != static_cast<int>(l)) continue;
        cap = std::max(cap, small_int(r.hi ? *r.hi + 1 : r.lo, "threshold constant"));
      }
      caps_.push_back(cap);
    }
    known_ = listed_letters(sets_);
  }

  F run() {
    if (counters_.empty()) return peel_from({});
    std::vector<F> parts;
    std::vector<int> v(counters_.size(), 0);
    while (true) {
      std::vector<F> tests;
      for (std::size_t k = 0; k < counters_.size(); ++k) tests.push_back(now_test(k, {v[k]}));
      F anchor = F::conj_all(tests);
      if (!until_) anchor = counting::previous(anchor);
      memo_.clear();
      F peeled = peel_from(v);
      if (!(peeled == bottom())) parts.push_back(F::conj(anchor, peeled));
      std::size_t k = 0;
      while (k < v.size() && ++v[k] == counters_[k].modulus) v[k++] = 0;
      if (k == v.size()) break;
    }
    return either(parts);
  }

 private:
  GNode build(const Guard& g) {
    using K = Guard::Kind;
    GNode n;
    switch (g.kind()) {
      case K::True: n.kind = GNode::True; break;
      case K::False: n.kind = GNode::False; break;
      case K::Simple:
      case K::Threshold: {
        n.kind = GNode::Count;
        n.range = range_of(g);
        int l = 0;
        while (l < static_cast<int>(sets_.size()) && !(sets_[l] == g.set())) ++l;
        if (l == static_cast<int>(sets_.size())) sets_.push_back(g.set());
        n.index = static_cast<int>(count_atoms_.size());
        count_atoms_.push_back({l, n.range});
        break;
      }
      case K::Modulo: {
        n.kind = GNode::Mod;
        n.index = static_cast<int>(mods_.size());
        std::vector<Guard::Term> terms(g.terms().begin(), g.terms().end());
        const int q = small_int(g.modulus(), "modulus");
        int k = 0;
        while (k < static_cast<int>(counters_.size()) && !(counters_[k].terms == terms)) ++k;
        if (k == static_cast<int>(counters_.size())) counters_.push_back({terms, 1});
        counters_[k].modulus = boost::integer::lcm(counters_[k].modulus, q);
        ModAtom m{k, q, std::vector<bool>(q, false)};
        for (const auto& r : g.residues()) m.residues[r.convert_to<int>()] = true;
        mods_.push_back(std::move(m));
        break;
      }
      case K::Not:
      case K::And:
      case K::Or:
        n.kind = g.kind() == K::Not ? GNode::Not : g.kind() == K::And ? GNode::And : GNode::Or;
        for (const auto& c : g.children()) n.kids.push_back(build(c));
        break;
    }
    return n;
  }

  bool eval(const GNode& n, const std::vector<int>& counts, const std::vector<bool>& mods) const {
    switch (n.kind) {
      case GNode::True: return true;
      case GNode::False: return false;
      case GNode::Count: {
        const auto& [set, r] = count_atoms_[n.index];
        return r.contains(counts[set]);
      }
      case GNode::Mod: return mods[n.index];
      case GNode::Not: return !eval(n.kids[0], counts, mods);
      case GNode::And: return eval(n.kids[0], counts, mods) && eval(n.kids[1], counts, mods);
      case GNode::Or: return eval(n.kids[0], counts, mods) || eval(n.kids[1], counts, mods);
    }
    return false;
  }

  // Constant-folded guard at a count vector; modulo constraints become NOW tests.
  struct Tri {
    int value = 2;  // 0 false, 1 true, 2 formula
    F f = F::top();
  };

  Tri fold(const GNode& n, const std::vector<int>& counts, const std::vector<int>& anchor) {
    switch (n.kind) {
      case GNode::True: return {1};
      case GNode::False: return {0};
      case GNode::Count: return {eval(n, counts, {}) ? 1 : 0};
      case GNode::Mod: {
        const ModAtom& m = mods_[n.index];
        const int Q = counters_[m.counter].modulus;
        std::vector<int> xs;
        for (int x = 0; x < Q; ++x) {
          int d = until_ ? x - anchor[m.counter] : anchor[m.counter] - x;
          if (m.residues[((d % m.modulus) + m.modulus) % m.modulus]) xs.push_back(x);
        }
        if (xs.empty()) return {0};
        if (static_cast<int>(xs.size()) == Q) return {1};
        return {2, now_test(m.counter, xs)};
      }
      case GNode::Not: {
        Tri a = fold(n.kids[0], counts, anchor);
        if (a.value != 2) return {1 - a.value};
        return {2, F::negate(a.f)};
      }
      case GNode::And:
      case GNode::Or: {
        const bool is_and = n.kind == GNode::And;
        Tri a = fold(n.kids[0], counts, anchor);
        if (a.value == (is_and ? 0 : 1)) return a;
        Tri b = fold(n.kids[1], counts, anchor);
        if (b.value == (is_and ? 0 : 1)) return b;
        if (a.value != 2) return b;
        if (b.value != 2) return a;
        return {2, is_and ? F::conj(a.f, b.f) : F::disj(a.f, b.f)};
      }
    }
    return {0};
  }

  F now_test(std::size_t k, const std::vector<int>& residues) const {
    std::vector<BigInt> rs(residues.begin(), residues.end());
    return counting::now(Guard::modulo(counters_[k].terms, std::move(rs), counters_[k].modulus));
  }

  bool satisfiable_at(const std::vector<int>& counts) const {
    const std::size_t m = mods_.size();
    for (std::size_t bits = 0; bits < (std::size_t{1} << m); ++bits) {
      std::vector<bool> vals(m);
      for (std::size_t i = 0; i < m; ++i) vals[i] = (bits >> i) & 1;
      if (eval(root_, counts, vals)) return true;
    }
    return false;
  }

  // Can the guard still hold once more counted letters are read?
  bool possible(const std::vector<int>& counts) {
    auto it = possible_.find(counts);
    if (it != possible_.end()) return it->second;
    bool ok = satisfiable_at(counts);
    for (std::size_t l = 0; !ok && l < counts.size(); ++l) {
      if (counts[l] == caps_[l]) continue;
      std::vector<int> next = counts;
      ++next[l];
      ok = possible(next);
    }
    possible_.emplace(counts, ok);
    return ok;
  }

  F peel_from(const std::vector<int>& anchor) {
    anchor_ = anchor;
    return peel(std::vector<int>(sets_.size(), 0));
  }

  F peel(const std::vector<int>& counts) {
    auto it = memo_.find(counts);
    if (it != memo_.end()) return it->second;
    F out = bottom();
    if (possible(counts)) {
      LetterSet open = LetterSet::none();
      for (std::size_t l = 0; l < sets_.size(); ++l) {
        if (counts[l] < caps_[l]) open = set_union(open, sets_[l]);
      }
      std::vector<F> parts;
      Tri end = fold(root_, counts, anchor_);
      if (end.value == 1) parts.push_back(body_);
      if (end.value == 2) parts.push_back(F::conj(body_, until_ ? counting::previous(end.f) : end.f));
      for (const auto& a : letter_classes(known_)) {
        if (!a.in(open)) continue;
        std::vector<int> next = counts;
        for (std::size_t l = 0; l < sets_.size(); ++l) {
          if (next[l] < caps_[l] && a.in(sets_[l])) ++next[l];
        }
        F rest = peel(next);
        if (rest == bottom()) continue;
        parts.push_back(F::conj(class_test(a, known_), rest));
      }
      if (!parts.empty()) out = modal(until_, Guard::simple(open), either(parts));
    }
    memo_.emplace(counts, out);
    return out;
  }

  F body_;
  bool until_;
  GNode root_;
  std::vector<LetterSet> sets_;
  std::vector<int> caps_;
  std::vector<std::pair<int, Range>> count_atoms_;
  std::vector<ModAtom> mods_;
  std::vector<Counter> counters_;
  std::string known_;
  std::vector<int> anchor_;
  std::map<std::vector<int>, F> memo_;
  std::map<std::vector<int>, bool> possible_;
};

class InvModTlCompiler {
 public:
  explicit InvModTlCompiler(bool allow_binary) : allow_binary_(allow_binary) {}

  F run(const F& f) {
    auto it = memo_.find(f.identity());
    if (it != memo_.end()) return it->second;
    F out = step(f);
    memo_.emplace(f.identity(), out);
    return out;
  }

 private:
  F step(const F& f) {
    if (f.op() == Op::StrongUntil && !allow_binary_) throw SublogicError("binary UNTIL is outside InvModTL");
    if (f.op() != Op::Until && f.op() != Op::Since) {
      std::vector<F> kids;
      for (const auto& k : f.children()) kids.push_back(run(k));
      return f.with_children(std::move(kids));
    }
    const bool until = f.op() == Op::Until;
    F body = run(f.child(0));
    const Guard& g = f.guard();
    using K = Guard::Kind;
    switch (g.kind()) {
      case K::Simple:
      case K::Modulo: return f.with_children({body});
      case K::True: return modal(until, Guard::simple(LetterSet::none()), body);
      case K::False: return bottom();
      case K::Threshold:
        if (!g.upper()) {
          // (t <= #B) U phi == (#B = t) U (phi | F phi)
          const BigInt t = range_of(g).lo;
          F later = F::disj(body, modal(until, Guard::simple(LetterSet::none()), body));
          if (t == 0) return modal(until, Guard::simple(LetterSet::none()), body);
          return GuardUnfolder(Guard::count_equals(g.set(), t), later, until).run();
        }
        break;
      default: break;
    }
    return GuardUnfolder(g, body, until).run();
  }

  bool allow_binary_;
  std::unordered_map<const void*, F> memo_;
};

F now_residue(const LetterSet& b, const BigInt& r, const BigInt& u) {
  return counting::now(Guard::modulo({{1, b}}, {r}, u));
}

class BinaryThresholds {
 public:
  F run(const F& f) {
    auto it = memo_.find(f.identity());
    if (it != memo_.end()) return it->second;
    std::vector<F> kids;
    for (const auto& k : f.children()) kids.push_back(run(k));
    F out = f.with_children(kids);
    if (f.op() == Op::Until && f.guard().kind() == Guard::Kind::Threshold) out = expand(f.guard(), kids[0]);
    memo_.emplace(f.identity(), out);
    return out;
  }

 private:
  static F band(const LetterSet& b, const BigInt& t, const BigInt& u, const F& phi) {
    std::vector<F> parts;
    for (BigInt r = 0; r < u; ++r) {
      F hit = now_residue(b, r + t, u);
      F inner = F::make(Op::StrongUntil, {F::negate(now_residue(b, r, u)), phi});
      F outer = F::make(Op::StrongUntil, {F::negate(hit), F::conj(hit, inner)});
      parts.push_back(F::conj(now_residue(b, r, u), outer));
    }
    return F::disj_all(parts);
  }

  static F expand(const Guard& g, const F& phi) {
    const Range r = range_of(g);
    const LetterSet& b = g.set();
    F eventually = counting::eventually(phi);
    if (r.empty()) return bottom();
    if (!r.hi) {
      if (r.lo == 0) return eventually;
      return band(b, r.lo, r.lo + 1, F::disj(phi, eventually));
    }
    const BigInt u = *r.hi + 1;
    if (r.lo > 0) return band(b, r.lo, u, phi);
    F none = counting::until(Guard::simple(b), phi);
    return u == 1 ? none : F::disj(none, band(b, 1, u, phi));
  }

  std::unordered_map<const void*, F> memo_;
};

class CoreRewriter {
 public:
  F run(const F& f) {
    auto it = memo_.find(f.identity());
    if (it != memo_.end()) return it->second;
    std::vector<F> kids;
    for (const auto& k : f.children()) kids.push_back(run(k));
    F out = step(f, kids);
    memo_.emplace(f.identity(), out);
    return out;
  }

 private:
  static F step(const F& f, std::vector<F>& kids) {
    switch (f.op()) {
      case Op::F: return counting::eventually(kids[0]);
      case Op::X: return counting::next(kids[0]);
      case Op::Y: return counting::previous(kids[0]);
      case Op::P: return counting::once(kids[0]);
      case Op::G: return F::negate(counting::eventually(F::negate(kids[0])));
      case Op::H: return F::negate(counting::once(F::negate(kids[0])));
      case Op::SetUntil: return counting::until(Guard::simple(f.letters().complement()), kids[0]);
      case Op::SetSince: return counting::since(Guard::simple(f.letters().complement()), kids[0]);
      default: return f.with_children(std::move(kids));
    }
  }

  std::unordered_map<const void*, F> memo_;
};

}  // namespace

NormalGuard normalize_guard(const Guard& g) {
  NormalGuard out;
  for (const auto& c : to_dnf(g, false)) {
    NormalGuard expanded{{}};
    for (const auto& [s, r] : c) {
      std::vector<NormalConstraint> choices;
      if (r.hi) {
        for (BigInt v = r.lo; v <= *r.hi; ++v) choices.push_back({s, v, false});
      } else {
        choices.push_back({s, r.lo, true});
      }
      NormalGuard next;
      for (const auto& partial : expanded) {
        for (const auto& k : choices) {
          next.push_back(partial);
          next.back().push_back(k);
        }
      }
      expanded = std::move(next);
    }
    for (auto& e : expanded) {
      if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
    }
  }
  return out;
}

Guard to_guard(const NormalGuard& n) {
  std::optional<Guard> out;
  for (const auto& c : n) {
    std::optional<Guard> term;
    for (const auto& k : c) {
      Guard atom = k.at_least ? Guard::threshold(k.set, Guard::Bound{k.value, false}, std::nullopt)
                              : Guard::count_equals(k.set, k.value);
      term = term ? Guard::conj(*term, atom) : atom;
    }
    Guard t = term ? *term : Guard::truth(true);
    out = out ? Guard::disj(*out, t) : t;
  }
  return out ? *out : Guard::truth(false);
}

LetterSet set_union(const LetterSet& a, const LetterSet& b) {
  auto keep = [](const std::string& from, const std::string& drop, bool inside) {
    std::string out;
    for (char c : from) {
      if ((drop.find(c) != std::string::npos) == inside) out.push_back(c);
    }
    return out;
  };
  if (!a.complemented() && !b.complemented()) return LetterSet(a.listed() + b.listed());
  if (a.complemented() && b.complemented()) return LetterSet(keep(a.listed(), b.listed(), true), true);
  const LetterSet& comp = a.complemented() ? a : b;
  const LetterSet& plain = a.complemented() ? b : a;
  return LetterSet(keep(comp.listed(), plain.listed(), false), true);
}

CountingFormula core_operators(const CountingFormula& f) { return CoreRewriter().run(f); }

CountingFormula bthtl_to_invtl(const CountingFormula& f) { return InvTlCompiler().run(core_operators(f)); }

CountingFormula blintl_to_invmodtl(const CountingFormula& f) {
  return InvModTlCompiler(false).run(core_operators(f));
}

CountingFormula thresholds_to_binary(const CountingFormula& f) { return BinaryThresholds().run(core_operators(f)); }

namespace detail {
CountingFormula eliminate_for_automaton(const CountingFormula& f) { return InvModTlCompiler(true).run(f); }
}  // namespace detail

}  // namespace tlwb
