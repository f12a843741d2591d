#include "tlwb/ranker.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>

#include "tlwb/metrics.hpp"

namespace tlwb {

namespace {

using Op = XyTag::Op;

bool is_modal(Op op) { return !is_boolean_op(op); }

bool can_fail(Op op) { return op != Op::SP && op != Op::EP; }

bool has_negation(const XyFormula& f) {
  if (f.op() == Op::Not || f.op() == Op::Implies) return true;
  for (const auto& k : f.children()) {
    if (has_negation(k)) return true;
  }
  return false;
}

MaybePosition step(const Word& w, Position i, const RankerStep& s) {
  const Position n = w.length();
  switch (s.op) {
    case Op::X:
      for (Position j = i + 1; j <= n; ++j) {
        if (w[j] == s.letter) return j;
      }
      return std::nullopt;
    case Op::XW:
      for (Position j = i; j <= n; ++j) {
        if (w[j] == s.letter) return j;
      }
      return std::nullopt;
    case Op::Y:
      for (Position j = i - 1; j >= 1; --j) {
        if (w[j] == s.letter) return j;
      }
      return std::nullopt;
    case Op::YW:
      for (Position j = i; j >= 1; --j) {
        if (w[j] == s.letter) return j;
      }
      return std::nullopt;
    case Op::Next:
      return i < n ? MaybePosition(i + 1) : std::nullopt;
    case Op::Prev:
      return i > 1 ? MaybePosition(i - 1) : std::nullopt;
    case Op::SP:
      return 1;
    case Op::EP:
      return n;
    default:
      throw std::logic_error("not a ranker step");
  }
}

}  // namespace

Ranker::Ranker(std::vector<RankerStep> steps) : steps_(std::move(steps)) {
  for (const auto& s : steps_) {
    if (!is_modal(s.op)) throw std::invalid_argument("ranker steps must be navigation operators");
  }
}

Ranker Ranker::from_formula(const XyFormula& f) {
  std::vector<RankerStep> steps;
  const XyFormula* cur = &f;
  while (cur->op() != Op::Top) {
    if (!is_modal(cur->op())) throw std::invalid_argument("rankers contain no booleans or letters");
    steps.push_back({cur->op(), cur->letter()});
    cur = &cur->child(0);
  }
  return Ranker(std::move(steps));
}

XyFormula Ranker::to_formula() const {
  XyFormula f = XyFormula::top();
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) f = XyFormula::make(it->op, {f}, it->letter);
  return f;
}

Ranker Ranker::prefix() const {
  return Ranker(std::vector<RankerStep>(steps_.begin(), steps_.end() - (steps_.empty() ? 0 : 1)));
}

Ranker Ranker::then(RankerStep s) const {
  auto steps = steps_;
  steps.push_back(s);
  return Ranker(std::move(steps));
}

Ranker Ranker::compose(const Ranker& next) const {
  auto steps = steps_;
  steps.insert(steps.end(), next.steps_.begin(), next.steps_.end());
  return Ranker(std::move(steps));
}

std::string print_ranker(const Ranker& r) {
  std::string out;
  for (const auto& s : r.steps()) {
    switch (s.op) {
      case Op::X: out += std::string("X{") + s.letter + "} "; break;
      case Op::Y: out += std::string("Y{") + s.letter + "} "; break;
      case Op::XW: out += std::string("XW{") + s.letter + "} "; break;
      case Op::YW: out += std::string("YW{") + s.letter + "} "; break;
      case Op::Next: out += "NEXT "; break;
      case Op::Prev: out += "PREV "; break;
      case Op::SP: out += "SP "; break;
      case Op::EP: out += "EP "; break;
      default: break;
    }
  }
  return out + "TOP";
}

MaybePosition ranker_pos(const Word& w, Position start, const Ranker& r) {
  MaybePosition p = start;
  for (const auto& s : r.steps()) {
    p = step(w, *p, s);
    if (!p) return std::nullopt;
  }
  return p;
}

Ranker context_ranker(const ContextPath<XyTag>& path) {
  std::vector<RankerStep> steps;
  for (const auto& s : path) {
    if (is_modal(s.op)) steps.push_back({s.op, s.letter});
  }
  if (steps.empty()) steps.push_back({Op::SP, 0});
  return Ranker(std::move(steps));
}

std::vector<Ranker> rankerset(const XyFormula& f) {
  std::vector<Ranker> out;
  for (const auto& st : subterms(f)) {
    Ranker r = context_ranker(st.context);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

Prop Prop::truth() { return Prop(); }

Prop Prop::var(int id) {
  Prop p;
  p.kind_ = Kind::Var;
  p.id_ = id;
  return p;
}

Prop Prop::negate(Prop a) {
  Prop p;
  p.kind_ = Kind::Not;
  p.kids_ = {std::move(a)};
  return p;
}

Prop Prop::conj(Prop a, Prop b) {
  Prop p;
  p.kind_ = Kind::And;
  p.kids_ = {std::move(a), std::move(b)};
  return p;
}

Prop Prop::disj(Prop a, Prop b) {
  Prop p;
  p.kind_ = Kind::Or;
  p.kids_ = {std::move(a), std::move(b)};
  return p;
}

Prop Prop::implies(Prop a, Prop b) {
  Prop p;
  p.kind_ = Kind::Implies;
  p.kids_ = {std::move(a), std::move(b)};
  return p;
}

bool Prop::eval(const std::vector<bool>& mu) const {
  switch (kind_) {
    case Kind::True: return true;
    case Kind::Var: return mu.at(static_cast<std::size_t>(id_));
    case Kind::Not: return !kids_[0].eval(mu);
    case Kind::And: return kids_[0].eval(mu) && kids_[1].eval(mu);
    case Kind::Or: return kids_[0].eval(mu) || kids_[1].eval(mu);
    case Kind::Implies: return !kids_[0].eval(mu) || kids_[1].eval(mu);
  }
  return false;
}

std::string Prop::str() const {
  switch (kind_) {
    case Kind::True: return "true";
    case Kind::Var: return "p" + std::to_string(id_ + 1);
    case Kind::Not: return "!" + kids_[0].str();
    case Kind::And: return "(" + kids_[0].str() + " & " + kids_[1].str() + ")";
    case Kind::Or: return "(" + kids_[0].str() + " | " + kids_[1].str() + ")";
    case Kind::Implies: return "(" + kids_[0].str() + " -> " + kids_[1].str() + ")";
  }
  return "?";
}

namespace {

class WitnessBuilder {
 public:
  explicit WitnessBuilder(WitnessSystem& sys) : sys_(sys) {}

  // Numbers atomic occurrences first so their ids are 0..k-1.
  void number_atoms(const XyFormula& f, ContextPath<XyTag>& path) {
    if (f.op() == Op::Top || f.op() == Op::Atom) {
      sys_.bindings.push_back({static_cast<int>(sys_.bindings.size()), context_ranker(path), f});
      return;
    }
    for (std::size_t i = 0; i < f.arity(); ++i) {
      path.push_back({f.op(), f.letter(), i});
      number_atoms(f.child(i), path);
      path.pop_back();
    }
  }

  // Returns (plain skeleton, guarded skeleton).
  std::pair<Prop, Prop> build(const XyFormula& f, ContextPath<XyTag>& path) {
    switch (f.op()) {
      case Op::Top:
      case Op::Atom: {
        Prop p = Prop::var(next_atom_++);
        return {p, p};
      }
      case Op::Not: {
        auto [a, ga] = descend(f, 0, path);
        return {Prop::negate(a), Prop::negate(ga)};
      }
      case Op::And:
      case Op::Or:
      case Op::Implies: {
        auto [a, ga] = descend(f, 0, path);
        auto [b, gb] = descend(f, 1, path);
        if (f.op() == Op::And) return {Prop::conj(a, b), Prop::conj(ga, gb)};
        if (f.op() == Op::Or) return {Prop::disj(a, b), Prop::disj(ga, gb)};
        return {Prop::implies(a, b), Prop::implies(ga, gb)};
      }
      default: {
        auto [a, ga] = descend(f, 0, path);
        if (can_fail(f.op()) && has_negation(f.child(0))) {
          path.push_back({f.op(), f.letter(), 0});
          int id = static_cast<int>(sys_.bindings.size() + sys_.definedness.size());
          sys_.definedness.push_back({id, context_ranker(path)});
          path.pop_back();
          ga = Prop::conj(Prop::var(id), ga);
        }
        return {a, ga};
      }
    }
  }

 private:
  std::pair<Prop, Prop> descend(const XyFormula& f, std::size_t i, ContextPath<XyTag>& path) {
    path.push_back({f.op(), f.letter(), i});
    auto r = build(f.child(i), path);
    path.pop_back();
    return r;
  }

  WitnessSystem& sys_;
  int next_atom_ = 0;
};

}  // namespace

std::vector<bool> WitnessSystem::valuation(const Word& w) const {
  std::vector<bool> mu(bindings.size() + definedness.size(), false);
  for (const auto& b : bindings) {
    MaybePosition p = lpos(w, b.ranker);
    mu[b.id] = p && (b.atom.op() == Op::Top || w[*p] == b.atom.letter());
  }
  for (const auto& d : definedness) mu[d.id] = lpos(w, d.ranker).has_value();
  return mu;
}

WitnessSystem witness_system(const XyFormula& f) {
  WitnessSystem sys;
  WitnessBuilder b(sys);
  ContextPath<XyTag> path;
  b.number_atoms(f, path);
  auto [plain, guarded] = b.build(f, path);
  sys.witness = std::move(plain);
  sys.guarded = std::move(guarded);
  return sys;
}

bool fast_check(const Word& w, const XyFormula& f) {
  WitnessSystem sys = witness_system(f);
  return sys.guarded.eval(sys.valuation(w));
}

std::vector<Position> rankerset_positions(const Word& w, const XyFormula& f) {
  std::vector<Position> keep{1};
  for (const auto& r : rankerset(f)) {
    if (MaybePosition p = lpos(w, r)) keep.push_back(*p);
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  return keep;
}

Word shrink_model(const Word& w, const XyFormula& f) {
  if (!fast_check(w, f)) throw NotAModelError();
  std::string v;
  for (Position p : rankerset_positions(w, f)) v.push_back(w[p]);
  return Word(std::move(v));
}

Alphabet search_alphabet(const XyFormula& f) {
  Alphabet a = letters_of(f);
  if (auto fresh = a.fresh_letter()) a = a.merged(Alphabet(std::string(1, *fresh)));
  return a;
}

std::optional<Word> sat_xy(const XyFormula& f, const SatXyOptions& opts) {
  const Alphabet alpha = search_alphabet(f);
  const int bound = static_cast<int>(size(f));
  const WitnessSystem sys = witness_system(f);
  auto holds = [&](const Word& w) { return sys.guarded.eval(sys.valuation(w)); };

  std::uint64_t total = 0;
  for (int len = 1; len <= bound; ++len) {
    std::uint64_t n = words_of_length(alpha, len);
    total = n > UINT64_MAX - total ? UINT64_MAX : total + n;
  }
  if (opts.randomized && total > opts.max_enumerated) {
    std::mt19937_64 rng(opts.seed);
    std::optional<Word> best;
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
      int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
      if (best && len >= best->length()) continue;
      std::string letters;
      for (int k = 0; k < len; ++k) letters.push_back(alpha[rng() % alpha.size()]);
      Word w(letters);
      if (holds(w)) best = w;
    }
    return best;
  }

  for (int len = 1; len <= bound; ++len) {
    const std::uint64_t n = words_of_length(alpha, len);
    std::uint64_t found = std::numeric_limits<std::uint64_t>::max();
    if (opts.parallel && n >= 4096) {
      const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1024) reduction(min : found)
      for (std::int64_t idx = 0; idx < count; ++idx) {
        if (static_cast<std::uint64_t>(idx) < found && holds(nth_word(alpha, len, static_cast<std::uint64_t>(idx)))) {
          found = static_cast<std::uint64_t>(idx);
        }
      }
    } else {
      for (std::uint64_t idx = 0; idx < n; ++idx) {
        if (holds(nth_word(alpha, len, idx))) {
          found = idx;
          break;
        }
      }
    }
    if (found != std::numeric_limits<std::uint64_t>::max()) return nth_word(alpha, len, found);
  }
  return std::nullopt;
}

}  // namespace tlwb
