#include "tlwb/automaton.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "tlwb/eval.hpp"
#include "tlwb/guard_elim.hpp"
#include "tlwb/metrics.hpp"
#include "tlwb/syntax.hpp"

namespace tlwb {

namespace detail {
CountingFormula eliminate_for_automaton(const CountingFormula& f);
}

namespace {

using F = CountingFormula;
using Op = CountingTag::Op;

// Structural hash-consing of a formula DAG: equal subformulas share one id.
class Interner {
 public:
  int add(const F& f) {
    auto hit = by_identity_.find(f.identity());
    if (hit != by_identity_.end()) return hit->second;
    std::ostringstream key;
    key << static_cast<int>(f.op()) << ':' << static_cast<int>(f.letter()) << ':' << print_letter_set(f.letters());
    if (f.has_guard()) key << ':' << print_guard(f.guard());
    for (const auto& k : f.children()) key << ',' << add(k);
    auto [it, fresh] = by_key_.emplace(key.str(), static_cast<int>(formulas_.size()));
    if (fresh) formulas_.push_back(f);
    by_identity_.emplace(f.identity(), it->second);
    return it->second;
  }

  const std::vector<F>& formulas() const { return formulas_; }
  std::size_t size() const { return formulas_.size(); }
  const F& operator[](std::size_t i) const { return formulas_[i]; }

 private:
  std::unordered_map<const void*, int> by_identity_;
  std::unordered_map<std::string, int> by_key_;
  std::vector<F> formulas_;
};

F now_marker(const Guard& g, const BigInt& r) {
  return counting::now(Guard::modulo({g.terms().begin(), g.terms().end()}, {r}, g.modulus()));
}

int to_int(const BigInt& v, const char* what) {
  if (v < 0 || v > (1 << 16)) throw std::length_error(std::string(what) + " too large for the automaton");
  return v.convert_to<int>();
}

int mod(int x, int q) { return ((x % q) + q) % q; }

}  // namespace

std::vector<CountingFormula> closure(const CountingFormula& f) {
  Interner in;
  in.add(core_operators(f));
  for (std::size_t i = 0; i < in.size(); ++i) {
    const F g = in[i];
    if (g.op() != Op::Until && g.op() != Op::Since) continue;
    const Guard& guard = g.guard();
    const F& phi = g.child(0);
    auto wrap = [&](F x) { return g.op() == Op::Until ? counting::eventually(x) : counting::once(x); };
    if (guard.kind() == Guard::Kind::Modulo) {
      for (BigInt r = 0; r < guard.modulus(); ++r) {
        F marker = now_marker(guard, r);
        in.add(marker);
        in.add(wrap(F::conj(phi, marker)));
      }
    } else if (guard.kind() == Guard::Kind::Threshold && g.op() == Op::Until) {
      BigInt u = guard.upper() ? (guard.upper()->strict ? guard.upper()->value : guard.upper()->value + 1)
                               : (guard.lower() ? guard.lower()->value + (guard.lower()->strict ? 2 : 1) : BigInt(1));
      if (u < 2) u = 2;
      const Guard counter = Guard::modulo({{1, guard.set()}}, {0}, u);
      for (BigInt r = 0; r < u; ++r) {
        for (BigInt s = 0; s < u; ++s) {
          F marker_s = now_marker(counter, s);
          F later = counting::eventually(F::conj(phi, marker_s));
          F marker_r = now_marker(counter, r);
          in.add(F::make(Op::StrongUntil, {F::negate(marker_r), F::conj(marker_r, later)}));
        }
      }
    }
  }
  const std::size_t positive = in.size();
  for (std::size_t i = 0; i < positive; ++i) {
    if (in[i].op() != Op::Not) in.add(F::negate(in[i]));
  }
  return in.formulas();
}

std::size_t counter_markers(const std::vector<CountingFormula>& cl, const Guard& constraint) {
  std::size_t n = 0;
  for (const auto& f : cl) {
    if (f.op() != Op::Now) continue;
    const Guard& g = f.guard();
    if (g.modulus() == constraint.modulus() && g.residues().size() == 1 &&
        std::equal(g.terms().begin(), g.terms().end(), constraint.terms().begin(), constraint.terms().end())) {
      ++n;
    }
  }
  return n;
}

// ---------------------------------------------------------------------------------

struct FormulaAutomaton::Impl {
  enum class Kind { Top, Atom, Not, And, Or, Implies, Now, Until, Since, ModUntil, ModSince, Strong };

  struct Node {
    Kind kind = Kind::Top;
    Letter letter = 0;
    int a = -1, b = -1;
    int counter = -1;
    int modulus = 1;
    std::vector<bool> residues;
    std::vector<bool> in_set;      // per alphabet letter, simple guards
    std::vector<int> weight;       // per alphabet letter, modulo guards
    int slot = -1;
  };

  CountingFormula compiled = CountingFormula::top();
  Alphabet alphabet;
  AutomatonOptions opts;
  Interner interner;
  std::vector<Node> nodes;
  std::vector<GlobalCounter> counters;
  std::vector<std::vector<int>> counter_weight;  // [counter][letter index]
  std::vector<bool> slot_is_until;
  int root = 0;

  std::vector<Atom> atoms;
  std::vector<std::vector<char>> values;
  std::unordered_map<std::string, AtomId> store;
  std::unordered_map<std::uint64_t, std::vector<AtomId>> succ;
  std::unordered_map<int, std::vector<AtomId>> initial;

  int letter_index(Letter c) const {
    auto p = alphabet.letters().find(c);
    if (p == std::string::npos) throw std::invalid_argument(std::string("letter '") + c + "' not in the automaton alphabet");
    return static_cast<int>(p);
  }

  int counter_of(const Guard& g) {
    std::vector<Guard::Term> terms(g.terms().begin(), g.terms().end());
    const int q = to_int(g.modulus(), "modulus");
    for (std::size_t k = 0; k < counters.size(); ++k) {
      if (counters[k].terms == terms && counters[k].modulus == q) return static_cast<int>(k);
    }
    counters.push_back({terms, q});
    std::vector<int> w;
    for (char c : alphabet.letters()) w.push_back(mod(to_int(floor_mod(g.weight(c), g.modulus()), "weight"), q));
    counter_weight.push_back(std::move(w));
    return static_cast<int>(counters.size() - 1);
  }

  void build() {
    root = interner.add(compiled);
    for (std::size_t i = 0; i < interner.size(); ++i) {
      const F& f = interner[i];
      Node n;
      auto kid = [&](std::size_t k) { return interner.add(f.child(k)); };
      auto residue_mask = [&](const Guard& g) {
        std::vector<bool> m(to_int(g.modulus(), "modulus"), false);
        for (const auto& r : g.residues()) m[r.convert_to<int>()] = true;
        return m;
      };
      auto slots = [&](int count, bool until) {
        n.slot = static_cast<int>(slot_is_until.size());
        for (int s = 0; s < count; ++s) slot_is_until.push_back(until);
      };
      switch (f.op()) {
        case Op::Top: n.kind = Kind::Top; break;
        case Op::Atom: n.kind = Kind::Atom; n.letter = f.letter(); break;
        case Op::Not: n.kind = Kind::Not; n.a = kid(0); break;
        case Op::And: n.kind = Kind::And; n.a = kid(0); n.b = kid(1); break;
        case Op::Or: n.kind = Kind::Or; n.a = kid(0); n.b = kid(1); break;
        case Op::Implies: n.kind = Kind::Implies; n.a = kid(0); n.b = kid(1); break;
        case Op::Now:
          n.kind = Kind::Now;
          n.counter = counter_of(f.guard());
          n.residues = residue_mask(f.guard());
          break;
        case Op::StrongUntil:
          n.kind = Kind::Strong;
          n.a = kid(0);
          n.b = kid(1);
          slots(1, true);
          break;
        case Op::Until:
        case Op::Since: {
          const bool until = f.op() == Op::Until;
          const Guard& g = f.guard();
          n.a = kid(0);
          if (g.kind() == Guard::Kind::Simple) {
            n.kind = until ? Kind::Until : Kind::Since;
            for (char c : alphabet.letters()) n.in_set.push_back(g.set().contains(c));
            slots(1, until);
          } else if (g.kind() == Guard::Kind::Modulo) {
            n.kind = until ? Kind::ModUntil : Kind::ModSince;
            n.counter = counter_of(g);
            n.modulus = to_int(g.modulus(), "modulus");
            n.residues = residue_mask(g);
            for (char c : alphabet.letters()) n.weight.push_back(to_int(floor_mod(g.weight(c), g.modulus()), "weight"));
            slots(n.modulus, until);
          } else {
            throw std::logic_error("automaton expects simple or modulo guards");
          }
          break;
        }
        default: throw std::logic_error("automaton expects core operators");
      }
      nodes.push_back(std::move(n));
    }
  }

  std::vector<char> evaluate(const Atom& at) const {
    std::vector<char> v(nodes.size(), 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) v[i] = value_of(i, at, v);
    return v;
  }

  char value_of(std::size_t i, const Atom& at, const std::vector<char>& v) const {
    const Node& n = nodes[i];
    switch (n.kind) {
      case Kind::Top: return 1;
      case Kind::Atom: return at.letter == n.letter;
      case Kind::Not: return !v[n.a];
      case Kind::And: return v[n.a] && v[n.b];
      case Kind::Or: return v[n.a] || v[n.b];
      case Kind::Implies: return !v[n.a] || v[n.b];
      case Kind::Now: return n.residues[at.residues[n.counter]];
      case Kind::Until:
      case Kind::Since:
      case Kind::Strong: return at.obligations[n.slot];
      case Kind::ModUntil:
      case Kind::ModSince:
        for (int r = 0; r < n.modulus; ++r) {
          if (n.residues[r] && at.obligations[n.slot + r]) return 1;
        }
        return 0;
    }
    return 0;
  }

  AtomId intern(Atom at) {
    std::string key(1, at.letter);
    for (int r : at.residues) key += std::to_string(r) + ',';
    key.push_back('|');
    for (bool b : at.obligations) key.push_back(b ? '1' : '0');
    auto it = store.find(key);
    if (it != store.end()) return it->second;
    if (atoms.size() >= opts.budget) throw ResourceLimitError(opts.budget);
    const auto id = static_cast<AtomId>(atoms.size());
    values.push_back(evaluate(at));
    atoms.push_back(std::move(at));
    store.emplace(std::move(key), id);
    return id;
  }

  // Depth-first assignment of the next atom's obligations, node by node in
  // subformula order. `prev` is null for position 1.
  struct Search {
    const Impl& m;
    const Atom* prev;
    const std::vector<char>* prev_values;
    int li;
    Atom next;
    std::vector<char> v;
    std::vector<Atom> out;
    std::size_t leaves = 0;

    void go(std::size_t i) {
      if (i == m.nodes.size()) {
        if (++leaves > 16 * m.opts.budget || out.size() + m.atoms.size() >= m.opts.budget) {
          throw ResourceLimitError(m.opts.budget);
        }
        if (prev || v[m.root]) out.push_back(next);
        return;
      }
      const Node& n = m.nodes[i];
      switch (n.kind) {
        case Kind::Since: {
          bool val = false;
          if (prev) {
            const int pl = m.letter_index(prev->letter);
            val = (*prev_values)[n.a] || (!n.in_set[pl] && prev->obligations[n.slot]);
          }
          next.obligations[n.slot] = val;
          v[i] = val;
          return go(i + 1);
        }
        case Kind::ModSince: {
          for (int r = 0; r < n.modulus; ++r) {
            bool val = false;
            if (prev) {
              const int pl = m.letter_index(prev->letter);
              val = ((*prev_values)[n.a] && r == 0) || prev->obligations[n.slot + mod(r - n.weight[pl], n.modulus)];
            }
            next.obligations[n.slot + r] = val;
          }
          v[i] = m.value_of(i, next, v);
          return go(i + 1);
        }
        case Kind::Until:
        case Kind::Strong:
        case Kind::ModUntil: return branch(i);
        default:
          v[i] = m.value_of(i, next, v);
          return go(i + 1);
      }
    }

    // Each slot of the node is forced to a value or left free (-1).
    void branch(std::size_t i) {
      const Node& n = m.nodes[i];
      const int count = n.kind == Kind::ModUntil ? n.modulus : 1;
      std::vector<int> fixed(count, -1);
      if (prev) {
        const auto& obl = prev->obligations;
        if (n.kind == Kind::Until) {
          const bool target = obl[n.slot];
          const bool phi = v[n.a];
          if (n.in_set[li]) {
            if (target != phi) return;
          } else if (phi) {
            if (!target) return;
          } else {
            fixed[0] = target;
          }
        } else if (n.kind == Kind::Strong) {
          const bool target = obl[n.slot];
          if (v[n.b]) {
            if (!target) return;
          } else if (v[n.a]) {
            fixed[0] = target;
          } else if (target) {
            return;
          }
        } else {
          const bool phi = v[n.a];
          for (int r = 0; r < n.modulus; ++r) {
            const bool target = obl[n.slot + r];
            const int idx = mod(r - n.weight[li], n.modulus);
            if (r == 0 && phi) {
              if (!target) return;
            } else {
              fixed[idx] = target;
            }
          }
        }
      }
      std::vector<int> free;
      for (int s = 0; s < count; ++s) {
        if (fixed[s] < 0) free.push_back(s);
        else next.obligations[n.slot + s] = fixed[s];
      }
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
        for (std::size_t k = 0; k < free.size(); ++k) next.obligations[n.slot + free[k]] = (bits >> k) & 1;
        v[i] = m.value_of(i, next, v);
        go(i + 1);
      }
    }
  };

  std::vector<AtomId> expand(const Atom* prev, Letter letter) {
    Search s{*this, prev, nullptr, letter_index(letter), {}, std::vector<char>(nodes.size(), 0), {}};
    s.next.letter = letter;
    s.next.obligations.assign(slot_is_until.size(), false);
    s.next.residues.resize(counters.size());
    for (std::size_t k = 0; k < counters.size(); ++k) {
      const int base = prev ? prev->residues[k] : 0;
      s.next.residues[k] = mod(base + counter_weight[k][s.li], counters[k].modulus);
    }
    std::vector<char> pv;
    if (prev) {
      pv = values[&*prev - atoms.data()];
      s.prev_values = &pv;
    }
    s.go(0);
    std::vector<AtomId> ids;
    for (auto& a : s.out) ids.push_back(intern(std::move(a)));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  }
};

FormulaAutomaton::FormulaAutomaton(const CountingFormula& f, Alphabet alphabet, AutomatonOptions opts)
    : impl_(std::make_unique<Impl>()) {
  CountingFormula core = core_operators(f);
  if (opts.direct_thresholds) core = thresholds_to_binary(core);
  impl_->compiled = detail::eliminate_for_automaton(core);
  impl_->alphabet = std::move(alphabet);
  impl_->opts = opts;
  impl_->build();
}

FormulaAutomaton::~FormulaAutomaton() = default;
FormulaAutomaton::FormulaAutomaton(FormulaAutomaton&&) noexcept = default;

const CountingFormula& FormulaAutomaton::compiled() const { return impl_->compiled; }
const Alphabet& FormulaAutomaton::alphabet() const { return impl_->alphabet; }
const std::vector<GlobalCounter>& FormulaAutomaton::counters() const { return impl_->counters; }
std::size_t FormulaAutomaton::tracked_formulas() const { return impl_->nodes.size(); }
const Atom& FormulaAutomaton::atom(AtomId id) const { return impl_->atoms.at(id); }
std::size_t FormulaAutomaton::atom_count() const { return impl_->atoms.size(); }

bool FormulaAutomaton::holds(AtomId id, const CountingFormula& f) const {
  Interner probe = impl_->interner;
  const std::size_t before = probe.size();
  const int node = probe.add(f);
  if (static_cast<std::size_t>(node) >= before) throw std::out_of_range("formula is not tracked by the automaton");
  return impl_->values.at(id)[node];
}

std::vector<AtomId> FormulaAutomaton::initial_atoms(Letter letter) {
  const int li = impl_->letter_index(letter);
  auto it = impl_->initial.find(li);
  if (it != impl_->initial.end()) return it->second;
  auto ids = impl_->expand(nullptr, letter);
  impl_->initial.emplace(li, ids);
  return ids;
}

bool FormulaAutomaton::accepting(AtomId id) const {
  const Atom& a = impl_->atoms.at(id);
  for (std::size_t s = 0; s < a.obligations.size(); ++s) {
    if (impl_->slot_is_until[s] && a.obligations[s]) return false;
  }
  return true;
}

const std::vector<AtomId>& FormulaAutomaton::successors(AtomId id, Letter letter) {
  const std::uint64_t key = std::uint64_t{id} * 64 + static_cast<std::uint64_t>(impl_->letter_index(letter));
  auto it = impl_->succ.find(key);
  if (it != impl_->succ.end()) return it->second;
  auto ids = impl_->expand(&impl_->atoms.at(id), letter);
  return impl_->succ.emplace(key, std::move(ids)).first->second;
}

bool FormulaAutomaton::run_exists(const Word& w) {
  std::vector<AtomId> cur = initial_atoms(w[1]);
  for (Position i = 2; i <= w.length() && !cur.empty(); ++i) {
    std::vector<AtomId> next;
    for (AtomId a : cur) {
      const auto& s = successors(a, w[i]);
      next.insert(next.end(), s.begin(), s.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  return std::any_of(cur.begin(), cur.end(), [&](AtomId a) { return accepting(a); });
}

std::string AutomatonStats::csv_header() {
  return "formula_size,closure_size,atoms,verdict,witness_length,wall_ms";
}

std::string AutomatonStats::csv_row() const {
  std::ostringstream out;
  out << formula_size << ',' << closure_size << ',' << atoms << ',' << verdict << ','
      << (witness_length ? std::to_string(*witness_length) : "") << ',' << wall_ms;
  return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Breadth-first search over (tag, atom) nodes; returns the letter sequence of a shortest
// path to an accepting node.
template <class Node, class Hash, class Start, class Next, class Accept>
std::optional<Word> shortest_path(Start start, Next next, Accept accept) {
  std::vector<Node> nodes;
  std::vector<int> parent;
  std::vector<Letter> letters;
  std::unordered_map<Node, int, Hash> seen;
  std::deque<int> queue;
  auto push = [&](const Node& n, int from, Letter c) -> bool {
    if (!seen.emplace(n, static_cast<int>(nodes.size())).second) return false;
    nodes.push_back(n);
    parent.push_back(from);
    letters.push_back(c);
    queue.push_back(static_cast<int>(nodes.size() - 1));
    return accept(n);
  };
  auto trace = [&](int i) {
    std::string s;
    for (; i >= 0; i = parent[i]) s.push_back(letters[i]);
    std::reverse(s.begin(), s.end());
    return Word(s);
  };
  for (const auto& [n, c] : start()) {
    if (push(n, -1, c)) return trace(static_cast<int>(nodes.size() - 1));
  }
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    const Node cur = nodes[i];
    for (const auto& [n, c] : next(cur)) {
      if (push(n, i, c)) return trace(static_cast<int>(nodes.size() - 1));
    }
  }
  return std::nullopt;
}

struct PairHash {
  std::size_t operator()(const std::pair<int, AtomId>& p) const {
    return std::hash<std::uint64_t>()((std::uint64_t(p.first) << 32) ^ p.second);
  }
};

}  // namespace

SatResult sat_automaton(const CountingFormula& f, const AutomatonOptions& opts, const Alphabet& alphabet) {
  const auto start = Clock::now();
  Alphabet sigma = alphabet;
  if (sigma.empty()) {
    sigma = letters_of(f);
    if (auto c = sigma.fresh_letter()) sigma = sigma.merged(Alphabet(std::string(1, *c)));
  }
  FormulaAutomaton a(f, sigma, opts);
  SatResult res;
  res.stats.formula_size = size(f);
  res.stats.closure_size = closure(a.compiled()).size();
  using N = AtomId;
  auto starts = [&] {
    std::vector<std::pair<N, Letter>> out;
    for (char c : sigma.letters()) {
      for (N id : a.initial_atoms(c)) out.push_back({id, c});
    }
    return out;
  };
  auto next = [&](N id) {
    std::vector<std::pair<N, Letter>> out;
    for (char c : sigma.letters()) {
      for (N s : a.successors(id, c)) out.push_back({s, c});
    }
    return out;
  };
  try {
    res.witness = shortest_path<N, std::hash<N>>(starts, next, [&](N id) { return a.accepting(id); });
  } catch (const ResourceLimitError&) {
    res.stats.atoms = a.atom_count();
    throw;
  }
  if (res.witness && !eval_blintl(*res.witness, 1, f)) {
    throw std::logic_error("automaton witness " + res.witness->str() + " does not satisfy the formula");
  }
  res.stats.atoms = a.atom_count();
  res.stats.verdict = res.witness ? "sat" : "unsat";
  if (res.witness) res.stats.witness_length = res.witness->length();
  res.stats.wall_ms = elapsed_ms(start);
  return res;
}

ModelCheckResult mc_kripke(const KripkeStructure& k, const CountingFormula& f, const AutomatonOptions& opts) {
  const auto start = Clock::now();
  std::string labels(k.labels.begin(), k.labels.end());
  const Alphabet sigma = letters_of(f).merged(Alphabet(labels));
  const CountingFormula negated = CountingFormula::negate(f);
  FormulaAutomaton a(negated, sigma, opts);
  ModelCheckResult res;
  res.stats.formula_size = size(f);
  res.stats.closure_size = closure(a.compiled()).size();
  using N = std::pair<int, AtomId>;
  auto starts = [&] {
    std::vector<std::pair<N, Letter>> out;
    for (int s : k.initial) {
      for (AtomId id : a.initial_atoms(k.labels[s])) out.push_back({{s, id}, k.labels[s]});
    }
    return out;
  };
  auto next = [&](const N& n) {
    std::vector<std::pair<N, Letter>> out;
    for (int t : k.successors[n.first]) {
      for (AtomId id : a.successors(n.second, k.labels[t])) out.push_back({{t, id}, k.labels[t]});
    }
    return out;
  };
  auto accept = [&](const N& n) { return k.is_final(n.first) && a.accepting(n.second); };
  res.counterexample = shortest_path<N, PairHash>(starts, next, accept);
  if (res.counterexample && eval_blintl(*res.counterexample, 1, f)) {
    throw std::logic_error("counterexample " + res.counterexample->str() + " satisfies the formula");
  }
  res.holds = !res.counterexample;
  res.stats.atoms = a.atom_count();
  res.stats.verdict = res.holds ? "holds" : "fails";
  if (res.counterexample) res.stats.witness_length = res.counterexample->length();
  res.stats.wall_ms = elapsed_ms(start);
  return res;
}

}  // namespace tlwb
