#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlwb/formula.hpp"
#include "tlwb/metrics.hpp"

namespace tlwb {

/// One navigation step of a ranker.
struct RankerStep {
  XyTag::Op op;
  Letter letter = 0;
  friend bool operator==(const RankerStep&, const RankerStep&) = default;
};

/// Boolean-free navigation program; steps are applied outermost first.
class Ranker {
 public:
  Ranker() = default;
  explicit Ranker(std::vector<RankerStep> steps);

  /// Throws std::invalid_argument unless `f` is boolean-free and ends in TOP.
  static Ranker from_formula(const XyFormula& f);
  XyFormula to_formula() const;

  const std::vector<RankerStep>& steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }
  std::size_t size() const { return steps_.size(); }
  const RankerStep& last() const { return steps_.back(); }
  /// All steps but the last.
  Ranker prefix() const;
  Ranker then(RankerStep step) const;
  /// RK1 ; RK2.
  Ranker compose(const Ranker& next) const;

  friend bool operator==(const Ranker&, const Ranker&) = default;

 private:
  std::vector<RankerStep> steps_;
};

std::string print_ranker(const Ranker& r);

MaybePosition ranker_pos(const Word& w, Position start, const Ranker& r);
/// Scan from position 1.
inline MaybePosition lpos(const Word& w, const Ranker& r) { return ranker_pos(w, 1, r); }

/// Booleans are transparent; the empty context is SP TOP.
Ranker context_ranker(const ContextPath<XyTag>& path);

/// Rankers of every subterm occurrence, deduplicated, in preorder of first appearance.
std::vector<Ranker> rankerset(const XyFormula& f);

/// Propositional formula over numbered variables.
class Prop {
 public:
  enum class Kind { True, Var, Not, And, Or, Implies };

  static Prop truth();
  static Prop var(int id);
  static Prop negate(Prop p);
  static Prop conj(Prop a, Prop b);
  static Prop disj(Prop a, Prop b);
  static Prop implies(Prop a, Prop b);

  Kind kind() const { return kind_; }
  int id() const { return id_; }
  const std::vector<Prop>& children() const { return kids_; }

  bool eval(const std::vector<bool>& valuation) const;
  /// Variables print as p1, p2, ... for ids 0, 1, ...
  std::string str() const;

  friend bool operator==(const Prop&, const Prop&) = default;

 private:
  Kind kind_ = Kind::True;
  int id_ = -1;
  std::vector<Prop> kids_;
};

struct WitnessBinding {
  int id;
  Ranker ranker;
  XyFormula atom;
};

struct DefinednessBinding {
  int id;
  Ranker ranker;
};

/// Boolean skeleton of a TL[X_a, Y_a] formula.
///   witness     the skeleton over p_1..p_k, one per atomic occurrence (ids 0..k-1)
///   guarded     the skeleton with definedness variables conjoined under each failing
///               modality whose body contains a negation (ids k..)
/// Only `guarded` is sound on every word; `witness` is exact when no such modality fails.
struct WitnessSystem {
  Prop witness;
  Prop guarded;
  std::vector<WitnessBinding> bindings;
  std::vector<DefinednessBinding> definedness;

  /// mu_w over all ids: bindings first, then definedness variables.
  std::vector<bool> valuation(const Word& w) const;
};

WitnessSystem witness_system(const XyFormula& f);

/// Truth at position 1 via rankers and the guarded witness.
bool fast_check(const Word& w, const XyFormula& f);

class NotAModelError : public std::invalid_argument {
 public:
  NotAModelError() : std::invalid_argument("word does not satisfy the formula") {}
};

/// Restriction of `w` to position 1 and every defined subterm-ranker landing position.
Word shrink_model(const Word& w, const XyFormula& f);

/// Positions kept by shrink_model, ascending.
std::vector<Position> rankerset_positions(const Word& w, const XyFormula& f);

struct SatXyOptions {
  /// Sample random words instead of enumerating when the space exceeds `max_enumerated`.
  bool randomized = false;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1'000'000;
  std::uint64_t max_enumerated = std::uint64_t{1} << 26;
  bool parallel = true;
};

/// Shortest-first search over words of length 1..Size(f) on letters(f) plus one fresh letter.
/// nullopt means unsatisfiable (or, in randomized mode, no model sampled).
std::optional<Word> sat_xy(const XyFormula& f, const SatXyOptions& opts = {});

/// Letters of f plus one letter not in f.
Alphabet search_alphabet(const XyFormula& f);

}  // namespace tlwb
