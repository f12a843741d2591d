#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlwb/formula.hpp"
#include "tlwb/kripke.hpp"

namespace tlwb {

class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(std::size_t budget)
      : std::runtime_error("atom budget of " + std::to_string(budget) + " exceeded"), budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

struct AutomatonOptions {
  std::size_t budget = std::size_t{1} << 20;
  /// Single-threshold untils go through NOW tests and binary UNTIL instead of unfolding.
  bool direct_thresholds = false;
};

/// Fischer-Ladner closure: the formula, negations, subformulas, and for every modulo
/// guarded g U phi (g S phi) the markers NOW(g = r) and F(phi & NOW(g = r))
/// (P(...) for since) for each residue r. A threshold until (t <= #B < u) U phi adds
/// (!NOW(#B = r)) UNTIL (NOW(#B = r) & F(phi & NOW(#B = s))), F(phi & NOW(#B = s)) and
/// NOW(#B = s) mod u for all r, s. Derived operators are expanded first; each formula
/// appears once.
std::vector<CountingFormula> closure(const CountingFormula& f);

/// Number of NOW markers in a closure that test a single residue of the given counter.
std::size_t counter_markers(const std::vector<CountingFormula>& closure, const Guard& constraint);

/// One modulo counter over positions 1..i.
struct GlobalCounter {
  std::vector<Guard::Term> terms;
  int modulus = 2;
};

using AtomId = std::uint32_t;

/// Letter, residue vector, and the truth of every until/since obligation. Truth of the
/// remaining closure formulas follows from these.
struct Atom {
  Letter letter = 0;
  std::vector<int> residues;
  std::vector<bool> obligations;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Lazily materialized formula automaton over a fixed alphabet. Atoms are hash-consed;
/// successor lists are memoized per (atom, letter).
class FormulaAutomaton {
 public:
  /// Guards are eliminated first (blintl_to_invmodtl); the formula must then be true in
  /// the first atom of a run.
  FormulaAutomaton(const CountingFormula& f, Alphabet alphabet, AutomatonOptions opts = {});
  ~FormulaAutomaton();
  FormulaAutomaton(FormulaAutomaton&&) noexcept;

  /// The InvModTL form the atoms are built over.
  const CountingFormula& compiled() const;
  const Alphabet& alphabet() const;
  const std::vector<GlobalCounter>& counters() const;
  /// Number of distinct closure formulas tracked per atom.
  std::size_t tracked_formulas() const;

  const Atom& atom(AtomId id) const;
  std::size_t atom_count() const;
  /// Truth of a tracked formula in an atom; throws std::out_of_range if not tracked.
  bool holds(AtomId id, const CountingFormula& f) const;

  /// Atoms for position 1 reading `letter` in which the formula holds.
  std::vector<AtomId> initial_atoms(Letter letter);
  bool accepting(AtomId id) const;
  const std::vector<AtomId>& successors(AtomId id, Letter letter);

  /// Is there a run over `w` starting in an initial atom and ending in an accepting one?
  bool run_exists(const Word& w);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct AutomatonStats {
  std::size_t formula_size = 0;
  std::size_t closure_size = 0;
  std::size_t atoms = 0;
  std::string verdict;
  std::optional<int> witness_length;
  double wall_ms = 0;

  static std::string csv_header();
  std::string csv_row() const;
};

struct SatResult {
  std::optional<Word> witness;
  AutomatonStats stats;
};

/// Breadth-first search from initial to accepting atoms; the witness is shortest and
/// replayed through eval_blintl. Search alphabet defaults to the formula's letters plus
/// one fresh letter.
SatResult sat_automaton(const CountingFormula& f, const AutomatonOptions& opts = {},
                        const Alphabet& alphabet = {});

struct ModelCheckResult {
  bool holds = true;
  std::optional<Word> counterexample;
  AutomatonStats stats;
};

/// Product of the structure with the automaton for !f; a reachable final product state
/// gives a shortest generated word violating f (replayed through eval_blintl).
ModelCheckResult mc_kripke(const KripkeStructure& k, const CountingFormula& f, const AutomatonOptions& opts = {});

}  // namespace tlwb
