#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tlwb/formula.hpp"

namespace tlwb {

class SublogicError : public std::invalid_argument {
 public:
  explicit SublogicError(const std::string& what) : std::invalid_argument(what) {}
};

/// #B = value, or #B >= value when at_least (value > 0 then).
struct NormalConstraint {
  LetterSet set;
  BigInt value;
  bool at_least = false;
  friend bool operator==(const NormalConstraint&, const NormalConstraint&) = default;
};

using NormalConjunction = std::vector<NormalConstraint>;
/// Disjunction of conjunctions; {} is false, {{}} is true. Each conjunction constrains
/// every letter set at most once.
using NormalGuard = std::vector<NormalConjunction>;

/// Boolean threshold guard into disjunctive normal form over equalities and lower bounds.
/// Throws SublogicError on modulo constraints.
NormalGuard normalize_guard(const Guard& g);
Guard to_guard(const NormalGuard& n);

/// Union of two letter sets, kept symbolic (complements stay complements).
LetterSet set_union(const LetterSet& a, const LetterSet& b);

/// Rewrites F, G, X, Y, P, H and B U phi / B S phi into simple-guarded U/S; keeps NOW.
CountingFormula core_operators(const CountingFormula& f);

/// BThTL to InvTL: every guard becomes a single #B = 0. Throws SublogicError on modulo
/// guards, NOW tests and binary UNTIL.
CountingFormula bthtl_to_invtl(const CountingFormula& f);

/// BLinTL to InvModTL: only #B = 0 guards, single modulo guards and NOW tests remain.
/// Modulo constraints are anchored on NOW counters at the start of the interval;
/// threshold constraints are unfolded one counted letter at a time. Throws SublogicError
/// on binary UNTIL.
CountingFormula blintl_to_invmodtl(const CountingFormula& f);

/// Single-threshold untils into NOW tests and binary UNTIL:
///   (t <= #B < u) U phi  ->  OR_r NOW(#B = r mod u) & (!NOW(r+t)) UNTIL (NOW(r+t) & (!NOW(r)) UNTIL phi)
/// with #B < u split as #B = 0 or 1 <= #B < u, and t <= #B as (#B = t) U (phi | F phi).
/// Every other construct is left in place.
CountingFormula thresholds_to_binary(const CountingFormula& f);

}  // namespace tlwb
