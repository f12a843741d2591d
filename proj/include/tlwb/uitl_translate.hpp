#pragma once

#include <vector>

#include "tlwb/formula.hpp"
#include "tlwb/metrics.hpp"
#include "tlwb/ranker.hpp"

namespace tlwb {

enum class Rel { Lt, Le, Gt, Ge };

/// P^rel(r): holds at i iff i rel lpos(r), whenever lpos(r) is defined. The empty ranker is SP TOP.
XyFormula directionality(const Ranker& r, Rel rel);

/// RK;phi = RK[TOP/phi].
XyFormula compose(const Ranker& r, const XyFormula& phi);
/// Same for a ranker given as a formula; throws std::invalid_argument if it is not one.
XyFormula compose(const XyFormula& ranker, const XyFormula& phi);

struct IntervalRankerEntry {
  ContextPath<UitlTag> context;
  UitlFormula formula;
  Ranker left;
  Ranker right;
};

/// LIntv/RIntv for every subterm occurrence, in the preorder of subterms().
std::vector<IntervalRankerEntry> interval_rankers(const UitlFormula& f);

/// Language-equivalent TL[X_a, Y_a] formula. `alphabet` resolves listed ALO sets
/// (defaults to the formula's letters).
XyFormula trans_uitl(const UitlFormula& f, const Alphabet& alphabet = {});

}  // namespace tlwb
