#pragma once

#include <vector>

#include "tlwb/formula.hpp"

namespace tlwb {

/// Direct clause-by-clause LTL semantics: U, S, F, X, Y strict; P reflexive (m <= i).
bool eval_ltl(const Word& w, Position i, const LtlFormula& f);

/// TL[X_a, Y_a]: X_a/Y_a strict first/last occurrence, XW/YW reflexive, NEXT/PREV shift,
/// SP/EP evaluate the body at 1 / |w|.
bool eval_xy(const Word& w, Position i, const XyFormula& f);

/// UITL+-: atoms hold on point intervals carrying the letter.
bool eval_uitl(const Word& w, Interval iv, const UitlFormula& f);

/// TL[X_phi, Y_phi]: X[z] psi holds iff the first strictly later z-position satisfies psi.
bool eval_atnext(const Word& w, Position i, const AtNextFormula& f);

/// Guard on the open interior x+1..y-1 of [x, y].
bool eval_guard(const Word& w, Interval iv, const Guard& g);

/// Guard on the closed range from..to (empty when to < from).
bool eval_guard_range(const Word& w, Position from, Position to, const Guard& g);

/// BLinTL: strict guarded U/S; NOW(g) counts positions 1..i inclusive.
bool eval_blintl(const Word& w, Position i, const CountingFormula& f);

/// Satisfaction sets, index 0 unused (positions 1..|w|).
std::vector<bool> satisfaction_set(const Word& w, const XyFormula& f);
std::vector<bool> satisfaction_set(const Word& w, const AtNextFormula& f);
std::vector<bool> satisfaction_set(const Word& w, const CountingFormula& f);
std::vector<bool> satisfaction_set(const Word& w, const LtlFormula& f);

/// Language membership: position 1 for point logics, [1, |w|] for UITL.
inline bool accepts(const Word& w, const LtlFormula& f) { return eval_ltl(w, 1, f); }
inline bool accepts(const Word& w, const XyFormula& f) { return eval_xy(w, 1, f); }
inline bool accepts(const Word& w, const UitlFormula& f) { return eval_uitl(w, {1, w.length()}, f); }
inline bool accepts(const Word& w, const AtNextFormula& f) { return eval_atnext(w, 1, f); }
inline bool accepts(const Word& w, const CountingFormula& f) { return eval_blintl(w, 1, f); }

}  // namespace tlwb
