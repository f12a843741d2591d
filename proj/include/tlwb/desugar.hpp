#pragma once

#include "tlwb/formula.hpp"

namespace tlwb {

/// Rewrites derived operators into the core connectives of the family:
///  - every family: a & b -> !(!a | !b), a -> b -> !a | b
///  - LTL: X -> (!TOP) U, Y -> (!TOP) S, F -> TOP U, P (reflexive) -> phi | TOP S phi,
///    G -> !F!, H -> !P!
///  - UITL: ALO{A} -> PT | UNIT | !(OR over b not in A of OPLUS OMINUS (TOP F{b} TOP))
///  - counting: F/X/Y/P/G/H and B U phi into simple-guarded U/S; NOW(g) into a since
///    anchored at position 1 with the first and current letters counted
///
/// `alphabet` resolves letter sets given by listing (defaults to the formula's letters);
/// the result is equivalent on words over that alphabet. Idempotent.
template <class Tag>
Formula<Tag> desugar(const Formula<Tag>& f, const Alphabet& alphabet = {});

extern template XyFormula desugar(const XyFormula&, const Alphabet&);
extern template UitlFormula desugar(const UitlFormula&, const Alphabet&);
extern template LtlFormula desugar(const LtlFormula&, const Alphabet&);
extern template AtNextFormula desugar(const AtNextFormula&, const Alphabet&);
extern template CountingFormula desugar(const CountingFormula&, const Alphabet&);

}  // namespace tlwb
