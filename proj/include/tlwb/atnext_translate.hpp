#pragma once

#include <optional>
#include <stdexcept>

#include "tlwb/formula.hpp"

namespace tlwb {

/// alpha: phi U psi -> X[!alpha(phi) | alpha(psi)] alpha(psi), S mirrored with Y.
/// Derived LTL operators are desugared first.
AtNextFormula ltl_to_atnext(const LtlFormula& f);

/// beta: X[phi] psi -> beta(!phi) U beta(phi & psi), Y mirrored with S.
/// SP phi -> P(!Y TOP & beta(phi)); EP phi -> (!X TOP & beta(phi)) | F(!X TOP & beta(phi)).
LtlFormula atnext_to_ltl(const AtNextFormula& f);

struct ConvexityViolation {
  Position i, k, j;
};

/// First gap i < k < j with phi at i and j but not at k. Throws std::invalid_argument
/// unless `f` is a TL+ recursive ranker.
std::optional<ConvexityViolation> convexity_check(const Word& w, const AtNextFormula& f);

class NotTlPlusError : public std::invalid_argument {
 public:
  NotTlPlusError() : std::invalid_argument("formula is not in TL+[X_phi, Y_phi]") {}
};

/// At(): TL+ into F, P, Y and booleans. Strict past is written Y P.
LtlFormula tlplus_to_fp(const AtNextFormula& f);

/// psi_k | X[psi_k] TOP with psi_k = a & X[!c](a & X[!c](... a)) (k jumps); requires k >= 1.
AtNextFormula stair_formula(int k);

/// w in A*(a c*)^k a A*, by direct scan.
bool stair_language(const Word& w, int k);

}  // namespace tlwb
