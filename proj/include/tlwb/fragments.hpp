#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "tlwb/formula.hpp"

namespace tlwb {

/// Logic fragments accepted by the parser and the CLI.
enum class Logic {
  Xy,        // TL[X_a, Y_a]
  Uitl,      // UITL+-
  Ltl,       // LTL
  Fp,        // TL[F, P] (LTL restricted to F, P, booleans; Y allowed for strict past)
  AtNext,    // TL[X_phi, Y_phi]
  TlPlus,    // TL+[X_phi, Y_phi]
  BLinTL,    // booleans of modulo and threshold guards
  BThTL,     // booleans of threshold guards
  BInvTL,    // booleans of simple guards
  InvTL,     // simple guards
  InvModTL,  // simple and single modulo guards, plus NOW tests
};

using AnyFormula = std::variant<XyFormula, UitlFormula, LtlFormula, AtNextFormula, CountingFormula>;

std::optional<Logic> logic_from_name(std::string_view name);
std::string_view logic_name(Logic logic);

/// Which AST family a logic's formulas live in.
enum class Family { Xy, Uitl, Ltl, AtNext, Counting };
Family family_of(Logic logic);

/// Why a formula falls outside a sublogic, or nullopt when it belongs.
std::optional<std::string> sublogic_violation(const CountingFormula& f, Logic logic);
std::optional<std::string> sublogic_violation(const LtlFormula& f, Logic logic);

/// TL+ grammar: psi ::= a | phi | psi | psi | !psi (and &, ->),
///              phi ::= TOP | SP phi | EP phi | X[psi] phi | Y[psi] phi.
bool is_tlplus(const AtNextFormula& f);
/// The phi-level (recursive ranker) grammar of TL+.
bool is_recursive_ranker(const AtNextFormula& f);

/// Is the formula a boolean-free X_a/Y_a navigation program ending in TOP?
bool is_ranker_formula(const XyFormula& f);

}  // namespace tlwb
