#include "tlwb/fragments.hpp"

#include <array>
#include <unordered_set>
#include <utility>

namespace tlwb {

namespace {

constexpr std::array<std::pair<std::string_view, Logic>, 11> kLogicNames{{
    {"xy", Logic::Xy},
    {"uitl", Logic::Uitl},
    {"ltl", Logic::Ltl},
    {"fp", Logic::Fp},
    {"atnext", Logic::AtNext},
    {"tlplus", Logic::TlPlus},
    {"blintl", Logic::BLinTL},
    {"bthtl", Logic::BThTL},
    {"binvtl", Logic::BInvTL},
    {"invtl", Logic::InvTL},
    {"invmodtl", Logic::InvModTL},
}};

std::optional<std::string> guard_violation(const Guard& g, Logic logic) {
  switch (logic) {
    case Logic::BLinTL:
      return std::nullopt;
    case Logic::BThTL:
      if (is_boolean_threshold_guard(g)) return std::nullopt;
      return "BThTL guards are boolean combinations of threshold constraints";
    case Logic::BInvTL:
      if (is_boolean_simple_guard(g)) return std::nullopt;
      return "BInvTL guards are boolean combinations of #B=0 constraints";
    case Logic::InvTL:
      if (is_simple_guard(g)) return std::nullopt;
      return "InvTL guards are single #B=0 constraints";
    case Logic::InvModTL:
      if (is_simple_guard(g) || is_pure_modulo_guard(g)) return std::nullopt;
      return "InvModTL guards are single #B=0 or single modulo constraints";
    default:
      return "not a counting logic";
  }
}

}  // namespace

std::optional<Logic> logic_from_name(std::string_view name) {
  for (const auto& [n, l] : kLogicNames) {
    if (n == name) return l;
  }
  return std::nullopt;
}

std::string_view logic_name(Logic logic) {
  for (const auto& [n, l] : kLogicNames) {
    if (l == logic) return n;
  }
  return "?";
}

Family family_of(Logic logic) {
  switch (logic) {
    case Logic::Xy: return Family::Xy;
    case Logic::Uitl: return Family::Uitl;
    case Logic::Ltl:
    case Logic::Fp: return Family::Ltl;
    case Logic::AtNext:
    case Logic::TlPlus: return Family::AtNext;
    default: return Family::Counting;
  }
}

namespace {

std::optional<std::string> counting_violation(const CountingFormula& f, Logic logic,
                                              std::unordered_set<const void*>& seen) {
  using Op = CountingTag::Op;
  if (!seen.insert(f.identity()).second) return std::nullopt;
  if (f.op() == Op::StrongUntil && logic != Logic::BLinTL) {
    return "binary UNTIL is outside the guarded sublogics";
  }
  if (f.op() == Op::Now && logic != Logic::BLinTL && logic != Logic::InvModTL) {
    return "NOW tests need modulo counting";
  }
  if ((f.op() == Op::Until || f.op() == Op::Since) && f.has_guard()) {
    if (auto v = guard_violation(f.guard(), logic)) return v;
  }
  for (const auto& k : f.children()) {
    if (auto v = counting_violation(k, logic, seen)) return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> sublogic_violation(const CountingFormula& f, Logic logic) {
  std::unordered_set<const void*> seen;
  return counting_violation(f, logic, seen);
}

std::optional<std::string> sublogic_violation(const LtlFormula& f, Logic logic) {
  if (logic != Logic::Fp) return std::nullopt;
  using Op = LtlTag::Op;
  switch (f.op()) {
    case Op::Until:
    case Op::Since:
    case Op::X:
    case Op::G:
    case Op::H:
      return "TL[F,P] allows only F, P, Y and booleans";
    default:
      break;
  }
  for (const auto& k : f.children()) {
    if (auto v = sublogic_violation(k, logic)) return v;
  }
  return std::nullopt;
}

bool is_recursive_ranker(const AtNextFormula& f) {
  using Op = AtNextTag::Op;
  switch (f.op()) {
    case Op::Top:
      return true;
    case Op::SP:
    case Op::EP:
      return is_recursive_ranker(f.child(0));
    case Op::X:
    case Op::Y:
      return is_tlplus(f.child(0)) && is_recursive_ranker(f.child(1));
    default:
      return false;
  }
}

bool is_tlplus(const AtNextFormula& f) {
  using Op = AtNextTag::Op;
  switch (f.op()) {
    case Op::Atom:
      return true;
    case Op::Not:
    case Op::And:
    case Op::Or:
    case Op::Implies:
      for (const auto& k : f.children()) {
        if (!is_tlplus(k)) return false;
      }
      return true;
    default:
      return is_recursive_ranker(f);
  }
}

bool is_ranker_formula(const XyFormula& f) {
  using Op = XyTag::Op;
  switch (f.op()) {
    case Op::Top:
      return true;
    case Op::X:
    case Op::Y:
    case Op::XW:
    case Op::YW:
    case Op::Next:
    case Op::Prev:
    case Op::SP:
    case Op::EP:
      return is_ranker_formula(f.child(0));
    default:
      return false;
  }
}

}  // namespace tlwb
