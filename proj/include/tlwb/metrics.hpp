#pragma once

#include <cstddef>
#include <vector>

#include "tlwb/formula.hpp"

namespace tlwb {

/// Operator-and-atom count. Guarded modalities count guard_size(g) + size(body);
/// a Now test counts guard_size(g).
template <class Tag>
std::size_t size(const Formula<Tag>& f);

/// Recursion depth: atoms 0, booleans max, X_z/Y_z give max(rd(z) + 1, rd(body)).
std::size_t recursion_depth(const AtNextFormula& f);

/// Nesting depth of temporal operators (each of X, Y, F, P, G, H, U, S counts one).
std::size_t us_depth(const LtlFormula& f);

/// Nesting depth of guarded modalities (derived F/G/X/Y/P/H and B U count one).
std::size_t modal_depth(const CountingFormula& f);

/// One step on the path from the root to a hole: the operator, its letter index and
/// which child the path descends into.
template <class Tag>
struct PathStep {
  typename Tag::Op op;
  Letter letter = 0;
  std::size_t child = 0;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

template <class Tag>
using ContextPath = std::vector<PathStep<Tag>>;

template <class Tag>
struct Subterm {
  ContextPath<Tag> context;
  Formula<Tag> formula;
};

/// Every occurrence with its root-to-hole path, in preorder. One entry per AST node.
template <class Tag>
std::vector<Subterm<Tag>> subterms(const Formula<Tag>& f);

}  // namespace tlwb
