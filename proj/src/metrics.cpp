#include "tlwb/metrics.hpp"

#include <algorithm>
#include <unordered_map>

namespace tlwb {

template <class Tag>
std::size_t size(const Formula<Tag>& f) {
  if constexpr (std::is_same_v<Tag, CountingTag>) {
    using Op = CountingTag::Op;
    std::unordered_map<const void*, std::size_t> memo;
    auto go = [&](auto& self, const CountingFormula& g) -> std::size_t {
      if (auto it = memo.find(g.identity()); it != memo.end()) return it->second;
      std::size_t n = 1;
      if (g.op() == Op::Now) n = guard_size(g.guard());
      else if (g.op() == Op::Until || g.op() == Op::Since) n = guard_size(g.guard()) + self(self, g.child(0));
      else for (const auto& k : g.children()) n += self(self, k);
      memo.emplace(g.identity(), n);
      return n;
    };
    return go(go, f);
  } else {
    return f.node_count();
  }
}

template std::size_t size(const XyFormula&);
template std::size_t size(const UitlFormula&);
template std::size_t size(const LtlFormula&);
template std::size_t size(const AtNextFormula&);
template std::size_t size(const CountingFormula&);

std::size_t recursion_depth(const AtNextFormula& f) {
  using Op = AtNextTag::Op;
  switch (f.op()) {
    case Op::Top:
    case Op::Atom:
      return 0;
    case Op::X:
    case Op::Y:
      return std::max(recursion_depth(f.child(0)) + 1, recursion_depth(f.child(1)));
    default: {
      std::size_t d = 0;
      for (const auto& k : f.children()) d = std::max(d, recursion_depth(k));
      return d;
    }
  }
}

std::size_t us_depth(const LtlFormula& f) {
  std::size_t d = 0;
  for (const auto& k : f.children()) d = std::max(d, us_depth(k));
  return is_boolean_op(f.op()) ? d : d + 1;
}

std::size_t modal_depth(const CountingFormula& f) {
  std::size_t d = 0;
  for (const auto& k : f.children()) d = std::max(d, modal_depth(k));
  using Op = CountingTag::Op;
  return is_boolean_op(f.op()) || f.op() == Op::Now ? d : d + 1;
}

namespace {

template <class Tag>
void walk(const Formula<Tag>& f, ContextPath<Tag>& path, std::vector<Subterm<Tag>>& out) {
  out.push_back({path, f});
  for (std::size_t i = 0; i < f.arity(); ++i) {
    path.push_back({f.op(), f.letter(), i});
    walk(f.child(i), path, out);
    path.pop_back();
  }
}

}  // namespace

template <class Tag>
std::vector<Subterm<Tag>> subterms(const Formula<Tag>& f) {
  std::vector<Subterm<Tag>> out;
  out.reserve(f.node_count());
  ContextPath<Tag> path;
  walk(f, path, out);
  return out;
}

template std::vector<Subterm<XyTag>> subterms(const XyFormula&);
template std::vector<Subterm<UitlTag>> subterms(const UitlFormula&);
template std::vector<Subterm<LtlTag>> subterms(const LtlFormula&);
template std::vector<Subterm<AtNextTag>> subterms(const AtNextFormula&);
template std::vector<Subterm<CountingTag>> subterms(const CountingFormula&);

}  // namespace tlwb
