#include "tlwb/formula.hpp"

namespace tlwb {

namespace {

void collect_guard_letters(const Guard& g, std::string& out) {
  switch (g.kind()) {
    case Guard::Kind::Simple:
    case Guard::Kind::Threshold:
      out += g.set().listed();
      break;
    case Guard::Kind::Modulo:
      for (const auto& t : g.terms()) out += t.set.listed();
      break;
    default:
      for (const auto& c : g.children()) collect_guard_letters(c, out);
      break;
  }
}

template <class Tag>
void collect(const Formula<Tag>& f, std::string& out) {
  if (f.letter() != 0) out.push_back(f.letter());
  out += f.letters().listed();
  if (f.has_guard()) collect_guard_letters(f.guard(), out);
  for (const auto& k : f.children()) collect(k, out);
}

}  // namespace

template <class Tag>
Alphabet letters_of(const Formula<Tag>& f) {
  std::string out;
  collect(f, out);
  return Alphabet(out);
}

template Alphabet letters_of(const XyFormula&);
template Alphabet letters_of(const UitlFormula&);
template Alphabet letters_of(const LtlFormula&);
template Alphabet letters_of(const AtNextFormula&);
template Alphabet letters_of(const CountingFormula&);

}  // namespace tlwb
