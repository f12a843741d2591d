#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tlwb/formula.hpp"
#include "tlwb/fragments.hpp"
#include "tlwb/kripke.hpp"

namespace tlwb {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected, std::string found);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Well-formed formula outside the requested sublogic.
class FragmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

XyFormula parse_xy(std::string_view text);
UitlFormula parse_uitl(std::string_view text);
LtlFormula parse_ltl(std::string_view text);
AtNextFormula parse_atnext(std::string_view text);
CountingFormula parse_counting(std::string_view text);
Guard parse_guard(std::string_view text);

/// Parses in the family of `logic` and enforces its sublogic restriction.
AnyFormula parse_formula(std::string_view text, Logic logic);

struct PrintOptions {
  bool full_parens = false;
};

std::string print_formula(const XyFormula& f, PrintOptions opts = {});
std::string print_formula(const UitlFormula& f, PrintOptions opts = {});
std::string print_formula(const LtlFormula& f, PrintOptions opts = {});
std::string print_formula(const AtNextFormula& f, PrintOptions opts = {});
std::string print_formula(const CountingFormula& f, PrintOptions opts = {});
std::string print_formula(const AnyFormula& f, PrintOptions opts = {});
std::string print_guard(const Guard& g);
std::string print_letter_set(const LetterSet& s);

Word parse_word(std::string_view text);
/// One word per nonblank line.
std::vector<Word> parse_words(std::string_view text);

/// Line-oriented sections:
///   states: s0 s1
///   labels: s0=a s1=b
///   edges: s0->s1 s1->s1
///   initial: s0
///   final: s1
/// `#` starts a comment. Sections may repeat; entries accumulate.
KripkeStructure parse_kripke(std::string_view text);

}  // namespace tlwb
