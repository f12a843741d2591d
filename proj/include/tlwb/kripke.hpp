#pragma once

#include <string>
#include <vector>

#include "tlwb/word.hpp"

namespace tlwb {

/// Letter-labelled transition system; generates the label sequences of paths from an
/// initial to a final state.
struct KripkeStructure {
  std::vector<std::string> names;
  std::vector<Letter> labels;
  std::vector<std::vector<int>> successors;
  std::vector<int> initial;
  std::vector<int> final;

  int state_count() const { return static_cast<int>(names.size()); }
  std::size_t edge_count() const;
  bool is_final(int s) const;
  /// Every generated word of length 1..max_len, in length-lex order without duplicates.
  std::vector<Word> generated_words(int max_len) const;
};

}  // namespace tlwb
