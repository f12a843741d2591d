#include "tlwb/kripke.hpp"

#include <algorithm>
#include <set>

namespace tlwb {

std::size_t KripkeStructure::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : successors) n += s.size();
  return n;
}

bool KripkeStructure::is_final(int s) const {
  return std::find(final.begin(), final.end(), s) != final.end();
}

std::vector<Word> KripkeStructure::generated_words(int max_len) const {
  std::vector<Word> out;
  // Frontier: (word so far, current state) pairs, deduplicated per length.
  std::set<std::pair<std::string, int>> frontier;
  for (int s : initial) frontier.insert({std::string(1, labels[s]), s});
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::set<std::string> accepted;
    std::set<std::pair<std::string, int>> next;
    for (const auto& [word, s] : frontier) {
      if (is_final(s)) accepted.insert(word);
      if (len < max_len) {
        for (int t : successors[s]) next.insert({word + labels[t], t});
      }
    }
    for (const auto& word : accepted) out.emplace_back(word);
    frontier = std::move(next);
  }
  return out;
}

}  // namespace tlwb
