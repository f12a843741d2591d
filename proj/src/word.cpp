#include "tlwb/word.hpp"

#include <algorithm>

namespace tlwb {

namespace {

std::string sorted_unique(std::string_view text) {
  std::string out(text);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Alphabet::Alphabet(std::string_view letters) : letters_(sorted_unique(letters)) {
  for (char c : letters_) {
    if (!is_letter(c)) {
      throw std::invalid_argument(std::string("invalid alphabet letter '") + c + "'");
    }
  }
}

Alphabet Alphabet::merged(const Alphabet& other) const {
  return Alphabet(letters_ + other.letters_);
}

std::optional<Letter> Alphabet::fresh_letter() const {
  for (char c = 'a'; c <= 'z'; ++c) {
    if (!contains(c)) return c;
  }
  return std::nullopt;
}

LetterSet::LetterSet(std::string_view listed, bool complemented)
    : listed_(sorted_unique(listed)), complemented_(complemented) {}

bool LetterSet::contains(Letter c) const {
  bool listed = listed_.find(c) != std::string::npos;
  return listed != complemented_;
}

std::string LetterSet::resolve(const Alphabet& alphabet) const {
  std::string out;
  for (char c : alphabet.letters()) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

Word::Word(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw EmptyWordError();
  for (char c : letters_) {
    if (!is_letter(c)) {
      throw std::invalid_argument(std::string("invalid word letter '") + c + "'");
    }
  }
}

std::uint64_t words_of_length(const Alphabet& alphabet, int length) {
  std::uint64_t n = 1;
  for (int i = 0; i < length; ++i) {
    if (n > UINT64_MAX / alphabet.size()) return UINT64_MAX;
    n *= alphabet.size();
  }
  return n;
}

Word nth_word(const Alphabet& alphabet, int length, std::uint64_t index) {
  std::string s(static_cast<std::size_t>(length), alphabet[0]);
  for (int i = length - 1; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = alphabet[index % alphabet.size()];
    index /= alphabet.size();
  }
  return Word(std::move(s));
}

}  // namespace tlwb
