#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tlwb {

/// A letter is a single lowercase ASCII character.
using Letter = char;

/// Word positions are 1-based.
using Position = int;

/// A position or the undefined value (failed scan).
using MaybePosition = std::optional<Position>;

inline bool is_letter(char c) { return c >= 'a' && c <= 'z'; }

class EmptyWordError : public std::invalid_argument {
 public:
  EmptyWordError() : std::invalid_argument("word must be nonempty") {}
};

/// Ordered finite set of letters, size >= 1 once used as a word alphabet.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view letters);

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool contains(Letter c) const { return letters_.find(c) != std::string::npos; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Union with another alphabet; result stays sorted.
  Alphabet merged(const Alphabet& other) const;
  /// Smallest letter not in the alphabet, if any remain.
  std::optional<Letter> fresh_letter() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
};

/// A set of letters, possibly given by complement (`{^ab}` = every letter but a, b).
/// Complemented sets keep formulas independent of the declared alphabet.
class LetterSet {
 public:
  LetterSet() = default;
  explicit LetterSet(std::string_view listed, bool complemented = false);

  static LetterSet all() { return LetterSet("", true); }
  static LetterSet none() { return LetterSet(); }

  const std::string& listed() const { return listed_; }
  bool complemented() const { return complemented_; }
  bool contains(Letter c) const;

  /// Explicit member list with respect to an alphabet.
  std::string resolve(const Alphabet& alphabet) const;
  /// Complement as a set expression.
  LetterSet complement() const { return LetterSet(listed_, !complemented_); }

  friend bool operator==(const LetterSet&, const LetterSet&) = default;
  friend auto operator<=>(const LetterSet&, const LetterSet&) = default;

 private:
  std::string listed_;
  bool complemented_ = false;
};

/// Nonempty finite word; positions 1..size().
class Word {
 public:
  explicit Word(std::string letters);

  std::size_t size() const { return letters_.size(); }
  Position length() const { return static_cast<Position>(letters_.size()); }
  /// Letter at a 1-based position.
  Letter operator[](Position i) const { return letters_[static_cast<std::size_t>(i - 1)]; }
  bool in_domain(Position i) const { return i >= 1 && i <= length(); }
  const std::string& str() const { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

/// Number of words of exactly `length` letters (saturates at UINT64_MAX).
std::uint64_t words_of_length(const Alphabet& alphabet, int length);
/// The index-th word of the given length in lexicographic order of the alphabet.
Word nth_word(const Alphabet& alphabet, int length, std::uint64_t index);

/// Closed interval [lo, hi] of positions with lo <= hi.
struct Interval {
  Position lo = 1;
  Position hi = 1;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// An interval or the undefined value.
using MaybeInterval = std::optional<Interval>;

}  // namespace tlwb
