#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tlwb/fragments.hpp"
#include "tlwb/word.hpp"

namespace tlwb {

/// Outcome of an exhaustive search.
struct Verdict {
  enum class Kind { Equal, Counterexample, Sat, NoneFound };
  Kind kind = Kind::NoneFound;
  std::optional<Word> word;
  /// Evaluation point of a counterexample: [1,1] or [1,|w|] for language checks,
  /// [i,i] or [i,j] for pointwise checks.
  std::optional<Interval> point;
  bool lhs = false;
  bool rhs = false;
  int bound = 0;
};

enum class EquivMode {
  Language,   // w,1 (or w,[1,|w|]) only
  Pointwise,  // every position (every interval for UITL)
};

struct OracleOptions {
  /// Use the OpenMP kernels; the serial kernels are kept as the reference.
  bool parallel = true;
  EquivMode mode = EquivMode::Language;
};

/// Sum over n = 1..max_len of |A|^n (saturating).
std::uint64_t word_count(const Alphabet& alphabet, int max_len);

/// All words of length 1..max_len in length-lex order.
std::vector<Word> enumerate_words(const Alphabet& alphabet, int max_len);

/// Enumeration-least word satisfying `pred`, or nullopt.
std::optional<Word> first_word(const Alphabet& alphabet, int max_len,
                               const std::function<bool(const Word&)>& pred, bool parallel = true);

Verdict brute_sat(const AnyFormula& f, const Alphabet& alphabet, int max_len, OracleOptions opts = {});

Verdict check_equiv(const AnyFormula& f1, const AnyFormula& f2, const Alphabet& alphabet, int max_len,
                    OracleOptions opts = {});

/// Language of `f` against an independent membership predicate.
Verdict check_language(const AnyFormula& f, const std::function<bool(const Word&)>& member,
                       const Alphabet& alphabet, int max_len, OracleOptions opts = {});

/// Language membership of any formula (position 1, or [1,|w|] for UITL).
bool accepts_any(const Word& w, const AnyFormula& f);

struct RandomOptions {
  std::string alphabet = "abc";
  int max_constant = 4;
  int max_modulus = 4;
};

/// Deterministic under `seed`; at most `size` AST nodes (guards not counted); respects `logic`.
AnyFormula random_formula(Logic logic, int size, std::uint64_t seed, const RandomOptions& opts = {});

/// Generators sharing one engine, for suites drawing many samples.
XyFormula random_xy(std::mt19937_64& rng, int size, const RandomOptions& opts = {});
UitlFormula random_uitl(std::mt19937_64& rng, int size, const RandomOptions& opts = {});
LtlFormula random_ltl(std::mt19937_64& rng, int size, const RandomOptions& opts = {}, bool fp_only = false);
AtNextFormula random_atnext(std::mt19937_64& rng, int size, const RandomOptions& opts = {});
AtNextFormula random_tlplus(std::mt19937_64& rng, int size, const RandomOptions& opts = {});
/// A phi-level TL+ formula (recursive ranker).
AtNextFormula random_recursive_ranker(std::mt19937_64& rng, int size, const RandomOptions& opts = {});
/// Boolean-free navigation program with `steps` steps.
XyFormula random_ranker(std::mt19937_64& rng, int steps, const RandomOptions& opts = {});
CountingFormula random_counting(std::mt19937_64& rng, Logic logic, int size, const RandomOptions& opts = {});
Guard random_guard(std::mt19937_64& rng, Logic logic, const RandomOptions& opts = {});

}  // namespace tlwb
