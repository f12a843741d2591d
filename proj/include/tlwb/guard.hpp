#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "tlwb/word.hpp"

namespace tlwb {

/// Guard constants are arbitrary precision so binary-size claims are measurable.
using BigInt = boost::multiprecision::cpp_int;

/// Interval counting constraint attached to a guarded until/since.
///
/// Counts are always taken over the open interior of the connecting interval.
/// Kinds:
///   Simple     #B = 0
///   Modulo     sum_i c_i #B_i in R mod q
///   Threshold  lo <= #B <= hi with optional strict/non-strict bounds
///   True/False constants produced by normalization
///   Not/And/Or boolean combinations
class Guard {
 public:
  enum class Kind { True, False, Simple, Modulo, Threshold, Not, And, Or };

  struct Term {
    BigInt coeff;
    LetterSet set;
    friend bool operator==(const Term&, const Term&) = default;
  };

  struct Bound {
    BigInt value;
    bool strict = false;
    friend bool operator==(const Bound&, const Bound&) = default;
  };

  static Guard truth(bool value);
  static Guard simple(LetterSet set);
  /// Residues are reduced into [0, q) and deduplicated; q must be >= 2.
  static Guard modulo(std::vector<Term> terms, std::vector<BigInt> residues, BigInt modulus);
  static Guard threshold(LetterSet set, std::optional<Bound> lower, std::optional<Bound> upper);
  /// #B = t as a threshold (t > 0) or a simple guard (t = 0).
  static Guard count_equals(LetterSet set, BigInt value);
  static Guard negate(Guard g);
  static Guard conj(Guard a, Guard b);
  static Guard disj(Guard a, Guard b);

  Kind kind() const { return node_->kind; }
  bool is_boolean() const;

  /// Simple and Threshold guards.
  const LetterSet& set() const { return node_->set; }
  /// Modulo guards.
  std::span<const Term> terms() const { return node_->terms; }
  std::span<const BigInt> residues() const { return node_->residues; }
  const BigInt& modulus() const { return node_->modulus; }
  /// Threshold guards.
  const std::optional<Bound>& lower() const { return node_->lower; }
  const std::optional<Bound>& upper() const { return node_->upper; }
  /// Boolean guards.
  std::span<const Guard> children() const { return node_->children; }
  const Guard& child(std::size_t i) const { return node_->children.at(i); }

  /// Weighted interior sum for a modulo guard, reduced into [0, q).
  BigInt residue_of(const Word& w, Position from, Position to) const;
  /// Does a threshold guard accept this count?
  bool admits_count(const BigInt& count) const;
  /// Coefficient a single occurrence of `c` adds to a modulo guard's sum.
  BigInt weight(Letter c) const;

  friend bool operator==(const Guard& a, const Guard& b);

 private:
  struct Node {
    Kind kind = Kind::True;
    LetterSet set;
    std::vector<Term> terms;
    std::vector<BigInt> residues;
    BigInt modulus;
    std::optional<Bound> lower;
    std::optional<Bound> upper;
    std::vector<Guard> children;
  };

  explicit Guard(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// x mod q into [0, q).
BigInt floor_mod(const BigInt& x, const BigInt& q);

/// Number of positions in [from, to] carrying a letter of `set` (0 when to < from).
int count_letters(const Word& w, const LetterSet& set, Position from, Position to);

/// Size contribution of a constant: ceil(log2 c) for c >= 2, else 1.
std::size_t constant_size(const BigInt& c);

/// Largest component size inside a guard (letter sets count their listed letters).
std::size_t guard_size(const Guard& g);

/// Guard uses only #B = 0 constraints (no booleans).
bool is_simple_guard(const Guard& g);
/// Guard is a boolean combination of simple constraints.
bool is_boolean_simple_guard(const Guard& g);
/// Guard is a boolean combination of threshold/simple constraints.
bool is_boolean_threshold_guard(const Guard& g);
/// Guard is a single modulo constraint.
bool is_pure_modulo_guard(const Guard& g);

}  // namespace tlwb
