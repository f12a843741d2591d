#include "tlwb/guard.hpp"

#include <algorithm>
#include <stdexcept>

namespace tlwb {

BigInt floor_mod(const BigInt& x, const BigInt& q) {
  BigInt r = x % q;
  if (r < 0) r += q;
  return r;
}

int count_letters(const Word& w, const LetterSet& set, Position from, Position to) {
  int n = 0;
  for (Position k = std::max(from, 1); k <= std::min(to, w.length()); ++k) {
    if (set.contains(w[k])) ++n;
  }
  return n;
}

std::size_t constant_size(const BigInt& c) {
  BigInt v = c < 0 ? BigInt(-c) : c;
  if (v < 2) return 1;
  std::size_t msb = boost::multiprecision::msb(v);
  bool power_of_two = (v & (v - 1)) == 0;
  return power_of_two ? msb : msb + 1;
}

Guard Guard::truth(bool value) {
  auto n = std::make_shared<Node>();
  n->kind = value ? Kind::True : Kind::False;
  return Guard(std::move(n));
}

Guard Guard::simple(LetterSet set) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Simple;
  n->set = std::move(set);
  return Guard(std::move(n));
}

Guard Guard::modulo(std::vector<Term> terms, std::vector<BigInt> residues, BigInt modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  if (terms.empty()) throw std::invalid_argument("modulo guard needs at least one term");
  for (const Term& t : terms) {
    if (!t.set.complemented() && t.set.listed().empty()) {
      throw std::invalid_argument("modulo guard subalphabets must be nonempty");
    }
  }
  for (BigInt& r : residues) r = floor_mod(r, modulus);
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Modulo;
  n->terms = std::move(terms);
  n->residues = std::move(residues);
  n->modulus = std::move(modulus);
  return Guard(std::move(n));
}

Guard Guard::threshold(LetterSet set, std::optional<Bound> lower, std::optional<Bound> upper) {
  if ((lower && lower->value < 0) || (upper && upper->value < 0)) {
    throw std::invalid_argument("threshold constants must be natural numbers");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Threshold;
  n->set = std::move(set);
  n->lower = std::move(lower);
  n->upper = std::move(upper);
  return Guard(std::move(n));
}

Guard Guard::count_equals(LetterSet set, BigInt value) {
  if (value == 0) return simple(std::move(set));
  return threshold(std::move(set), Bound{value, false}, Bound{value, false});
}

Guard Guard::negate(Guard g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->children.push_back(std::move(g));
  return Guard(std::move(n));
}

Guard Guard::conj(Guard a, Guard b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->children.push_back(std::move(a));
  n->children.push_back(std::move(b));
  return Guard(std::move(n));
}

Guard Guard::disj(Guard a, Guard b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->children.push_back(std::move(a));
  n->children.push_back(std::move(b));
  return Guard(std::move(n));
}

bool Guard::is_boolean() const {
  return kind() == Kind::Not || kind() == Kind::And || kind() == Kind::Or;
}

BigInt Guard::residue_of(const Word& w, Position from, Position to) const {
  BigInt sum = 0;
  for (Position k = std::max(from, 1); k <= std::min(to, w.length()); ++k) sum += weight(w[k]);
  return floor_mod(sum, modulus());
}

BigInt Guard::weight(Letter c) const {
  BigInt sum = 0;
  for (const Term& t : terms()) {
    if (t.set.contains(c)) sum += t.coeff;
  }
  return sum;
}

bool Guard::admits_count(const BigInt& count) const {
  if (lower()) {
    if (lower()->strict ? !(count > lower()->value) : !(count >= lower()->value)) return false;
  }
  if (upper()) {
    if (upper()->strict ? !(count < upper()->value) : !(count <= upper()->value)) return false;
  }
  return true;
}

bool operator==(const Guard& a, const Guard& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.set == y.set && x.terms == y.terms && x.residues == y.residues &&
         x.modulus == y.modulus && x.lower == y.lower && x.upper == y.upper &&
         x.children == y.children;
}

std::size_t guard_size(const Guard& g) {
  auto set_size = [](const LetterSet& s) { return std::max<std::size_t>(s.listed().size(), 1); };
  switch (g.kind()) {
    case Guard::Kind::True:
    case Guard::Kind::False:
      return 1;
    case Guard::Kind::Simple:
      return set_size(g.set());
    case Guard::Kind::Threshold: {
      std::size_t s = set_size(g.set());
      if (g.lower()) s = std::max(s, constant_size(g.lower()->value));
      if (g.upper()) s = std::max(s, constant_size(g.upper()->value));
      return s;
    }
    case Guard::Kind::Modulo: {
      std::size_t s = constant_size(g.modulus());
      for (const auto& t : g.terms()) s = std::max({s, set_size(t.set), constant_size(t.coeff)});
      for (const auto& r : g.residues()) s = std::max(s, constant_size(r));
      return s;
    }
    case Guard::Kind::Not:
    case Guard::Kind::And:
    case Guard::Kind::Or: {
      std::size_t s = 1;
      for (const auto& c : g.children()) s = std::max(s, guard_size(c));
      return s;
    }
  }
  return 1;
}

bool is_simple_guard(const Guard& g) { return g.kind() == Guard::Kind::Simple; }

bool is_boolean_simple_guard(const Guard& g) {
  if (g.is_boolean()) {
    return std::all_of(g.children().begin(), g.children().end(), is_boolean_simple_guard);
  }
  return g.kind() == Guard::Kind::Simple;
}

bool is_boolean_threshold_guard(const Guard& g) {
  if (g.is_boolean()) {
    return std::all_of(g.children().begin(), g.children().end(), is_boolean_threshold_guard);
  }
  return g.kind() == Guard::Kind::Simple || g.kind() == Guard::Kind::Threshold ||
         g.kind() == Guard::Kind::True || g.kind() == Guard::Kind::False;
}

bool is_pure_modulo_guard(const Guard& g) { return g.kind() == Guard::Kind::Modulo; }

}  // namespace tlwb
