#include <algorithm>

#include "tlwb/oracle.hpp"

namespace tlwb {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

Letter pick_letter(std::mt19937_64& rng, const RandomOptions& o) {
  return o.alphabet[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(o.alphabet.size()) - 1))];
}

LetterSet pick_set(std::mt19937_64& rng, const RandomOptions& o) {
  std::string s;
  while (s.empty()) {
    for (char c : o.alphabet) {
      if (coin(rng, 0.4)) s.push_back(c);
    }
  }
  return LetterSet(s, coin(rng, 0.15));
}

// Splits the budget n-1 of a binary node into two positive parts.
std::pair<int, int> split(std::mt19937_64& rng, int n) {
  const int left = uniform(rng, 1, n - 2);
  return {left, n - 1 - left};
}

template <class F>
F combine(std::mt19937_64& rng, F a, F b) {
  switch (uniform(rng, 0, 2)) {
    case 0: return F::conj(std::move(a), std::move(b));
    case 1: return F::disj(std::move(a), std::move(b));
    default: return F::implies(std::move(a), std::move(b));
  }
}

template <class F>
F leaf(std::mt19937_64& rng, const RandomOptions& o) {
  return coin(rng, 0.2) ? F::top() : F::atom(pick_letter(rng, o));
}

Guard random_threshold(std::mt19937_64& rng, const RandomOptions& o) {
  LetterSet b = pick_set(rng, o);
  auto constant = [&] { return BigInt(uniform(rng, 0, o.max_constant)); };
  switch (uniform(rng, 0, 3)) {
    case 0: return Guard::threshold(b, Guard::Bound{constant(), coin(rng)}, std::nullopt);
    case 1: return Guard::threshold(b, std::nullopt, Guard::Bound{constant(), coin(rng)});
    case 2: {
      BigInt t = constant();
      BigInt u = t + uniform(rng, 1, o.max_constant);
      return Guard::threshold(b, Guard::Bound{t, false}, Guard::Bound{u, true});
    }
    default: return Guard::count_equals(b, constant());
  }
}

Guard random_modulo(std::mt19937_64& rng, const RandomOptions& o) {
  const int q = uniform(rng, 2, std::max(2, o.max_modulus));
  std::vector<Guard::Term> terms;
  const int k = coin(rng, 0.75) ? 1 : 2;
  for (int i = 0; i < k; ++i) {
    int c = uniform(rng, 1, 2) * (coin(rng, 0.25) ? -1 : 1);
    if (k == 1) c = 1;
    terms.push_back({BigInt(c), pick_set(rng, o)});
  }
  std::vector<BigInt> residues;
  while (residues.empty()) {
    for (int r = 0; r < q; ++r) {
      if (coin(rng, 0.4)) residues.emplace_back(r);
    }
  }
  return Guard::modulo(std::move(terms), std::move(residues), BigInt(q));
}

Guard random_atom_guard(std::mt19937_64& rng, Logic logic, const RandomOptions& o) {
  switch (logic) {
    case Logic::InvTL:
    case Logic::BInvTL: return Guard::simple(pick_set(rng, o));
    case Logic::BThTL: return coin(rng, 0.25) ? Guard::simple(pick_set(rng, o)) : random_threshold(rng, o);
    case Logic::InvModTL: return coin(rng, 0.4) ? Guard::simple(pick_set(rng, o)) : random_modulo(rng, o);
    default:
      switch (uniform(rng, 0, 2)) {
        case 0: return Guard::simple(pick_set(rng, o));
        case 1: return random_threshold(rng, o);
        default: return random_modulo(rng, o);
      }
  }
}

Guard random_bool_guard(std::mt19937_64& rng, Logic logic, const RandomOptions& o, int depth) {
  if (depth == 0 || coin(rng, 0.55)) return random_atom_guard(rng, logic, o);
  switch (uniform(rng, 0, 2)) {
    case 0: return Guard::negate(random_bool_guard(rng, logic, o, depth - 1));
    case 1:
      return Guard::conj(random_bool_guard(rng, logic, o, depth - 1), random_bool_guard(rng, logic, o, depth - 1));
    default:
      return Guard::disj(random_bool_guard(rng, logic, o, depth - 1), random_bool_guard(rng, logic, o, depth - 1));
  }
}

XyFormula gen_xy(std::mt19937_64& rng, int n, const RandomOptions& o) {
  using Op = XyTag::Op;
  if (n <= 1) return leaf<XyFormula>(rng, o);
  if (n >= 3 && coin(rng, 0.35)) {
    auto [l, r] = split(rng, n);
    return combine(rng, gen_xy(rng, l, o), gen_xy(rng, r, o));
  }
  static constexpr Op kUnary[] = {Op::Not, Op::X, Op::Y, Op::XW, Op::YW, Op::Next, Op::Prev, Op::SP, Op::EP, Op::X, Op::Y};
  const Op op = kUnary[uniform(rng, 0, std::size(kUnary) - 1)];
  XyFormula body = gen_xy(rng, n - 1, o);
  if (op == Op::Not) return XyFormula::negate(std::move(body));
  const bool lettered = op == Op::X || op == Op::Y || op == Op::XW || op == Op::YW;
  return XyFormula::make(op, {std::move(body)}, lettered ? pick_letter(rng, o) : 0);
}

UitlFormula gen_uitl(std::mt19937_64& rng, int n, const RandomOptions& o) {
  using Op = UitlTag::Op;
  if (n <= 1) {
    switch (uniform(rng, 0, 5)) {
      case 0: return uitl::top();
      case 1: return uitl::pt();
      case 2: return uitl::unit();
      case 3: return uitl::alo(pick_set(rng, o));
      default: return uitl::atom(pick_letter(rng, o));
    }
  }
  if (n >= 3 && coin(rng, 0.55)) {
    auto [l, r] = split(rng, n);
    UitlFormula a = gen_uitl(rng, l, o);
    UitlFormula b = gen_uitl(rng, r, o);
    static constexpr Op kChops[] = {Op::First, Op::Last, Op::FirstPast, Op::LastMinus};
    if (coin(rng, 0.7)) return uitl::chop(kChops[uniform(rng, 0, 3)], std::move(a), pick_letter(rng, o), std::move(b));
    return combine(rng, std::move(a), std::move(b));
  }
  static constexpr Op kUnary[] = {Op::Not, Op::SP, Op::EP, Op::OPlus, Op::OMinus, Op::OPlusBar, Op::OMinusBar};
  const Op op = kUnary[uniform(rng, 0, std::size(kUnary) - 1)];
  UitlFormula body = gen_uitl(rng, n - 1, o);
  return op == Op::Not ? UitlFormula::negate(std::move(body)) : uitl::unary(op, std::move(body));
}

LtlFormula gen_ltl(std::mt19937_64& rng, int n, const RandomOptions& o, bool fp) {
  using Op = LtlTag::Op;
  if (n <= 1) return leaf<LtlFormula>(rng, o);
  if (n >= 3 && coin(rng, 0.45)) {
    auto [l, r] = split(rng, n);
    LtlFormula a = gen_ltl(rng, l, o, fp);
    LtlFormula b = gen_ltl(rng, r, o, fp);
    if (!fp && coin(rng, 0.5)) return coin(rng) ? ltl::U(std::move(a), std::move(b)) : ltl::S(std::move(a), std::move(b));
    return combine(rng, std::move(a), std::move(b));
  }
  static constexpr Op kFull[] = {Op::Not, Op::X, Op::Y, Op::F, Op::P, Op::G, Op::H};
  static constexpr Op kFp[] = {Op::Not, Op::F, Op::P, Op::Not};
  const Op op = fp ? kFp[uniform(rng, 0, 3)] : kFull[uniform(rng, 0, 6)];
  LtlFormula body = gen_ltl(rng, n - 1, o, fp);
  return op == Op::Not ? LtlFormula::negate(std::move(body)) : ltl::unary(op, std::move(body));
}

AtNextFormula gen_atnext(std::mt19937_64& rng, int n, const RandomOptions& o) {
  if (n <= 1) return leaf<AtNextFormula>(rng, o);
  if (n >= 3 && coin(rng, 0.6)) {
    auto [l, r] = split(rng, n);
    AtNextFormula a = gen_atnext(rng, l, o);
    AtNextFormula b = gen_atnext(rng, r, o);
    switch (uniform(rng, 0, 3)) {
      case 0: return atnext::X(std::move(a), std::move(b));
      case 1: return atnext::Y(std::move(a), std::move(b));
      default: return combine(rng, std::move(a), std::move(b));
    }
  }
  AtNextFormula body = gen_atnext(rng, n - 1, o);
  switch (uniform(rng, 0, 3)) {
    case 0: return atnext::SP(std::move(body));
    case 1: return atnext::EP(std::move(body));
    default: return AtNextFormula::negate(std::move(body));
  }
}

AtNextFormula gen_tlplus(std::mt19937_64& rng, int n, const RandomOptions& o);

AtNextFormula gen_recursive_ranker(std::mt19937_64& rng, int n, const RandomOptions& o) {
  if (n <= 1) return atnext::top();
  if (n >= 3 && coin(rng, 0.75)) {
    auto [l, r] = split(rng, n);
    AtNextFormula guard = gen_tlplus(rng, l, o);
    AtNextFormula body = gen_recursive_ranker(rng, r, o);
    return coin(rng) ? atnext::X(std::move(guard), std::move(body)) : atnext::Y(std::move(guard), std::move(body));
  }
  AtNextFormula body = gen_recursive_ranker(rng, n - 1, o);
  return coin(rng) ? atnext::SP(std::move(body)) : atnext::EP(std::move(body));
}

AtNextFormula gen_tlplus(std::mt19937_64& rng, int n, const RandomOptions& o) {
  if (n <= 1) return coin(rng, 0.8) ? atnext::atom(pick_letter(rng, o)) : atnext::top();
  const int choice = uniform(rng, 0, 9);
  if (choice < 4) return gen_recursive_ranker(rng, n, o);
  if (choice < 6 || n < 3) return AtNextFormula::negate(gen_tlplus(rng, n - 1, o));
  auto [l, r] = split(rng, n);
  return combine(rng, gen_tlplus(rng, l, o), gen_tlplus(rng, r, o));
}

CountingFormula gen_counting(std::mt19937_64& rng, Logic logic, int n, const RandomOptions& o) {
  const bool now_ok = logic == Logic::BLinTL || logic == Logic::InvModTL;
  const bool boolean_guards = logic == Logic::BLinTL || logic == Logic::BThTL || logic == Logic::BInvTL;
  if (n <= 1) {
    if (now_ok && coin(rng, 0.15)) return counting::now(random_modulo(rng, o));
    return leaf<CountingFormula>(rng, o);
  }
  if (n >= 3 && coin(rng, 0.35)) {
    auto [l, r] = split(rng, n);
    return combine(rng, gen_counting(rng, logic, l, o), gen_counting(rng, logic, r, o));
  }
  CountingFormula body = gen_counting(rng, logic, n - 1, o);
  const int choice = uniform(rng, 0, 4);
  if (choice == 0) return CountingFormula::negate(std::move(body));
  Guard g = boolean_guards ? random_bool_guard(rng, logic, o, 2) : random_atom_guard(rng, logic, o);
  return choice <= 3 ? counting::until(std::move(g), std::move(body)) : counting::since(std::move(g), std::move(body));
}

}  // namespace

XyFormula random_xy(std::mt19937_64& rng, int size, const RandomOptions& opts) { return gen_xy(rng, size, opts); }

UitlFormula random_uitl(std::mt19937_64& rng, int size, const RandomOptions& opts) {
  return gen_uitl(rng, size, opts);
}

LtlFormula random_ltl(std::mt19937_64& rng, int size, const RandomOptions& opts, bool fp_only) {
  return gen_ltl(rng, size, opts, fp_only);
}

AtNextFormula random_atnext(std::mt19937_64& rng, int size, const RandomOptions& opts) {
  return gen_atnext(rng, size, opts);
}

AtNextFormula random_tlplus(std::mt19937_64& rng, int size, const RandomOptions& opts) {
  return gen_tlplus(rng, size, opts);
}

AtNextFormula random_recursive_ranker(std::mt19937_64& rng, int size, const RandomOptions& opts) {
  return gen_recursive_ranker(rng, size, opts);
}

XyFormula random_ranker(std::mt19937_64& rng, int steps, const RandomOptions& opts) {
  using Op = XyTag::Op;
  static constexpr Op kSteps[] = {Op::X, Op::Y, Op::XW, Op::YW, Op::Next, Op::Prev, Op::SP, Op::EP,
                                  Op::X, Op::Y, Op::XW, Op::YW};
  XyFormula f = XyFormula::top();
  for (int i = 0; i < steps; ++i) {
    const Op op = kSteps[uniform(rng, 0, std::size(kSteps) - 1)];
    const bool lettered = op == Op::X || op == Op::Y || op == Op::XW || op == Op::YW;
    f = XyFormula::make(op, {f}, lettered ? pick_letter(rng, opts) : 0);
  }
  return f;
}

CountingFormula random_counting(std::mt19937_64& rng, Logic logic, int size, const RandomOptions& opts) {
  return gen_counting(rng, logic, size, opts);
}

Guard random_guard(std::mt19937_64& rng, Logic logic, const RandomOptions& opts) {
  const bool boolean_guards = logic == Logic::BLinTL || logic == Logic::BThTL || logic == Logic::BInvTL;
  return boolean_guards ? random_bool_guard(rng, logic, opts, 2) : random_atom_guard(rng, logic, opts);
}

AnyFormula random_formula(Logic logic, int size, std::uint64_t seed, const RandomOptions& opts) {
  std::mt19937_64 rng(seed);
  switch (logic) {
    case Logic::Xy: return random_xy(rng, size, opts);
    case Logic::Uitl: return random_uitl(rng, size, opts);
    case Logic::Ltl: return random_ltl(rng, size, opts);
    case Logic::Fp: return random_ltl(rng, size, opts, true);
    case Logic::AtNext: return random_atnext(rng, size, opts);
    case Logic::TlPlus: return random_tlplus(rng, size, opts);
    default: return random_counting(rng, logic, size, opts);
  }
}

}  // namespace tlwb
