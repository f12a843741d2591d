#include "tlwb/oracle.hpp"

#include <limits>

#include "tlwb/eval.hpp"

namespace tlwb {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::uint64_t first_index_serial(const Alphabet& alpha, int len, const std::function<bool(const Word&)>& pred) {
  const std::uint64_t n = words_of_length(alpha, len);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    if (pred(nth_word(alpha, len, idx))) return idx;
  }
  return kNone;
}

std::uint64_t first_index_parallel(const Alphabet& alpha, int len, const std::function<bool(const Word&)>& pred) {
  const auto n = static_cast<std::int64_t>(words_of_length(alpha, len));
  std::uint64_t found = kNone;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : found)
  for (std::int64_t idx = 0; idx < n; ++idx) {
    const auto u = static_cast<std::uint64_t>(idx);
    if (u < found && pred(nth_word(alpha, len, u))) found = u;
  }
  return found;
}

template <class F>
std::vector<bool> point_values(const Word& w, const F& f) {
  return satisfaction_set(w, f);
}

std::vector<bool> point_values(const Word& w, const UitlFormula& f) {
  const int n = w.length();
  std::vector<bool> out(static_cast<std::size_t>(n * n + 1));
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) out[static_cast<std::size_t>((i - 1) * n + j)] = eval_uitl(w, {i, j}, f);
  }
  return out;
}

std::vector<bool> values(const Word& w, const AnyFormula& f, EquivMode mode) {
  if (mode == EquivMode::Language) return {accepts_any(w, f)};
  return std::visit([&](const auto& g) { return point_values(w, g); }, f);
}

Interval point_of(const Word& w, const AnyFormula& f, EquivMode mode, std::size_t k) {
  const bool uitl = std::holds_alternative<UitlFormula>(f);
  const int n = w.length();
  if (mode == EquivMode::Language) return uitl ? Interval{1, n} : Interval{1, 1};
  if (!uitl) return {static_cast<int>(k), static_cast<int>(k)};
  const int i = static_cast<int>((k - 1) / static_cast<std::size_t>(n)) + 1;
  const int j = static_cast<int>(k) - (i - 1) * n;
  return {i, j};
}

std::optional<std::size_t> first_mismatch(const std::vector<bool>& a, const std::vector<bool>& b, EquivMode mode) {
  const std::size_t start = mode == EquivMode::Language ? 0 : 1;
  for (std::size_t k = start; k < a.size() && k < b.size(); ++k) {
    if (a[k] != b[k]) return k;
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t word_count(const Alphabet& alphabet, int max_len) {
  std::uint64_t total = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::uint64_t n = words_of_length(alphabet, len);
    if (n > kNone - total) return kNone;
    total += n;
  }
  return total;
}

std::vector<Word> enumerate_words(const Alphabet& alphabet, int max_len) {
  std::vector<Word> out;
  for (int len = 1; len <= max_len; ++len) {
    const std::uint64_t n = words_of_length(alphabet, len);
    for (std::uint64_t idx = 0; idx < n; ++idx) out.push_back(nth_word(alphabet, len, idx));
  }
  return out;
}

std::optional<Word> first_word(const Alphabet& alphabet, int max_len, const std::function<bool(const Word&)>& pred,
                               bool parallel) {
  for (int len = 1; len <= max_len; ++len) {
    const std::uint64_t idx =
        parallel ? first_index_parallel(alphabet, len, pred) : first_index_serial(alphabet, len, pred);
    if (idx != kNone) return nth_word(alphabet, len, idx);
  }
  return std::nullopt;
}

bool accepts_any(const Word& w, const AnyFormula& f) {
  return std::visit([&](const auto& g) { return accepts(w, g); }, f);
}

Verdict brute_sat(const AnyFormula& f, const Alphabet& alphabet, int max_len, OracleOptions opts) {
  Verdict v;
  v.bound = max_len;
  if (auto w = first_word(alphabet, max_len, [&](const Word& u) { return accepts_any(u, f); }, opts.parallel)) {
    v.kind = Verdict::Kind::Sat;
    v.word = *w;
    v.point = point_of(*w, f, EquivMode::Language, 0);
    v.lhs = true;
  }
  return v;
}

Verdict check_equiv(const AnyFormula& f1, const AnyFormula& f2, const Alphabet& alphabet, int max_len,
                    OracleOptions opts) {
  Verdict v;
  v.bound = max_len;
  v.kind = Verdict::Kind::Equal;
  auto differs = [&](const Word& w) {
    return first_mismatch(values(w, f1, opts.mode), values(w, f2, opts.mode), opts.mode).has_value();
  };
  if (auto w = first_word(alphabet, max_len, differs, opts.parallel)) {
    auto a = values(*w, f1, opts.mode);
    auto b = values(*w, f2, opts.mode);
    const std::size_t k = *first_mismatch(a, b, opts.mode);
    v.kind = Verdict::Kind::Counterexample;
    v.word = *w;
    v.point = point_of(*w, f1, opts.mode, k);
    v.lhs = a[k];
    v.rhs = b[k];
  }
  return v;
}

Verdict check_language(const AnyFormula& f, const std::function<bool(const Word&)>& member,
                       const Alphabet& alphabet, int max_len, OracleOptions opts) {
  Verdict v;
  v.bound = max_len;
  v.kind = Verdict::Kind::Equal;
  auto differs = [&](const Word& w) { return accepts_any(w, f) != member(w); };
  if (auto w = first_word(alphabet, max_len, differs, opts.parallel)) {
    v.kind = Verdict::Kind::Counterexample;
    v.word = *w;
    v.point = point_of(*w, f, EquivMode::Language, 0);
    v.lhs = accepts_any(*w, f);
    v.rhs = member(*w);
  }
  return v;
}

}  // namespace tlwb
