#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <regex>
#include <sstream>

#include "mc_fixtures.hpp"
#include "scan_oracles.hpp"
#include "tlwb/atnext_translate.hpp"
#include "tlwb/automaton.hpp"
#include "tlwb/desugar.hpp"
#include "tlwb/eval.hpp"
#include "tlwb/guard_elim.hpp"
#include "tlwb/metrics.hpp"
#include "tlwb/oracle.hpp"
#include "tlwb/ranker.hpp"
#include "tlwb/syntax.hpp"
#include "tlwb/uitl_translate.hpp"

using namespace tlwb;

namespace {

struct Bounds {
  std::uint64_t seed = 1;
  double scale = 1.0;
  int len_delta = 0;

  int n(int full) const { return std::max(1, static_cast<int>(full * scale)); }
  int len(int full) const { return std::max(1, full + len_delta); }
};

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(const std::string& why) { return {false, why}; }

const OracleOptions kPointwise{.parallel = true, .mode = EquivMode::Pointwise};

std::string shown(const std::optional<Word>& w) { return w ? w->str() : "-"; }

Outcome c1_unique_parsing(const Bounds& b) {
  std::mt19937_64 rng(b.seed);
  const auto words = enumerate_words(Alphabet("abc"), b.len(6));
  const int count = b.n(500);
  for (int k = 0; k < count; ++k) {
    XyFormula f = random_xy(rng, 1 + k % 12);
    for (const auto& w : words) {
      if (fast_check(w, f) != eval_xy(w, 1, f)) return fail(print_formula(f) + " on " + w.str());
    }
  }
  return {true, std::to_string(count) + " formulas x " + std::to_string(words.size()) + " words"};
}

Outcome c2_worked_example(const Bounds&) {
  Word w("abadbc");
  XyFormula f = parse_xy("EP(Y{a}(!X{b} TOP | NEXT c))");
  auto l1 = lpos(w, Ranker::from_formula(parse_xy("EP(Y{a} X{b} TOP)")));
  auto l2 = lpos(w, Ranker::from_formula(parse_xy("EP(Y{a} NEXT TOP)")));
  WitnessSystem sys = witness_system(f);
  auto mu = sys.valuation(w);
  const bool verdict = fast_check(w, f);
  std::ostringstream d;
  d << "lpos=" << (l1 ? *l1 : 0) << "," << (l2 ? *l2 : 0) << " mu=(" << mu[0] << "," << mu[1] << ") verdict=" << verdict;
  const bool ok = l1 == 5 && l2 == 4 && sys.bindings.size() == 2 && mu[0] && !mu[1] && !verdict && !eval_xy(w, 1, f);
  return {ok, d.str()};
}

Outcome c3_small_model(const Bounds& b) {
  std::mt19937_64 rng(b.seed + 3);
  std::mt19937_64 pick(b.seed + 33);
  const int count = b.n(200);
  int satisfiable = 0, shrunk = 0;
  for (int k = 0; k < count; ++k) {
    XyFormula f = random_xy(rng, 1 + k % 8);
    const int bound = static_cast<int>(size(f));
    const Alphabet sigma = search_alphabet(f);
    Verdict v = brute_sat(f, sigma, bound);
    if (v.kind != Verdict::Kind::Sat) continue;
    ++satisfiable;
    std::vector<Word> models{*v.word};
    std::uniform_int_distribution<std::size_t> letter(0, sigma.size() - 1);
    for (int t = 0; t < 200; ++t) {
      std::string s;
      for (int i = 0; i < 2 * bound + 2; ++i) s.push_back(sigma[letter(pick)]);
      if (eval_xy(Word(s), 1, f)) {
        models.emplace_back(s);
        break;
      }
    }
    for (const auto& m : models) {
      Word small = shrink_model(m, f);
      ++shrunk;
      if (small.length() > bound || !eval_xy(small, 1, f)) {
        return fail(print_formula(f) + " shrinks " + m.str() + " to " + small.str());
      }
    }
  }
  return {true, std::to_string(satisfiable) + " satisfiable, " + std::to_string(shrunk) + " models shrunk"};
}

Outcome c4_sat_xy(const Bounds& b) {
  std::mt19937_64 rng(b.seed + 4);
  const int count = b.n(200);
  int sat = 0;
  for (int k = 0; k < count; ++k) {
    XyFormula f = random_xy(rng, 1 + k % 8);
    auto w = sat_xy(f);
    Verdict v = brute_sat(f, search_alphabet(f), static_cast<int>(size(f)));
    if (w.has_value() != (v.kind == Verdict::Kind::Sat)) {
      return fail(print_formula(f) + " sat_xy=" + shown(w) + " brute=" + shown(v.word));
    }
    if (w && !eval_xy(*w, 1, f)) return fail(print_formula(f) + " witness " + w->str() + " does not satisfy");
    sat += w.has_value();
  }
  return {true, std::to_string(count) + " formulas, " + std::to_string(sat) + " SAT"};
}

Outcome c5_directionality(const Bounds& b) {
  std::mt19937_64 rng(b.seed + 5);
  const auto words = enumerate_words(Alphabet("abc"), b.len(7));
  const int count = b.n(300);
  double c = 0;
  for (int k = 0; k < count; ++k) {
    Ranker r = Ranker::from_formula(random_ranker(rng, 1 + k % 6));
    const double base = static_cast<double>(size(r.to_formula()));
    for (Rel rel : {Rel::Lt, Rel::Le, Rel::Gt, Rel::Ge}) {
      XyFormula p = directionality(r, rel);
      c = std::max(c, static_cast<double>(size(p)) / base);
      for (const auto& w : words) {
        auto l = lpos(w, r);
        if (!l) continue;
        auto sat = satisfaction_set(w, p);
        for (int i = 1; i <= w.length(); ++i) {
          const bool expect = rel == Rel::Lt ? i < *l : rel == Rel::Le ? i <= *l : rel == Rel::Gt ? i > *l : i >= *l;
          if (sat[static_cast<std::size_t>(i)] != expect) {
            return fail(print_ranker(r) + " on " + w.str() + " at " + std::to_string(i));
          }
        }
      }
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "c=%.2f", c);
  return {true, std::to_string(count) + " rankers, " + buf};
}

Outcome c6_uitl(const Bounds& b) {
  constexpr double kRatioLimit = 10.0;
  std::mt19937_64 rng(b.seed + 6);
  const Alphabet abcd("abcd");
  const int len = b.len(6);
  const int count = b.n(200);
  RandomOptions opts;
  opts.alphabet = "abcd";
  double ratio = 0, sugared = 0;
  auto run = [&](const UitlFormula& f) -> std::optional<std::string> {
    XyFormula t = trans_uitl(f, abcd);
    const double n = static_cast<double>(size(desugar(f, abcd)));
    const double m = static_cast<double>(size(f));
    ratio = std::max(ratio, static_cast<double>(size(t)) / (n * n));
    sugared = std::max(sugared, static_cast<double>(size(t)) / (m * m));
    Verdict v = check_equiv(f, t, abcd, len);
    if (v.kind != Verdict::Kind::Equal) return print_formula(f) + " on " + v.word->str();
    return std::nullopt;
  };
  for (const char* text : {"(TOP L{c} ALO{a}) F{b} TOP", "(TOP L{b} !ALO{^c}) L{a} TOP"}) {
    if (auto e = run(parse_uitl(text))) return fail(*e);
  }
  auto mono = [](const Word& w) { return std::regex_match(w.str(), std::regex("[acd]*ca*b[abcd]*")); };
  if (check_language(parse_uitl("(TOP L{c} ALO{a}) F{b} TOP"), mono, abcd, len).kind != Verdict::Kind::Equal) {
    return fail("monomial language mismatch");
  }
  for (int k = 0; k < count; ++k) {
    if (auto e = run(random_uitl(rng, 1 + k % 10, opts))) return fail(*e);
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max size(Trans)/size^2 = %.3f over core syntax (limit %.0f), %.3f counting ALO/UNIT as 1",
                ratio, kRatioLimit, sugared);
  return {ratio <= kRatioLimit, std::to_string(count + 2) + " formulas, " + buf};
}

Outcome c7_atnext(const Bounds& b) {
  std::mt19937_64 rng(b.seed + 7);
  const Alphabet abc("abc");
  const int len = b.len(6);
  const int count = b.n(300);
  for (int k = 0; k < count; ++k) {
    LtlFormula f = random_ltl(rng, 1 + k % 10);
    AtNextFormula a = ltl_to_atnext(f);
    if (recursion_depth(a) > us_depth(f)) return fail("depth grows on " + print_formula(f));
    Verdict v = check_equiv(f, a, abc, len, kPointwise);
    if (v.kind != Verdict::Kind::Equal) return fail("alpha " + print_formula(f) + " on " + v.word->str());
    AtNextFormula g = random_atnext(rng, 1 + k % 10);
    v = check_equiv(g, atnext_to_ltl(g), abc, len, kPointwise);
    if (v.kind != Verdict::Kind::Equal) return fail("beta " + print_formula(g) + " on " + v.word->str());
  }
  return {true, std::to_string(count) + " + " + std::to_string(count) + " formulas, 0 depth violations"};
}

Outcome c8_convexity(const Bounds& b) {
  std::mt19937_64 rng(b.seed + 8);
  const auto words = enumerate_words(Alphabet("abc"), b.len(8));
  const int count = b.n(500);
  for (int k = 0; k < count; ++k) {
    AtNextFormula r = random_recursive_ranker(rng, 2 + k % 9);
    for (const auto& w : words) {
      if (auto v = convexity_check(w, r)) {
        return fail(print_formula(r) + " on " + w.str() + " at " + std::to_string(v->i) + "<" + std::to_string(v->k) +
                    "<" + std::to_string(v->j));
      }
    }
  }
  return {true, std::to_string(count) + " rankers x " + std::to_string(words.size()) + " words, 0 violations"};
}

Outcome c9_fixtures(const Bounds& b) {
  const Alphabet abc("abc");
  for (int k = 2; k <= 3; ++k) {
    Verdict v = check_language(stair_formula(k), [k](const Word& w) { return stair_language(w, k); }, abc, b.len(8));
    if (v.kind != Verdict::Kind::Equal) return fail("Stair_" + std::to_string(k) + " on " + v.word->str());
  }
  CountingFormula psi = parse_counting("(b & {c} U b) -> P(a & {c} S a)");
  CountingFormula u2 = bthtl_to_invtl(CountingFormula::conj(psi, counting::unary(CountingTag::Op::G, psi)));
  if (sublogic_violation(u2, Logic::InvTL)) return fail("U2 formula is not InvTL");
  Verdict v = check_language(u2, fixtures::u2_scan, abc, b.len(7));
  if (v.kind != Verdict::Kind::Equal) return fail("U2 on " + v.word->str());
  return {true, "Stair_2, Stair_3 to length " + std::to_string(b.len(8)) + ", U2 to " + std::to_string(b.len(7))};
}

Outcome c10_guard_elim(const Bounds& b) {
  std::mt19937_64 rng(b.seed + 10);
  const Alphabet abc("abc");
  const int len = b.len(7);
  const int count = b.n(150);
  std::size_t growth = 0;
  for (int k = 0; k < count; ++k) {
    CountingFormula f = random_counting(rng, Logic::BThTL, 1 + k % 7);
    CountingFormula g = bthtl_to_invtl(f);
    growth = std::max(growth, modal_depth(g) - std::min(modal_depth(g), modal_depth(f)));
    if (auto e = sublogic_violation(g, Logic::InvTL)) return fail("BThTL output not InvTL: " + *e);
    Verdict v = check_equiv(f, g, abc, len, kPointwise);
    if (v.kind != Verdict::Kind::Equal) return fail(print_formula(f) + " on " + v.word->str());
  }
  for (int k = 0; k < count; ++k) {
    CountingFormula f = random_counting(rng, Logic::BLinTL, 1 + k % 6);
    CountingFormula g = blintl_to_invmodtl(f);
    if (auto e = sublogic_violation(g, Logic::InvModTL)) return fail("BLinTL output not InvModTL: " + *e);
    Verdict v = check_equiv(f, g, abc, len, kPointwise);
    if (v.kind != Verdict::Kind::Equal) return fail(print_formula(f) + " on " + v.word->str());
  }
  return {true, std::to_string(count) + " BThTL + " + std::to_string(count) + " BLinTL, words <= " + std::to_string(len) +
                    ", max BThTL modal-depth growth " + std::to_string(growth)};
}

Outcome c11_automaton(const Bounds& b) {
  std::mt19937_64 rng(b.seed + 11);
  const Alphabet abc("abc");
  const auto words = enumerate_words(abc, b.len(6));
  const int bound = b.len(8);
  const int count = b.n(100);
  int sat = 0;
  for (int k = 0; k < count; ++k) {
    CountingFormula f = random_counting(rng, Logic::InvModTL, 1 + k % 7);
    FormulaAutomaton a(f, abc);
    for (const auto& w : words) {
      if (a.run_exists(w) != eval_blintl(w, 1, f)) return fail(print_formula(f) + " on " + w.str());
    }
    SatResult s = sat_automaton(f, {}, abc);
    Verdict v = brute_sat(f, abc, bound);
    if (s.witness && !eval_blintl(*s.witness, 1, f)) return fail("witness does not replay: " + print_formula(f));
    const bool auto_sat = s.witness && s.witness->length() <= bound;
    if (auto_sat != (v.kind == Verdict::Kind::Sat)) {
      return fail(print_formula(f) + " automaton=" + shown(s.witness) + " brute=" + shown(v.word));
    }
    sat += s.witness.has_value();
  }
  return {true, std::to_string(count) + " formulas, " + std::to_string(sat) + " SAT"};
}

Outcome c12_closure(const Bounds&) {
  std::string counts;
  for (int q = 2; q <= 8; ++q) {
    Guard g = parse_guard("#[a] in {1} mod " + std::to_string(q));
    CountingFormula f = counting::until(g, CountingFormula::atom('b'));
    const std::size_t m = counter_markers(closure(f), g);
    counts += (q > 2 ? "," : "") + std::to_string(m);
    if (m != static_cast<std::size_t>(q)) return fail("q=" + std::to_string(q) + " gives " + std::to_string(m));
  }
  return {true, "markers for q=2..8: " + counts};
}

Outcome c13_size(const Bounds&) {
  const std::size_t s = size(parse_counting("<!(#[bc]>1) & #[a]=17> U a"));
  return {s == 6, "size = " + std::to_string(s)};
}

Outcome c14_model_checking(const Bounds& b) {
  const auto all = fixtures::load_mc_fixtures(std::filesystem::path(TLWB_FIXTURE_DIR) / "mc");
  if (all.size() != 20) return fail("expected 20 fixtures, found " + std::to_string(all.size()));
  int fails = 0;
  for (const auto& fx : all) {
    KripkeStructure k = parse_kripke(fx.text);
    CountingFormula f = parse_counting(fx.formula);
    ModelCheckResult r = mc_kripke(k, f);
    bool enumerated = true;
    for (const auto& w : k.generated_words(b.len(6))) enumerated = enumerated && eval_blintl(w, 1, f);
    if (r.holds != fx.holds || r.holds != enumerated) return fail(fx.name + " verdict mismatch");
    if (!r.holds) {
      ++fails;
      if (r.counterexample->str() != fx.counterexample || eval_blintl(*r.counterexample, 1, f)) {
        return fail(fx.name + " counterexample " + r.counterexample->str());
      }
    }
  }
  return {true, "20 fixtures, " + std::to_string(fails) + " counterexamples replayed"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria 1-14"};
  Bounds b;
  int jobs = 0;
  std::vector<int> only;
  app.add_option("--seed", b.seed);
  app.add_option("--scale", b.scale, "Fraction of each random corpus")->check(CLI::Range(0.001, 1.0));
  app.add_option("--len-delta", b.len_delta, "Added to every word-length bound");
  app.add_option("--only", only, "Criteria to run");
  app.add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  if (jobs > 0) omp_set_num_threads(jobs);

  const std::vector<std::pair<const char*, std::function<Outcome(const Bounds&)>>> criteria{
      {"unique parsing: fast_check == eval_xy", c1_unique_parsing},
      {"worked example lpos/mu/verdict", c2_worked_example},
      {"small model via shrink_model", c3_small_model},
      {"sat_xy agrees with brute_sat", c4_sat_xy},
      {"ranker directionality", c5_directionality},
      {"UITL compiler equivalence and size", c6_uitl},
      {"AtNext translations and depth", c7_atnext},
      {"convexity of recursive rankers", c8_convexity},
      {"Stair and U2 fixtures", c9_fixtures},
      {"guard elimination equivalence", c10_guard_elim},
      {"automaton soundness", c11_automaton},
      {"closure accounting", c12_closure},
      {"size metric worked example", c13_size},
      {"Kripke model checking", c14_model_checking},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second(b);
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s  %s [%s] (%.1fs)\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
