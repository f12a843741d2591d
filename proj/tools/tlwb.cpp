#include <omp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tlwb/atnext_translate.hpp"
#include "tlwb/automaton.hpp"
#include "tlwb/eval.hpp"
#include "tlwb/guard_elim.hpp"
#include "tlwb/metrics.hpp"
#include "tlwb/oracle.hpp"
#include "tlwb/ranker.hpp"
#include "tlwb/syntax.hpp"
#include "tlwb/uitl_translate.hpp"

using namespace tlwb;

namespace {

constexpr int kOk = 0;
constexpr int kParseFailed = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Logic logic_arg(const std::string& name) {
  auto l = logic_from_name(name);
  if (!l) throw UsageError("unknown logic '" + name + "'");
  return *l;
}

template <class Tag>
std::size_t depth(const Formula<Tag>& f) {
  std::size_t d = 0;
  for (const auto& c : f.children()) d = std::max(d, depth(c));
  return d + 1;
}

std::size_t any_size(const AnyFormula& f) {
  return std::visit([](const auto& g) { return size(g); }, f);
}

std::size_t any_depth(const AnyFormula& f) {
  return std::visit([](const auto& g) { return depth(g); }, f);
}

Alphabet any_letters(const AnyFormula& f) {
  return std::visit([](const auto& g) { return letters_of(g); }, f);
}

Alphabet search_letters(const AnyFormula& f, const std::string& given) {
  if (!given.empty()) return Alphabet(given);
  Alphabet a = any_letters(f);
  if (auto fresh = a.fresh_letter()) a = a.merged(Alphabet(std::string(1, *fresh)));
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_parse_error(const ParseError& e) {
  std::cerr << "parse error at " << e.line() << ':' << e.column() << ": expected ";
  for (std::size_t i = 0; i < e.expected().size(); ++i) std::cerr << (i ? " or " : "") << e.expected()[i];
  std::cerr << ", found " << e.found() << '\n';
}

int cmd_parse(const std::string& logic, const std::string& text) {
  AnyFormula f = parse_formula(text, logic_arg(logic));
  std::cout << print_formula(f, {.full_parens = true}) << '\n';
  std::cout << "size: " << any_size(f) << '\n' << "depth: " << any_depth(f) << '\n';
  return kOk;
}

int cmd_eval(const std::string& logic, const std::string& word, int pos, const std::vector<int>& interval,
             const std::string& text) {
  AnyFormula f = parse_formula(text, logic_arg(logic));
  Word w = parse_word(word);
  bool value = false;
  if (auto* u = std::get_if<UitlFormula>(&f)) {
    Interval iv{1, w.length()};
    if (interval.size() == 2) iv = {interval[0], interval[1]};
    if (iv.lo < 1 || iv.hi > w.length() || iv.lo > iv.hi) throw UsageError("interval outside the word");
    value = eval_uitl(w, iv, *u);
  } else {
    if (!interval.empty()) throw UsageError("--interval applies to uitl only");
    if (!w.in_domain(pos)) throw UsageError("position outside the word");
    value = std::visit(
        [&](const auto& g) -> bool {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, XyFormula>) return eval_xy(w, pos, g);
          else if constexpr (std::is_same_v<T, LtlFormula>) return eval_ltl(w, pos, g);
          else if constexpr (std::is_same_v<T, AtNextFormula>) return eval_atnext(w, pos, g);
          else if constexpr (std::is_same_v<T, CountingFormula>) return eval_blintl(w, pos, g);
          else return false;
        },
        f);
  }
  std::cout << (value ? "true" : "false") << '\n';
  return kOk;
}

int cmd_sat(const std::string& logic, std::string method, int max_len, std::size_t budget,
            const std::string& alphabet, const std::string& text) {
  const Logic l = logic_arg(logic);
  AnyFormula f = parse_formula(text, l);
  if (method.empty()) {
    method = family_of(l) == Family::Xy ? "small-model" : family_of(l) == Family::Counting ? "automaton" : "bruteforce";
  }
  if (method == "small-model") {
    auto* x = std::get_if<XyFormula>(&f);
    if (!x) throw UsageError("small-model applies to xy only");
    if (auto w = sat_xy(*x)) std::cout << "SAT " << w->str() << '\n';
    else std::cout << "UNSAT\n";
  } else if (method == "automaton") {
    auto* c = std::get_if<CountingFormula>(&f);
    if (!c) throw UsageError("automaton applies to the counting logics only");
    SatResult r = sat_automaton(*c, {.budget = budget}, alphabet.empty() ? Alphabet{} : Alphabet(alphabet));
    if (r.witness) std::cout << "SAT " << r.witness->str() << '\n';
    else std::cout << "UNSAT\n";
  } else if (method == "bruteforce") {
    const int bound = max_len > 0 ? max_len : static_cast<int>(any_size(f));
    Verdict v = brute_sat(f, search_letters(f, alphabet), bound);
    if (v.kind == Verdict::Kind::Sat) std::cout << "SAT " << v.word->str() << '\n';
    else std::cout << "NoneFound(" << v.bound << ")\n";
  } else {
    throw UsageError("unknown method '" + method + "'");
  }
  return kOk;
}

int cmd_translate(const std::string& from, const std::string& to, const std::string& alphabet,
                  const std::string& text) {
  const std::string pair = from + "->" + to;
  std::string out;
  if (pair == "uitl->xy") {
    out = print_formula(trans_uitl(std::get<UitlFormula>(parse_formula(text, Logic::Uitl)),
                                   alphabet.empty() ? Alphabet{} : Alphabet(alphabet)));
  } else if (pair == "ltl->atnext") {
    out = print_formula(ltl_to_atnext(std::get<LtlFormula>(parse_formula(text, Logic::Ltl))));
  } else if (pair == "atnext->ltl") {
    out = print_formula(atnext_to_ltl(std::get<AtNextFormula>(parse_formula(text, Logic::AtNext))));
  } else if (pair == "tlplus->fp") {
    out = print_formula(tlplus_to_fp(std::get<AtNextFormula>(parse_formula(text, Logic::TlPlus))));
  } else if (pair == "bthtl->invtl") {
    out = print_formula(bthtl_to_invtl(std::get<CountingFormula>(parse_formula(text, Logic::BThTL))));
  } else if (pair == "blintl->invmodtl") {
    out = print_formula(blintl_to_invmodtl(std::get<CountingFormula>(parse_formula(text, Logic::BLinTL))));
  } else {
    throw UsageError("unsupported translation " + from + " -> " + to);
  }
  std::cout << out << '\n';
  return kOk;
}

int cmd_equiv(const std::string& l1, const std::string& f1, const std::string& l2, const std::string& f2,
              const std::string& alphabet, int max_len, bool pointwise) {
  AnyFormula a = parse_formula(f1, logic_arg(l1));
  AnyFormula b = parse_formula(f2, logic_arg(l2.empty() ? l1 : l2));
  Alphabet sigma = alphabet.empty() ? any_letters(a).merged(any_letters(b)) : Alphabet(alphabet);
  Verdict v = check_equiv(a, b, sigma, max_len, {.mode = pointwise ? EquivMode::Pointwise : EquivMode::Language});
  if (v.kind == Verdict::Kind::Equal) {
    std::cout << "Equal\n";
  } else {
    std::cout << "Counterexample " << v.word->str();
    if (v.point) std::cout << ' ' << v.point->lo << ' ' << v.point->hi;
    std::cout << ' ' << (v.lhs ? "true" : "false") << ' ' << (v.rhs ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_mc(const std::string& path, std::size_t budget, bool stats, const std::string& text) {
  KripkeStructure k = parse_kripke(read_file(path));
  CountingFormula f = std::get<CountingFormula>(parse_formula(text, Logic::BLinTL));
  ModelCheckResult r = mc_kripke(k, f, {.budget = budget});
  if (r.holds) std::cout << "HOLDS\n";
  else std::cout << "COUNTEREXAMPLE " << r.counterexample->str() << '\n';
  if (stats) std::cerr << AutomatonStats::csv_header() << '\n' << r.stats.csv_row() << '\n';
  return kOk;
}

int cmd_automaton(const std::string& logic, std::size_t budget, bool stats, bool header, bool direct,
                  const std::string& text) {
  CountingFormula f = std::get<CountingFormula>(parse_formula(text, logic_arg(logic)));
  AutomatonOptions opts{.budget = budget, .direct_thresholds = direct};
  if (!stats) {
    FormulaAutomaton a(f, letters_of(f), opts);
    std::cout << print_formula(a.compiled()) << '\n';
    std::cout << "tracked: " << a.tracked_formulas() << '\n' << "counters: " << a.counters().size() << '\n';
    return kOk;
  }
  SatResult r = sat_automaton(f, opts);
  if (header) std::cout << AutomatonStats::csv_header() << '\n';
  std::cout << r.stats.csv_row() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal logic workbench"};
  app.require_subcommand(1);
  int jobs = 0;
  std::size_t budget = std::size_t{1} << 20;
  app.add_option("--jobs", jobs, "Worker threads for word enumeration")->check(CLI::PositiveNumber);

  std::string logic = "xy", logic2, word, method, alphabet, from, to, kripke;
  std::string text, text2;
  int pos = 1, max_len = 0;
  std::vector<int> interval;
  bool stats = false, no_header = false, pointwise = false, direct = false;

  auto* parse = app.add_subcommand("parse", "Parse and dump a formula");
  parse->add_option("--logic", logic)->required();
  parse->add_option("formula", text)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a formula on a word");
  eval->add_option("--logic", logic)->required();
  eval->add_option("--word", word)->required();
  auto* pos_opt = eval->add_option("--pos", pos);
  eval->add_option("--interval", interval)->expected(2)->excludes(pos_opt);
  eval->add_option("formula", text)->required();

  auto* sat = app.add_subcommand("sat", "Decide satisfiability");
  sat->add_option("--logic", logic)->required();
  sat->add_option("--method", method)->check(CLI::IsMember({"small-model", "automaton", "bruteforce"}));
  sat->add_option("--max-len", max_len)->check(CLI::PositiveNumber);
  sat->add_option("--budget", budget)->check(CLI::PositiveNumber);
  sat->add_option("--alphabet", alphabet);
  sat->add_option("formula", text)->required();

  auto* translate = app.add_subcommand("translate", "Translate between logics");
  translate->add_option("--from", from)->required();
  translate->add_option("--to", to)->required();
  translate->add_option("--alphabet", alphabet);
  translate->add_option("formula", text)->required();

  auto* equiv = app.add_subcommand("equiv", "Bounded language equivalence");
  equiv->add_option("--logic", logic)->required();
  equiv->add_option("--logic2", logic2);
  equiv->add_option("--alphabet", alphabet);
  equiv->add_option("--max-len", max_len)->default_val(6)->check(CLI::PositiveNumber);
  equiv->add_flag("--pointwise", pointwise, "Compare at every position");
  equiv->add_option("formula1", text)->required();
  equiv->add_option("formula2", text2)->required();

  auto* mc = app.add_subcommand("mc", "Model-check a Kripke structure");
  mc->add_option("--kripke", kripke)->required();
  mc->add_option("--budget", budget)->check(CLI::PositiveNumber);
  mc->add_flag("--stats", stats, "Statistics CSV on stderr");
  mc->add_option("formula", text)->required();

  auto* automaton = app.add_subcommand("automaton", "Formula automaton statistics");
  automaton->add_option("--logic", logic)->default_val("blintl");
  automaton->add_option("--budget", budget)->check(CLI::PositiveNumber);
  automaton->add_flag("--stats", stats, "CSV row of closure and atom statistics");
  automaton->add_flag("--no-header", no_header);
  automaton->add_flag("--direct-thresholds", direct);
  automaton->add_option("formula", text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (jobs > 0) omp_set_num_threads(jobs);

  try {
    if (*parse) return cmd_parse(logic, text);
    if (*eval) return cmd_eval(logic, word, pos, interval, text);
    if (*sat) return cmd_sat(logic, method, max_len, budget, alphabet, text);
    if (*translate) return cmd_translate(from, to, alphabet, text);
    if (*equiv) return cmd_equiv(logic, text, logic2, text2, alphabet, max_len, pointwise);
    if (*mc) return cmd_mc(kripke, budget, stats, text);
    if (*automaton) return cmd_automaton(logic, budget, stats, !no_header, direct, text);
  } catch (const ParseError& e) {
    print_parse_error(e);
    return *parse ? kParseFailed : kUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return *parse ? kParseFailed : kUsage;
  }
  return kUsage;
}
