#include "tlwb/syntax.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tlwb {

ParseError::ParseError(int line, int column, std::vector<std::string> expected, std::string found)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << line << ":" << column << ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
          if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
          os << expected[i];
        }
        os << ", found " << found;
        return os.str();
      }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok { Upper, Lower, Number, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto run = [&](auto pred) {
    std::size_t j = i;
    while (j < src.size() && pred(src[j])) ++j;
    return j - i;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    Token t{Tok::Sym, "", line, col};
    if (c >= 'A' && c <= 'Z') {
      std::size_t n = run([](char x) { return x >= 'A' && x <= 'Z'; });
      t.kind = Tok::Upper;
      t.text = std::string(src.substr(i, n));
      advance(n);
    } else if (c >= 'a' && c <= 'z') {
      std::size_t n = run([](char x) { return x >= 'a' && x <= 'z'; });
      t.kind = Tok::Lower;
      t.text = std::string(src.substr(i, n));
      advance(n);
    } else if ((c >= '0' && c <= '9') ||
               (c == '-' && i + 1 < src.size() && src[i + 1] >= '0' && src[i + 1] <= '9')) {
      std::size_t start = i;
      advance(1);
      std::size_t n = run([](char x) { return x >= '0' && x <= '9'; });
      advance(n);
      t.kind = Tok::Number;
      t.text = std::string(src.substr(start, i - start));
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      t.text = "->";
      advance(2);
    } else if ((c == '<' || c == '>') && i + 1 < src.size() && src[i + 1] == '=') {
      t.text = std::string(1, c) + "=";
      advance(2);
    } else if (std::string_view("(){}[]!&|<>=,#^").find(c) != std::string_view::npos) {
      t.text = std::string(1, c);
      advance(1);
    } else {
      std::string shown = (c >= 33 && c < 127) ? std::string(1, c)
                                                : "byte " + std::to_string(static_cast<unsigned char>(c));
      throw ParseError(line, col, {"a token"}, "'" + shown + "'");
    }
    out.push_back(std::move(t));
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view src) : toks_(lex(src)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool is_sym(std::string_view s, std::size_t k = 0) const {
    return peek(k).kind == Tok::Sym && peek(k).text == s;
  }
  bool is_upper(std::string_view s, std::size_t k = 0) const {
    return peek(k).kind == Tok::Upper && peek(k).text == s;
  }
  bool is_lower(std::string_view s) const { return peek().kind == Tok::Lower && peek().text == s; }
  bool accept(std::string_view s) {
    if (!is_sym(s)) return false;
    next();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail({"'" + std::string(s) + "'"});
  }
  void expect_lower(std::string_view s) {
    if (!is_lower(s)) fail({"'" + std::string(s) + "'"});
    next();
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail({"end of input"});
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().line, peek().column, std::move(expected), describe(peek()));
  }

  Letter letter() {
    if (peek().kind != Tok::Lower || peek().text.size() != 1) fail({"a letter"});
    return next().text[0];
  }
  BigInt number() {
    if (peek().kind != Tok::Number) fail({"a number"});
    return BigInt(next().text);
  }
  // Optional '^' then optional run of letters, up to (not including) the closer.
  LetterSet set_body() {
    bool complemented = accept("^");
    std::string letters;
    if (peek().kind == Tok::Lower) letters = next().text;
    return LetterSet(letters, complemented);
  }
  LetterSet bracket_set() {
    expect("[");
    LetterSet s = set_body();
    expect("]");
    return s;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

class GuardParser {
 public:
  explicit GuardParser(Cursor& c) : c_(c) {}

  Guard parse() {
    Guard g = conj();
    while (c_.accept("|")) g = Guard::disj(g, conj());
    return g;
  }

 private:
  Guard conj() {
    Guard g = unary();
    while (c_.accept("&")) g = Guard::conj(g, unary());
    return g;
  }

  Guard unary() {
    if (c_.accept("!")) return Guard::negate(unary());
    if (c_.accept("(")) {
      Guard g = parse();
      c_.expect(")");
      return g;
    }
    if (c_.is_upper("TRUE")) {
      c_.next();
      return Guard::truth(true);
    }
    if (c_.is_upper("FALSE")) {
      c_.next();
      return Guard::truth(false);
    }
    const Token at = c_.peek();
    try {
      return constraint();
    } catch (const std::invalid_argument& e) {
      throw ParseError(at.line, at.column, {"a valid constraint"}, e.what());
    }
  }

  Guard constraint() {
    if (c_.is_sym("#")) {
      c_.next();
      LetterSet s = c_.bracket_set();
      if (c_.is_lower("in")) return modulo_tail({{1, s}});
      if (c_.accept("=")) return Guard::count_equals(s, c_.number());
      if (c_.accept("<")) return Guard::threshold(s, std::nullopt, Guard::Bound{c_.number(), true});
      if (c_.accept("<=")) return Guard::threshold(s, std::nullopt, Guard::Bound{c_.number(), false});
      if (c_.accept(">")) return Guard::threshold(s, Guard::Bound{c_.number(), true}, std::nullopt);
      if (c_.accept(">=")) return Guard::threshold(s, Guard::Bound{c_.number(), false}, std::nullopt);
      c_.fail({"'='", "'<'", "'<='", "'>'", "'>='", "'in'"});
    }
    if (c_.peek().kind == Tok::Number) {
      BigInt t = c_.number();
      bool strict_lo;
      if (c_.accept("<")) strict_lo = true;
      else if (c_.accept("<=")) strict_lo = false;
      else c_.fail({"'<'", "'<='"});
      c_.expect("#");
      LetterSet s = c_.bracket_set();
      std::optional<Guard::Bound> upper;
      if (c_.is_sym("<") && c_.peek(1).kind == Tok::Number) {
        c_.next();
        upper = Guard::Bound{c_.number(), true};
      } else if (c_.is_sym("<=") && c_.peek(1).kind == Tok::Number) {
        c_.next();
        upper = Guard::Bound{c_.number(), false};
      }
      return Guard::threshold(s, Guard::Bound{t, strict_lo}, upper);
    }
    if (c_.is_lower("sum")) {
      c_.next();
      c_.expect("(");
      std::vector<Guard::Term> terms;
      do {
        BigInt coeff = 1;
        if (c_.peek().kind == Tok::Number) coeff = c_.number();
        c_.expect("#");
        terms.push_back({coeff, c_.bracket_set()});
      } while (c_.accept(","));
      c_.expect(")");
      return modulo_tail(std::move(terms));
    }
    c_.fail({"a guard"});
  }

  Guard modulo_tail(std::vector<Guard::Term> terms) {
    c_.expect_lower("in");
    c_.expect("{");
    std::vector<BigInt> residues;
    if (!c_.is_sym("}")) {
      do residues.push_back(c_.number());
      while (c_.accept(","));
    }
    c_.expect("}");
    c_.expect_lower("mod");
    BigInt q = c_.number();
    return Guard::modulo(std::move(terms), std::move(residues), std::move(q));
  }

  Cursor& c_;
};

template <class Tag>
class FormulaParser {
 public:
  using F = Formula<Tag>;
  using Op = typename Tag::Op;

  explicit FormulaParser(std::string_view src) : c_(src) {}

  F parse() {
    F f = implies();
    c_.expect_end();
    return f;
  }

 private:
  F implies() {
    F l = disj();
    if (c_.accept("->")) return F::implies(l, implies());
    return l;
  }

  F disj() {
    F l = conj();
    while (c_.accept("|")) l = F::disj(l, conj());
    return l;
  }

  F conj() {
    F l = binop();
    while (c_.accept("&")) l = F::conj(l, binop());
    return l;
  }

  F binop() {
    if constexpr (std::is_same_v<Tag, UitlTag>) {
      F l = unary();
      for (;;) {
        Op op;
        if (c_.is_upper("F") && c_.is_sym("{", 1)) op = Op::First;
        else if (c_.is_upper("L") && c_.is_sym("{", 1)) op = Op::Last;
        else if (c_.is_upper("FP") && c_.is_sym("{", 1)) op = Op::FirstPast;
        else if (c_.is_upper("LM") && c_.is_sym("{", 1)) op = Op::LastMinus;
        else return l;
        c_.next();
        Letter a = braced_letter();
        l = uitl::chop(op, l, a, unary());
      }
    } else if constexpr (std::is_same_v<Tag, LtlTag>) {
      F l = unary();
      if (c_.is_upper("U")) {
        c_.next();
        return ltl::U(l, binop());
      }
      if (c_.is_upper("S")) {
        c_.next();
        return ltl::S(l, binop());
      }
      return l;
    } else if constexpr (std::is_same_v<Tag, CountingTag>) {
      F l = unary();
      if (c_.is_upper("UNTIL")) {
        c_.next();
        return F::make(Op::StrongUntil, {l, binop()});
      }
      return l;
    } else {
      return unary();
    }
  }

  Letter braced_letter() {
    c_.expect("{");
    Letter a = c_.letter();
    c_.expect("}");
    return a;
  }

  F unary() {
    if (c_.accept("!")) return F::negate(unary());
    if (c_.accept("(")) {
      F f = implies();
      c_.expect(")");
      return f;
    }
    if (c_.is_upper("TOP")) {
      c_.next();
      return F::top();
    }
    if (c_.peek().kind == Tok::Lower) return F::atom(c_.letter());
    if (auto f = family_unary()) return *f;
    c_.fail({"a formula"});
  }

  std::optional<F> prefix(Op op) {
    c_.next();
    return F::make(op, {unary()});
  }

  std::optional<F> family_unary() {
    const Token& t = c_.peek();
    if (t.kind != Tok::Upper && !(t.kind == Tok::Sym && (t.text == "<" || t.text == "{"))) {
      return std::nullopt;
    }
    const std::string word = t.text;
    if constexpr (std::is_same_v<Tag, XyTag>) {
      static const std::map<std::string, Op> indexed{{"X", Op::X}, {"Y", Op::Y}, {"XW", Op::XW}, {"YW", Op::YW}};
      static const std::map<std::string, Op> plain{{"NEXT", Op::Next}, {"PREV", Op::Prev}, {"SP", Op::SP}, {"EP", Op::EP}};
      if (auto it = indexed.find(word); it != indexed.end()) {
        c_.next();
        Letter a = braced_letter();
        return F::make(it->second, {unary()}, a);
      }
      if (auto it = plain.find(word); it != plain.end()) return prefix(it->second);
    } else if constexpr (std::is_same_v<Tag, UitlTag>) {
      static const std::map<std::string, Op> plain{{"OPLUS", Op::OPlus}, {"OMINUS", Op::OMinus},
                                                   {"OPLUSB", Op::OPlusBar}, {"OMINUSB", Op::OMinusBar},
                                                   {"SP", Op::SP}, {"EP", Op::EP}};
      if (auto it = plain.find(word); it != plain.end()) return prefix(it->second);
      if (word == "PT") {
        c_.next();
        return uitl::pt();
      }
      if (word == "UNIT") {
        c_.next();
        return uitl::unit();
      }
      if (word == "ALO") {
        c_.next();
        c_.expect("{");
        LetterSet s = c_.set_body();
        c_.expect("}");
        return uitl::alo(s);
      }
    } else if constexpr (std::is_same_v<Tag, LtlTag>) {
      static const std::map<std::string, Op> plain{{"X", Op::X}, {"Y", Op::Y}, {"F", Op::F},
                                                   {"P", Op::P}, {"G", Op::G}, {"H", Op::H}};
      if (auto it = plain.find(word); it != plain.end()) return prefix(it->second);
    } else if constexpr (std::is_same_v<Tag, AtNextTag>) {
      if (word == "X" || word == "Y") {
        c_.next();
        c_.expect("[");
        F guard = implies();
        c_.expect("]");
        F body = unary();
        return word == "X" ? atnext::X(guard, body) : atnext::Y(guard, body);
      }
      if (word == "SP") return prefix(Op::SP);
      if (word == "EP") return prefix(Op::EP);
    } else if constexpr (std::is_same_v<Tag, CountingTag>) {
      static const std::map<std::string, Op> plain{{"X", Op::X}, {"Y", Op::Y}, {"F", Op::F},
                                                   {"P", Op::P}, {"G", Op::G}, {"H", Op::H}};
      if (auto it = plain.find(word); it != plain.end()) return prefix(it->second);
      if (word == "NOW") {
        c_.next();
        c_.expect("(");
        const Token at = c_.peek();
        Guard g = GuardParser(c_).parse();
        if (!is_pure_modulo_guard(g)) throw ParseError(at.line, at.column, {"a modulo constraint"}, "another guard");
        c_.expect(")");
        return counting::now(g);
      }
      if (t.kind == Tok::Sym && word == "<") {
        c_.next();
        Guard g = GuardParser(c_).parse();
        c_.expect(">");
        bool until = direction();
        F body = unary();
        return until ? counting::until(g, body) : counting::since(g, body);
      }
      if (t.kind == Tok::Sym && word == "{") {
        c_.next();
        LetterSet s = c_.set_body();
        c_.expect("}");
        bool until = direction();
        F body = unary();
        return until ? counting::set_until(s, body) : counting::set_since(s, body);
      }
    }
    return std::nullopt;
  }

  bool direction() {
    if (c_.is_upper("U")) {
      c_.next();
      return true;
    }
    if (c_.is_upper("S")) {
      c_.next();
      return false;
    }
    c_.fail({"'U'", "'S'"});
  }

  Cursor c_;
};

// Printing.

std::string render_set(const LetterSet& s, char open, char close) {
  std::string out(1, open);
  if (s.complemented()) out += '^';
  out += s.listed();
  out += close;
  return out;
}

std::string render_bound_op(bool strict, bool less) {
  if (less) return strict ? "<" : "<=";
  return strict ? ">" : ">=";
}

int guard_level(const Guard& g) {
  if (g.kind() == Guard::Kind::Or) return 0;
  if (g.kind() == Guard::Kind::And) return 1;
  return 2;
}

std::string render_guard(const Guard& g, int min_level) {
  using K = Guard::Kind;
  std::string s;
  switch (g.kind()) {
    case K::True: s = "TRUE"; break;
    case K::False: s = "FALSE"; break;
    case K::Simple: s = "#" + render_set(g.set(), '[', ']') + "=0"; break;
    case K::Threshold: {
      std::string count = "#" + render_set(g.set(), '[', ']');
      const auto& lo = g.lower();
      const auto& hi = g.upper();
      if (lo && hi && !lo->strict && !hi->strict && lo->value == hi->value && lo->value > 0) {
        s = count + "=" + lo->value.str();
      } else if (lo && hi) {
        s = lo->value.str() + render_bound_op(lo->strict, true) + count + render_bound_op(hi->strict, true) +
            hi->value.str();
      } else if (lo) {
        s = count + render_bound_op(lo->strict, false) + lo->value.str();
      } else if (hi) {
        s = count + render_bound_op(hi->strict, true) + hi->value.str();
      } else {
        s = count + ">=0";
      }
      break;
    }
    case K::Modulo: {
      auto terms = g.terms();
      if (terms.size() == 1 && terms[0].coeff == 1) {
        s = "#" + render_set(terms[0].set, '[', ']');
      } else {
        s = "sum(";
        for (std::size_t i = 0; i < terms.size(); ++i) {
          if (i > 0) s += ",";
          s += terms[i].coeff.str() + "#" + render_set(terms[i].set, '[', ']');
        }
        s += ")";
      }
      s += " in {";
      auto rs = g.residues();
      for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i > 0) s += ",";
        s += rs[i].str();
      }
      s += "} mod " + g.modulus().str();
      break;
    }
    case K::Not: s = "!" + render_guard(g.child(0), 2); break;
    case K::And: s = render_guard(g.child(0), 1) + " & " + render_guard(g.child(1), 2); break;
    case K::Or: s = render_guard(g.child(0), 0) + " | " + render_guard(g.child(1), 1); break;
  }
  if (guard_level(g) < min_level) return "(" + s + ")";
  return s;
}

template <class Tag>
class Printer {
 public:
  using F = Formula<Tag>;
  using Op = typename Tag::Op;

  explicit Printer(PrintOptions opts) : opts_(opts) {}

  std::string print(const F& f, int min_level, bool child) const {
    std::string s = render(f);
    bool wrap = level(f) < min_level || (opts_.full_parens && child && !atomic(f));
    return wrap ? "(" + s + ")" : s;
  }

 private:
  static int level(const F& f) {
    switch (f.op()) {
      case Op::Implies: return 0;
      case Op::Or: return 1;
      case Op::And: return 2;
      default: break;
    }
    if constexpr (std::is_same_v<Tag, UitlTag>) {
      if (f.op() == Op::First || f.op() == Op::Last || f.op() == Op::FirstPast || f.op() == Op::LastMinus) return 3;
    }
    if constexpr (std::is_same_v<Tag, LtlTag>) {
      if (f.op() == Op::Until || f.op() == Op::Since) return 3;
    }
    if constexpr (std::is_same_v<Tag, CountingTag>) {
      if (f.op() == Op::StrongUntil) return 3;
    }
    return 4;
  }

  static bool atomic(const F& f) {
    if (f.op() == Op::Top || f.op() == Op::Atom) return true;
    if constexpr (std::is_same_v<Tag, UitlTag>) {
      return f.op() == Op::Pt || f.op() == Op::Unit || f.op() == Op::Alo;
    }
    if constexpr (std::is_same_v<Tag, CountingTag>) return f.op() == Op::Now;
    return false;
  }

  std::string prefix(const std::string& name, const F& operand) const {
    std::string s = print(operand, 4, true);
    if (s.front() == '(' || name == "!") return name + s;
    return name + " " + s;
  }

  std::string bracketed(const std::string& name, const F& operand) const {
    return name + "(" + print(operand, 0, false) + ")";
  }

  std::string infix(const F& f, const std::string& sym, int left_level, int right_level) const {
    return print(f.child(0), left_level, true) + " " + sym + " " + print(f.child(1), right_level, true);
  }

  std::string render(const F& f) const {
    switch (f.op()) {
      case Op::Top: return "TOP";
      case Op::Atom: return std::string(1, f.letter());
      case Op::Not: return prefix("!", f.child(0));
      case Op::Implies: return infix(f, "->", 1, 0);
      case Op::Or: return infix(f, "|", 1, 2);
      case Op::And: return infix(f, "&", 2, 3);
      default: break;
    }
    const std::string idx = std::string("{") + f.letter() + "}";
    if constexpr (std::is_same_v<Tag, XyTag>) {
      switch (f.op()) {
        case Op::X: return prefix("X" + idx, f.child(0));
        case Op::Y: return prefix("Y" + idx, f.child(0));
        case Op::XW: return prefix("XW" + idx, f.child(0));
        case Op::YW: return prefix("YW" + idx, f.child(0));
        case Op::Next: return prefix("NEXT", f.child(0));
        case Op::Prev: return prefix("PREV", f.child(0));
        case Op::SP: return bracketed("SP", f.child(0));
        case Op::EP: return bracketed("EP", f.child(0));
        default: break;
      }
    } else if constexpr (std::is_same_v<Tag, UitlTag>) {
      switch (f.op()) {
        case Op::Pt: return "PT";
        case Op::Unit: return "UNIT";
        case Op::Alo: return "ALO" + render_set(f.letters(), '{', '}');
        case Op::SP: return bracketed("SP", f.child(0));
        case Op::EP: return bracketed("EP", f.child(0));
        case Op::First: return infix(f, "F" + idx, 3, 4);
        case Op::Last: return infix(f, "L" + idx, 3, 4);
        case Op::FirstPast: return infix(f, "FP" + idx, 3, 4);
        case Op::LastMinus: return infix(f, "LM" + idx, 3, 4);
        case Op::OPlus: return prefix("OPLUS", f.child(0));
        case Op::OMinus: return prefix("OMINUS", f.child(0));
        case Op::OPlusBar: return prefix("OPLUSB", f.child(0));
        case Op::OMinusBar: return prefix("OMINUSB", f.child(0));
        default: break;
      }
    } else if constexpr (std::is_same_v<Tag, LtlTag>) {
      switch (f.op()) {
        case Op::X: return prefix("X", f.child(0));
        case Op::Y: return prefix("Y", f.child(0));
        case Op::F: return prefix("F", f.child(0));
        case Op::P: return prefix("P", f.child(0));
        case Op::G: return prefix("G", f.child(0));
        case Op::H: return prefix("H", f.child(0));
        case Op::Until: return infix(f, "U", 4, 3);
        case Op::Since: return infix(f, "S", 4, 3);
        default: break;
      }
    } else if constexpr (std::is_same_v<Tag, AtNextTag>) {
      switch (f.op()) {
        case Op::X: return prefix("X[" + print(f.child(0), 0, false) + "]", f.child(1));
        case Op::Y: return prefix("Y[" + print(f.child(0), 0, false) + "]", f.child(1));
        case Op::SP: return bracketed("SP", f.child(0));
        case Op::EP: return bracketed("EP", f.child(0));
        default: break;
      }
    } else if constexpr (std::is_same_v<Tag, CountingTag>) {
      switch (f.op()) {
        case Op::X: return prefix("X", f.child(0));
        case Op::Y: return prefix("Y", f.child(0));
        case Op::F: return prefix("F", f.child(0));
        case Op::P: return prefix("P", f.child(0));
        case Op::G: return prefix("G", f.child(0));
        case Op::H: return prefix("H", f.child(0));
        case Op::Now: return "NOW(" + render_guard(f.guard(), 0) + ")";
        case Op::Until: return "<" + render_guard(f.guard(), 0) + "> U " + print(f.child(0), 4, true);
        case Op::Since: return "<" + render_guard(f.guard(), 0) + "> S " + print(f.child(0), 4, true);
        case Op::SetUntil: return render_set(f.letters(), '{', '}') + " U " + print(f.child(0), 4, true);
        case Op::SetSince: return render_set(f.letters(), '{', '}') + " S " + print(f.child(0), 4, true);
        case Op::StrongUntil: return infix(f, "UNTIL", 4, 3);
        default: break;
      }
    }
    return "?";
  }

  PrintOptions opts_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

XyFormula parse_xy(std::string_view text) { return FormulaParser<XyTag>(text).parse(); }
UitlFormula parse_uitl(std::string_view text) { return FormulaParser<UitlTag>(text).parse(); }
LtlFormula parse_ltl(std::string_view text) { return FormulaParser<LtlTag>(text).parse(); }
AtNextFormula parse_atnext(std::string_view text) { return FormulaParser<AtNextTag>(text).parse(); }
CountingFormula parse_counting(std::string_view text) { return FormulaParser<CountingTag>(text).parse(); }

Guard parse_guard(std::string_view text) {
  Cursor c(text);
  Guard g = GuardParser(c).parse();
  c.expect_end();
  return g;
}

AnyFormula parse_formula(std::string_view text, Logic logic) {
  switch (family_of(logic)) {
    case Family::Xy:
      return parse_xy(text);
    case Family::Uitl:
      return parse_uitl(text);
    case Family::Ltl: {
      LtlFormula f = parse_ltl(text);
      if (auto v = sublogic_violation(f, logic)) throw FragmentError(*v);
      return f;
    }
    case Family::AtNext: {
      AtNextFormula f = parse_atnext(text);
      if (logic == Logic::TlPlus && !is_tlplus(f)) {
        throw FragmentError("formula is outside TL+: rankers may not use booleans or bare letters");
      }
      return f;
    }
    case Family::Counting: {
      CountingFormula f = parse_counting(text);
      if (auto v = sublogic_violation(f, logic)) throw FragmentError(*v);
      return f;
    }
  }
  throw std::logic_error("unknown logic family");
}

std::string print_formula(const XyFormula& f, PrintOptions o) { return Printer<XyTag>(o).print(f, 0, false); }
std::string print_formula(const UitlFormula& f, PrintOptions o) { return Printer<UitlTag>(o).print(f, 0, false); }
std::string print_formula(const LtlFormula& f, PrintOptions o) { return Printer<LtlTag>(o).print(f, 0, false); }
std::string print_formula(const AtNextFormula& f, PrintOptions o) { return Printer<AtNextTag>(o).print(f, 0, false); }
std::string print_formula(const CountingFormula& f, PrintOptions o) {
  return Printer<CountingTag>(o).print(f, 0, false);
}
std::string print_formula(const AnyFormula& f, PrintOptions o) {
  return std::visit([&](const auto& g) { return print_formula(g, o); }, f);
}

std::string print_guard(const Guard& g) { return render_guard(g, 0); }
std::string print_letter_set(const LetterSet& s) { return render_set(s, '{', '}'); }

Word parse_word(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) throw EmptyWordError();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!is_letter(t[i])) throw ParseError(1, static_cast<int>(i + 1), {"a letter"}, "'" + std::string(1, t[i]) + "'");
  }
  return Word(std::string(t));
}

std::vector<Word> parse_words(std::string_view text) {
  std::vector<Word> out;
  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view l = trim(text.substr(start, end - start));
    if (!l.empty()) {
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (!is_letter(l[i])) throw ParseError(line, static_cast<int>(i + 1), {"a letter"}, "'" + std::string(1, l[i]) + "'");
      }
      out.emplace_back(std::string(l));
    }
    start = end + 1;
  }
  return out;
}

KripkeStructure parse_kripke(std::string_view text) {
  KripkeStructure k;
  std::map<std::string, int> index;
  std::vector<bool> labelled;
  int line = 0;
  auto state = [&](std::string_view name, int col) {
    auto it = index.find(std::string(name));
    if (it == index.end()) throw ParseError(line, col, {"a declared state"}, "'" + std::string(name) + "'");
    return it->second;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view l = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    l = trim(l);
    if (l.empty()) continue;
    std::size_t colon = l.find(':');
    if (colon == std::string_view::npos) throw ParseError(line, 1, {"'section:'"}, "'" + std::string(l) + "'");
    std::string section(trim(l.substr(0, colon)));
    int col = static_cast<int>(colon + 2);
    auto items = split_ws(l.substr(colon + 1));
    if (section == "states") {
      for (auto name : items) {
        bool ok = std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
        if (!ok) throw ParseError(line, col, {"a state name"}, "'" + std::string(name) + "'");
        if (index.count(std::string(name))) throw ParseError(line, col, {"a new state name"}, "'" + std::string(name) + "'");
        index[std::string(name)] = k.state_count();
        k.names.emplace_back(name);
        k.labels.push_back(0);
        k.successors.emplace_back();
        labelled.push_back(false);
      }
    } else if (section == "labels") {
      for (auto item : items) {
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos || eq + 2 != item.size() || !is_letter(item[eq + 1])) {
          throw ParseError(line, col, {"state=letter"}, "'" + std::string(item) + "'");
        }
        int s = state(item.substr(0, eq), col);
        k.labels[s] = item[eq + 1];
        labelled[s] = true;
      }
    } else if (section == "edges") {
      for (auto item : items) {
        std::size_t arrow = item.find("->");
        if (arrow == std::string_view::npos) throw ParseError(line, col, {"state->state"}, "'" + std::string(item) + "'");
        int from = state(item.substr(0, arrow), col);
        int to = state(item.substr(arrow + 2), col);
        auto& succ = k.successors[from];
        if (std::find(succ.begin(), succ.end(), to) == succ.end()) succ.push_back(to);
      }
    } else if (section == "initial" || section == "final") {
      auto& target = section == "initial" ? k.initial : k.final;
      for (auto name : items) {
        int s = state(name, col);
        if (std::find(target.begin(), target.end(), s) == target.end()) target.push_back(s);
      }
    } else {
      throw ParseError(line, 1, {"states", "labels", "edges", "initial", "final"}, "'" + section + "'");
    }
  }
  for (int s = 0; s < k.state_count(); ++s) {
    if (!labelled[s]) throw ParseError(line, 1, {"a label for state " + k.names[s]}, "end of input");
  }
  if (k.state_count() == 0) throw ParseError(line, 1, {"states"}, "end of input");
  if (k.initial.empty()) throw ParseError(line, 1, {"an initial state"}, "end of input");
  if (k.final.empty()) throw ParseError(line, 1, {"a final state"}, "end of input");
  return k;
}

}  // namespace tlwb
