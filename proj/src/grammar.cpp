#include "stirling/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <set>

namespace stirling {

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + std::string(kind_name(kind)) + ": " +
            message),
      kind_(kind),
      line_(line),
      column_(column) {}

std::string_view kind_name(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::syntax: return "syntax error";
    case ParseError::Kind::unknown_symbol: return "unknown symbol";
    case ParseError::Kind::malformed_exponent: return "malformed exponent";
    case ParseError::Kind::duplicate_rule: return "duplicate rule";
  }
  return "error";
}

namespace {

enum class Tok { ident, integer, arrow, plus, minus, star, caret, lparen, rparen, comma, sep, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::sep: return t.text == ";" ? "';'" : "end of line";
    case Tok::end: return "end of input";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t c = 0; c < count; ++c) {
      if (src[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    const int l = line;
    const int col = column;
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (c == '\n' || c == ';') {
      out.push_back({Tok::sep, std::string(1, c), l, col});
      advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), l, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::integer, std::string(src.substr(i, j - i)), l, col});
      advance(j - i);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::arrow, "->", l, col});
      advance(2);
    } else {
      Tok kind;
      switch (c) {
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '^': kind = Tok::caret; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case ',': kind = Tok::comma; break;
        default:
          throw ParseError(ParseError::Kind::syntax, l, col, std::string("unexpected character '") + c + "'");
      }
      out.push_back({kind, std::string(1, c), l, col});
      advance(1);
    }
  }
  out.push_back({Tok::end, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  struct SymbolUse {
    std::string name;
    int line;
    int column;
  };

  Grammar grammar() {
    Grammar g;
    std::vector<SymbolUse> uses;
    std::set<std::string> known;
    while (peek().kind != Tok::end) {
      if (accept(Tok::sep)) continue;
      const Token head = expect(Tok::ident, "a rule or const declaration");
      if (head.text == "const" && peek().kind == Tok::ident) {
        do {
          const Token sym = expect(Tok::ident, "a symbol");
          if (g.rule(sym.text) == nullptr) g.add_constant(sym.text);
          known.insert(sym.text);
        } while (accept(Tok::comma));
      } else {
        expect(Tok::arrow, "'->'");
        uses_ = {};
        Polynomial rhs = expression();
        if (g.rule(head.text) != nullptr) {
          throw ParseError(ParseError::Kind::duplicate_rule, head.line, head.column,
                           "'" + head.text + "' already has a rule");
        }
        g.add_rule(head.text, std::move(rhs));
        known.insert(head.text);
        uses.insert(uses.end(), uses_.begin(), uses_.end());
      }
      end_statement();
    }
    for (const auto& u : uses) {
      if (known.count(u.name) == 0) {
        throw ParseError(ParseError::Kind::unknown_symbol, u.line, u.column,
                         "'" + u.name + "' has no rule and is not declared const");
      }
    }
    return g;
  }

  Polynomial single() {
    while (accept(Tok::sep)) {
    }
    Polynomial p = expression();
    while (accept(Tok::sep)) {
    }
    if (peek().kind != Tok::end) fail(peek(), "end of input");
    return p;
  }

  std::vector<std::pair<std::string, Polynomial>> substitution() {
    std::vector<std::pair<std::string, Polynomial>> out;
    std::set<std::string> seen;
    while (peek().kind != Tok::end) {
      if (accept(Tok::sep)) continue;
      const Token head = expect(Tok::ident, "a symbol");
      expect(Tok::arrow, "'->'");
      if (!seen.insert(head.text).second) {
        throw ParseError(ParseError::Kind::duplicate_rule, head.line, head.column,
                         "'" + head.text + "' is mapped twice");
      }
      out.emplace_back(head.text, expression());
      end_statement();
    }
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const Token& t, const std::string& wanted) const {
    throw ParseError(ParseError::Kind::syntax, t.line, t.column, "expected " + wanted + ", found " + describe(t));
  }

  Token expect(Tok kind, const std::string& wanted) {
    if (peek().kind != kind) fail(peek(), wanted);
    return tokens_[pos_++];
  }

  void end_statement() {
    if (peek().kind != Tok::sep && peek().kind != Tok::end) fail(peek(), "end of statement");
  }

  Polynomial expression() {
    Polynomial p = term();
    for (;;) {
      if (accept(Tok::plus)) {
        p += term();
      } else if (accept(Tok::minus)) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    while (accept(Tok::star)) p *= unary();
    return p;
  }

  Polynomial unary() {
    if (accept(Tok::minus)) return -unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept(Tok::caret)) return base;
    const Token& e = peek();
    if (e.kind != Tok::integer) {
      throw ParseError(ParseError::Kind::malformed_exponent, e.line, e.column,
                       "exponent must be a nonnegative integer literal, found " + describe(e));
    }
    const Integer value(e.text);
    if (value > UINT_MAX) {
      throw ParseError(ParseError::Kind::malformed_exponent, e.line, e.column, "exponent " + e.text + " is too large");
    }
    ++pos_;
    if (peek().kind == Tok::caret) {
      throw ParseError(ParseError::Kind::malformed_exponent, peek().line, peek().column,
                       "chained exponents need parentheses");
    }
    return base.pow(static_cast<unsigned>(value.get_ui()));
  }

  Polynomial atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::integer:
        ++pos_;
        return Polynomial::constant(Integer(t.text));
      case Tok::ident:
        ++pos_;
        uses_.push_back({t.text, t.line, t.column});
        return Polynomial::variable(t.text);
      case Tok::lparen: {
        ++pos_;
        Polynomial p = expression();
        expect(Tok::rparen, "')'");
        return p;
      }
      default:
        fail(t, "a number, symbol or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<SymbolUse> uses_;
};

}  // namespace

void Grammar::add_rule(const std::string& symbol, Polynomial rhs) {
  if (rule(symbol) != nullptr) throw InvalidObject("'" + symbol + "' already has a rule");
  constants_.erase(std::remove(constants_.begin(), constants_.end(), symbol), constants_.end());
  order_.push_back(symbol);
  rhs_.push_back(std::move(rhs));
}

void Grammar::add_constant(const std::string& symbol) {
  if (rule(symbol) != nullptr) throw InvalidObject("'" + symbol + "' has a rule");
  if (std::find(constants_.begin(), constants_.end(), symbol) == constants_.end()) constants_.push_back(symbol);
}

const Polynomial* Grammar::rule(const std::string& symbol) const {
  const auto it = std::find(order_.begin(), order_.end(), symbol);
  return it == order_.end() ? nullptr : &rhs_[static_cast<std::size_t>(it - order_.begin())];
}

std::string Grammar::to_string() const {
  std::string out;
  if (!constants_.empty()) {
    out += "const ";
    for (std::size_t i = 0; i < constants_.size(); ++i) {
      if (i > 0) out += ", ";
      out += constants_[i];
    }
    out += '\n';
  }
  for (std::size_t i = 0; i < order_.size(); ++i) {
    out += order_[i] + " -> " + rhs_[i].to_string() + '\n';
  }
  return out;
}

bool operator==(const Grammar& a, const Grammar& b) {
  if (a.order_.size() != b.order_.size()) return false;
  for (std::size_t i = 0; i < a.order_.size(); ++i) {
    const Polynomial* other = b.rule(a.order_[i]);
    if (other == nullptr || !(*other == a.rhs_[i])) return false;
  }
  std::set<std::string> ca(a.constants_.begin(), a.constants_.end());
  std::set<std::string> cb(b.constants_.begin(), b.constants_.end());
  return ca == cb;
}

Grammar parse_grammar(std::string_view source) { return Parser(source).grammar(); }

Polynomial parse_polynomial(std::string_view source) { return Parser(source).single(); }

std::vector<std::pair<std::string, Polynomial>> parse_substitution(std::string_view source) {
  return Parser(source).substitution();
}

Polynomial derive(const Grammar& grammar, const Polynomial& p) {
  Polynomial out(p.vars());
  for (const auto& symbol : p.vars()) {
    const Polynomial* rhs = grammar.rule(symbol);
    if (rhs == nullptr || rhs->is_zero()) continue;
    const Polynomial d = p.partial(symbol);
    if (!d.is_zero()) out += d * *rhs;
  }
  return out;
}

Polynomial derive_n(const Grammar& grammar, const Polynomial& p, int times) {
  if (times < 0) throw InvalidObject("derive_n needs a nonnegative count");
  Polynomial q = p;
  for (int i = 0; i < times; ++i) q = derive(grammar, q);
  return q;
}

std::string indexed(const std::string& stem, int i) { return stem + std::to_string(i); }

Grammar builtin(std::string_view name, std::optional<int> k) {
  using P = Polynomial;
  Grammar g;
  if (name == "G") {
    const P xyz = P::variable("x") * P::variable("y") * P::variable("z");
    for (const char* s : {"x", "y", "z"}) g.add_rule(s, xyz);
  } else if (name == "H") {
    g.add_rule("u", P::variable("w").scaled(3));
    g.add_rule("v", (P::variable("u") * P::variable("w")).scaled(2));
    g.add_rule("w", P::variable("v") * P::variable("w"));
  } else if (name == "I") {
    g.add_rule("p3", P::variable("p1") * P::variable("p3"));
    g.add_rule("p1", (P::variable("p2") * P::variable("p3")).scaled(6));
    g.add_rule("p2", P::variable("p3"));
  } else if (name == "G1" || name == "G2") {
    if (!k) throw InvalidObject(std::string(name) + " needs k");
    if (*k < 1) throw InvalidObject(std::string(name) + " needs k >= 1");
    const int top = *k + 1;
    if (name == "G1") {
      P product(1);
      for (int i = 1; i <= top; ++i) product *= P::variable(indexed("x", i));
      for (int i = 1; i <= top; ++i) g.add_rule(indexed("x", i), product);
    } else {
      const P e_top = P::variable(indexed("e", top));
      g.add_rule("x1", e_top);
      for (int i = 1; i <= top; ++i) {
        const P lower = i == 1 ? P(1) : P::variable(indexed("e", i - 1));
        g.add_rule(indexed("e", i), (lower * e_top).scaled(*k - i + 2));
      }
    }
  } else {
    throw InvalidObject("unknown grammar '" + std::string(name) + "' (expected G, H, I, G1 or G2)");
  }
  return g;
}

}  // namespace stirling
