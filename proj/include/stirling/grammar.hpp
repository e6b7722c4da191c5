#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/core_objects.hpp"
#include "stirling/polynomial.hpp"

namespace stirling {

class ParseError : public Error {
 public:
  enum class Kind { syntax, unknown_symbol, malformed_exponent, duplicate_rule };

  ParseError(Kind kind, int line, int column, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

std::string_view kind_name(ParseError::Kind kind);

/// Substitution rules symbol -> polynomial. Symbols without a rule are
/// constants and derive to zero.
class Grammar {
 public:
  /// Throws InvalidObject if the symbol already has a rule.
  void add_rule(const std::string& symbol, Polynomial rhs);
  void add_constant(const std::string& symbol);

  const Polynomial* rule(const std::string& symbol) const;
  const std::vector<std::string>& ruled() const { return order_; }
  const std::vector<std::string>& constants() const { return constants_; }
  bool empty() const { return order_.empty(); }

  /// Rule text that parse_grammar reads back to an equal grammar.
  std::string to_string() const;

  friend bool operator==(const Grammar& a, const Grammar& b);

 private:
  std::vector<std::string> order_;
  std::vector<Polynomial> rhs_;
  std::vector<std::string> constants_;
};

/// Statements are separated by newlines or ';':
///   sym -> polynomial
///   const a, b, c
/// '#' starts a comment. Polynomials use integers, symbols, + - * ^ and
/// parentheses; exponents are nonnegative integer literals. A symbol on a
/// right-hand side must have a rule or be declared const.
Grammar parse_grammar(std::string_view source);

/// A single polynomial expression in the same syntax; any symbol is allowed.
Polynomial parse_polynomial(std::string_view source);

/// Substitution maps "sym -> polynomial" in the rule syntax; no symbol
/// checks.
std::vector<std::pair<std::string, Polynomial>> parse_substitution(std::string_view source);

/// The derivation D with D(s) = rule(s), extended by linearity and the
/// product rule.
Polynomial derive(const Grammar& grammar, const Polynomial& p);
Polynomial derive_n(const Grammar& grammar, const Polynomial& p, int times);

/// Built-in grammars "G", "H", "I", "G1", "G2"; the last two need k >= 1.
/// Throws InvalidObject for an unknown name or a missing k.
Grammar builtin(std::string_view name, std::optional<int> k = std::nullopt);

/// Symbol names used by the built-ins: x1..x{k+1} and e1..e{k+1}.
std::string indexed(const std::string& stem, int i);

}  // namespace stirling
