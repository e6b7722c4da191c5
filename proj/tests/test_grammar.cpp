#include <gtest/gtest.h>

#include <random>

#include "stirling/grammar.hpp"

namespace {

using stirling::Grammar;
using stirling::ParseError;
using stirling::Polynomial;

Polynomial parse(const std::string& s) { return stirling::parse_polynomial(s); }

ParseError parse_failure(const std::string& source) {
  try {
    stirling::parse_grammar(source);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << source;
  return ParseError(ParseError::Kind::syntax, 0, 0, "");
}

TEST(Parse, DumontGrammar) {
  const Grammar g = stirling::parse_grammar("x -> x*y*z; y -> x*y*z; z -> x*y*z");
  EXPECT_EQ(g, stirling::builtin("G"));
  EXPECT_EQ(g.ruled(), (std::vector<std::string>{"x", "y", "z"}));
}

TEST(Parse, CoefficientsCommentsAndConstants) {
  const Grammar h = stirling::parse_grammar("# change of grammar\nu -> 3*w\nv -> 2*u*w\nw -> v*w\n");
  EXPECT_EQ(*h.rule("u"), parse("3*w"));
  EXPECT_EQ(h, stirling::builtin("H"));
  const Grammar c = stirling::parse_grammar("const a, b\nx -> a*x + b");
  EXPECT_EQ(c.constants(), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(stirling::derive(c, parse("a")).is_zero());
  EXPECT_EQ(stirling::derive(c, parse("x^2")), parse("2*a*x^2 + 2*b*x"));
}

TEST(Parse, ErrorsCarryKindAndPosition) {
  const ParseError unknown = parse_failure("x -> y");
  EXPECT_EQ(unknown.kind(), ParseError::Kind::unknown_symbol);
  EXPECT_EQ(unknown.line(), 1);
  EXPECT_EQ(unknown.column(), 6);

  const ParseError exponent = parse_failure("x -> x^y");
  EXPECT_EQ(exponent.kind(), ParseError::Kind::malformed_exponent);
  EXPECT_EQ(exponent.line(), 1);

  const ParseError negative = parse_failure("x -> x^-1");
  EXPECT_EQ(negative.kind(), ParseError::Kind::malformed_exponent);

  const ParseError duplicate = parse_failure("x -> x\nx -> x^2");
  EXPECT_EQ(duplicate.kind(), ParseError::Kind::duplicate_rule);
  EXPECT_EQ(duplicate.line(), 2);
  EXPECT_EQ(duplicate.column(), 1);

  EXPECT_EQ(parse_failure("x -> (x").kind(), ParseError::Kind::syntax);
  EXPECT_EQ(parse_failure("x => x").kind(), ParseError::Kind::syntax);
  EXPECT_EQ(parse_failure("x -> x $").kind(), ParseError::Kind::syntax);
  EXPECT_EQ(stirling::kind_name(ParseError::Kind::duplicate_rule), "duplicate rule");
}

TEST(Parse, PrinterRoundTrip) {
  for (const char* name : {"G", "H", "I"}) {
    const Grammar g = stirling::builtin(name);
    EXPECT_EQ(stirling::parse_grammar(g.to_string()), g) << name;
  }
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(stirling::parse_grammar(stirling::builtin("G1", k).to_string()), stirling::builtin("G1", k));
    EXPECT_EQ(stirling::parse_grammar(stirling::builtin("G2", k).to_string()), stirling::builtin("G2", k));
  }
  const Grammar c = stirling::parse_grammar("const a\nx -> -a*x^2 + 7");
  EXPECT_EQ(stirling::parse_grammar(c.to_string()), c);
}

TEST(Parse, Substitution) {
  const auto s = stirling::parse_substitution("u -> x+y+z\nw -> x*y*z");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].first, "u");
  EXPECT_EQ(s[1].second, parse("x*y*z"));
}

TEST(Builtins, Rules) {
  EXPECT_EQ(*stirling::builtin("I").rule("p2"), parse("p3"));
  const Grammar g1 = stirling::builtin("G1", 2);
  for (const char* s : {"x1", "x2", "x3"}) EXPECT_EQ(*g1.rule(s), parse("x1*x2*x3"));
  EXPECT_EQ(*stirling::builtin("G2", 3).rule("e2"), parse("3*e1*e4"));
  EXPECT_EQ(*stirling::builtin("G2", 3).rule("e1"), parse("4*e4"));
  EXPECT_THROW(stirling::builtin("G1"), stirling::InvalidObject);
  EXPECT_THROW(stirling::builtin("G2", 0), stirling::InvalidObject);
  EXPECT_THROW(stirling::builtin("Q"), stirling::InvalidObject);
}

TEST(Derive, Examples) {
  EXPECT_EQ(stirling::derive(stirling::builtin("G"), parse("x")), parse("x*y*z"));
  EXPECT_EQ(stirling::derive_n(stirling::builtin("I"), parse("p3"), 3), parse("p1^3*p3 + 24*p1*p2*p3^2 + 6*p3^3"));
  EXPECT_TRUE(stirling::derive(Grammar{}, parse("x^2 + y")).is_zero());
  EXPECT_EQ(stirling::derive_n(stirling::builtin("G"), parse("x"), 0), parse("x"));
  EXPECT_EQ(stirling::derive_n(stirling::builtin("H"), parse("w"), 2), parse("v^2*w + 2*u*w^2"));
  EXPECT_EQ(stirling::derive_n(stirling::builtin("H"), parse("w"), 3), parse("v^3*w + 8*u*v*w^2 + 6*w^3"));
}

TEST(Derive, FifthDerivativeOfSecondGrammar) {
  EXPECT_EQ(stirling::derive_n(stirling::builtin("G2", 4), parse("x1"), 5),
            parse("e4^4*e5 + 22*e4^2*e3*e5^2 + 16*e3^2*e5^3 + 42*e2*e4*e5^3 + 24*e1*e5^4"));
  EXPECT_EQ(stirling::derive_n(stirling::builtin("G2", 3), parse("x1"), 5),
            parse("e3^4*e4 + 22*e3^2*e2*e4^2 + 16*e2^2*e4^3 + 42*e1*e3*e4^3 + 24*e4^4"));
}

TEST(ChangeOfGrammar, DumontViaH) {
  const std::map<std::string, Polynomial> uvw{{"u", parse("x+y+z")}, {"v", parse("x*y+y*z+z*x")}, {"w", parse("x*y*z")}};
  const Grammar g = stirling::builtin("G");
  const Grammar h = stirling::builtin("H");
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(stirling::derive_n(h, parse("w"), n - 1).substitute(uvw), stirling::derive_n(g, parse("x"), n)) << n;
  }
}

TEST(ChangeOfGrammar, IViaH) {
  const std::map<std::string, Polynomial> rename{{"w", parse("p3")}, {"v", parse("p1")}, {"u", parse("3*p2")}};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(stirling::derive_n(stirling::builtin("I"), parse("p3"), n - 1),
              stirling::derive_n(stirling::builtin("H"), parse("w"), n - 1).substitute(rename))
        << n;
  }
}

TEST(ChangeOfGrammar, ElementaryGrammarAgainstProductGrammar) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = std::max(1, n - 2); k <= 5; ++k) {
      std::map<std::string, Polynomial> e;
      std::vector<std::string> xs;
      for (int i = 1; i <= k + 1; ++i) xs.push_back(stirling::indexed("x", i));
      for (int i = 1; i <= k + 1; ++i) e[stirling::indexed("e", i)] = stirling::elementary(i, xs);
      const Polynomial via_e = stirling::derive_n(stirling::builtin("G2", k), parse("x1"), n).substitute(e);
      EXPECT_EQ(via_e, stirling::derive_n(stirling::builtin("G1", k), parse("x1"), n)) << n << "," << k;
    }
  }
}

Polynomial random_over(std::mt19937& rng, const std::vector<std::string>& vars) {
  Polynomial p(vars);
  for (int t = 0; t < 4; ++t) {
    stirling::Exponents e(vars.size());
    for (auto& x : e) x = rng() % 3;
    p.add_term(e, static_cast<long>(rng() % 11) - 5);
  }
  return p;
}

TEST(Derive, LeibnizAndLinearity) {
  std::mt19937 rng(55);
  const std::vector<std::pair<Grammar, std::vector<std::string>>> cases{
      {stirling::builtin("G"), {"x", "y", "z"}},
      {stirling::builtin("H"), {"u", "v", "w"}},
      {stirling::builtin("I"), {"p1", "p2", "p3"}},
      {stirling::builtin("G2", 3), {"x1", "e1", "e2", "e3", "e4"}},
      {stirling::parse_grammar("const c\na -> a*b + c; b -> -2*a^2"), {"a", "b", "c"}},
  };
  for (const auto& [g, vars] : cases) {
    for (int trial = 0; trial < 40; ++trial) {
      const Polynomial p = random_over(rng, vars);
      const Polynomial q = random_over(rng, vars);
      EXPECT_EQ(stirling::derive(g, p * q), stirling::derive(g, p) * q + p * stirling::derive(g, q));
      EXPECT_EQ(stirling::derive(g, p.scaled(3) - q.scaled(7)),
                stirling::derive(g, p).scaled(3) - stirling::derive(g, q).scaled(7));
    }
  }
}

}  // namespace
