#include <gtest/gtest.h>

#include <random>

#include "stirling/grammar.hpp"
#include "stirling/polynomial.hpp"

namespace {

using stirling::Integer;
using stirling::Polynomial;

Polynomial var(const char* s) { return Polynomial::variable(s); }
Polynomial parse(const char* s) { return stirling::parse_polynomial(s); }

Polynomial random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int terms = 4, unsigned max_exp = 3) {
  Polynomial p(vars);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  for (int t = 0; t < terms; ++t) {
    stirling::Exponents e(vars.size());
    for (auto& x : e) x = exp(rng);
    p.add_term(e, coef(rng));
  }
  return p;
}

const std::vector<std::string> kXYZ{"x", "y", "z"};

TEST(Arithmetic, SmallIdentities) {
  EXPECT_EQ((var("x") + var("y")) * (var("x") - var("y")), parse("x^2 - y^2"));
  EXPECT_EQ(parse("x*y*z") * parse("x+y+z"), parse("x^2*y*z + x*y^2*z + x*y*z^2"));
  EXPECT_EQ(parse("3*x + 1") + Polynomial(0), parse("3*x + 1"));
  EXPECT_TRUE((var("x") - var("x")).is_zero());
  EXPECT_EQ(var("x").pow(0), Polynomial(1));
  EXPECT_EQ((var("x") + 1).pow(3), parse("x^3 + 3*x^2 + 3*x + 1"));
}

TEST(Arithmetic, EqualityIgnoresAlphabet) {
  Polynomial p(std::vector<std::string>{"a", "x"});
  p.add_term({0, 2}, 5);
  EXPECT_EQ(p, parse("5*x^2"));
  EXPECT_EQ(p.trimmed().vars(), (std::vector<std::string>{"x"}));
  EXPECT_EQ(parse("x+y").over({"y", "z", "x"}), parse("x+y"));
  EXPECT_THROW(parse("x+y").over({"x"}), stirling::InvalidObject);
}

TEST(Arithmetic, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_poly(rng, kXYZ);
    const Polynomial b = random_poly(rng, {"y", "w"});
    const Polynomial c = random_poly(rng, {"z", "x"});
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a + (-a)).is_zero());
    EXPECT_EQ(a * Polynomial(1), a);
    EXPECT_TRUE((a * Polynomial(0)).is_zero());
    EXPECT_EQ(a.scaled(3), a + a + a);
    EXPECT_EQ(a.pow(2), a * a);
  }
}

TEST(Arithmetic, BigCoefficientsStayExact) {
  const Polynomial p = (var("x") + 1).pow(100);
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), 100, 50);
  EXPECT_EQ(p.coefficient({{"x", 50}}), c);
  const Polynomial two = Polynomial::constant(Integer(2));
  EXPECT_EQ(two.pow(200).coefficient({}), Integer("1606938044258990275541962092341162602522202993782792835301376"));
}

TEST(Partial, Basics) {
  EXPECT_EQ(parse("x^2*y").partial("x"), parse("2*x*y"));
  EXPECT_TRUE(Polynomial(7).partial("x").is_zero());
  EXPECT_TRUE(parse("y^3").partial("x").is_zero());
  const Polynomial xyz = parse("x*y*z");
  const Polynomial dumont = xyz * (xyz.partial("x") + xyz.partial("y") + xyz.partial("z"));
  EXPECT_EQ(dumont, parse("x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2"));
}

TEST(Partial, CommuteAndProductRule) {
  std::mt19937 rng(8080);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_poly(rng, kXYZ);
    const Polynomial b = random_poly(rng, kXYZ);
    EXPECT_EQ(a.partial("x").partial("y"), a.partial("y").partial("x"));
    EXPECT_EQ((a * b).partial("z"), a.partial("z") * b + a * b.partial("z"));
  }
}

TEST(Substitute, ChangeOfVariables) {
  const std::map<std::string, Polynomial> images{
      {"u", parse("x+y+z")}, {"v", parse("x*y+y*z+z*x")}, {"w", parse("x*y*z")}};
  EXPECT_EQ(parse("v*w").substitute(images), parse("x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2"));
  EXPECT_EQ(parse("u + 2").substitute({}), parse("u + 2"));
  EXPECT_EQ(parse("p1*p3 + p2").substitute({{"p1", parse("x+y+z")}, {"p2", 1}, {"p3", parse("x*y*z")}}),
            parse("x^2*y*z + x*y^2*z + x*y*z^2 + 1"));
  // Simultaneous, not sequential.
  EXPECT_EQ(parse("x + 2*y").substitute({{"x", var("y")}, {"y", var("x")}}), parse("y + 2*x"));
}

TEST(Elementary, Values) {
  EXPECT_EQ(stirling::elementary(0, kXYZ), Polynomial(1));
  EXPECT_EQ(stirling::elementary(3, kXYZ), parse("x*y*z"));
  EXPECT_EQ(stirling::elementary(2, kXYZ), parse("x*y+y*z+z*x"));
  EXPECT_THROW(stirling::elementary(4, kXYZ), stirling::InvalidObject);
  EXPECT_THROW(stirling::elementary(-1, kXYZ), stirling::InvalidObject);
}

TEST(ElementaryBasis, Examples) {
  const Polynomial n3 = parse("x+y+z").pow(2) * parse("x*y*z") + parse("x*y*z").pow(2).scaled(6);
  EXPECT_EQ(stirling::to_elementary_basis(n3, "w"), parse("w1^2*w3 + 6*w3^2"));
  EXPECT_EQ(stirling::to_elementary_basis(parse("x+y+z")), parse("e1"));
  EXPECT_EQ(stirling::to_elementary_basis(parse("x^2+y^2+z^2")), parse("e1^2 - 2*e2"));
  // v^2 w + 2 u w^2 at u, v, w = e1, e2, e3.
  const Polynomial c3 = stirling::from_elementary_basis(parse("e2^2*e3 + 2*e1*e3^2"), kXYZ);
  const Polynomial back = stirling::to_elementary_basis(c3);
  EXPECT_EQ(back.coefficient({{"e2", 2}, {"e3", 1}}), 1);
  EXPECT_EQ(back.coefficient({{"e1", 1}, {"e3", 2}}), 2);
  EXPECT_THROW(stirling::to_elementary_basis(parse("x^2*y + z")), stirling::InvalidObject);
}

TEST(ElementaryBasis, RandomRoundTrip) {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    std::vector<std::string> vars;
    std::vector<std::string> es;
    for (int i = 1; i <= m; ++i) {
      vars.push_back("t" + std::to_string(i));
      es.push_back("e" + std::to_string(i));
    }
    const Polynomial in_e = random_poly(rng, es, 3, 2);
    const Polynomial sym = stirling::from_elementary_basis(in_e, vars);
    EXPECT_TRUE(stirling::is_symmetric(sym));
    EXPECT_EQ(stirling::to_elementary_basis(sym), in_e);
  }
}

TEST(Symmetry, Detection) {
  EXPECT_TRUE(stirling::is_symmetric(parse("x*y+y*z+z*x")));
  EXPECT_FALSE(stirling::is_symmetric(parse("x*y+y*z")));
  EXPECT_TRUE(stirling::is_symmetric(Polynomial(5)));
  EXPECT_TRUE(stirling::nonnegative(parse("x + 2*y")));
  EXPECT_FALSE(stirling::nonnegative(parse("x - 2*y")));
}

TEST(Display, ToStringParsesBack) {
  std::mt19937 rng(1618);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_poly(rng, kXYZ);
    EXPECT_EQ(parse(a.to_string().c_str()), a) << a.to_string();
  }
  EXPECT_EQ(parse("x^2*y - 3*z + 1").to_string(), "x^2*y - 3*z + 1");
  EXPECT_EQ(Polynomial(0).to_string(), "0");
}

TEST(Univariate, Coefficients) {
  const Polynomial p = stirling::from_coefficients({1, 0, -4});
  EXPECT_EQ(p, parse("1 - 4*x^2"));
  EXPECT_EQ(p.univariate_coefficients(), (std::vector<Integer>{1, 0, -4}));
  EXPECT_THROW(parse("x*y").univariate_coefficients(), stirling::InvalidObject);
  EXPECT_EQ(parse("x^3 + y^2").total_degree(), 3u);
}

}  // namespace
