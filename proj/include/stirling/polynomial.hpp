#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace stirling {

using Integer = mpz_class;
using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, larger monomials first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial with exact integer coefficients over an ordered,
/// named alphabet. Binary operations union the alphabets (left operand's
/// symbols first). Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Integer, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars);
  Polynomial(long c);  // NOLINT(google-explicit-constructor): integer literals read naturally
  static Polynomial constant(const Integer& c);
  static Polynomial variable(const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int index_of(const std::string& name) const;  // -1 when absent
  unsigned total_degree() const;

  /// Adds c * monomial; exps follow vars().
  void add_term(const Exponents& exps, const Integer& c);
  /// Coefficient of the monomial given by name -> exponent (absent = 0).
  Integer coefficient(const std::map<std::string, unsigned>& monomial) const;

  /// Same polynomial over `vars`, which must contain every symbol that
  /// actually occurs.
  Polynomial over(const std::vector<std::string>& vars) const;
  /// Drops symbols that occur in no term.
  Polynomial trimmed() const;

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  Polynomial operator-() const;
  Polynomial scaled(const Integer& c) const;
  Polynomial pow(unsigned e) const;

  /// Equal as polynomials, whatever the alphabets.
  friend bool operator==(const Polynomial& p, const Polynomial& q);

  Polynomial partial(const std::string& name) const;

  /// Simultaneous substitution; symbols without an image stay put.
  Polynomial substitute(const std::map<std::string, Polynomial>& images) const;

  /// Coefficients of a polynomial in at most one symbol, index = degree.
  std::vector<Integer> univariate_coefficients() const;

  /// Human form that the rule language reads back, e.g. "x^2*y - 3*z + 1".
  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  Terms terms_;
};

/// e_k over the given symbols; e_0 = 1. Throws InvalidObject unless
/// 0 <= k <= vars.size().
Polynomial elementary(int k, const std::vector<std::string>& vars);

/// Invariant under every permutation of its alphabet.
bool is_symmetric(const Polynomial& p);

/// Writes a symmetric polynomial in m variables as a polynomial in
/// e1..em (symbol names prefix + index). Throws InvalidObject for
/// non-symmetric input.
Polynomial to_elementary_basis(const Polynomial& p, const std::string& prefix = "e");

/// Substitutes prefix+i -> elementary(i, vars) for i = 1..vars.size().
Polynomial from_elementary_basis(const Polynomial& p, const std::vector<std::string>& vars,
                                 const std::string& prefix = "e");

/// Every coefficient >= 0.
bool nonnegative(const Polynomial& p);

/// Univariate polynomial in `var` from its coefficient list.
Polynomial from_coefficients(const std::vector<Integer>& coefficients, const std::string& var = "x");

}  // namespace stirling
