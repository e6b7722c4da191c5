#include "stirling/enumerators.hpp"

#include <algorithm>

#include "stirling/grammar.hpp"
#include "stirling/statistics.hpp"
#include "stirling/structures.hpp"

namespace stirling {

namespace {

using Coeffs = std::vector<Integer>;

const std::vector<std::string> kX{"x"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

void require_order(int n, int lowest, const char* what) {
  if (n < lowest) {
    throw InvalidObject(std::string(what) + " needs n >= " + std::to_string(lowest));
  }
}

// P_{n+1} = (alpha + beta x) P_n + gamma x (1 - x) P_n'.
Coeffs recurrence_step(const Coeffs& p, const Integer& alpha, const Integer& beta, const Integer& gamma) {
  Coeffs next(p.size() + 1, 0);
  for (std::size_t d = 0; d < p.size(); ++d) {
    next[d] += alpha * p[d] + gamma * static_cast<unsigned long>(d) * p[d];
    next[d + 1] += beta * p[d] - gamma * static_cast<unsigned long>(d) * p[d];
  }
  while (!next.empty() && next.back() == 0) next.pop_back();
  return next;
}

Polynomial tally_x(const std::vector<unsigned>& values) {
  Polynomial p(kX);
  for (unsigned v : values) p.add_term({v}, 1);
  return p;
}

void require_agree(const Polynomial& a, const Polynomial& b, const std::string& what) {
  if (!(a == b)) {
    throw DefectError(what + ": routes disagree: " + a.to_string() + " vs " + b.to_string());
  }
}

}  // namespace

Family family_from_name(std::string_view name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "M") return Family::M;
  if (name == "N") return Family::N;
  if (name == "C") return Family::C;
  throw InvalidObject("unknown polynomial family '" + std::string(name) + "' (expected A, B, M, N or C)");
}

std::string_view name_of(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::M: return "M";
    case Family::N: return "N";
    case Family::C: return "C";
  }
  return "?";
}

Polynomial family_by_statistic(Family f, int n) {
  require_order(n, 0, "family_by_statistic");
  std::vector<unsigned> values;
  auto record = [&](unsigned v) { values.push_back(v); };
  switch (f) {
    case Family::A:
      enumerate_symmetric(n, [&](std::span<const int> w) { record(static_cast<unsigned>(scalar_stat(w, StatId::des))); });
      break;
    case Family::B:
      enumerate_signed(n, [&](std::span<const int> w) { record(static_cast<unsigned>(des_type_b(w))); });
      break;
    case Family::M:
    case Family::N:
    case Family::C: {
      if (n == 0) return tally_x({0});
      const StatId id = f == Family::M ? StatId::ap : f == Family::N ? StatId::lap : StatId::plat;
      enumerate_q(n, 2, [&](std::span<const int> w) { record(static_cast<unsigned>(scalar_stat(w, id))); });
      break;
    }
  }
  return tally_x(values);
}

Polynomial family_by_recurrence(Family f, int n) {
  require_order(n, 0, "family_by_recurrence");
  Coeffs p{1};
  for (int m = 0; m < n; ++m) {
    const Integer mm = m;
    switch (f) {
      case Family::A: p = recurrence_step(p, 0, mm + 1, 1); break;
      case Family::B: p = recurrence_step(p, 1, 2 * mm + 1, 2); break;
      case Family::M: p = recurrence_step(p, 1, 2 * mm, 2); break;
      case Family::N: p = recurrence_step(p, 0, 2 * mm + 1, 2); break;
      case Family::C: p = recurrence_step(p, 0, 2 * mm + 1, 1); break;
    }
  }
  return from_coefficients(p);
}

Polynomial c_by_grammar(int n) {
  require_order(n, 0, "c_by_grammar");
  if (n == 0) return tally_x({0});
  const Polynomial d = derive_n(builtin("G"), Polynomial::variable("x"), n);
  return d.substitute({{"y", Polynomial(1)}, {"z", Polynomial(1)}}).over(kX);
}

Polynomial poly_family(Family f, int n) {
  const Polynomial by_stat = family_by_statistic(f, n);
  const Polynomial by_rec = family_by_recurrence(f, n);
  const std::string what = std::string(name_of(f)) + "_" + std::to_string(n);
  require_agree(by_stat, by_rec, what);
  if (f == Family::C) require_agree(by_stat, c_by_grammar(n), what);
  return by_stat;
}

Polynomial c3_by_statistic(int n) {
  require_order(n, 1, "c3_by_statistic");
  Polynomial p(kXYZ);
  enumerate_q(n, 2, [&](std::span<const int> w) {
    p.add_term({static_cast<unsigned>(scalar_stat(w, StatId::asc)), static_cast<unsigned>(scalar_stat(w, StatId::des)),
                static_cast<unsigned>(scalar_stat(w, StatId::plat))},
               1);
  });
  return p;
}

Polynomial c3_by_grammar(int n) {
  require_order(n, 1, "c3_by_grammar");
  return derive_n(builtin("G"), Polynomial::variable("x"), n).over(kXYZ);
}

Polynomial c3_by_trees(int n) {
  require_order(n, 1, "c3_by_trees");
  Polynomial p(kXYZ);
  enumerate_ternary_trees(n, [&](const TernaryTree& t) {
    const auto c = exterior_counts(t);
    p.add_term({static_cast<unsigned>(c.left), static_cast<unsigned>(c.right), static_cast<unsigned>(c.middle)}, 1);
  });
  return p;
}

Polynomial poly_C3(int n) {
  const Polynomial by_stat = c3_by_statistic(n);
  const std::string what = "C_" + std::to_string(n) + "(x,y,z)";
  require_agree(by_stat, c3_by_grammar(n), what);
  require_agree(by_stat, c3_by_trees(n), what);
  return by_stat;
}

Polynomial n3_by_statistic(int n) {
  require_order(n, 1, "n3_by_statistic");
  Polynomial p(kXYZ);
  enumerate_q(n, 2, [&](std::span<const int> w) {
    p.add_term({static_cast<unsigned>(scalar_stat(w, StatId::lap)), static_cast<unsigned>(scalar_stat(w, StatId::eud)),
                static_cast<unsigned>(scalar_stat(w, StatId::rpd))},
               1);
  });
  return p;
}

Polynomial n3_by_grammar(int n) {
  require_order(n, 1, "n3_by_grammar");
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const Polynomial z = Polynomial::variable("z");
  const Polynomial d = derive_n(builtin("I"), Polynomial::variable("p3"), n - 1);
  return d.substitute({{"p1", x + y + z}, {"p2", Polynomial(1)}, {"p3", x * y * z}}).over(kXYZ);
}

Polynomial poly_N3(int n) {
  const Polynomial by_stat = n3_by_statistic(n);
  require_agree(by_stat, n3_by_grammar(n), "N_" + std::to_string(n) + "(x,y,z)");
  return by_stat;
}

namespace {

std::vector<std::string> x_symbols(int k) {
  std::vector<std::string> vars;
  for (int i = 1; i <= k + 1; ++i) vars.push_back(indexed("x", i));
  return vars;
}

}  // namespace

Polynomial ck_by_statistic(int n, int k) {
  require_order(n, 1, "ck_by_statistic");
  if (k < 1) throw InvalidObject("ck_by_statistic needs k >= 1");
  Polynomial p(x_symbols(k));
  Exponents e(static_cast<std::size_t>(k) + 1);
  enumerate_q(n, k, [&](std::span<const int> w) {
    for (int j = 1; j < k; ++j) {
      e[static_cast<std::size_t>(j - 1)] = static_cast<unsigned>(j_stat(w, k, {j, JStatKind::plateau}));
    }
    e[static_cast<std::size_t>(k - 1)] = static_cast<unsigned>(scalar_stat(w, StatId::des));
    e[static_cast<std::size_t>(k)] = static_cast<unsigned>(scalar_stat(w, StatId::asc));
    p.add_term(e, 1);
  });
  return p;
}

Polynomial ck_by_grammar(int n, int k) {
  require_order(n, 1, "ck_by_grammar");
  return derive_n(builtin("G1", k), Polynomial::variable("x1"), n).over(x_symbols(k));
}

Polynomial poly_Ck(int n, int k) {
  const Polynomial by_stat = ck_by_statistic(n, k);
  require_agree(by_stat, ck_by_grammar(n, k), "C_" + std::to_string(n) + " at k=" + std::to_string(k));
  return by_stat;
}

GammaTable3 gamma3(int n) {
  require_order(n, 1, "gamma3");
  const Polynomial d = derive_n(builtin("H"), Polynomial::variable("w"), n - 1).over({"u", "v", "w"});
  GammaTable3 table;
  for (const auto& [e, c] : d.terms()) {
    table[{static_cast<int>(e[0]), static_cast<int>(e[1]), static_cast<int>(e[2])}] = c;
  }
  return table;
}

GammaTable3 gamma3_by_trees(int n) {
  require_order(n, 1, "gamma3_by_trees");
  GammaTable3 table;
  enumerate_plane_trees(n, 3, [&](const PlaneIncreasingTree& t) {
    const auto p = degree_profile(t);
    auto at = [&](std::size_t d) { return d < p.size() ? p[d] : 0; };
    table[{at(2), at(1), at(0)}] += 1;
  });
  return table;
}

namespace {

std::string window_symbol(int d) { return indexed("f", d); }

// f_d stands for e_{k+1-d}: a vertex of degree d gains a child in d+1 ways.
GammaTableK gamma_window(int n) {
  Grammar window;
  window.add_rule("x1", Polynomial::variable(window_symbol(0)));
  for (int d = 0; d + 1 < n; ++d) {
    window.add_rule(window_symbol(d),
                    (Polynomial::variable(window_symbol(d + 1)) * Polynomial::variable(window_symbol(0))).scaled(d + 1));
  }
  std::vector<std::string> vars;
  for (int d = 0; d < n; ++d) vars.push_back(window_symbol(d));
  const Polynomial p = derive_n(window, Polynomial::variable("x1"), n).over(vars);
  GammaTableK table;
  for (const auto& [e, c] : p.terms()) table[std::vector<int>(e.begin(), e.end())] = c;
  return table;
}

}  // namespace

Polynomial instantiate_gamma(const GammaTableK& table, int k) {
  std::vector<std::string> vars;
  for (int i = 1; i <= k + 1; ++i) vars.push_back(indexed("e", i));
  Polynomial out(vars);
  for (const auto& [profile, c] : table) {
    Exponents e(vars.size(), 0);
    for (std::size_t j = 0; j < profile.size(); ++j) {
      if (profile[j] == 0) continue;
      const int index = k + 1 - static_cast<int>(j);  // e_{k+2-(j+1)}
      if (index < 0) throw InvalidObject("k = " + std::to_string(k) + " is too small for this table");
      if (index == 0) continue;
      e[static_cast<std::size_t>(index - 1)] += static_cast<unsigned>(profile[j]);
    }
    out.add_term(e, c);
  }
  return out;
}

GammaTableK gammaK(int n, int k) {
  require_order(n, 1, "gammaK");
  if (k < 1 || k < n - 2) {
    throw InvalidObject("gammaK needs k >= max(1, n-2); got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  GammaTableK table = gamma_window(n);
  const Polynomial direct = derive_n(builtin("G2", k), Polynomial::variable("x1"), n);
  require_agree(instantiate_gamma(table, k), direct, "gamma table n=" + std::to_string(n) + ", k=" + std::to_string(k));
  return table;
}

GammaTableK gammaK_by_trees(int n) {
  require_order(n, 1, "gammaK_by_trees");
  GammaTableK table;
  enumerate_plane_trees(n, std::max(1, n - 1), [&](const PlaneIncreasingTree& t) { table[degree_profile(t)] += 1; });
  return table;
}

std::vector<Integer> second_order_eulerian_row(int n) {
  require_order(n, 0, "second_order_eulerian_row");
  std::vector<Integer> row{1};  // n = 0
  for (int m = 0; m < n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m) + 2, 0);
    for (int j = 1; j <= m + 1; ++j) {
      const Integer same = static_cast<std::size_t>(j) < row.size() ? row[static_cast<std::size_t>(j)] : Integer(0);
      const Integer left = row[static_cast<std::size_t>(j - 1)];
      next[static_cast<std::size_t>(j)] = j * same + (2 * m + 2 - j) * left;
    }
    row = std::move(next);
  }
  return row;
}

Integer second_order_eulerian(int n, int j) {
  const auto row = second_order_eulerian_row(n);
  return j < 0 || static_cast<std::size_t>(j) >= row.size() ? Integer(0) : row[static_cast<std::size_t>(j)];
}

Integer stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<Integer> row{1};  // S(0, .)
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m) + 1, 0);
    for (int j = 1; j <= m; ++j) {
      const Integer same = static_cast<std::size_t>(j) < row.size() ? row[static_cast<std::size_t>(j)] : Integer(0);
      next[static_cast<std::size_t>(j)] = j * same + row[static_cast<std::size_t>(j - 1)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

VerificationReport verify_carlitz(int n) {
  VerificationReport r{"carlitz", "C_n(x) = (1-x)^{2n+1} sum_k S(n+k,k) x^k, coefficientwise", n, n, std::nullopt, true, ""};
  const auto row = second_order_eulerian_row(n);
  for (int m = 0; m <= 2 * n + 1; ++m) {
    Integer rhs = 0;
    for (int k = 0; k <= m; ++k) {
      const Integer term = binomial(2 * n + 1, m - k) * stirling2(n + k, k);
      rhs += (m - k) % 2 == 0 ? term : Integer(-term);
    }
    const Integer lhs = static_cast<std::size_t>(m) < row.size() ? row[static_cast<std::size_t>(m)] : Integer(0);
    if (lhs != rhs) {
      r.passed = false;
      r.counterexample = "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " + lhs.get_str() +
                         " vs " + rhs.get_str();
      break;
    }
  }
  return r;
}

}  // namespace stirling
