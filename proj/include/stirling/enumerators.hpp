#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stirling/core_objects.hpp"
#include "stirling/polynomial.hpp"

namespace stirling {

/// A (descents on S_n, both zeros), B (type-B descents), M (ap on Q_n),
/// N (lap on Q_n), C (plateaux on Q_n). All in the symbol x.
enum class Family { A, B, M, N, C };

Family family_from_name(std::string_view name);
std::string_view name_of(Family f);

Polynomial family_by_statistic(Family f, int n);
Polynomial family_by_recurrence(Family f, int n);
/// C_n(x) from D_G^n(x) with y = z = 1.
Polynomial c_by_grammar(int n);

/// Runs every route and throws DefectError unless they agree. n = 0
/// gives 1.
Polynomial poly_family(Family f, int n);

/// C_n(x,y,z) = sum of x^asc y^des z^plat over Q_n.
Polynomial c3_by_statistic(int n);
Polynomial c3_by_grammar(int n);
/// x^exl y^exr z^exm over ternary increasing trees.
Polynomial c3_by_trees(int n);
Polynomial poly_C3(int n);

/// N_n(x,y,z) = sum of x^lap y^eud z^rpd over Q_n.
Polynomial n3_by_statistic(int n);
/// D_I^{n-1}(p3) at p1 = x+y+z, p2 = 1, p3 = xyz.
Polynomial n3_by_grammar(int n);
Polynomial poly_N3(int n);

/// Sum over Q_n(k) of x1^plat_1 ... x{k-1}^plat_{k-1} xk^des x{k+1}^asc.
Polynomial ck_by_statistic(int n, int k);
Polynomial ck_by_grammar(int n, int k);
Polynomial poly_Ck(int n, int k);

/// (i, j, k) -> coefficient of u^i v^j w^k in D_H^{n-1}(w).
using GammaTable3 = std::map<std::array<int, 3>, Integer>;
GammaTable3 gamma3(int n);
/// Increasing plane trees with all degrees <= 3, keyed by
/// (#degree 2, #degree 1, #leaves).
GammaTable3 gamma3_by_trees(int n);

/// (i_1, ..., i_n) -> coefficient of prod e_{k+2-j}^{i_j} in D_{G2}^n(x1),
/// with e_0 = 1; the same for every k >= n - 2.
using GammaTableK = std::map<std::vector<int>, Integer>;
/// Throws InvalidObject when k < n - 2 or n < 1.
GammaTableK gammaK(int n, int k);
/// Increasing plane trees on n nodes keyed by degree profile.
GammaTableK gammaK_by_trees(int n);
/// Re-expands a table at a concrete k as a polynomial in e1..e{k+1}.
Polynomial instantiate_gamma(const GammaTableK& table, int k);

/// Row n of the second-order Eulerian triangle, index j = 0..n.
std::vector<Integer> second_order_eulerian_row(int n);
Integer second_order_eulerian(int n, int j);

Integer stirling2(int n, int k);
Integer binomial(int n, int k);

struct VerificationReport {
  std::string id;
  std::string description;
  int n_min = 0;
  int n_max = 0;
  std::optional<int> k;
  bool passed = true;
  std::string counterexample;  // empty iff passed
};

/// Coefficient m of C_n(x) against sum_k (-1)^{m-k} binom(2n+1, m-k) S(n+k, k)
/// for 0 <= m <= 2n+1.
VerificationReport verify_carlitz(int n);

}  // namespace stirling
