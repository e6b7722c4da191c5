#include "stirling/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "stirling/grammar.hpp"
#include "stirling/io.hpp"
#include "stirling/sp_code.hpp"
#include "stirling/statistics.hpp"
#include "stirling/structures.hpp"

namespace stirling {

namespace {

using Outcome = std::optional<std::string>;

const std::vector<std::string> kX{"x"};

std::string at_n(int n) { return "n=" + std::to_string(n) + ": "; }

Outcome differ(int n, const std::string& what, const Polynomial& a, const Polynomial& b) {
  if (a == b) return std::nullopt;
  return at_n(n) + what + ": " + a.to_string() + " vs " + b.to_string();
}

std::string sets_to_string(const std::vector<LetterSet>& sets) {
  std::string out = "(";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) out += ", ";
    out += "{";
    for (std::size_t j = 0; j < sets[i].size(); ++j) out += (j ? "," : "") + std::to_string(sets[i][j]);
    out += "}";
  }
  return out + ")";
}

Integer double_factorial_odd(int n) {
  Integer out = 1;
  for (int i = 1; i <= n; ++i) out *= 2 * i - 1;
  return out;
}

Integer power(long base, int e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

// Distribution of a scalar statistic as a polynomial in x.
template <typename Enumerate>
Polynomial tally(Enumerate&& enumerate, StatId id) {
  Polynomial p(kX);
  enumerate([&](std::span<const int> w) { p.add_term({static_cast<unsigned>(scalar_stat(w, id))}, 1); });
  return p;
}

Polynomial tally_q(int n, StatId id) {
  return tally([n](const WordVisitor& v) { enumerate_q(n, 2, v); }, id);
}

Polynomial tally_q1(int n, StatId id) {
  return tally([n](const WordVisitor& v) { enumerate_q1(n, v); }, id);
}

Outcome equidistributed(int n, std::initializer_list<StatId> ids) {
  const auto first = *ids.begin();
  const Polynomial base = tally_q(n, first);
  for (StatId id : ids) {
    if (auto bad = differ(n, std::string(name_of(first)) + " vs " + std::string(name_of(id)), base, tally_q(n, id))) {
      return bad;
    }
  }
  return std::nullopt;
}

using Joint = std::map<std::vector<LetterSet>, long>;

Joint joint(int n, const std::vector<SetStatId>& ids) {
  Joint out;
  std::vector<LetterSet> key(ids.size());
  enumerate_q(n, 2, [&](std::span<const int> w) {
    for (std::size_t i = 0; i < ids.size(); ++i) key[i] = set_stat(w, ids[i]);
    ++out[key];
  });
  return out;
}

Joint permuted(const Joint& j, const std::vector<std::size_t>& order) {
  Joint out;
  for (const auto& [key, count] : j) {
    std::vector<LetterSet> moved;
    for (std::size_t i : order) moved.push_back(key[i]);
    out[moved] += count;
  }
  return out;
}

std::string first_gap(const Joint& a, const Joint& b) {
  for (const auto& [key, count] : a) {
    const auto it = b.find(key);
    const long other = it == b.end() ? 0 : it->second;
    if (other != count) {
      return sets_to_string(key) + " occurs " + std::to_string(count) + " vs " + std::to_string(other) + " times";
    }
  }
  for (const auto& [key, count] : b) {
    if (a.count(key) == 0) return sets_to_string(key) + " occurs 0 vs " + std::to_string(count) + " times";
  }
  return "multisets differ";
}

std::string pair_name(const std::vector<SetStatId>& ids) {
  std::string out = "(";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::string(name_of(ids[i]));
  return out + ")";
}

// x^|S| y^|T| over the joint distribution of a pair.
Polynomial bivariate(const Joint& j) {
  Polynomial p({"x", "y"});
  for (const auto& [key, count] : j) {
    p.add_term({static_cast<unsigned>(key[0].size()), static_cast<unsigned>(key[1].size())}, count);
  }
  return p;
}

Outcome pairs_equidistributed(int n, const std::vector<std::vector<SetStatId>>& pairs) {
  const Joint base = joint(n, pairs[0]);
  for (const auto& p : pairs) {
    const Joint other = joint(n, p);
    if (other != base) return at_n(n) + pair_name(pairs[0]) + " vs " + pair_name(p) + ": " + first_gap(base, other);
    if (auto bad = differ(n, "bivariate " + pair_name(p), bivariate(base), bivariate(other))) return bad;
  }
  return std::nullopt;
}

Outcome symmetric_joint(int n, const std::vector<SetStatId>& ids) {
  const Joint base = joint(n, ids);
  std::vector<std::size_t> order(ids.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  while (std::next_permutation(order.begin(), order.end())) {
    const Joint moved = permuted(base, order);
    if (moved != base) return at_n(n) + pair_name(ids) + " not symmetric: " + first_gap(base, moved);
  }
  return std::nullopt;
}

// -- equidistribution on words ------------------------------------------

Outcome check_bona(int n, std::optional<int>) {
  if (auto bad = equidistributed(n, {StatId::plat, StatId::asc, StatId::des})) return bad;
  return differ(n, "plat vs C_n", tally_q(n, StatId::plat), poly_family(Family::C, n));
}

Outcome check_laprpd(int n, std::optional<int>) {
  if (auto bad = equidistributed(n, {StatId::lap, StatId::eud, StatId::rpd})) return bad;
  return equidistributed(n, {StatId::ap, StatId::ud, StatId::pd});
}

Outcome check_apud(int n, std::optional<int>) {
  if (auto bad = equidistributed(n, {StatId::ap, StatId::ud})) return bad;
  if (auto bad = equidistributed(n, {StatId::lap, StatId::eud})) return bad;
  if (auto bad = differ(n, "ud vs M recurrence", tally_q(n, StatId::ud), family_by_recurrence(Family::M, n))) {
    return bad;
  }
  return differ(n, "eud vs N recurrence", tally_q(n, StatId::eud), family_by_recurrence(Family::N, n));
}

Outcome check_prop21(int n, std::optional<int>) {
  const Polynomial a = family_by_statistic(Family::A, n).scaled(power(2, n));
  if (auto bad = differ(n, "2^n A_n vs lap on Q_n^(1)", a, tally_q1(n, StatId::lap))) return bad;
  return differ(n, "B_n vs ap on Q_n^(1)", family_by_statistic(Family::B, n), tally_q1(n, StatId::ap));
}

Outcome check_convo(int n, std::optional<int>) {
  Polynomial nn(kX);
  Polynomial mn(kX);
  for (int i = 0; i <= n; ++i) {
    const Integer b = binomial(n, i);
    const Polynomial right = poly_family(Family::N, n - i);
    nn += (poly_family(Family::N, i) * right).scaled(b);
    mn += (poly_family(Family::M, i) * right).scaled(b);
  }
  if (auto bad = differ(n, "2^n A_n vs sum binom N_i N_{n-i}", poly_family(Family::A, n).scaled(power(2, n)), nn)) {
    return bad;
  }
  return differ(n, "B_n vs sum binom M_i N_{n-i}", poly_family(Family::B, n), mn);
}

using S = SetStatId;

Outcome check_thm34(int n, std::optional<int>) {
  return pairs_equidistributed(
      n, {{S::Asc, S::Dasc}, {S::Plat, S::Dplat}, {S::Des, S::Ddes}, {S::Asc, S::Uu}, {S::Plat, S::Pasc}, {S::Des, S::Dd}});
}

Outcome check_thm35(int n, std::optional<int>) {
  return pairs_equidistributed(
      n, {{S::Asc, S::Lap}, {S::Plat, S::Lap}, {S::Des, S::Rpd}, {S::Asc, S::Eud}, {S::Plat, S::Rpd}, {S::Des, S::Eud}});
}

Outcome check_thm36(int n, std::optional<int>) {
  const std::vector<S> six{S::Dasc, S::Dplat, S::Ddes, S::Pasc, S::Uu, S::Dd};
  const Joint base = joint(n, {six[0]});
  for (S id : six) {
    const Joint other = joint(n, {id});
    if (other != base) return at_n(n) + pair_name({six[0]}) + " vs " + pair_name({id}) + ": " + first_gap(base, other);
  }
  for (std::size_t i = 0; i < six.size(); ++i) {
    for (std::size_t j = i + 1; j < six.size(); ++j) {
      if (auto bad = symmetric_joint(n, {six[i], six[j]})) return bad;
    }
  }
  return std::nullopt;
}

Outcome check_thm37(int n, std::optional<int>) {
  for (const auto& triple : std::vector<std::vector<S>>{
           {S::Asc, S::Plat, S::Des}, {S::Lap, S::Rpd, S::Eud}, {S::Dasc, S::Pasc, S::Dd}, {S::Ddes, S::Dplat, S::Uu}}) {
    if (auto bad = symmetric_joint(n, triple)) return bad;
  }
  return std::nullopt;
}

Outcome check_symmetry(int n, std::optional<int>) {
  if (!is_symmetric(poly_C3(n))) return at_n(n) + "C_n(x,y,z) is not symmetric: " + poly_C3(n).to_string();
  if (!is_symmetric(poly_N3(n))) return at_n(n) + "N_n(x,y,z) is not symmetric: " + poly_N3(n).to_string();
  return std::nullopt;
}

Outcome check_table1(int n, std::optional<int>) {
  Outcome bad;
  enumerate_q(n, 2, [&](std::span<const int> w) {
    if (bad) return;
    const SPCode code = encode(w);
    for (const auto& info : kSetStatTable) {
      if (set_stat(w, info.id) != code_set_stat(code, info.id)) {
        bad = at_n(n) + std::string(info.name) + " of " + word_to_string(w) + " disagrees with its code " +
              code_to_string(code.tuples());
        return;
      }
    }
  });
  return bad;
}

Outcome check_reverse(int n, std::optional<int>) {
  constexpr std::array<std::pair<StatId, StatId>, 6> scalar{{{StatId::asc, StatId::des},
                                                              {StatId::plat, StatId::plat},
                                                              {StatId::lap, StatId::rpd},
                                                              {StatId::ap, StatId::pd},
                                                              {StatId::eud, StatId::eud},
                                                              {StatId::dasc, StatId::ddes}}};
  constexpr std::array<std::pair<S, S>, 9> sets{{{S::Asc, S::Des},
                                                  {S::Plat, S::Plat},
                                                  {S::Lap, S::Rpd},
                                                  {S::Eud, S::Eud},
                                                  {S::Dasc, S::Ddes},
                                                  {S::Dplat, S::Pasc},
                                                  {S::Apd, S::Apd},
                                                  {S::Uu, S::Dd},
                                                  {S::Dd, S::Uu}}};
  Outcome bad;
  enumerate_q(n, 2, [&](std::span<const int> w) {
    if (bad) return;
    const StirlingPermutation s{Word(w.begin(), w.end())};
    const StirlingPermutation r = s.reversed();
    if (r.reversed() != s) bad = at_n(n) + "reversal is not an involution on " + word_to_string(w);
    for (const auto& [a, b] : scalar) {
      if (!bad && scalar_stat(r, a) != scalar_stat(s, b)) {
        bad = at_n(n) + std::string(name_of(a)) + " of the reverse of " + word_to_string(w) + " is not its " +
              std::string(name_of(b));
      }
    }
    for (const auto& [a, b] : sets) {
      if (!bad && set_stat(r, a) != set_stat(s, b)) {
        bad = at_n(n) + std::string(name_of(a)) + " of the reverse of " + word_to_string(w) + " is not its " +
              std::string(name_of(b));
      }
    }
  });
  return bad;
}

// -- polynomial families ------------------------------------------------

Outcome check_families(int n, std::optional<int>) {
  try {
    for (Family f : {Family::A, Family::B, Family::M, Family::N, Family::C}) poly_family(f, n);
  } catch (const DefectError& e) {
    return at_n(n) + e.what();
  }
  const Polynomial c = poly_family(Family::C, n);
  if (auto bad = differ(n, "C_n vs second-order Eulerian row", c, from_coefficients(second_order_eulerian_row(n)))) {
    return bad;
  }
  static const std::array<const char*, 3> printed{"x", "x + 2*x^2", "x + 8*x^2 + 6*x^3"};
  if (n >= 1 && n <= 3) {
    if (auto bad = differ(n, "C_n vs printed", c, parse_polynomial(printed[static_cast<std::size_t>(n - 1)]))) {
      return bad;
    }
  }
  if (n >= 1) {
    try {
      const Polynomial ck = poly_Ck(n, 2).substitute(
          {{"x1", Polynomial::variable("z")}, {"x2", Polynomial::variable("y")}, {"x3", Polynomial::variable("x")}});
      return differ(n, "C_n(x1,x2,x3) at k=2 vs C_n(x,y,z)", ck, poly_C3(n));
    } catch (const DefectError& e) {
      return at_n(n) + e.what();
    }
  }
  return std::nullopt;
}

Outcome check_carlitz(int n, std::optional<int>) {
  const auto r = verify_carlitz(n);
  if (r.passed) return std::nullopt;
  return r.counterexample;
}

Outcome check_qntn(int n, std::optional<int>) {
  return differ(n, "exterior counts vs (asc,des,plat)", c3_by_trees(n), c3_by_statistic(n));
}

Outcome check_dumont_dt(int n, std::optional<int>) {
  Polynomial p({"x", "y", "z"});
  enumerate_dumont(n, [&](const DumontWord& w) {
    const auto s = dumont_stats(w);
    p.add_term({static_cast<unsigned>(s.dist), static_cast<unsigned>(s.nneg), static_cast<unsigned>(s.npos)}, 1);
  });
  return differ(n, "(dist,nneg,npos) vs (asc,des,plat)", p, c3_by_statistic(n));
}

Outcome check_dumont_rec(int n, std::optional<int>) {
  const Polynomial xyz = parse_polynomial("x*y*z");
  Polynomial c = xyz;
  for (int m = 1; m < n; ++m) c = xyz * (c.partial("x") + c.partial("y") + c.partial("z"));
  return differ(n, "operator recurrence vs (asc,des,plat)", c, c3_by_statistic(n));
}

Outcome check_chen22(int n, std::optional<int>) {
  const Polynomial g = derive_n(builtin("G"), Polynomial::variable("x"), n);
  const Polynomial h = derive_n(builtin("H"), Polynomial::variable("w"), n - 1);
  const Polynomial expanded =
      h.substitute({{"u", parse_polynomial("x + y + z")}, {"v", parse_polynomial("x*y + y*z + z*x")},
                    {"w", parse_polynomial("x*y*z")}});
  if (auto bad = differ(n, "D_G^n(x) vs D_H^{n-1}(w)", g, expanded)) return bad;
  const Polynomial i = derive_n(builtin("I"), Polynomial::variable("p3"), n - 1);
  const Polynomial renamed = h.substitute(
      {{"u", parse_polynomial("3*p2")}, {"v", Polynomial::variable("p1")}, {"w", Polynomial::variable("p3")}});
  return differ(n, "D_I^{n-1}(p3) vs renamed D_H^{n-1}(w)", i, renamed);
}

// -- grammar displays ---------------------------------------------------

Outcome check_lemma52(int, std::optional<int>) {
  static const std::array<const char*, 3> printed{"p1*p3", "p1^2*p3 + 6*p2*p3^2", "p1^3*p3 + 24*p1*p2*p3^2 + 6*p3^3"};
  for (int m = 1; m <= 3; ++m) {
    const Polynomial d = derive_n(builtin("I"), Polynomial::variable("p3"), m);
    if (auto bad = differ(m, "D_I^n(p3) vs printed", d, parse_polynomial(printed[static_cast<std::size_t>(m - 1)]))) {
      return bad;
    }
  }
  return std::nullopt;
}

struct OffsetTerm {
  long coef;
  std::vector<std::pair<int, unsigned>> factors;  // (offset from k, exponent)
};

// Displays of D_{G2}^n(x1) for n = 1..5, written around e_k.
const std::array<std::vector<OffsetTerm>, 5>& g2_displays() {
  static const std::array<std::vector<OffsetTerm>, 5> displays{{
      {{1, {{1, 1}}}},
      {{1, {{0, 1}, {1, 1}}}},
      {{1, {{0, 2}, {1, 1}}}, {2, {{-1, 1}, {1, 2}}}},
      {{1, {{0, 3}, {1, 1}}}, {8, {{-1, 1}, {0, 1}, {1, 2}}}, {6, {{-2, 1}, {1, 3}}}},
      {{1, {{0, 4}, {1, 1}}},
       {22, {{0, 2}, {-1, 1}, {1, 2}}},
       {16, {{-1, 2}, {1, 3}}},
       {42, {{-2, 1}, {0, 1}, {1, 3}}},
       {24, {{-3, 1}, {1, 4}}}},
  }};
  return displays;
}

Outcome check_g2display(int, std::optional<int>) {
  for (int k = 4; k <= 6; ++k) {
    for (int m = 1; m <= 5; ++m) {
      Polynomial expected;
      for (const auto& term : g2_displays()[static_cast<std::size_t>(m - 1)]) {
        Polynomial t(term.coef);
        for (const auto& [offset, e] : term.factors) t *= Polynomial::variable(indexed("e", k + offset)).pow(e);
        expected += t;
      }
      const Polynomial d = derive_n(builtin("G2", k), Polynomial::variable("x1"), m);
      if (auto bad = differ(m, "D_{G2}^n(x1) at k=" + std::to_string(k) + " vs printed", d, expected)) return bad;
    }
  }
  return std::nullopt;
}

// -- e-positivity and gamma tables ---------------------------------------

Polynomial gamma3_as_ebasis(const GammaTable3& table) {
  Polynomial p({"e1", "e2", "e3"});
  for (const auto& [key, c] : table) {
    p.add_term({static_cast<unsigned>(key[0]), static_cast<unsigned>(key[1]), static_cast<unsigned>(key[2])}, c);
  }
  return p;
}

Outcome check_ebasis(int n, std::optional<int>) {
  const GammaTable3 table = gamma3(n);
  for (const auto& [key, c] : table) {
    if (key[0] + 2 * key[1] + 3 * key[2] != 2 * n + 1 || c < 0) {
      return at_n(n) + "gamma entry (" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
             std::to_string(key[2]) + ") breaks i+2j+3k=2n+1 or is negative";
    }
  }
  const Polynomial e = to_elementary_basis(poly_C3(n));
  if (!nonnegative(e)) return at_n(n) + "C_n(x,y,z) is not e-positive: " + e.to_string();
  if (auto bad = differ(n, "e-expansion of C_n(x,y,z) vs D_H table", e, gamma3_as_ebasis(table))) return bad;
  if (table != gamma3_by_trees(n)) return at_n(n) + "gamma3 differs from the plane-tree counts";
  if (gammaK(n, std::max(1, n - 2)) != gammaK_by_trees(n)) return at_n(n) + "gammaK differs from the plane-tree counts";
  return std::nullopt;
}

Outcome check_mainthm51(int n, std::optional<int>) {
  Polynomial expected({"w1", "w3"});
  for (const auto& [key, c] : gamma3(n)) {
    expected.add_term({static_cast<unsigned>(key[1]), static_cast<unsigned>(key[2])}, power(3, key[0]) * c);
  }
  const Polynomial e = to_elementary_basis(poly_N3(n), "w");
  if (e.coefficient({{"w2", 1}}) != 0 || !nonnegative(e)) return at_n(n) + "bad e-expansion " + e.to_string();
  if (auto bad = differ(n, "e-expansion of N_n(x,y,z) vs 3^i gamma", e, expected)) return bad;
  static const std::array<const char*, 6> printed{
      "w3",
      "w1*w3",
      "w1^2*w3 + 6*w3^2",
      "w1^3*w3 + 24*w1*w3^2 + 6*w3^3",
      "w1^4*w3 + 66*w1^2*w3^2 + 42*w1*w3^3 + 144*w3^3",
      "w1^5*w3 + 156*w1^3*w3^2 + 192*w1^2*w3^3 + 1224*w1*w3^3 + 540*w3^4",
  };
  if (n <= 6) {
    return differ(n, "N_n vs printed table", e, parse_polynomial(printed[static_cast<std::size_t>(n - 1)]));
  }
  return std::nullopt;
}

Outcome gammaK_shape(int n, const GammaTableK& table) {
  for (const auto& [p, c] : table) {
    int sum = 0;
    for (int v : p) sum += v;
    const int first = p.front();
    const int last = p.back();
    const bool ok = static_cast<int>(p.size()) == n && sum == n && c > 0 && (n < 2 || (1 <= first && first <= n - 1)) &&
                    (last == 0 || last == 1) && (last == 0 || n < 2 || first == n - 1);
    if (!ok) {
      std::vector<LetterSet> shown{LetterSet(p.begin(), p.end())};
      return at_n(n) + "profile " + sets_to_string(shown) + " breaks the shape constraints";
    }
  }
  return std::nullopt;
}

Outcome check_mainthm64(int n, std::optional<int> only_k) {
  const int low = std::max(1, n - 2);
  const int high = only_k ? *only_k : 4;
  for (int k = only_k ? *only_k : low; k <= high; ++k) {
    if (k < low) continue;
    try {
      const GammaTableK table = gammaK(n, k);
      if (auto bad = gammaK_shape(n, table)) return bad;
      std::vector<std::string> xs;
      for (int i = 1; i <= k + 1; ++i) xs.push_back(indexed("x", i));
      const Polynomial by_gamma = from_elementary_basis(instantiate_gamma(table, k), xs);
      const Polynomial by_g1 = ck_by_grammar(n, k);
      const std::string tag = " at k=" + std::to_string(k);
      if (auto bad = differ(n, "gamma expansion vs D_{G1}^n(x1)" + tag, by_gamma, by_g1)) return bad;
      if (auto bad = differ(n, "D_{G1}^n(x1) vs j-statistics" + tag, by_g1, ck_by_statistic(n, k))) return bad;
      if (!is_symmetric(by_g1)) return at_n(n) + "C_n(x1..x{k+1}) not exchangeable" + tag;
    } catch (const DefectError& e) {
      return at_n(n) + e.what();
    }
  }
  return std::nullopt;
}

std::vector<int> gamman3_profile(int n) {
  std::vector<int> p(static_cast<std::size_t>(n), 0);
  p[0] = 2;
  p[1] = n - 3;
  p[2] = 1;
  return p;
}

Integer lookup(const GammaTableK& table, const std::vector<int>& key) {
  const auto it = table.find(key);
  return it == table.end() ? Integer(0) : it->second;
}

Outcome check_gamman3(int n, std::optional<int>) {
  const Integer g = lookup(gammaK(n, std::max(1, n - 2)), gamman3_profile(n));
  const Integer closed = power(2, n) - 2 * n;
  if (g != closed) return at_n(n) + "gamma(n;2,n-3,1,0..) = " + g.get_str() + ", expected " + closed.get_str();
  const Integer c = second_order_eulerian(n - 1, 2);
  if (g != c) return at_n(n) + "gamma(n;2,n-3,1,0..) = " + g.get_str() + " but C_{n-1,2} = " + c.get_str();
  return std::nullopt;
}

Outcome check_cn2(int n, std::optional<int>) {
  const Integer c = second_order_eulerian(n, 2);
  const Integer closed = power(2, n + 1) - 2 * (n + 1);
  if (c != closed) return at_n(n) + "C_{n,2} = " + c.get_str() + ", expected " + closed.get_str();
  return std::nullopt;
}

Outcome check_propfinal(int n, std::optional<int>) {
  const GammaTableK table = gammaK(n, std::max(1, n - 2));
  for (int j = 1; j <= n - 1; ++j) {
    Integer sum = 0;
    for (const auto& [p, c] : table) {
      if (p[0] == j) sum += c;
    }
    const Integer c = second_order_eulerian(n - 1, j);
    if (sum != c) {
      return at_n(n) + "j=" + std::to_string(j) + ": gamma sum " + sum.get_str() + " vs C_{n-1,j} = " + c.get_str();
    }
  }
  return std::nullopt;
}

// All profiles of length `len` summing to `total`.
void compositions(int len, int total, std::vector<int>& prefix, const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(prefix.size()) == len - 1) {
    prefix.push_back(total);
    f(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    prefix.push_back(v);
    compositions(len, total - v, prefix, f);
    prefix.pop_back();
  }
}

// Steps from the table of order n to order n+1.
Outcome check_gamma_rec(int n, std::optional<int>) {
  const GammaTableK small = gammaK(n, std::max(1, n - 2));
  const GammaTableK big = gammaK(n + 1, std::max(1, n - 1));
  const auto sz = static_cast<std::size_t>(n);
  std::vector<int> path(sz, 0);
  path[0] = 1;
  path[1] = n - 1;
  if (lookup(small, path) != 1) return at_n(n) + "path count is not 1";
  std::vector<int> star(sz + 1, 0);
  star[0] = n;
  star[sz] = 1;
  Integer factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  if (lookup(big, star) != factorial) return at_n(n) + "star count " + lookup(big, star).get_str() + " is not n!";
  Outcome bad;
  std::vector<int> prefix;
  compositions(n, n + 1, prefix, [&](const std::vector<int>& head) {
    if (bad) return;
    Integer rhs = 0;
    auto shifted = [&](std::vector<int> p) -> Integer {
      for (int v : p) {
        if (v < 0) return 0;
      }
      return lookup(small, p);
    };
    std::vector<int> p = head;
    p[1] -= 1;
    rhs += head[0] * shifted(p);
    for (int j = 2; j <= n - 1; ++j) {
      std::vector<int> q = head;
      const auto jj = static_cast<std::size_t>(j - 1);
      q[0] -= 1;
      q[jj] += 1;
      q[jj + 1] -= 1;
      rhs += j * (head[jj] + 1) * shifted(q);
    }
    std::vector<int> key = head;
    key.push_back(0);
    if (lookup(big, key) != rhs) {
      bad = at_n(n) + "recurrence fails at " + sets_to_string({LetterSet(key.begin(), key.end())}) + ": " +
            lookup(big, key).get_str() + " vs " + rhs.get_str();
    }
  });
  return bad;
}

// -- bijections ---------------------------------------------------------

template <typename T>
std::string show(const T& letters) {
  return word_to_string(std::span<const int>(letters.data(), letters.size()));
}

Outcome check_bijections(int n, std::optional<int>) {
  const Integer expected = double_factorial_odd(n);
  Outcome bad;
  auto fail = [&](const std::string& what) {
    if (!bad) bad = at_n(n) + what;
  };
  auto count_is = [&](const char* family, unsigned long count) {
    if (Integer(count) != expected) {
      fail(std::string(family) + " has " + std::to_string(count) + " members, expected " + expected.get_str());
    }
  };
  unsigned long count = 0;
  enumerate_q(n, 2, [&](std::span<const int> w) {
    ++count;
    const StirlingPermutation s{Word(w.begin(), w.end())};
    if (decode(encode(s)) != s) fail("code round trip fails on " + word_to_string(w));
    if (tree_to_perm(perm_to_tree(s)) != s) fail("tree round trip fails on " + word_to_string(w));
  });
  count_is("Q_n", count);
  count = 0;
  enumerate_codes(n, [&](std::span<const CodeTuple> t) {
    ++count;
    const SPCode c{std::vector<CodeTuple>(t.begin(), t.end())};
    if (encode(decode(c)) != c) fail("word round trip fails on " + code_to_string(t));
    if (tree_to_code(code_to_tree(c)) != c) fail("tree round trip fails on " + code_to_string(t));
    if (code_from_dumont(dumont_from_code(c)) != c) fail("Dumont round trip fails on " + code_to_string(t));
  });
  count_is("codes", count);
  count = 0;
  enumerate_ternary_trees(n, [&](const TernaryTree& t) {
    ++count;
    if (perm_to_tree(tree_to_perm(t)) != t) fail("word round trip fails on a tree");
    if (code_to_tree(tree_to_code(t)) != t) fail("code round trip fails on a tree");
  });
  count_is("ternary trees", count);
  count = 0;
  enumerate_dumont(n, [&](const DumontWord& w) {
    ++count;
    if (dumont_from_code(code_from_dumont(w)) != w) fail("code round trip fails on Dumont word " + show(w.letters()));
    if (dumont_from_riordan(riordan_from_dumont(w)) != w) {
      fail("Riordan round trip fails on Dumont word " + show(w.letters()));
    }
  });
  count_is("Dumont words", count);
  count = 0;
  enumerate_riordan(n, [&](const RiordanWord& t) {
    ++count;
    if (riordan_from_dumont(dumont_from_riordan(t)) != t) fail("Dumont round trip fails on " + show(t.letters()));
    if (riordan_from_matching(matching_from_riordan(t)) != t) fail("matching round trip fails on " + show(t.letters()));
  });
  count_is("Riordan words", count);
  count = 0;
  enumerate_matchings(n, [&](const PerfectMatching& m) {
    ++count;
    if (matching_from_riordan(riordan_from_matching(m)) != m) fail("Riordan round trip fails on a matching");
  });
  count_is("matchings", count);
  return bad;
}

Outcome check_convert_roundtrip(int n, std::optional<int>) {
  constexpr std::array<ObjectKind, 6> kinds{ObjectKind::stirling, ObjectKind::code,   ObjectKind::tree,
                                            ObjectKind::riordan,  ObjectKind::dumont, ObjectKind::matching};
  Outcome bad;
  enumerate_codes(n, [&](std::span<const CodeTuple> t) {
    if (bad) return;
    const AnyObject code = SPCode(std::vector<CodeTuple>(t.begin(), t.end()));
    std::vector<std::string> dumped;
    for (ObjectKind k : kinds) dumped.push_back(dump_object(convert(code, k)));
    for (std::size_t i = 0; i < kinds.size() && !bad; ++i) {
      const AnyObject parsed = parse_object(kinds[i], dumped[i]);
      if (dump_object(parsed) != dumped[i]) bad = at_n(n) + "dump/parse changes " + dumped[i];
      for (std::size_t j = 0; j < kinds.size() && !bad; ++j) {
        if (dump_object(convert(parsed, kinds[j])) != dumped[j]) {
          bad = at_n(n) + std::string(name_of(kinds[i])) + " " + dumped[i] + " converts to " +
                std::string(name_of(kinds[j])) + " inconsistently";
        }
      }
    }
  });
  enumerate_plane_trees(n, 3, [&](const PlaneIncreasingTree& t) {
    if (bad) return;
    const std::string s = dump_object(t);
    if (dump_object(parse_object(ObjectKind::plane_tree, s)) != s) bad = at_n(n) + "dump/parse changes " + s;
  });
  return bad;
}

// -- worked examples ----------------------------------------------------

Outcome expect(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return "example: " + what;
}

SPCode code_of(std::initializer_list<std::pair<int, int>> tuples) {
  std::vector<CodeTuple> t;
  for (const auto& [a, b] : tuples) t.push_back({a, b});
  return SPCode(std::move(t));
}

Outcome check_examples(int, std::optional<int>) {
  // Peeling trace of 551443312662.
  const std::vector<Word> prefixes{
      {1, 1}, {1, 1, 2, 2}, {1, 3, 3, 1, 2, 2}, {1, 4, 4, 3, 3, 1, 2, 2}, {5, 5, 1, 4, 4, 3, 3, 1, 2, 2},
      {5, 5, 1, 4, 4, 3, 3, 1, 2, 6, 6, 2}};
  const SPCode sigma_code = code_of({{0, 0}, {1, 3}, {1, 2}, {3, 1}, {1, 1}, {2, 2}});
  for (std::size_t m = 1; m <= prefixes.size(); ++m) {
    const std::vector<CodeTuple> head(sigma_code.tuples().begin(), sigma_code.tuples().begin() + static_cast<long>(m));
    if (auto bad = expect(decode(head).word() == prefixes[m - 1], "code prefix " + code_to_string(head))) return bad;
  }
  if (auto bad = expect(encode(prefixes.back()) == sigma_code, "encoding of 551443312662")) return bad;

  // The thirteen set-valued statistics of 77441223315665.
  const SPCode c7 = code_of({{0, 0}, {1, 2}, {2, 3}, {1, 1}, {1, 3}, {5, 2}, {4, 1}});
  const Word sigma{7, 7, 4, 4, 1, 2, 2, 3, 3, 1, 5, 6, 6, 5};
  if (auto bad = expect(decode(c7).word() == sigma, "decoding of C_7")) return bad;
  const std::array<LetterSet, 13> sets{{{2, 3, 5, 6, 7},
                                        {2, 3, 4, 6, 7},
                                        {3, 4, 5, 6, 7},
                                        {2, 3, 6, 7},
                                        {3, 4, 6, 7},
                                        {3, 5, 6, 7},
                                        {5},
                                        {4},
                                        {5},
                                        {2},
                                        {3, 6, 7},
                                        {2},
                                        {4}}};
  for (std::size_t i = 0; i < kSetStatTable.size(); ++i) {
    const SetStatId id = kSetStatTable[i].id;
    if (auto bad = expect(set_stat(sigma, id) == sets[i] && code_set_stat(c7, id) == sets[i],
                          std::string(kSetStatTable[i].name) + " of 77441223315665")) {
      return bad;
    }
  }
  const Word switched{7, 7, 4, 4, 1, 5, 5, 6, 6, 1, 2, 3, 3, 2};
  if (auto bad = expect(decode(switch_tuples(c7, 2, 3)).word() == switched &&
                            set_stat(switched, S::Ddes) == LetterSet{2} && set_stat(switched, S::Pasc) == LetterSet{5},
                        "switching kinds 2 and 3 in C_7")) {
    return bad;
  }

  // Riordan word 1-1-1-3-2-10 to a matching.
  const std::vector<std::vector<Block>> trace{
      {{1, 2}},
      {{1, 4}, {2, 3}},
      {{1, 6}, {2, 5}, {3, 4}},
      {{3, 8}, {1, 7}, {2, 6}, {4, 5}},
      {{2, 10}, {4, 9}, {1, 8}, {3, 7}, {5, 6}},
      {{10, 12}, {2, 11}, {4, 9}, {1, 8}, {3, 7}, {5, 6}}};
  const RiordanWord t({1, 1, 1, 3, 2, 10});
  if (auto bad = expect(matching_trace(t) == trace, "matching trace of 1-1-1-3-2-10")) return bad;
  if (auto bad = expect(riordan_from_matching(matching_from_riordan(t)) == t, "matching inverse")) return bad;

  // Dumont word 0-0-0-(-1)-1-5-1 to a code.
  const std::vector<int> w{0, 0, 0, -1, 1, 5, 1};
  const SPCode wc = code_of({{0, 0}, {1, 1}, {2, 1}, {1, 2}, {1, 3}, {5, 3}, {5, 1}});
  for (std::size_t m = 1; m <= w.size(); ++m) {
    const DumontWord head(std::vector<int>(w.begin(), w.begin() + static_cast<long>(m)));
    const std::vector<CodeTuple> want(wc.tuples().begin(), wc.tuples().begin() + static_cast<long>(m));
    if (auto bad = expect(code_from_dumont(head).tuples() == want, "Dumont prefix of length " + std::to_string(m))) {
      return bad;
    }
  }
  if (auto bad = expect(dumont_from_code(wc).letters() == w, "Dumont inverse")) return bad;

  // Trees of order 2 and the order-4 tree of 22114433.
  const std::array<std::pair<Word, SPCode>, 3> order2{{{{2, 2, 1, 1}, code_of({{0, 0}, {1, 1}})},
                                                      {{1, 2, 2, 1}, code_of({{0, 0}, {1, 2}})},
                                                      {{1, 1, 2, 2}, code_of({{0, 0}, {1, 3}})}}};
  for (const auto& [word, code] : order2) {
    const TernaryTree tree = code_to_tree(code);
    if (auto bad = expect(tree_to_perm(tree).word() == word && encode(word) == code && tree_to_code(tree) == code,
                          "order-2 tree " + word_to_string(word))) {
      return bad;
    }
  }
  const SPCode fig = code_of({{0, 0}, {1, 1}, {1, 3}, {3, 1}});
  const TernaryTree fig_tree({{2, 0, 3}, {0, 0, 0}, {4, 0, 0}, {0, 0, 0}});
  if (auto bad = expect(code_to_tree(fig) == fig_tree && tree_to_perm(fig_tree).word() == Word{2, 2, 1, 1, 4, 4, 3, 3} &&
                            perm_to_tree(tree_to_perm(fig_tree)) == fig_tree && encode(Word{2, 2, 1, 1, 4, 4, 3, 3}) == fig,
                        "tree of 22114433")) {
    return bad;
  }

  // Up-down pairs and the order-2 (lap, eud, rpd) values.
  const Word a{1, 2, 3, 3, 2, 1};
  const Word b{3, 3, 1, 2, 2, 1};
  if (auto bad = expect(scalar_stat(a, StatId::ud) == 2 && scalar_stat(b, StatId::ud) == 2 &&
                            scalar_stat(a, StatId::eud) == 3 && scalar_stat(b, StatId::eud) == 2,
                        "ud/eud of 123321 and 331221")) {
    return bad;
  }
  const std::array<std::pair<Word, std::array<int, 3>>, 3> q2{
      {{{1, 1, 2, 2}, {2, 1, 1}}, {{1, 2, 2, 1}, {1, 2, 1}}, {{2, 2, 1, 1}, {1, 1, 2}}}};
  for (const auto& [word, v] : q2) {
    if (auto bad = expect(scalar_stat(word, StatId::lap) == v[0] && scalar_stat(word, StatId::eud) == v[1] &&
                              scalar_stat(word, StatId::rpd) == v[2],
                          "lap/eud/rpd of " + word_to_string(word))) {
      return bad;
    }
  }
  std::set<Word> q21;
  enumerate_q1(2, [&](std::span<const int> x) { q21.emplace(x.begin(), x.end()); });
  const std::set<Word> listed{{1, 2, 2, 3, 3}, {1, 2, 3, 3, 2}, {1, 3, 3, 2, 2}, {3, 3, 1, 2, 2},
                              {2, 2, 1, 3, 3}, {2, 2, 3, 3, 1}, {2, 3, 3, 2, 1}, {3, 3, 2, 2, 1}};
  if (auto bad = expect(q21 == listed, "the eight words with one 1 and two 2s, 3s")) return bad;
  return std::nullopt;
}

// -- randomized properties ----------------------------------------------

Polynomial random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int terms, unsigned max_exp) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  Polynomial p(vars);
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars.size());
    for (auto& x : e) x = exp(rng);
    p.add_term(e, coef(rng));
  }
  return p;
}

Outcome check_leibniz(int n, std::optional<int>) {
  std::mt19937 rng(static_cast<std::mt19937::result_type>(7919 * n + 1));
  const std::vector<std::string> abc{"a", "b", "c"};
  Grammar random;
  for (const auto& s : abc) random.add_rule(s, random_poly(rng, abc, 3, 2));
  const std::vector<std::pair<Grammar, std::vector<std::string>>> cases{
      {builtin("G"), {"x", "y", "z"}}, {builtin("H"), {"u", "v", "w"}}, {builtin("I"), {"p1", "p2", "p3"}},
      {random, abc}};
  for (const auto& [g, vars] : cases) {
    const Polynomial p = random_poly(rng, vars, 4, 3);
    const Polynomial q = random_poly(rng, vars, 4, 3);
    const Integer a = std::uniform_int_distribution<int>(-9, 9)(rng);
    const Integer b = std::uniform_int_distribution<int>(-9, 9)(rng);
    if (auto bad = differ(n, "linearity", derive(g, p.scaled(a) + q.scaled(b)),
                          derive(g, p).scaled(a) + derive(g, q).scaled(b))) {
      return bad;
    }
    if (auto bad = differ(n, "product rule", derive(g, p * q), derive(g, p) * q + p * derive(g, q))) return bad;
    // D^3(pq) = sum binom(3,i) D^i p D^{3-i} q
    Polynomial sum;
    for (int i = 0; i <= 3; ++i) sum += (derive_n(g, p, i) * derive_n(g, q, 3 - i)).scaled(binomial(3, i));
    if (auto bad = differ(n, "iterated product rule", derive_n(g, p * q, 3), sum)) return bad;
  }
  return std::nullopt;
}

Outcome check_ebasis_roundtrip(int n, std::optional<int>) {
  std::mt19937 rng(static_cast<std::mt19937::result_type>(104729 * n + 3));
  const int m = 2 + n % 3;
  std::vector<std::string> es;
  std::vector<std::string> xs;
  for (int i = 1; i <= m; ++i) {
    es.push_back(indexed("e", i));
    xs.push_back(indexed("x", i));
  }
  const Polynomial in_e = random_poly(rng, es, 4, 3);
  const Polynomial expanded = from_elementary_basis(in_e, xs);
  if (!is_symmetric(expanded)) return at_n(n) + "expansion is not symmetric: " + expanded.to_string();
  return differ(n, "e-basis round trip", to_elementary_basis(expanded.over(xs)), in_e);
}

// -- registry -----------------------------------------------------------

std::vector<VerificationTarget> build_registry() {
  auto t = [](std::string id, std::string description, int lo, int hi, OrderCheck f) {
    return VerificationTarget{std::move(id), std::move(description), lo, hi, false, false, std::move(f)};
  };
  std::vector<VerificationTarget> r{
      t("bona", "asc, plat and des are equidistributed on Q_n and give C_n(x)", 1, 6, check_bona),
      t("laprpd", "lap, eud, rpd equidistributed; ap, ud, pd equidistributed", 1, 6, check_laprpd),
      t("apud", "ap ~ ud and lap ~ eud, matching the M and N recurrences", 1, 6, check_apud),
      t("prop21", "2^n A_n and B_n from lap and ap on Q_n^(1)", 1, 4, check_prop21),
      t("convo", "2^n A_n = sum binom N_i N_{n-i}, B_n = sum binom M_i N_{n-i}", 0, 6, check_convo),
      t("thm34", "six (set, set) pairs with Dasc/Dplat/Ddes/Uu/Pasc/Dd equidistributed", 1, 6, check_thm34),
      t("thm35", "six (set, set) pairs with Lap/Rpd/Eud equidistributed", 1, 6, check_thm35),
      t("thm36", "Dasc, Dplat, Ddes, Pasc, Uu, Dd equidistributed and pairwise symmetric", 1, 6, check_thm36),
      t("thm37", "four set-valued triples are symmetric", 1, 6, check_thm37),
      t("symmetry", "C_n(x,y,z) and N_n(x,y,z) are symmetric polynomials", 1, 6, check_symmetry),
      t("table1", "set-valued statistics read off the code agree with the word", 1, 6, check_table1),
      t("reverse", "reversal swaps asc/des, lap/rpd, Uu/Dd and fixes plat, eud, Apd", 1, 6, check_reverse),
      t("families", "A, B, M, N, C by statistic and recurrence; C_n by grammar and triangle", 0, 6, check_families),
      t("qntn", "exterior slot counts of ternary trees give C_n(x,y,z)", 1, 6, check_qntn),
      t("dumont_dt", "(dist, nneg, npos) on Dumont words gives C_n(x,y,z)", 1, 6, check_dumont_dt),
      t("dumont_rec", "C_{n+1} = xyz (d/dx + d/dy + d/dz) C_n", 1, 6, check_dumont_rec),
      t("chen22", "D_G^n(x) = D_H^{n-1}(w) after u,v,w -> e1,e2,e3; I is H renamed", 1, 8, check_chen22),
      t("mainthm51", "N_n(x,y,z) = sum 3^i gamma (x+y+z)^j (xyz)^k", 1, 6, check_mainthm51),
      t("mainthm64", "gamma expansion of C_n(x1..x{k+1}) = G1 derivative = j-statistics", 2, 4, check_mainthm64),
      t("gamman3", "gamma(n;2,n-3,1,0..) = 2^n - 2n = C_{n-1,2}", 3, 10, check_gamman3),
      t("cn2", "C_{n,2} = 2^{n+1} - 2(n+1)", 1, 10, check_cn2),
      t("propfinal", "C_{n-1,j} = sum of gamma(n; j, ...)", 2, 7, check_propfinal),
      t("carlitz", "C_n(x) = (1-x)^{2n+1} sum S(n+k,k) x^k", 1, 6, check_carlitz),
      t("ebasis", "C_n(x,y,z) is e-positive with the D_H gamma table; gamma = tree counts", 1, 7, check_ebasis),
      t("gamma_rec", "path, star and general recurrences between gamma tables", 2, 6, check_gamma_rec),
      t("bijections", "all six bijections round-trip; every family has (2n-1)!! members", 1, 7, check_bijections),
      t("convert_roundtrip", "JSON dump/parse and conversions are consistent", 1, 5, check_convert_roundtrip),
      t("leibniz", "derivations are linear and obey the product rule (random trials)", 1, 20, check_leibniz),
      t("ebasis_roundtrip", "e-basis expansion and reduction are inverse (random trials)", 1, 20,
        check_ebasis_roundtrip),
  };
  auto fixed = [](std::string id, std::string description, OrderCheck f) {
    return VerificationTarget{std::move(id), std::move(description), 0, 0, true, false, std::move(f)};
  };
  r.push_back(fixed("examples", "worked examples: peeling trace, set statistics, matching and Dumont traces, trees",
                    check_examples));
  r.push_back(fixed("lemma52", "D_I^n(p3) for n = 1, 2, 3", check_lemma52));
  r.push_back(fixed("g2display", "D_{G2}^n(x1) for n = 1..5 at k = 4, 5, 6", check_g2display));
  for (auto& target : r) {
    if (target.id == "mainthm64") target.uses_k = true;
  }
  return r;
}

}  // namespace

const std::vector<VerificationTarget>& registry() {
  static const std::vector<VerificationTarget> targets = build_registry();
  return targets;
}

VerificationReport verify(std::string_view id, std::optional<int> n_max, std::optional<int> k) {
  const auto& all = registry();
  const auto it = std::find_if(all.begin(), all.end(), [&](const auto& t) { return t.id == id; });
  if (it == all.end()) throw InvalidObject("unknown theorem id '" + std::string(id) + "'");
  if (k && !it->uses_k) throw InvalidObject("theorem '" + std::string(id) + "' takes no k");
  if (k && *k < 1) throw InvalidObject("k must be at least 1");
  VerificationReport r;
  r.id = it->id;
  r.description = it->description;
  r.n_min = it->n_min;
  r.n_max = it->fixed || !n_max ? it->n_max : *n_max;
  r.k = k;
  for (int n = r.n_min; n <= r.n_max; ++n) {
    if (auto bad = it->check(n, k)) {
      r.passed = false;
      r.counterexample = *bad;
      break;
    }
  }
  return r;
}

std::vector<VerificationReport> verify_all(std::optional<int> n_max) {
  std::vector<VerificationReport> out;
  for (const auto& t : registry()) out.push_back(verify(t.id, n_max));
  return out;
}

}  // namespace stirling
