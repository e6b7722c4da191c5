#include "stirling/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "stirling/core_objects.hpp"

namespace stirling {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0U);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0U);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j]) throw InvalidObject("symbol '" + vars_[i] + "' declared twice");
    }
  }
}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace(Exponents{}, Integer(c));
}

Polynomial Polynomial::constant(const Integer& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(Exponents{}, c);
  return p;
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p(std::vector<std::string>{name});
  p.terms_.emplace(Exponents{1}, Integer(1));
  return p;
}

int Polynomial::index_of(const std::string& name) const {
  const auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0U);
}

void Polynomial::add_term(const Exponents& exps, const Integer& c) {
  if (exps.size() != vars_.size()) throw InvalidObject("exponent vector does not match the alphabet");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer Polynomial::coefficient(const std::map<std::string, unsigned>& monomial) const {
  Exponents exps(vars_.size(), 0);
  for (const auto& [name, e] : monomial) {
    const int i = index_of(name);
    if (i < 0) {
      if (e != 0) return 0;
      continue;
    }
    exps[static_cast<std::size_t>(i)] = e;
  }
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Integer(0) : it->second;
}

Polynomial Polynomial::over(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  Polynomial out(vars);
  std::vector<int> target(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) target[i] = out.index_of(vars_[i]);
  for (const auto& [exps, c] : terms_) {
    Exponents e(vars.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (target[i] < 0) throw InvalidObject("symbol '" + vars_[i] + "' missing from the target alphabet");
      e[static_cast<std::size_t>(target[i])] = exps[i];
    }
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

Polynomial Polynomial::trimmed() const {
  std::vector<std::string> used;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const bool occurs = std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[i] != 0; });
    if (occurs) used.push_back(vars_[i]);
  }
  return over(used);
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  if (q.vars_ != vars_) {
    const auto vars = union_vars(vars_, q.vars_);
    *this = over(vars);
    return *this += q.over(vars);
  }
  for (const auto& [exps, c] : q.terms_) add_term(exps, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) { return *this += -q; }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.vars_ != q.vars_) {
    const auto vars = union_vars(p.vars_, q.vars_);
    return p.over(vars) * q.over(vars);
  }
  Polynomial out(p.vars_);
  Exponents e(p.vars_.size());
  for (const auto& [a, ca] : p.terms_) {
    for (const auto& [b, cb] : q.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = *this * q; }

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Integer& c) const {
  Polynomial out(vars_);
  if (c == 0) return out;
  for (const auto& [exps, coef] : terms_) out.terms_.emplace(exps, coef * c);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = Polynomial(1).over(vars_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  if (p.vars_ == q.vars_) return p.terms_ == q.terms_;
  const auto vars = union_vars(p.vars_, q.vars_);
  return p.over(vars).terms_ == q.over(vars).terms_;
}

Polynomial Polynomial::partial(const std::string& name) const {
  Polynomial out(vars_);
  const int i = index_of(name);
  if (i < 0) return out;
  const auto at = static_cast<std::size_t>(i);
  for (const auto& [exps, c] : terms_) {
    if (exps[at] == 0) continue;
    Exponents e = exps;
    --e[at];
    out.add_term(e, c * exps[at]);
  }
  return out;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images) const {
  std::vector<std::string> kept;
  for (const auto& v : vars_) {
    if (images.count(v) == 0) kept.push_back(v);
  }
  Polynomial out(kept);
  // powers[i][e] = image of vars_[i] raised to e, filled on demand.
  std::vector<std::vector<Polynomial>> powers(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = images.find(vars_[i]);
    powers[i].push_back(Polynomial(1));
    powers[i].push_back(it == images.end() ? variable(vars_[i]) : it->second);
  }
  for (const auto& [exps, c] : terms_) {
    Polynomial term = constant(c);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      auto& pw = powers[i];
      while (pw.size() <= exps[i]) pw.push_back(pw.back() * pw[1]);
      if (exps[i] > 0) term *= pw[exps[i]];
    }
    out += term;
  }
  return out;
}

std::vector<Integer> Polynomial::univariate_coefficients() const {
  const Polynomial p = trimmed();
  if (p.vars_.size() > 1) throw InvalidObject("polynomial is not univariate: " + to_string());
  std::vector<Integer> out(p.total_degree() + 1, 0);
  for (const auto& [exps, c] : p.terms_) out[exps.empty() ? 0 : exps[0]] = c;
  if (p.is_zero()) out.clear();
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, c] : terms_) {
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string monomial;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += vars_[i];
      if (exps[i] > 1) monomial += '^' + std::to_string(exps[i]);
    }
    if (monomial.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += magnitude.get_str() + '*' + monomial;
    }
  }
  return out;
}

Polynomial elementary(int k, const std::vector<std::string>& vars) {
  const int m = static_cast<int>(vars.size());
  if (k < 0 || k > m) {
    throw InvalidObject("e_" + std::to_string(k) + " needs 0 <= k <= " + std::to_string(m));
  }
  Polynomial out(vars);
  std::vector<bool> pick(static_cast<std::size_t>(m), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Exponents e(pick.begin(), pick.end());
    out.add_term(e, 1);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

bool is_symmetric(const Polynomial& p) {
  const std::size_t m = p.vars().size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    Polynomial::Terms swapped;
    for (const auto& [exps, c] : p.terms()) {
      Exponents e = exps;
      std::swap(e[i], e[i + 1]);
      swapped.emplace(std::move(e), c);
    }
    if (swapped != p.terms()) return false;
  }
  return true;
}

Polynomial to_elementary_basis(const Polynomial& p, const std::string& prefix) {
  if (!is_symmetric(p)) throw InvalidObject("not symmetric: " + p.to_string());
  const auto& vars = p.vars();
  const std::size_t m = vars.size();
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) names.push_back(prefix + std::to_string(i));
  std::vector<Polynomial> es;
  for (std::size_t i = 0; i <= m; ++i) es.push_back(elementary(static_cast<int>(i), vars));

  Polynomial result(names);
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.terms().begin();
    Exponents basis(m, 0);
    Polynomial product = Polynomial(1).over(vars);
    for (std::size_t i = 0; i < m; ++i) {
      const unsigned next = i + 1 < m ? lead[i + 1] : 0;
      if (lead[i] < next) throw DefectError("leading monomial is not a partition");
      basis[i] = lead[i] - next;
      if (basis[i] > 0) product *= es[i + 1].pow(basis[i]);
    }
    result.add_term(basis, c);
    rest -= product.scaled(c);
  }
  return result;
}

Polynomial from_elementary_basis(const Polynomial& p, const std::vector<std::string>& vars,
                                 const std::string& prefix) {
  std::map<std::string, Polynomial> images;
  for (std::size_t i = 1; i <= vars.size(); ++i) {
    images.emplace(prefix + std::to_string(i), elementary(static_cast<int>(i), vars));
  }
  const Polynomial expanded = p.substitute(images);
  return expanded.over(union_vars(vars, expanded.vars()));
}

bool nonnegative(const Polynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second >= 0; });
}

Polynomial from_coefficients(const std::vector<Integer>& coefficients, const std::string& var) {
  Polynomial out(std::vector<std::string>{var});
  for (std::size_t d = 0; d < coefficients.size(); ++d) {
    out.add_term(Exponents{static_cast<unsigned>(d)}, coefficients[d]);
  }
  return out;
}

}  // namespace stirling
