// Brute-force reference implementations written straight from the
// definitions, sharing no code with the library.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

// Letter counts are right and every letter between two copies of i is >= i.
inline bool stirling(const Word& w, int k) {
  std::map<int, int> count;
  for (int v : w) ++count[v];
  if (count.empty()) return true;
  const int n = count.rbegin()->first;
  if (count.begin()->first != 1 || static_cast<int>(count.size()) != n) return false;
  for (const auto& [v, c] : count) {
    if (c != k) return false;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] != w[j]) continue;
      for (std::size_t m = i + 1; m < j; ++m) {
        if (w[m] < w[i]) return false;
      }
    }
  }
  return true;
}

// Every distinct rearrangement of the multiset, filtered.
inline std::set<Word> multiset_words(const std::vector<int>& multiplicity) {
  Word w;
  for (std::size_t i = 0; i < multiplicity.size(); ++i) w.insert(w.end(), static_cast<std::size_t>(multiplicity[i]), static_cast<int>(i) + 1);
  std::set<Word> out;
  do {
    out.insert(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::set<Word> q(int n, int k) {
  std::set<Word> out;
  for (const Word& w : multiset_words(std::vector<int>(static_cast<std::size_t>(n), k))) {
    if (stirling(w, k)) out.insert(w);
  }
  return out;
}

// Stirling words of {1, 2^2, ..., (n+1)^2}: between two copies of i nothing smaller.
inline std::set<Word> q1(int n) {
  std::vector<int> m(static_cast<std::size_t>(n) + 1, 2);
  m[0] = 1;
  std::set<Word> out;
  for (const Word& w : multiset_words(m)) {
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < w.size() && ok; ++j) {
        if (w[i] != w[j]) continue;
        for (std::size_t t = i + 1; t < j; ++t) ok = ok && w[t] >= w[i];
      }
    }
    if (ok) out.insert(w);
  }
  return out;
}

// p[0] = p[L+1] = 0, p[1..L] = w.
inline Word pad(const Word& w) {
  Word p{0};
  p.insert(p.end(), w.begin(), w.end());
  p.push_back(0);
  return p;
}

// Index ranges exactly as in the definitions; 1-based positions into p.
inline int stat(const Word& w, const std::string& name) {
  const Word p = pad(w);
  const int L = static_cast<int>(w.size());
  int c = 0;
  if (name == "asc" || name == "des" || name == "plat") {
    for (int i = 0; i <= L; ++i) {
      c += name == "asc" ? p[i] < p[i + 1] : name == "des" ? p[i] > p[i + 1] : p[i] == p[i + 1];
    }
  } else if (name == "ap") {
    for (int i = 2; i <= L - 1; ++i) c += p[i - 1] < p[i] && p[i] == p[i + 1];
  } else if (name == "pd") {
    for (int i = 2; i <= L - 1; ++i) c += p[i - 1] == p[i] && p[i] > p[i + 1];
  } else if (name == "lap") {
    for (int i = 1; i <= L - 1; ++i) c += p[i - 1] < p[i] && p[i] == p[i + 1];
  } else if (name == "rpd") {
    for (int i = 2; i <= L; ++i) c += p[i - 1] == p[i] && p[i] > p[i + 1];
  } else if (name == "ud" || name == "eud") {
    // ud: i in [L-2], sigma_{j+1} must be a real letter; eud: i in [L-1], right zero allowed.
    const int last_i = name == "ud" ? L - 2 : L - 1;
    const int last_j1 = name == "ud" ? L : L + 1;
    for (int i = 1; i <= last_i; ++i) {
      bool hit = false;
      for (int j = i + 1; j + 1 <= last_j1 && !hit; ++j) {
        hit = p[i - 1] < p[i] && p[i] == p[j] && p[j] > p[j + 1];
      }
      c += hit;
    }
  }
  return c;
}

// Letter values, both zeros in force.
inline std::set<int> set_stat(const Word& w, const std::string& name) {
  const Word p = pad(w);
  const int L = static_cast<int>(w.size());
  std::set<int> out;
  auto at = [&](int i) { return i >= 0 && i <= L + 1 ? p[i] : -1; };
  for (int i = 1; i <= L; ++i) {
    const int a = at(i - 1);
    const int v = p[i];
    const int b = at(i + 1);
    bool hit = false;
    if (name == "Asc") hit = a < v;
    if (name == "Plat") hit = v == b;
    if (name == "Des") hit = v > b;
    if (name == "Lap") hit = a < v && v == b;
    if (name == "Rpd") hit = a == v && v > b;
    if (name == "Dasc") hit = a < v && v < b;
    if (name == "Dplat") hit = a > v && v == b;
    if (name == "Ddes") hit = a > v && v > b;
    if (name == "Pasc") hit = a == v && v < b;
    if (name == "Apd") hit = a < v && v == b && i + 2 <= L + 1 && b > p[i + 2];
    if (name == "Eud" || name == "Uu" || name == "Dd") {
      for (int j = i + 1; j <= L && !hit; ++j) {
        if (p[j] != v) continue;
        if (name == "Eud") hit = a < v && v > p[j + 1];
        if (name == "Uu") hit = a < v && v < p[j + 1];
        if (name == "Dd") hit = a > v && v > p[j + 1];
      }
    }
    if (hit) out.insert(v);
  }
  return out;
}

inline long long double_factorial_odd(int n) {
  long long out = 1;
  for (int i = 1; i <= n; ++i) out *= 2 * i - 1;
  return out;
}

// Random word of Q_n(k) by random block insertion.
inline Word random_stirling(std::mt19937& rng, int n, int k) {
  Word w;
  for (int m = 1; m <= n; ++m) {
    std::uniform_int_distribution<std::size_t> gap(0, w.size());
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(gap(rng)), static_cast<std::size_t>(k), m);
  }
  return w;
}

}  // namespace oracle
