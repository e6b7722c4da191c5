#include "stirling/sp_code.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace stirling {

namespace {

// slots[a][b-1] is true when some tuple is (a, b).
std::vector<std::array<bool, 3>> occupied_slots(std::span<const CodeTuple> tuples) {
  std::vector<std::array<bool, 3>> slots(tuples.size() + 1, {false, false, false});
  for (std::size_t i = 1; i < tuples.size(); ++i) {
    slots[static_cast<std::size_t>(tuples[i].a)][static_cast<std::size_t>(tuples[i].b - 1)] = true;
  }
  return slots;
}

}  // namespace

bool is_valid_code(std::span<const CodeTuple> tuples) {
  if (tuples.empty() || tuples[0] != CodeTuple{0, 0}) return false;
  std::set<CodeTuple> seen;
  for (std::size_t i = 1; i < tuples.size(); ++i) {
    const auto& t = tuples[i];
    if (t.a < 1 || t.a > static_cast<int>(i) || t.b < 1 || t.b > 3) return false;
    if (!seen.insert(t).second) return false;
  }
  return true;
}

SPCode::SPCode(std::vector<CodeTuple> tuples) : tuples_(std::move(tuples)) {
  if (!is_valid_code(tuples_)) {
    throw InvalidObject("not a Stirling permutation code: " + code_to_string(tuples_));
  }
}

SPCode encode(std::span<const int> word) {
  if (!is_stirling(word, 2)) {
    throw InvalidObject("not a Stirling permutation: " + word_to_string(word));
  }
  const int n = static_cast<int>(word.size()) / 2;
  Word w(word.begin(), word.end());
  std::vector<CodeTuple> tuples(static_cast<std::size_t>(n));
  for (int m = n; m >= 2; --m) {
    const auto it = std::find(w.begin(), w.end(), m);
    const auto p = static_cast<std::size_t>(it - w.begin());
    const int left = p == 0 ? 0 : w[p - 1];
    const int right = p + 2 < w.size() ? w[p + 2] : 0;
    CodeTuple t;
    if (left < right) {
      t = {right, 1};
    } else if (left == right) {
      t = {right, 2};
    } else {
      t = {left, 3};
    }
    tuples[static_cast<std::size_t>(m - 1)] = t;
    w.erase(it, it + 2);
  }
  return SPCode(std::move(tuples));
}

StirlingPermutation decode(std::span<const CodeTuple> tuples) {
  if (!is_valid_code(tuples)) {
    throw InvalidObject("not a Stirling permutation code: " + code_to_string(tuples));
  }
  Word w{1, 1};
  for (std::size_t i = 1; i < tuples.size(); ++i) {
    const int letter = static_cast<int>(i) + 1;
    const auto [a, b] = tuples[i];
    const auto first = static_cast<std::size_t>(std::find(w.begin(), w.end(), a) - w.begin());
    const auto second =
        static_cast<std::size_t>(std::find(w.begin() + static_cast<std::ptrdiff_t>(first) + 1, w.end(), a) -
                                 w.begin());
    std::size_t gap = 0;
    bool ok = false;
    switch (b) {
      case 1:
        gap = first;
        ok = first == 0 || w[first - 1] < a;
        break;
      case 2:
        gap = first + 1;
        ok = second == first + 1;
        break;
      case 3:
        gap = second + 1;
        ok = second + 1 == w.size() || w[second + 1] < a;
        break;
    }
    if (!ok) {
      throw InvalidObject("code " + code_to_string(tuples) + " names a missing gap at step " +
                          std::to_string(i));
    }
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(gap), 2, letter);
  }
  return StirlingPermutation(std::move(w), 2);
}

StirlingPermutation decode(const SPCode& code) { return decode(std::span<const CodeTuple>(code.tuples())); }

LetterSet code_set_stat(const SPCode& code, SetStatId id) {
  const auto slots = occupied_slots(code.tuples());
  LetterSet out;
  for (int a = 1; a <= code.order(); ++a) {
    const auto& s = slots[static_cast<std::size_t>(a)];
    const bool l = s[0];
    const bool m = s[1];
    const bool r = s[2];
    bool in = false;
    switch (id) {
      case SetStatId::Asc: in = !l; break;
      case SetStatId::Plat: in = !m; break;
      case SetStatId::Des: in = !r; break;
      case SetStatId::Lap: in = !l && !m; break;
      case SetStatId::Rpd: in = !m && !r; break;
      case SetStatId::Eud: in = !l && !r; break;
      case SetStatId::Dasc: in = !l && m; break;
      case SetStatId::Dplat: in = l && !m; break;
      case SetStatId::Ddes: in = m && !r; break;
      case SetStatId::Pasc: in = !m && r; break;
      case SetStatId::Apd: in = !l && !m && !r; break;
      case SetStatId::Uu: in = !l && r; break;
      case SetStatId::Dd: in = l && !r; break;
    }
    if (in) out.push_back(a);
  }
  return out;
}

SPCode switch_tuples(const SPCode& code, int from, int to) {
  if (from == to || from < 1 || from > 3 || to < 1 || to > 3) {
    throw InvalidObject("switch needs two different kinds in 1..3");
  }
  std::vector<CodeTuple> tuples = code.tuples();
  for (std::size_t i = 1; i < tuples.size(); ++i) {
    if (tuples[i].b == from) {
      tuples[i].b = to;
    } else if (tuples[i].b == to) {
      tuples[i].b = from;
    }
  }
  return SPCode(std::move(tuples));
}

namespace {

void extend_code(std::vector<CodeTuple>& tuples, std::set<CodeTuple>& used, int n,
                 const CodeVisitor& visit) {
  const int i = static_cast<int>(tuples.size());
  if (i == n) {
    visit(tuples);
    return;
  }
  for (int a = 1; a <= i; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const CodeTuple t{a, b};
      if (used.count(t) != 0) continue;
      used.insert(t);
      tuples.push_back(t);
      extend_code(tuples, used, n, visit);
      tuples.pop_back();
      used.erase(t);
    }
  }
}

}  // namespace

void enumerate_codes(int n, const CodeVisitor& visit, std::uint64_t cap) {
  if (n < 1) throw InvalidObject("enumerate_codes needs n >= 1");
  const std::uint64_t total = count_q(n, 2);
  if (total > cap) throw CapExceeded("code enumeration", total, cap);
  std::vector<CodeTuple> tuples{{0, 0}};
  std::set<CodeTuple> used;
  extend_code(tuples, used, n, visit);
}

std::vector<SPCode> all_codes(int n, std::uint64_t cap) {
  std::vector<SPCode> out;
  enumerate_codes(n, [&](std::span<const CodeTuple> t) { out.emplace_back(std::vector<CodeTuple>(t.begin(), t.end())); },
                  cap);
  return out;
}

std::string code_to_string(std::span<const CodeTuple> tuples) {
  std::string out;
  for (const auto& t : tuples) {
    out += '(' + std::to_string(t.a) + ',' + std::to_string(t.b) + ')';
  }
  return out;
}

}  // namespace stirling
