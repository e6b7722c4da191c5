#include "stirling/statistics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace stirling {

namespace {

constexpr BoundaryConvention kBoth{true, true};

// The word seen through a boundary convention: index 0 and L+1 are the
// virtual zeros, undefined when the convention switches them off.
class Padded {
 public:
  Padded(std::span<const int> word, BoundaryConvention boundary)
      : word_(word), boundary_(boundary) {}

  std::ptrdiff_t length() const { return static_cast<std::ptrdiff_t>(word_.size()); }

  std::optional<int> at(std::ptrdiff_t i) const {
    if (i == 0) return boundary_.left_zero ? std::optional<int>(0) : std::nullopt;
    if (i == length() + 1) return boundary_.right_zero ? std::optional<int>(0) : std::nullopt;
    if (i < 0 || i > length() + 1) return std::nullopt;
    return word_[static_cast<std::size_t>(i - 1)];
  }

 private:
  std::span<const int> word_;
  BoundaryConvention boundary_;
};

enum class Rel { lt, eq, gt };

bool holds(const std::optional<int>& a, Rel r, const std::optional<int>& b) {
  if (!a || !b) return false;
  switch (r) {
    case Rel::lt: return *a < *b;
    case Rel::eq: return *a == *b;
    case Rel::gt: return *a > *b;
  }
  return false;
}

// Positions i in 0..L+1 where sigma_{i+off} r_0 sigma_{i+off+1} r_1 ... holds.
template <std::size_t N>
std::vector<std::ptrdiff_t> matches(const Padded& p, std::ptrdiff_t offset,
                                    const std::array<Rel, N>& rels) {
  std::vector<std::ptrdiff_t> out;
  for (std::ptrdiff_t i = 0; i <= p.length() + 1; ++i) {
    bool ok = true;
    for (std::size_t r = 0; r < N && ok; ++r) {
      const auto base = i + offset + static_cast<std::ptrdiff_t>(r);
      ok = holds(p.at(base), rels[r], p.at(base + 1));
    }
    if (ok) out.push_back(i);
  }
  return out;
}

struct Occurrence {
  int letter;
  std::ptrdiff_t first;  // 1-based
  std::ptrdiff_t last;
};

std::vector<Occurrence> occurrences(std::span<const int> word) {
  std::vector<Occurrence> occ;
  const int max_letter = word.empty() ? 0 : *std::max_element(word.begin(), word.end());
  std::vector<std::ptrdiff_t> first(static_cast<std::size_t>(max_letter) + 1, 0);
  std::vector<std::ptrdiff_t> last(first.size(), 0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto a = static_cast<std::size_t>(word[i]);
    if (first[a] == 0) first[a] = static_cast<std::ptrdiff_t>(i) + 1;
    last[a] = static_cast<std::ptrdiff_t>(i) + 1;
  }
  for (int a = 1; a <= max_letter; ++a) {
    if (first[static_cast<std::size_t>(a)] != 0) {
      occ.push_back({a, first[static_cast<std::size_t>(a)], last[static_cast<std::size_t>(a)]});
    }
  }
  return occ;
}

// Letters whose first copy is entered by `in` and whose last copy is left
// by `out`: sigma_{i-1} in sigma_i = sigma_j out sigma_{j+1}, i < j.
LetterSet pair_letters(const Padded& p, std::span<const int> word, Rel in, Rel out) {
  LetterSet letters;
  for (const auto& o : occurrences(word)) {
    if (o.first >= o.last) continue;
    const std::optional<int> a = o.letter;
    const bool enter = in == Rel::lt ? holds(p.at(o.first - 1), Rel::lt, a)
                                     : holds(p.at(o.first - 1), Rel::gt, a);
    const bool leave = out == Rel::gt ? holds(a, Rel::gt, p.at(o.last + 1))
                                      : holds(a, Rel::lt, p.at(o.last + 1));
    if (enter && leave) letters.push_back(o.letter);
  }
  return letters;
}

LetterSet letters_at(std::span<const int> word, const std::vector<std::ptrdiff_t>& positions) {
  std::set<int> s;
  for (auto i : positions) {
    if (i >= 1 && i <= static_cast<std::ptrdiff_t>(word.size())) {
      s.insert(word[static_cast<std::size_t>(i - 1)]);
    }
  }
  return {s.begin(), s.end()};
}

int count_positions(const std::vector<std::ptrdiff_t>& positions) {
  return static_cast<int>(positions.size());
}

}  // namespace

BoundaryConvention boundary_of(StatId id) {
  for (const auto& info : kStatTable) {
    if (info.id == id) return info.boundary;
  }
  throw InvalidObject("unknown statistic");
}

std::string_view name_of(StatId id) {
  for (const auto& info : kStatTable) {
    if (info.id == id) return info.name;
  }
  throw InvalidObject("unknown statistic");
}

std::string_view name_of(SetStatId id) {
  for (const auto& info : kSetStatTable) {
    if (info.id == id) return info.name;
  }
  throw InvalidObject("unknown set-valued statistic");
}

StatId stat_from_name(std::string_view name) {
  for (const auto& info : kStatTable) {
    if (info.name == name) return info.id;
  }
  throw InvalidObject("unknown statistic '" + std::string(name) + "'");
}

SetStatId set_stat_from_name(std::string_view name) {
  for (const auto& info : kSetStatTable) {
    if (info.name == name) return info.id;
  }
  throw InvalidObject("unknown set-valued statistic '" + std::string(name) + "'");
}

int scalar_stat(std::span<const int> word, StatId id) {
  const Padded p(word, boundary_of(id));
  using A1 = std::array<Rel, 1>;
  using A2 = std::array<Rel, 2>;
  switch (id) {
    case StatId::asc: return count_positions(matches(p, 0, A1{Rel::lt}));
    case StatId::des: return count_positions(matches(p, 0, A1{Rel::gt}));
    case StatId::plat: return count_positions(matches(p, 0, A1{Rel::eq}));
    case StatId::ap:
    case StatId::lap: return count_positions(matches(p, -1, A2{Rel::lt, Rel::eq}));
    case StatId::pd:
    case StatId::rpd: return count_positions(matches(p, -1, A2{Rel::eq, Rel::gt}));
    case StatId::ud:
    case StatId::eud: return static_cast<int>(pair_letters(p, word, Rel::lt, Rel::gt).size());
    case StatId::dasc: return static_cast<int>(set_stat(word, SetStatId::Dasc).size());
    case StatId::dplat: return static_cast<int>(set_stat(word, SetStatId::Dplat).size());
    case StatId::ddes: return static_cast<int>(set_stat(word, SetStatId::Ddes).size());
    case StatId::pasc: return static_cast<int>(set_stat(word, SetStatId::Pasc).size());
    case StatId::apd: return static_cast<int>(set_stat(word, SetStatId::Apd).size());
    case StatId::uu: return static_cast<int>(set_stat(word, SetStatId::Uu).size());
    case StatId::dd: return static_cast<int>(set_stat(word, SetStatId::Dd).size());
  }
  throw InvalidObject("unknown statistic");
}

LetterSet set_stat(std::span<const int> word, SetStatId id) {
  const Padded p(word, kBoth);
  using A1 = std::array<Rel, 1>;
  using A2 = std::array<Rel, 2>;
  using A3 = std::array<Rel, 3>;
  switch (id) {
    case SetStatId::Asc: return letters_at(word, matches(p, -1, A1{Rel::lt}));
    case SetStatId::Plat: return letters_at(word, matches(p, 0, A1{Rel::eq}));
    case SetStatId::Des: return letters_at(word, matches(p, 0, A1{Rel::gt}));
    case SetStatId::Lap: return letters_at(word, matches(p, -1, A2{Rel::lt, Rel::eq}));
    case SetStatId::Rpd: return letters_at(word, matches(p, -1, A2{Rel::eq, Rel::gt}));
    case SetStatId::Eud: return pair_letters(p, word, Rel::lt, Rel::gt);
    case SetStatId::Dasc: return letters_at(word, matches(p, -1, A2{Rel::lt, Rel::lt}));
    case SetStatId::Dplat: return letters_at(word, matches(p, -1, A2{Rel::gt, Rel::eq}));
    case SetStatId::Ddes: return letters_at(word, matches(p, -1, A2{Rel::gt, Rel::gt}));
    case SetStatId::Pasc: return letters_at(word, matches(p, -1, A2{Rel::eq, Rel::lt}));
    case SetStatId::Apd: return letters_at(word, matches(p, -1, A3{Rel::lt, Rel::eq, Rel::gt}));
    case SetStatId::Uu: return pair_letters(p, word, Rel::lt, Rel::lt);
    case SetStatId::Dd: return pair_letters(p, word, Rel::gt, Rel::gt);
  }
  throw InvalidObject("unknown set-valued statistic");
}

int j_stat(std::span<const int> word, int k, JStatQuery query) {
  if (query.j < 1 || query.j > k) {
    throw std::out_of_range("j = " + std::to_string(query.j) + " outside 1.." + std::to_string(k));
  }
  const Padded p(word, kBoth);
  const int max_letter = word.empty() ? 0 : *std::max_element(word.begin(), word.end());
  std::vector<int> seen(static_cast<std::size_t>(max_letter) + 1, 0);
  int count = 0;
  for (std::ptrdiff_t i = 0; i <= p.length(); ++i) {
    const int a = *p.at(i);
    const int copy = i == 0 ? 1 : ++seen[static_cast<std::size_t>(a)];
    if (copy != query.j) continue;
    const int b = *p.at(i + 1);
    switch (query.kind) {
      case JStatKind::plateau: count += (i > 0 && a == b) ? 1 : 0; break;
      case JStatKind::ascent: count += a < b ? 1 : 0; break;
      case JStatKind::descent: count += a > b ? 1 : 0; break;
    }
  }
  return count;
}

int des_type_b(std::span<const int> signed_perm) {
  int count = 0;
  int prev = 0;
  for (int v : signed_perm) {
    if (prev > v) ++count;
    prev = v;
  }
  return count;
}

}  // namespace stirling
