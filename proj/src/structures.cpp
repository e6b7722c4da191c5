#include "stirling/structures.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

namespace stirling {

namespace {

std::uint64_t double_factorial_odd(int n) {
  return count_q(n, 2);
}

void check_cap(const std::string& what, std::uint64_t requested, std::uint64_t cap) {
  if (requested > cap) throw CapExceeded(what, requested, cap);
}

std::string join(std::span<const int> xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

}  // namespace

// ---------------------------------------------------------------- ternary trees

TernaryTree::TernaryTree(std::vector<Slots> slots) : slots_(std::move(slots)) {
  const int n = static_cast<int>(slots_.size());
  if (n < 1) throw InvalidObject("a ternary tree needs at least one node");
  std::vector<int> parents(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    for (int c : slots_[static_cast<std::size_t>(v - 1)]) {
      if (c == 0) continue;
      if (c <= v || c > n) {
        throw InvalidObject("child " + std::to_string(c) + " of node " + std::to_string(v) +
                            " breaks the increasing labelling");
      }
      if (parents[static_cast<std::size_t>(c)] != 0) {
        throw InvalidObject("node " + std::to_string(c) + " has two parents");
      }
      parents[static_cast<std::size_t>(c)] = v;
    }
  }
  for (int v = 2; v <= n; ++v) {
    if (parents[static_cast<std::size_t>(v)] == 0) {
      throw InvalidObject("node " + std::to_string(v) + " is detached");
    }
  }
}

namespace {

void read_tree(const TernaryTree& tree, int v, Word& out) {
  const auto& s = tree.slots(v);
  if (s[0] != 0) read_tree(tree, s[0], out);
  out.push_back(v);
  if (s[1] != 0) read_tree(tree, s[1], out);
  out.push_back(v);
  if (s[2] != 0) read_tree(tree, s[2], out);
}

int build_subtree(std::span<const int> segment, std::vector<TernaryTree::Slots>& slots) {
  const int root = *std::min_element(segment.begin(), segment.end());
  const auto first = static_cast<std::size_t>(std::find(segment.begin(), segment.end(), root) - segment.begin());
  const auto second = static_cast<std::size_t>(
      std::find(segment.begin() + static_cast<std::ptrdiff_t>(first) + 1, segment.end(), root) - segment.begin());
  const std::array<std::span<const int>, 3> parts{
      segment.subspan(0, first),
      segment.subspan(first + 1, second - first - 1),
      segment.subspan(second + 1),
  };
  for (std::size_t s = 0; s < 3; ++s) {
    if (!parts[s].empty()) {
      slots[static_cast<std::size_t>(root - 1)][s] = build_subtree(parts[s], slots);
    }
  }
  return root;
}

void grow_ternary(std::vector<TernaryTree::Slots>& slots, int n, const TernaryTreeVisitor& visit) {
  const int m = static_cast<int>(slots.size());
  if (m == n) {
    visit(TernaryTree(slots));
    return;
  }
  slots.push_back({0, 0, 0});
  for (int v = 1; v <= m; ++v) {
    for (std::size_t s = 0; s < 3; ++s) {
      auto& slot = slots[static_cast<std::size_t>(v - 1)][s];
      if (slot != 0) continue;
      slot = m + 1;
      grow_ternary(slots, n, visit);
      slots[static_cast<std::size_t>(v - 1)][s] = 0;
    }
  }
  slots.pop_back();
}

}  // namespace

StirlingPermutation tree_to_perm(const TernaryTree& tree) {
  Word w;
  w.reserve(static_cast<std::size_t>(tree.size()) * 2);
  read_tree(tree, 1, w);
  return StirlingPermutation(std::move(w), 2);
}

TernaryTree perm_to_tree(const StirlingPermutation& perm) {
  if (perm.arity() != 2) throw InvalidObject("ternary trees encode Q_n only");
  std::vector<TernaryTree::Slots> slots(static_cast<std::size_t>(perm.order()), {0, 0, 0});
  build_subtree(perm.word(), slots);
  return TernaryTree(std::move(slots));
}

ExteriorCounts exterior_counts(const TernaryTree& tree) {
  ExteriorCounts c;
  for (const auto& s : tree.all_slots()) {
    c.left += s[0] == 0 ? 1 : 0;
    c.middle += s[1] == 0 ? 1 : 0;
    c.right += s[2] == 0 ? 1 : 0;
  }
  return c;
}

TernaryTree code_to_tree(const SPCode& code) {
  const auto& tuples = code.tuples();
  std::vector<TernaryTree::Slots> slots(tuples.size(), {0, 0, 0});
  for (std::size_t i = 1; i < tuples.size(); ++i) {
    auto& slot = slots[static_cast<std::size_t>(tuples[i].a - 1)][static_cast<std::size_t>(tuples[i].b - 1)];
    if (slot != 0) throw InvalidObject("slot used twice in " + code_to_string(tuples));
    slot = static_cast<int>(i) + 1;
  }
  return TernaryTree(std::move(slots));
}

SPCode tree_to_code(const TernaryTree& tree) {
  std::vector<CodeTuple> tuples(static_cast<std::size_t>(tree.size()));
  for (int v = 1; v <= tree.size(); ++v) {
    const auto& s = tree.slots(v);
    for (int b = 1; b <= 3; ++b) {
      const int c = s[static_cast<std::size_t>(b - 1)];
      if (c != 0) tuples[static_cast<std::size_t>(c - 1)] = {v, b};
    }
  }
  return SPCode(std::move(tuples));
}

void enumerate_ternary_trees(int n, const TernaryTreeVisitor& visit, std::uint64_t cap) {
  if (n < 1) throw InvalidObject("enumerate_ternary_trees needs n >= 1");
  check_cap("ternary tree enumeration", double_factorial_odd(n), cap);
  std::vector<TernaryTree::Slots> slots{{0, 0, 0}};
  grow_ternary(slots, n, visit);
}

// ------------------------------------------------------------- trapezoidal words

RiordanWord::RiordanWord(std::vector<int> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const int bound = 2 * static_cast<int>(i + 1) - 1;
    if (letters_[i] < 1 || letters_[i] > bound) {
      throw InvalidObject("Riordan word " + join(letters_) + ": entry " + std::to_string(i + 1) +
                          " outside 1.." + std::to_string(bound));
    }
  }
}

DumontWord::DumontWord(std::vector<int> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (std::abs(letters_[i]) > static_cast<int>(i)) {
      throw InvalidObject("Dumont word " + join(letters_) + ": |w_" + std::to_string(i + 1) +
                          "| must be below " + std::to_string(i + 1));
    }
  }
}

RiordanWord riordan_from_dumont(const DumontWord& w) {
  std::vector<int> t;
  t.reserve(w.letters().size());
  for (int v : w.letters()) {
    t.push_back(v == 0 ? 1 : v > 0 ? 2 * v : -2 * v + 1);
  }
  return RiordanWord(std::move(t));
}

DumontWord dumont_from_riordan(const RiordanWord& t) {
  std::vector<int> w;
  w.reserve(t.letters().size());
  for (int v : t.letters()) {
    w.push_back(v == 1 ? 0 : v % 2 == 0 ? v / 2 : -(v - 1) / 2);
  }
  return DumontWord(std::move(w));
}

// --------------------------------------------------------------- matchings

PerfectMatching::PerfectMatching(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  const int n = static_cast<int>(blocks_.size());
  std::vector<bool> hit(static_cast<std::size_t>(2 * n) + 1, false);
  for (auto& [i, j] : blocks_) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > 2 * n || i == j || hit[static_cast<std::size_t>(i)] || hit[static_cast<std::size_t>(j)]) {
      throw InvalidObject("blocks do not partition [" + std::to_string(2 * n) + "]");
    }
    hit[static_cast<std::size_t>(i)] = hit[static_cast<std::size_t>(j)] = true;
  }
  std::sort(blocks_.begin(), blocks_.end());
}

std::vector<std::vector<Block>> matching_trace(const RiordanWord& t) {
  std::vector<std::vector<Block>> trace;
  std::vector<Block> current;
  int points = 0;
  for (int i : t.letters()) {
    for (auto& [p, q] : current) {
      p += p >= i ? 1 : 0;
      q += q >= i ? 1 : 0;
    }
    points += 2;
    current.insert(current.begin(), Block{i, points});
    trace.push_back(current);
  }
  return trace;
}

PerfectMatching matching_from_riordan(const RiordanWord& t) {
  if (t.size() == 0) return PerfectMatching({});
  return PerfectMatching(matching_trace(t).back());
}

RiordanWord riordan_from_matching(const PerfectMatching& m) {
  std::vector<Block> blocks = m.blocks();
  std::vector<int> t(blocks.size());
  for (int size = static_cast<int>(blocks.size()); size >= 1; --size) {
    const int top = 2 * size;
    const auto it = std::find_if(blocks.begin(), blocks.end(), [&](const Block& b) { return b.second == top; });
    const int i = it->first;
    t[static_cast<std::size_t>(size - 1)] = i;
    blocks.erase(it);
    for (auto& [p, q] : blocks) {
      p -= p > i ? 1 : 0;
      q -= q > i ? 1 : 0;
    }
  }
  return RiordanWord(std::move(t));
}

// ---------------------------------------------------------- Dumont words and codes

SPCode code_from_dumont(const DumontWord& w) {
  const auto& letters = w.letters();
  if (letters.empty()) throw InvalidObject("empty Dumont word has no code");
  std::vector<CodeTuple> tuples{{0, 0}};
  std::map<int, int> last_index{{letters[0], 1}};
  for (std::size_t i = 1; i < letters.size(); ++i) {
    const int v = letters[i];
    const auto it = last_index.find(v);
    if (it != last_index.end()) {
      tuples.push_back({it->second, 1});
    } else if (v < 0) {
      tuples.push_back({-v, 2});
    } else {
      tuples.push_back({v, 3});
    }
    last_index[v] = static_cast<int>(i) + 1;
  }
  return SPCode(std::move(tuples));
}

DumontWord dumont_from_code(const SPCode& code) {
  const auto& tuples = code.tuples();
  std::vector<int> w{0};
  for (std::size_t i = 1; i < tuples.size(); ++i) {
    const auto [a, b] = tuples[i];
    w.push_back(b == 1 ? w[static_cast<std::size_t>(a - 1)] : b == 2 ? -a : a);
  }
  DumontWord word(std::move(w));
  if (code_from_dumont(word) != code) {
    throw InvalidObject("code " + code_to_string(tuples) + " has no Dumont preimage");
  }
  return word;
}

DumontStats dumont_stats(const DumontWord& w) {
  const auto& letters = w.letters();
  const int n = w.size();
  const std::set<int> distinct(letters.begin(), letters.end());
  // Distinct values, not positions: 0,1,1 has one positive value.
  const auto negatives = std::count_if(distinct.begin(), distinct.end(), [](int v) { return v < 0; });
  const auto positives = std::count_if(distinct.begin(), distinct.end(), [](int v) { return v > 0; });
  return {static_cast<int>(distinct.size()), n - static_cast<int>(negatives), n - static_cast<int>(positives)};
}

// ------------------------------------------------------------- enumerators

namespace {

template <typename Bound, typename Emit>
void product_words(std::vector<int>& word, int n, Bound bound, Emit emit) {
  const int i = static_cast<int>(word.size()) + 1;
  if (i > n) {
    emit(word);
    return;
  }
  const auto [lo, hi] = bound(i);
  for (int v = lo; v <= hi; ++v) {
    word.push_back(v);
    product_words(word, n, bound, emit);
    word.pop_back();
  }
}

void pair_up(std::vector<bool>& used, std::vector<Block>& blocks, int points,
             const std::function<void(const PerfectMatching&)>& visit) {
  const auto first = std::find(used.begin() + 1, used.end(), false);
  if (first == used.end()) {
    visit(PerfectMatching(blocks));
    return;
  }
  const int i = static_cast<int>(first - used.begin());
  used[static_cast<std::size_t>(i)] = true;
  for (int j = i + 1; j <= points; ++j) {
    if (used[static_cast<std::size_t>(j)]) continue;
    used[static_cast<std::size_t>(j)] = true;
    blocks.push_back({i, j});
    pair_up(used, blocks, points, visit);
    blocks.pop_back();
    used[static_cast<std::size_t>(j)] = false;
  }
  used[static_cast<std::size_t>(i)] = false;
}

}  // namespace

void enumerate_riordan(int n, const std::function<void(const RiordanWord&)>& visit, std::uint64_t cap) {
  if (n < 1) throw InvalidObject("enumerate_riordan needs n >= 1");
  check_cap("Riordan word enumeration", double_factorial_odd(n), cap);
  std::vector<int> word;
  product_words(word, n, [](int i) { return std::pair{1, 2 * i - 1}; },
                [&](const std::vector<int>& w) { visit(RiordanWord(w)); });
}

void enumerate_dumont(int n, const std::function<void(const DumontWord&)>& visit, std::uint64_t cap) {
  if (n < 1) throw InvalidObject("enumerate_dumont needs n >= 1");
  check_cap("Dumont word enumeration", double_factorial_odd(n), cap);
  std::vector<int> word;
  product_words(word, n, [](int i) { return std::pair{-(i - 1), i - 1}; },
                [&](const std::vector<int>& w) { visit(DumontWord(w)); });
}

void enumerate_matchings(int n, const std::function<void(const PerfectMatching&)>& visit, std::uint64_t cap) {
  if (n < 1) throw InvalidObject("enumerate_matchings needs n >= 1");
  check_cap("perfect matching enumeration", double_factorial_odd(n), cap);
  std::vector<bool> used(static_cast<std::size_t>(2 * n) + 1, false);
  used[0] = true;
  std::vector<Block> blocks;
  pair_up(used, blocks, 2 * n, visit);
}

// ------------------------------------------------------------- plane trees

PlaneIncreasingTree::PlaneIncreasingTree(std::vector<std::vector<int>> children)
    : children_(std::move(children)) {
  const int n = static_cast<int>(children_.size());
  if (n < 1) throw InvalidObject("a plane tree needs at least one node");
  std::vector<bool> has_parent(static_cast<std::size_t>(n) + 1, false);
  for (int v = 1; v <= n; ++v) {
    for (int c : children_[static_cast<std::size_t>(v - 1)]) {
      if (c <= v || c > n || has_parent[static_cast<std::size_t>(c)]) {
        throw InvalidObject("plane tree child " + std::to_string(c) + " of node " + std::to_string(v) +
                            " is not a fresh larger label");
      }
      has_parent[static_cast<std::size_t>(c)] = true;
    }
  }
  for (int v = 2; v <= n; ++v) {
    if (!has_parent[static_cast<std::size_t>(v)]) {
      throw InvalidObject("plane tree node " + std::to_string(v) + " is detached");
    }
  }
}

int PlaneIncreasingTree::max_degree() const {
  std::size_t d = 0;
  for (const auto& c : children_) d = std::max(d, c.size());
  return static_cast<int>(d);
}

namespace {

void grow_plane(std::vector<std::vector<int>>& children, int n, int max_degree,
                const std::function<void(const PlaneIncreasingTree&)>& visit) {
  const int m = static_cast<int>(children.size());
  if (m == n) {
    visit(PlaneIncreasingTree(children));
    return;
  }
  children.emplace_back();
  for (int v = 1; v <= m; ++v) {
    const auto at = static_cast<std::size_t>(v - 1);
    const std::size_t degree = children[at].size();
    if (static_cast<int>(degree) >= max_degree) continue;
    // Index afresh each time: the recursion grows `children`.
    for (std::size_t pos = 0; pos <= degree; ++pos) {
      children[at].insert(children[at].begin() + static_cast<std::ptrdiff_t>(pos), m + 1);
      grow_plane(children, n, max_degree, visit);
      children[at].erase(children[at].begin() + static_cast<std::ptrdiff_t>(pos));
    }
  }
  children.pop_back();
}

}  // namespace

void enumerate_plane_trees(int n, int max_degree, const std::function<void(const PlaneIncreasingTree&)>& visit,
                           std::uint64_t cap) {
  if (n < 1 || max_degree < 1) throw InvalidObject("enumerate_plane_trees needs n >= 1 and d >= 1");
  // Unbounded plane increasing trees number (2n-3)!!, an upper bound here.
  check_cap("plane tree enumeration", n <= 1 ? 1 : double_factorial_odd(n - 1), cap);
  std::vector<std::vector<int>> children(1);
  grow_plane(children, n, max_degree, visit);
}

std::vector<int> degree_profile(const PlaneIncreasingTree& tree) {
  std::vector<int> profile(static_cast<std::size_t>(tree.size()), 0);
  for (const auto& c : tree.all_children()) ++profile[c.size()];
  return profile;
}

}  // namespace stirling
