#pragma once

#include <array>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "stirling/core_objects.hpp"
#include "stirling/sp_code.hpp"

namespace stirling {

/// Increasing tree on 1..n where every node has a left, middle and right
/// slot. slots(v)[s] is the child label or 0 when the slot is empty.
class TernaryTree {
 public:
  using Slots = std::array<int, 3>;

  /// slots[v-1] are the slots of node v. Throws InvalidObject unless the
  /// labels form one increasing tree rooted at 1.
  explicit TernaryTree(std::vector<Slots> slots);

  int size() const { return static_cast<int>(slots_.size()); }
  const Slots& slots(int v) const { return slots_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<Slots>& all_slots() const { return slots_; }

  friend bool operator==(const TernaryTree&, const TernaryTree&) = default;

 private:
  std::vector<Slots> slots_;
};

struct ExteriorCounts {
  int left = 0;
  int middle = 0;
  int right = 0;

  friend bool operator==(const ExteriorCounts&, const ExteriorCounts&) = default;
};

/// Depth-first reading: left subtree, v, middle subtree, v, right subtree.
StirlingPermutation tree_to_perm(const TernaryTree& tree);

/// Split around the two copies of the smallest letter and recurse.
TernaryTree perm_to_tree(const StirlingPermutation& perm);

/// Empty slots of each kind.
ExteriorCounts exterior_counts(const TernaryTree& tree);

/// Node i+1 hangs in slot b_i of node a_i. Throws InvalidObject if the
/// slot is taken.
TernaryTree code_to_tree(const SPCode& code);
SPCode tree_to_code(const TernaryTree& tree);

using TernaryTreeVisitor = std::function<void(const TernaryTree&)>;
void enumerate_ternary_trees(int n, const TernaryTreeVisitor& visit, std::uint64_t cap = kDefaultCap);

/// t_1 ... t_n with 1 <= t_i <= 2i - 1.
class RiordanWord {
 public:
  explicit RiordanWord(std::vector<int> letters);
  const std::vector<int>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  friend bool operator==(const RiordanWord&, const RiordanWord&) = default;

 private:
  std::vector<int> letters_;
};

/// w_1 ... w_n with |w_i| < i.
class DumontWord {
 public:
  explicit DumontWord(std::vector<int> letters);
  const std::vector<int>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  friend bool operator==(const DumontWord&, const DumontWord&) = default;

 private:
  std::vector<int> letters_;
};

using Block = std::pair<int, int>;

/// Blocks (i_r, j_r) on [2n] with i_r < j_r, sorted by i_r.
class PerfectMatching {
 public:
  /// Accepts blocks in any order and either orientation; stores standard
  /// form. Throws InvalidObject unless the blocks partition [2n].
  explicit PerfectMatching(std::vector<Block> blocks);
  const std::vector<Block>& blocks() const { return blocks_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;

 private:
  std::vector<Block> blocks_;
};

RiordanWord riordan_from_dumont(const DumontWord& w);
DumontWord dumont_from_riordan(const RiordanWord& t);

/// Block lists after each appended letter, newest block first.
std::vector<std::vector<Block>> matching_trace(const RiordanWord& t);
PerfectMatching matching_from_riordan(const RiordanWord& t);
RiordanWord riordan_from_matching(const PerfectMatching& m);

SPCode code_from_dumont(const DumontWord& w);
/// Throws InvalidObject when the code has no preimage.
DumontWord dumont_from_code(const SPCode& code);

struct DumontStats {
  int dist = 0;
  int nneg = 0;
  int npos = 0;

  friend bool operator==(const DumontStats&, const DumontStats&) = default;
};

/// dist = number of distinct values, nneg = n - #distinct negative values,
/// npos = n - #distinct positive values.
DumontStats dumont_stats(const DumontWord& w);

void enumerate_riordan(int n, const std::function<void(const RiordanWord&)>& visit,
                       std::uint64_t cap = kDefaultCap);
void enumerate_dumont(int n, const std::function<void(const DumontWord&)>& visit,
                      std::uint64_t cap = kDefaultCap);
/// Pairs the smallest free point with each larger free point in turn.
void enumerate_matchings(int n, const std::function<void(const PerfectMatching&)>& visit,
                         std::uint64_t cap = kDefaultCap);

/// Increasing plane tree on 1..n: children(v) lists v's children left to
/// right.
class PlaneIncreasingTree {
 public:
  explicit PlaneIncreasingTree(std::vector<std::vector<int>> children);
  int size() const { return static_cast<int>(children_.size()); }
  const std::vector<int>& children(int v) const { return children_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<std::vector<int>>& all_children() const { return children_; }
  int max_degree() const;
  friend bool operator==(const PlaneIncreasingTree&, const PlaneIncreasingTree&) = default;

 private:
  std::vector<std::vector<int>> children_;
};

/// Node m+1 goes under any node of degree < max_degree, in any of its
/// deg+1 positions; nodes and positions are tried in ascending order.
void enumerate_plane_trees(int n, int max_degree, const std::function<void(const PlaneIncreasingTree&)>& visit,
                           std::uint64_t cap = kDefaultCap);

/// Entry j-1 counts the vertices with j-1 children; length n.
std::vector<int> degree_profile(const PlaneIncreasingTree& tree);

}  // namespace stirling
