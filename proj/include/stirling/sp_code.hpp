#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "stirling/core_objects.hpp"
#include "stirling/statistics.hpp"

namespace stirling {

/// One insertion record: the letter a next to which the new pair lands and
/// the kind b of the gap (1 before an ascent top, 2 inside a plateau,
/// 3 after a descent top).
struct CodeTuple {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const CodeTuple&, const CodeTuple&) = default;
};

class SPCode {
 public:
  /// Throws InvalidObject unless tuples[0] = (0,0), 1 <= a_i <= i,
  /// 1 <= b_i <= 3 and all tuples are distinct.
  explicit SPCode(std::vector<CodeTuple> tuples);

  const std::vector<CodeTuple>& tuples() const { return tuples_; }
  int order() const { return static_cast<int>(tuples_.size()); }

  friend bool operator==(const SPCode&, const SPCode&) = default;

 private:
  std::vector<CodeTuple> tuples_;
};

bool is_valid_code(std::span<const CodeTuple> tuples);

/// Peel the adjacent pair of the largest letter, record its gap, repeat.
/// Throws InvalidObject unless the word lies in Q_n.
SPCode encode(std::span<const int> word);
inline SPCode encode(const StirlingPermutation& s) { return encode(s.word()); }

/// Insert the pairs 22, 33, ... back in ascending order. Throws
/// InvalidObject when a tuple names a gap that is not there.
StirlingPermutation decode(const SPCode& code);
StirlingPermutation decode(std::span<const CodeTuple> tuples);

/// Set-valued statistics read straight off the code: for each letter a,
/// which of the kinds 1, 2, 3 occur with a in some tuple.
LetterSet code_set_stat(const SPCode& code, SetStatId id);

/// Exchange the second components `from` and `to` in every tuple. Throws
/// InvalidObject unless they are two different kinds in 1..3.
SPCode switch_tuples(const SPCode& code, int from, int to);

using CodeVisitor = std::function<void(std::span<const CodeTuple>)>;

/// All codes of order n, a ascending then b ascending at each step.
void enumerate_codes(int n, const CodeVisitor& visit, std::uint64_t cap = kDefaultCap);
std::vector<SPCode> all_codes(int n, std::uint64_t cap = kDefaultCap);

std::string code_to_string(std::span<const CodeTuple> tuples);

}  // namespace stirling
