#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stirling {

/// A word over positive letters. Sentinel zeros are never stored.
using Word = std::vector<int>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that does not satisfy the invariants of the object it claims to be.
class InvalidObject : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class DefectError : public Error {
 public:
  using Error::Error;
};

/// Raised before generation starts when an enumeration would exceed its cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t requested, std::uint64_t cap);

  std::uint64_t requested() const { return requested_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

/// Which virtual zeros sigma_0 / sigma_{end+1} a statistic may look at.
struct BoundaryConvention {
  bool left_zero = false;
  bool right_zero = false;

  friend bool operator==(const BoundaryConvention&, const BoundaryConvention&) = default;
};

/// True iff every letter 1..n occurs exactly k times and every letter lying
/// between two copies of i is at least i.
bool is_stirling(std::span<const int> word, int k);

/// Same check against an explicit multiplicity profile (m_1, ..., m_n); a
/// zero entry means the letter must be absent.
bool is_stirling_profile(std::span<const int> word, std::span<const int> multiplicity);

/// Letter i occurs exactly multiplicity[i-1] times.
bool has_profile(std::span<const int> word, std::span<const int> multiplicity);

class MultiPermutation {
 public:
  /// Throws InvalidObject when the word does not match the profile.
  MultiPermutation(Word word, std::vector<int> multiplicity);

  const Word& word() const { return word_; }
  const std::vector<int>& multiplicity() const { return multiplicity_; }
  bool is_stirling() const;

  friend bool operator==(const MultiPermutation&, const MultiPermutation&) = default;

 private:
  Word word_;
  std::vector<int> multiplicity_;
};

/// A k-Stirling permutation of order n (k = 2 gives Q_n).
class StirlingPermutation {
 public:
  /// Throws InvalidObject unless is_stirling(word, arity).
  explicit StirlingPermutation(Word word, int arity = 2);

  const Word& word() const { return word_; }
  int order() const { return order_; }
  int arity() const { return arity_; }

  /// sigma^r_i = sigma_{kn+1-i}.
  StirlingPermutation reversed() const;

  friend bool operator==(const StirlingPermutation&, const StirlingPermutation&) = default;

 private:
  Word word_;
  int order_ = 0;
  int arity_ = 2;
};

using WordVisitor = std::function<void(std::span<const int>)>;

/// prod_{j=0}^{n-1} (jk+1), saturating at UINT64_MAX.
std::uint64_t count_q(int n, int k);

/// Visits every element of Q_n(k) once. Words are produced by inserting the
/// block (m+1)^k into the gaps of each word of order m, rightmost gap
/// first, depth first: Q_2 comes out as 1122, 1221, 2211.
void enumerate_q(int n, int k, const WordVisitor& visit, std::uint64_t cap = kDefaultCap);
std::vector<Word> all_q(int n, int k = 2, std::uint64_t cap = kDefaultCap);

/// Stirling permutations of {1^{m_1}, ..., n^{m_n}} by the same block
/// insertion (the largest letter of a Stirling word is always contiguous).
void enumerate_stirling_multiset(std::span<const int> multiplicity, const WordVisitor& visit,
                                 std::uint64_t cap = kDefaultCap);

/// Stirling permutations of {1, 2^2, ..., (n+1)^2}.
void enumerate_q1(int n, const WordVisitor& visit, std::uint64_t cap = kDefaultCap);
std::vector<Word> all_q1(int n, std::uint64_t cap = kDefaultCap);

/// All n! permutations in lexicographic order.
void enumerate_symmetric(int n, const WordVisitor& visit, std::uint64_t cap = kDefaultCap);

/// All 2^n n! signed permutations; negative entries carry the bar.
void enumerate_signed(int n, const WordVisitor& visit, std::uint64_t cap = kDefaultCap);

std::string word_to_string(std::span<const int> word);

}  // namespace stirling
