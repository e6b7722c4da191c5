#include "stirling/core_objects.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace stirling {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

void check_cap(const std::string& what, std::uint64_t requested, std::uint64_t cap) {
  if (requested > cap) throw CapExceeded(what, requested, cap);
}

// Between-occurrences condition only; multiplicities are checked separately.
bool stirling_condition(std::span<const int> word) {
  // Scan with a stack of open letters: when a letter reappears, every letter
  // seen since its previous copy must be >= it.
  const int max_letter = word.empty() ? 0 : *std::max_element(word.begin(), word.end());
  std::vector<std::size_t> last(static_cast<std::size_t>(max_letter) + 1, word.size());
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    const int a = word[pos];
    const std::size_t prev = last[static_cast<std::size_t>(a)];
    if (prev != word.size()) {
      for (std::size_t s = prev + 1; s < pos; ++s) {
        if (word[s] < a) return false;
      }
    }
    last[static_cast<std::size_t>(a)] = pos;
  }
  return true;
}

void insert_blocks(Word& word, std::span<const int> multiplicity, std::size_t letter,
                   const WordVisitor& visit) {
  if (letter > multiplicity.size()) {
    visit(word);
    return;
  }
  const int copies = multiplicity[letter - 1];
  if (copies == 0) {
    insert_blocks(word, multiplicity, letter + 1, visit);
    return;
  }
  // Rightmost gap first, so 1122, 1221, 2211.
  for (std::size_t gap = word.size() + 1; gap-- > 0;) {
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(gap), static_cast<std::size_t>(copies),
                static_cast<int>(letter));
    insert_blocks(word, multiplicity, letter + 1, visit);
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(gap),
               word.begin() + static_cast<std::ptrdiff_t>(gap) + copies);
  }
}

std::uint64_t count_multiset(std::span<const int> multiplicity) {
  std::uint64_t total = 1;
  std::uint64_t length = 0;
  for (int m : multiplicity) {
    if (m == 0) continue;
    total = saturating_mul(total, length + 1);
    length += static_cast<std::uint64_t>(m);
  }
  return total;
}

}  // namespace

CapExceeded::CapExceeded(const std::string& what, std::uint64_t requested, std::uint64_t cap)
    : Error(what + ": " + std::to_string(requested) + " objects exceed the cap of " +
            std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

bool has_profile(std::span<const int> word, std::span<const int> multiplicity) {
  std::vector<int> seen(multiplicity.size(), 0);
  for (int a : word) {
    if (a < 1 || static_cast<std::size_t>(a) > multiplicity.size()) return false;
    ++seen[static_cast<std::size_t>(a - 1)];
  }
  return std::equal(seen.begin(), seen.end(), multiplicity.begin(), multiplicity.end());
}

bool is_stirling_profile(std::span<const int> word, std::span<const int> multiplicity) {
  return has_profile(word, multiplicity) && stirling_condition(word);
}

bool is_stirling(std::span<const int> word, int k) {
  if (word.empty() || k < 1 || word.size() % static_cast<std::size_t>(k) != 0) return false;
  if (std::any_of(word.begin(), word.end(), [](int a) { return a < 1; })) return false;
  const std::size_t n = word.size() / static_cast<std::size_t>(k);
  const std::vector<int> profile(n, k);
  return is_stirling_profile(word, profile);
}

MultiPermutation::MultiPermutation(Word word, std::vector<int> multiplicity)
    : word_(std::move(word)), multiplicity_(std::move(multiplicity)) {
  if (!has_profile(word_, multiplicity_)) {
    throw InvalidObject("word " + word_to_string(word_) + " does not match its multiplicity profile");
  }
}

bool MultiPermutation::is_stirling() const { return stirling_condition(word_); }

StirlingPermutation::StirlingPermutation(Word word, int arity)
    : word_(std::move(word)), arity_(arity) {
  if (!stirling::is_stirling(word_, arity_)) {
    throw InvalidObject("not a " + std::to_string(arity_) + "-Stirling permutation: " +
                        word_to_string(word_));
  }
  order_ = static_cast<int>(word_.size()) / arity_;
}

StirlingPermutation StirlingPermutation::reversed() const {
  Word r(word_.rbegin(), word_.rend());
  return StirlingPermutation(std::move(r), arity_);
}

std::uint64_t count_q(int n, int k) {
  std::uint64_t total = 1;
  for (int j = 0; j < n; ++j) {
    total = saturating_mul(total, static_cast<std::uint64_t>(j) * static_cast<std::uint64_t>(k) + 1);
  }
  return total;
}

void enumerate_stirling_multiset(std::span<const int> multiplicity, const WordVisitor& visit,
                                 std::uint64_t cap) {
  if (std::any_of(multiplicity.begin(), multiplicity.end(), [](int m) { return m < 0; })) {
    throw InvalidObject("negative multiplicity");
  }
  check_cap("Stirling multiset enumeration", count_multiset(multiplicity), cap);
  Word word;
  insert_blocks(word, multiplicity, 1, visit);
}

void enumerate_q(int n, int k, const WordVisitor& visit, std::uint64_t cap) {
  if (n < 1 || k < 1) throw InvalidObject("enumerate_q needs n >= 1 and k >= 1");
  check_cap("Q_n(k) enumeration", count_q(n, k), cap);
  const std::vector<int> profile(static_cast<std::size_t>(n), k);
  Word word;
  insert_blocks(word, profile, 1, visit);
}

std::vector<Word> all_q(int n, int k, std::uint64_t cap) {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count_q(n, k), cap)));
  enumerate_q(n, k, [&](std::span<const int> w) { out.emplace_back(w.begin(), w.end()); }, cap);
  return out;
}

void enumerate_q1(int n, const WordVisitor& visit, std::uint64_t cap) {
  if (n < 1) throw InvalidObject("enumerate_q1 needs n >= 1");
  std::vector<int> profile(static_cast<std::size_t>(n) + 1, 2);
  profile[0] = 1;
  enumerate_stirling_multiset(profile, visit, cap);
}

std::vector<Word> all_q1(int n, std::uint64_t cap) {
  std::vector<Word> out;
  enumerate_q1(n, [&](std::span<const int> w) { out.emplace_back(w.begin(), w.end()); }, cap);
  return out;
}

void enumerate_symmetric(int n, const WordVisitor& visit, std::uint64_t cap) {
  if (n < 0) throw InvalidObject("enumerate_symmetric needs n >= 0");
  std::uint64_t total = 1;
  for (int i = 2; i <= n; ++i) total = saturating_mul(total, static_cast<std::uint64_t>(i));
  check_cap("symmetric group enumeration", total, cap);
  Word perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    visit(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void enumerate_signed(int n, const WordVisitor& visit, std::uint64_t cap) {
  if (n < 0 || n > 62) throw InvalidObject("enumerate_signed needs 0 <= n <= 62");
  std::uint64_t total = std::uint64_t{1} << n;
  for (int i = 2; i <= n; ++i) total = saturating_mul(total, static_cast<std::uint64_t>(i));
  check_cap("hyperoctahedral group enumeration", total, cap);
  Word perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  Word signed_perm(perm.size());
  do {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      for (std::size_t i = 0; i < perm.size(); ++i) {
        signed_perm[i] = (mask >> i) & 1U ? -perm[i] : perm[i];
      }
      visit(signed_perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::string word_to_string(std::span<const int> word) {
  const bool compact =
      std::all_of(word.begin(), word.end(), [](int a) { return a >= 0 && a <= 9; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

}  // namespace stirling
