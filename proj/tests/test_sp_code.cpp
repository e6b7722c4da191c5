#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracle.hpp"
#include "stirling/sp_code.hpp"

namespace {

using stirling::CodeTuple;
using stirling::LetterSet;
using stirling::SetStatId;
using stirling::SPCode;
using stirling::Word;

SPCode code(std::vector<CodeTuple> t) { return SPCode(std::move(t)); }

const SPCode& c7() {
  static const SPCode c = code({{0, 0}, {1, 2}, {2, 3}, {1, 1}, {1, 3}, {5, 2}, {4, 1}});
  return c;
}

TEST(Encode, WorkedExample) {
  EXPECT_EQ(stirling::encode(Word{5, 5, 1, 4, 4, 3, 3, 1, 2, 6, 6, 2}),
            code({{0, 0}, {1, 3}, {1, 2}, {3, 1}, {1, 1}, {2, 2}}));
  EXPECT_EQ(stirling::encode(Word{1, 1}), code({{0, 0}}));
  EXPECT_EQ(stirling::encode(Word{2, 2, 1, 1}), code({{0, 0}, {1, 1}}));
  EXPECT_EQ(stirling::encode(Word{1, 2, 2, 1}), code({{0, 0}, {1, 2}}));
  EXPECT_EQ(stirling::encode(Word{1, 1, 2, 2}), code({{0, 0}, {1, 3}}));
  EXPECT_THROW(stirling::encode(Word{2, 1, 1, 2}), stirling::InvalidObject);
}

TEST(Decode, WorkedExamples) {
  EXPECT_EQ(stirling::decode(code({{0, 0}, {1, 3}, {1, 2}, {3, 1}, {1, 1}, {2, 2}})).word(),
            (Word{5, 5, 1, 4, 4, 3, 3, 1, 2, 6, 6, 2}));
  EXPECT_EQ(stirling::decode(code({{0, 0}})).word(), (Word{1, 1}));
  EXPECT_EQ(stirling::decode(c7()).word(), (Word{7, 7, 4, 4, 1, 2, 2, 3, 3, 1, 5, 6, 6, 5}));
  EXPECT_EQ(stirling::encode(stirling::decode(code({{0, 0}, {1, 2}, {2, 3}}))), code({{0, 0}, {1, 2}, {2, 3}}));
}

TEST(Decode, UncheckedTuplesNamingMissingGap) {
  const std::vector<CodeTuple> bad{{0, 0}, {2, 1}};
  EXPECT_THROW(stirling::decode(bad), stirling::InvalidObject);
}

TEST(Validity, Rejections) {
  EXPECT_THROW(code({{1, 1}}), stirling::InvalidObject);
  EXPECT_THROW(code({{0, 0}, {1, 4}}), stirling::InvalidObject);
  EXPECT_THROW(code({{0, 0}, {1, 0}}), stirling::InvalidObject);
  EXPECT_THROW(code({{0, 0}, {2, 1}}), stirling::InvalidObject);
  EXPECT_THROW(code({{0, 0}, {1, 1}, {1, 1}}), stirling::InvalidObject);
  EXPECT_THROW(code({{0, 0}, {0, 0}}), stirling::InvalidObject);
  EXPECT_TRUE(stirling::is_valid_code(std::vector<CodeTuple>{{0, 0}, {1, 1}, {2, 3}}));
  EXPECT_FALSE(stirling::is_valid_code(std::vector<CodeTuple>{{0, 0}, {1, 1}, {3, 3}}));
}

TEST(RoundTrip, BijectionUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<CodeTuple>> images;
    stirling::enumerate_q(n, 2, [&](std::span<const int> w) {
      const SPCode c = stirling::encode(w);
      EXPECT_EQ(stirling::decode(c).word(), Word(w.begin(), w.end()));
      images.insert(c.tuples());
    });
    std::size_t codes = 0;
    stirling::enumerate_codes(n, [&](std::span<const CodeTuple> t) {
      ++codes;
      EXPECT_TRUE(images.count(std::vector<CodeTuple>(t.begin(), t.end())));
      EXPECT_EQ(stirling::encode(stirling::decode(t)).tuples(), std::vector<CodeTuple>(t.begin(), t.end()));
    });
    EXPECT_EQ(codes, images.size());
    EXPECT_EQ(static_cast<long long>(codes), oracle::double_factorial_odd(n));
  }
}

TEST(Enumerate, CountsAndCap) {
  EXPECT_EQ(stirling::all_codes(1).size(), 1u);
  EXPECT_EQ(stirling::all_codes(2).size(), 3u);
  EXPECT_EQ(stirling::all_codes(5).size(), 945u);
  EXPECT_THROW(stirling::all_codes(8, 100), stirling::CapExceeded);
}

TEST(CodeRules, WorkedExample) {
  EXPECT_EQ(stirling::code_set_stat(c7(), SetStatId::Asc), (LetterSet{2, 3, 5, 6, 7}));
  EXPECT_EQ(stirling::code_set_stat(c7(), SetStatId::Eud), (LetterSet{3, 5, 6, 7}));
  EXPECT_EQ(stirling::code_set_stat(c7(), SetStatId::Uu), (LetterSet{2}));
  EXPECT_EQ(stirling::code_set_stat(c7(), SetStatId::Apd), (LetterSet{3, 6, 7}));
  EXPECT_EQ(stirling::code_set_stat(code({{0, 0}}), SetStatId::Lap), (LetterSet{1}));
}

// Code-side rules against the literal set definitions on the decoded word.
TEST(CodeRules, TransportsEverySetStatistic) {
  for (int n = 1; n <= 6; ++n) {
    for (const SPCode& c : stirling::all_codes(n)) {
      const Word w = stirling::decode(c).word();
      for (const auto& info : stirling::kSetStatTable) {
        const std::set<int> expected = oracle::set_stat(w, std::string(info.name));
        EXPECT_EQ(stirling::code_set_stat(c, info.id), LetterSet(expected.begin(), expected.end()))
            << info.name << " on " << stirling::code_to_string(c.tuples());
      }
    }
  }
}

TEST(Switch, WorkedExample) {
  const SPCode s = stirling::switch_tuples(c7(), 2, 3);
  EXPECT_EQ(s, code({{0, 0}, {1, 3}, {2, 2}, {1, 1}, {1, 2}, {5, 3}, {4, 1}}));
  EXPECT_EQ(stirling::decode(s).word(), (Word{7, 7, 4, 4, 1, 5, 5, 6, 6, 1, 2, 3, 3, 2}));
}

TEST(Switch, InvolutionAndSecondOrder) {
  for (int n = 1; n <= 5; ++n) {
    for (const SPCode& c : stirling::all_codes(n)) {
      for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
          if (a == b) continue;
          EXPECT_EQ(stirling::switch_tuples(stirling::switch_tuples(c, a, b), a, b), c);
        }
      }
    }
  }
  EXPECT_EQ(stirling::switch_tuples(code({{0, 0}, {1, 1}}), 1, 2), code({{0, 0}, {1, 2}}));
  EXPECT_EQ(stirling::switch_tuples(code({{0, 0}, {1, 3}}), 1, 2), code({{0, 0}, {1, 3}}));
  EXPECT_THROW(stirling::switch_tuples(c7(), 2, 2), stirling::InvalidObject);
  EXPECT_THROW(stirling::switch_tuples(c7(), 0, 2), stirling::InvalidObject);
}

TEST(Display, CodeToString) {
  EXPECT_EQ(stirling::code_to_string(code({{0, 0}, {1, 3}}).tuples()), "(0,0)(1,3)");
}

}  // namespace
