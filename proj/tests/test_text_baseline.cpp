#include <gtest/gtest.h>

#include "emojiprof/error.hpp"
#include "emojiprof/text_baseline.hpp"
#include "test_support.hpp"

using namespace emojiprof;
using namespace emojiprof::testing;

namespace {

struct Fixture {
  Corpus corpus;
  std::vector<UserAggregate> users;
};

Fixture build(const std::vector<std::tuple<std::string, Gender, std::string>>& msgs) {
  Fixture f;
  for (const auto& [u, g, t] : msgs) f.corpus.messages.push_back(message(u, g, t));
  f.users = aggregate(f.corpus, bundled_lexicon(), bundled_lexicon().policy());
  return f;
}

double column(const LabeledMatrix& m, std::size_t row, const std::string& name) {
  const auto& cols = m.manifest.columns;
  const auto it = std::find(cols.begin(), cols.end(), name);
  if (it == cols.end()) return -1.0;
  return m.x(row, static_cast<std::size_t>(it - cols.begin()));
}

}  // namespace

TEST(Unigram, Tokens) {
  const auto& lex = bundled_lexicon();
  EXPECT_EQ(unigram_tokens("Hello, World! it's ok", lex), (std::vector<std::string>{"hello", "world", "it", "s", "ok"}));
  EXPECT_EQ(unigram_tokens("a" + utf8("1F602") + "b " + utf8("2764"), lex), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(unigram_tokens("  \n\t ", lex).empty());
}

TEST(Unigram, RelativeFrequencies) {
  const auto f = build({{"u1", Gender::Female, "a b"}, {"u1", Gender::Female, "a"}, {"u2", Gender::Male, "b a"}});
  const auto m = unigram_text_features(f.corpus, f.users, bundled_lexicon(), {.min_df = 1});
  ASSERT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.manifest.columns, (std::vector<std::string>{"w:a", "w:b"}));
  EXPECT_DOUBLE_EQ(column(m, 0, "w:a"), 2.0 / 3);
  EXPECT_DOUBLE_EQ(column(m, 0, "w:b"), 1.0 / 3);
  EXPECT_EQ(m.manifest.kind, "unigram");
}

TEST(Unigram, MinDfAndSortedVocabulary) {
  const auto f = build({{"u1", Gender::Female, "zeta alpha rare"},
                        {"u2", Gender::Male, "alpha zeta " + utf8("1F602")},
                        {"u3", Gender::Male, "mid alpha"}});
  const auto m = unigram_text_features(f.corpus, f.users, bundled_lexicon());
  EXPECT_EQ(m.manifest.columns, (std::vector<std::string>{"w:alpha", "w:zeta"}));
  EXPECT_EQ(unigram_vocabulary(m.manifest), (std::vector<std::string>{"alpha", "zeta"}));
  // Denominator counts every token of the user, including ones outside the vocabulary.
  EXPECT_DOUBLE_EQ(column(m, 0, "w:alpha"), 1.0 / 3);
  const auto again = unigram_text_features(f.corpus, f.users, bundled_lexicon());
  EXPECT_EQ(again.manifest, m.manifest);
  EXPECT_EQ(again.x, m.x);
}

TEST(Unigram, FixedVocabularyAndErrors) {
  const auto f = build({{"u1", Gender::Female, "x y"}, {"u2", Gender::Male, "y z"}});
  const std::vector<std::string> vocab{"q", "z"};
  const auto m = unigram_text_features(f.corpus, f.users, bundled_lexicon(), {}, &vocab);
  EXPECT_EQ(m.manifest.columns, (std::vector<std::string>{"w:q", "w:z"}));
  EXPECT_DOUBLE_EQ(column(m, 1, "w:z"), 0.5);
  EXPECT_THROW(unigram_text_features(f.corpus, f.users, bundled_lexicon(), {.min_df = 5}), ArgumentError);
}
