#include <gtest/gtest.h>

#include <sstream>

#include "emojiprof/error.hpp"
#include "emojiprof/sentiment.hpp"
#include "test_support.hpp"

using namespace emojiprof;

namespace {

SentimentLexicon words(std::map<std::string, SentimentWeights, std::less<>> m) { return SentimentLexicon(std::move(m)); }

EmojiEntry entry(std::string name, std::vector<std::string> keywords = {}) {
  return {EmojiSequence::from_hex("1F600"), std::move(name), std::move(keywords), {}};
}

}  // namespace

TEST(Sentiment, Examples) {
  EXPECT_EQ(sentiment_of(entry("smiling face"), words({{"smiling", {1, 0}}})), SentimentLabel::Positive);
  EXPECT_EQ(sentiment_of(entry("loudly crying face"), words({{"crying", {0, 1}}})), SentimentLabel::Negative);
  EXPECT_EQ(sentiment_of(entry("shopping bags"), words({{"smiling", {1, 0}}})), SentimentLabel::Neither);
}

TEST(Sentiment, TiesAreNeitherAndKeywordsCount) {
  const auto lex = words({{"happy", {1, 0}}, {"sad", {0, 1}}});
  EXPECT_EQ(sentiment_of(entry("happy sad"), lex), SentimentLabel::Neither);
  EXPECT_EQ(sentiment_of(entry("face", {"sad"}), lex), SentimentLabel::Negative);
  EXPECT_EQ(sentiment_of(entry("Happy-Face"), lex), SentimentLabel::Positive);
}

TEST(Sentiment, InvariantToKeywordOrder) {
  const auto lex = words({{"a", {0.3, 0.1}}, {"b", {0.1, 0.35}}, {"c", {0.05, 0.0}}});
  std::vector<std::string> kw{"a", "b", "c", "b"};
  const auto expected = sentiment_of(entry("x", kw), lex);
  std::sort(kw.begin(), kw.end());
  do {
    EXPECT_EQ(sentiment_of(entry("x", kw), lex), expected);
  } while (std::next_permutation(kw.begin(), kw.end()));
}

TEST(Sentiment, LoaderValidates) {
  std::istringstream ok("# comment\njoy\t1\t0\n\nSAD\t0\t1\n");
  const auto lex = load_sentiment_lexicon(ok);
  EXPECT_EQ(lex.size(), 2u);
  ASSERT_NE(lex.find("sad"), nullptr);
  EXPECT_EQ(lex.find("sad")->negemo, 1.0);
  std::istringstream negative("joy\t-1\t0\n");
  EXPECT_THROW(load_sentiment_lexicon(negative), ParseError);
  std::istringstream missing("joy\t1\n");
  EXPECT_THROW(load_sentiment_lexicon(missing), ParseError);
  std::istringstream dup("joy\t1\t0\njoy\t1\t0\n");
  EXPECT_THROW(load_sentiment_lexicon(dup), ParseError);
}

TEST(Sentiment, BundledLabelsLookSensible) {
  const auto& lex = emojiprof::testing::bundled_lexicon();
  const auto labels = label_lexicon(lex, emojiprof::testing::bundled_sentiment());
  ASSERT_EQ(labels.size(), lex.size());
  auto label = [&](const char* hex) { return labels[emojiprof::testing::id_of(lex, hex).value]; };
  EXPECT_EQ(label("1F602"), SentimentLabel::Positive);  // face with tears of joy
  EXPECT_EQ(label("1F622"), SentimentLabel::Negative);  // crying face
  EXPECT_EQ(label("2764"), SentimentLabel::Positive);   // red heart
  std::size_t pos = 0, neg = 0;
  for (auto l : labels) {
    pos += l == SentimentLabel::Positive;
    neg += l == SentimentLabel::Negative;
  }
  EXPECT_GT(pos, 30u);
  EXPECT_GT(neg, 10u);
}
