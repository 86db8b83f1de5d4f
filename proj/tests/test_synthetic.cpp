#include <gtest/gtest.h>

#include <sstream>

#include "emojiprof/corpus.hpp"
#include "emojiprof/error.hpp"
#include "emojiprof/hash.hpp"
#include "emojiprof/segmenter.hpp"
#include "emojiprof/synthetic.hpp"
#include "test_support.hpp"

using namespace emojiprof;
using namespace emojiprof::testing;

namespace {

SyntheticConfig small_config() {
  SyntheticConfig c;
  c.n_female = 30;
  c.n_male = 25;
  c.min_messages = 5;
  c.max_messages = 15;
  c.female_emoji_rate = 0.5;
  c.male_emoji_rate = 0.4;
  c.female_preference = {{EmojiSequence::from_hex("1F602"), 0.7}, {EmojiSequence::from_hex("2764"), 0.3}};
  c.male_preference = {{EmojiSequence::from_hex("1F602"), 0.2}, {EmojiSequence::from_hex("1F525"), 0.8}};
  c.seed = 42;
  return c;
}

Corpus parse(const std::string& jsonl) {
  std::istringstream in(jsonl);
  return ingest(in).corpus;
}

}  // namespace

TEST(Synthetic, SameConfigSameBytes) {
  const auto c = small_config();
  const auto a = generate_synthetic(c);
  EXPECT_EQ(sha256_hex(a), sha256_hex(generate_synthetic(c)));
  auto other = c;
  other.seed = 43;
  EXPECT_NE(sha256_hex(a), sha256_hex(generate_synthetic(other)));
}

TEST(Synthetic, OutputIngestsCleanly) {
  const auto c = small_config();
  std::istringstream in(generate_synthetic(c));
  const auto r = ingest(in);
  EXPECT_EQ(r.report.rejected, 0u);
  EXPECT_EQ(r.report.distinct_users, 55u);
  const auto users = aggregate(r.corpus, bundled_lexicon(), bundled_lexicon().policy());
  ASSERT_EQ(users.size(), 55u);
  for (const auto& u : users) {
    EXPECT_TRUE(u.labeled());
    EXPECT_GE(u.msg_count, 5u);
    EXPECT_LE(u.msg_count, 15u);
  }
}

TEST(Synthetic, DegenerateRates) {
  auto c = small_config();
  c.female_emoji_rate = 1.0;
  c.male_emoji_rate = 0.0;
  c.male_preference.clear();
  const auto corpus = parse(generate_synthetic(c));
  const auto& lex = bundled_lexicon();
  for (const auto& m : corpus.messages) {
    const auto tokens = tokenize(m.text, lex);
    const bool has_emoji = std::any_of(tokens.begin(), tokens.end(), [](const Token& t) { return t.kind == TokenKind::Emoji; });
    EXPECT_EQ(has_emoji, m.gender == Gender::Female) << m.text;
  }
}

TEST(Synthetic, ConcentratedPreferencesSeparateGenders) {
  auto c = small_config();
  c.female_preference = {{EmojiSequence::from_hex("1F602"), 1.0}};
  c.male_preference = {{EmojiSequence::from_hex("1F525"), 1.0}};
  const auto& lex = bundled_lexicon();
  const auto users = aggregate(parse(generate_synthetic(c)), lex, lex.policy());
  std::uint64_t female_a = 0, male_a = 0;
  for (const auto& u : users) {
    const auto it = u.per_emoji_counts.find(id_of(lex, "1F602"));
    if (it == u.per_emoji_counts.end()) continue;
    (u.gender == Gender::Female ? female_a : male_a) += 1;
  }
  EXPECT_GT(female_a, 0u);
  EXPECT_EQ(static_cast<double>(female_a) / (female_a + male_a), 1.0);
}

TEST(Synthetic, UnnormalizedPreferenceIsAConfigError) {
  auto c = small_config();
  c.female_preference[0].probability = 0.6;
  EXPECT_THROW(c.validate(), ConfigError);
  EXPECT_THROW(generate_synthetic(c), ConfigError);
  c = small_config();
  c.male_preference[1].probability = -0.8;
  EXPECT_THROW(c.validate(), ConfigError);
  c = small_config();
  c.min_messages = 20;
  EXPECT_THROW(c.validate(), ConfigError);
  c = small_config();
  c.female_emoji_rate = 1.5;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Synthetic, JsonRoundTrip) {
  const auto c = small_config();
  const auto back = SyntheticConfig::from_json(c.to_json());
  EXPECT_EQ(back.to_json(), c.to_json());
  EXPECT_EQ(generate_synthetic(back), generate_synthetic(c));
  EXPECT_THROW(SyntheticConfig::from_json("[1]"), ConfigError);
  EXPECT_THROW(SyntheticConfig::from_json(R"({"messages_per_user": 3})"), ConfigError);
}

TEST(Synthetic, NoUsersGivesEmptyCorpus) {
  SyntheticConfig c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(generate_synthetic(c), "");
}

TEST(Planted, TruthMatchesConfig) {
  PlantedSpec spec;
  spec.users_per_gender = 10;
  const auto& lex = bundled_lexicon();
  const auto c = planted_config(lex, spec);
  const auto truth = planted_truth(lex, spec);
  EXPECT_EQ(truth.female_skewed.size() + truth.male_skewed.size(), spec.planted);
  ASSERT_EQ(c.female_preference.size(), spec.planted + spec.neutral);
  double fs = 0, ms = 0;
  for (std::size_t i = 0; i < c.female_preference.size(); ++i) {
    fs += c.female_preference[i].probability;
    ms += c.male_preference[i].probability;
  }
  EXPECT_NEAR(fs, 1.0, 1e-12);
  EXPECT_NEAR(ms, 1.0, 1e-12);
  for (const auto& s : truth.female_skewed) {
    for (std::size_t i = 0; i < c.female_preference.size(); ++i) {
      if (c.female_preference[i].emoji == s) {
        EXPECT_NEAR(c.female_preference[i].probability / c.male_preference[i].probability, spec.skew, 1e-9);
      }
    }
  }
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.female_emoji_rate, 0.08);
  EXPECT_EQ(c.male_emoji_rate, 0.07);
}
