#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "emojiprof/error.hpp"
#include "emojiprof/stats.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace emojiprof;
using namespace emojiprof::testing;

namespace {

UserAggregate user(const std::string& id, std::optional<Gender> g, std::map<EmojiId, std::uint64_t> counts,
                   std::uint64_t msgs = 10, std::uint64_t emoji_msgs = 1) {
  UserAggregate u;
  u.user_id = id;
  u.gender = g;
  u.per_emoji_counts = std::move(counts);
  u.msg_count = msgs;
  u.emoji_msg_count = emoji_msgs;
  return u;
}

// Users realizing a 2x2 table for emoji 0.
std::vector<UserAggregate> table_users(int use_f, int use_m, int no_f, int no_m) {
  std::vector<UserAggregate> users;
  int i = 0;
  auto add = [&](int n, Gender g, bool uses) {
    for (int k = 0; k < n; ++k) {
      users.push_back(user("u" + std::to_string(i++), g, uses ? std::map<EmojiId, std::uint64_t>{{EmojiId{0}, 2}}
                                                              : std::map<EmojiId, std::uint64_t>{{EmojiId{1}, 1}}));
    }
  };
  add(use_f, Gender::Female, true);
  add(use_m, Gender::Male, true);
  add(no_f, Gender::Female, false);
  add(no_m, Gender::Male, false);
  return users;
}

const EmojiLexicon& abc() {
  static const EmojiLexicon lex =
      make_lexicon({{"1F602", "joy", "face"}, {"2764", "red heart", "heart"}, {"1F525", "fire"}, {"1F44D", "thumbs up"}});
  return lex;
}

}  // namespace

TEST(EmojiMsgFraction, Examples) {
  EXPECT_NEAR(emoji_msg_fraction(user("a", Gender::Female, {}, 3, 2)), 0.6667, 1e-4);
  EXPECT_EQ(emoji_msg_fraction(user("a", Gender::Female, {}, 10, 0)), 0.0);
  EXPECT_EQ(emoji_msg_fraction(user("a", Gender::Female, {}, 10, 10)), 1.0);
  EXPECT_THROW(emoji_msg_fraction(user("a", Gender::Female, {}, 0, 0)), UndefinedError);
}

TEST(Cdf, Examples) {
  const std::vector<double> v{0.1, 0.1, 0.3};
  const auto cdf = empirical_cdf(v);
  ASSERT_EQ(cdf.size(), 2u);
  EXPECT_EQ(cdf[0].x, 0.1);
  EXPECT_NEAR(cdf[0].f, 2.0 / 3, 1e-15);
  EXPECT_EQ(cdf[1].f, 1.0);
  const std::vector<double> one{0.25};
  EXPECT_EQ(empirical_cdf(one).size(), 1u);
  EXPECT_EQ(empirical_cdf(one)[0].f, 1.0);
  EXPECT_NEAR(fraction_above(cdf, 0.05), 1.0, 1e-15);
  EXPECT_NEAR(fraction_above(cdf, 0.2), 1.0 / 3, 1e-15);
  EXPECT_EQ(cdf_at(cdf, 0.0), 0.0);
  EXPECT_THROW(empirical_cdf(std::vector<double>{}), ArgumentError);
  EXPECT_THROW(empirical_cdf(std::vector<double>{NAN}), ArgumentError);
}

TEST(Cdf, MatchesDirectCountOnRandomSamples) {
  std::mt19937 rng(1);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> v(1 + rng() % 30);
    for (auto& x : v) x = (rng() % 10) / 10.0;
    const auto cdf = empirical_cdf(v);
    for (double q = -0.05; q < 1.0; q += 0.05) {
      const double direct = static_cast<double>(std::count_if(v.begin(), v.end(), [&](double x) { return x <= q; })) / v.size();
      ASSERT_NEAR(cdf_at(cdf, q), direct, 1e-15);
    }
  }
}

TEST(ZTest, WorkedExampleAgainstIndependentNormal) {
  const auto t = two_proportion_ztest(50, 100, 40, 100);
  EXPECT_NEAR(t.z, 1.4213, 1e-3);
  EXPECT_NEAR(t.p_two_sided, 0.1552, 1e-3);
  EXPECT_NEAR(t.p_two_sided, 2.0 * (1.0 - normal_cdf_oracle(std::fabs(t.z))), 1e-10);
  const auto big = two_proportion_ztest(100, 100, 0, 100);
  EXPECT_NEAR(big.z, 10.0 * std::sqrt(2.0), 1e-12);
}

TEST(ZTest, NormalCdfMatchesOracle) {
  for (double z = -6; z <= 6; z += 0.37) EXPECT_NEAR(normal_cdf(z), normal_cdf_oracle(z), 1e-12) << z;
}

TEST(ZTest, EqualityAntisymmetryAndErrors) {
  const auto eq = two_proportion_ztest(10, 40, 25, 100);
  EXPECT_EQ(eq.z, 0.0);
  EXPECT_EQ(eq.p_two_sided, 1.0);
  EXPECT_THROW(two_proportion_ztest(0, 10, 0, 20), DegenerateError);
  EXPECT_THROW(two_proportion_ztest(10, 10, 20, 20), DegenerateError);
  EXPECT_THROW(two_proportion_ztest(1, 0, 1, 2), ArgumentError);
  EXPECT_THROW(two_proportion_ztest(3, 2, 1, 2), ArgumentError);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t n1 = 1 + rng() % 500, n2 = 1 + rng() % 500;
    const std::uint64_t k1 = rng() % (n1 + 1), k2 = rng() % (n2 + 1);
    if ((k1 + k2) == 0 || (k1 + k2) == n1 + n2) continue;
    const auto a = two_proportion_ztest(k1, n1, k2, n2);
    const auto b = two_proportion_ztest(k2, n2, k1, n1);
    ASSERT_EQ(a.z, -b.z);
    ASSERT_EQ(a.p_two_sided, b.p_two_sided);
    ASSERT_GE(a.p_two_sided, 0.0);
    ASSERT_LE(a.p_two_sided, 1.0);
  }
}

TEST(Bonferroni, Examples) {
  EXPECT_EQ(bonferroni(std::vector<double>{0.01, 0.02}), (std::vector<double>{0.02, 0.04}));
  EXPECT_EQ(bonferroni(std::vector<double>{0.6}), (std::vector<double>{0.6}));
  const auto r = bonferroni(std::vector<double>{0.5, 0.9, 0.001});
  EXPECT_EQ(r[0], 1.0);
  EXPECT_EQ(r[1], 1.0);
  EXPECT_NEAR(r[2], 0.003, 1e-15);
  EXPECT_THROW(bonferroni(std::vector<double>{1.2}), ArgumentError);
}

TEST(Bonferroni, MonotoneInBatchSize) {
  std::vector<double> ps;
  double prev = 0.0;
  for (int m = 1; m <= 50; ++m) {
    ps.push_back(0.013);
    const double adj = bonferroni(ps).front();
    ASSERT_GE(adj, prev);
    ASSERT_GE(adj, 0.013);
    prev = adj;
  }
}

TEST(MutualInformation, Examples) {
  EXPECT_NEAR(mutual_information(UsageContingency{2, 0, 0, 2}), std::log(2.0), 1e-15);
  EXPECT_NEAR(mutual_information(UsageContingency{3, 1, 1, 3}), 0.1308, 1e-4);
  EXPECT_NEAR(mutual_information(UsageContingency{3, 1, 1, 3}), mi_oracle(3, 1, 1, 3), 1e-15);
  EXPECT_EQ(mutual_information(UsageContingency{3, 6, 5, 10}), 0.0);
  const auto users = table_users(3, 1, 1, 3);
  EXPECT_NEAR(mutual_information(users, EmojiId{0}), mi_oracle(3, 1, 1, 3), 1e-15);
  EXPECT_THROW(mutual_information(table_users(2, 0, 3, 0), EmojiId{0}), ArgumentError);
}

TEST(MutualInformation, OracleNonNegativeAndSymmetric) {
  std::mt19937_64 rng(2018);
  for (int i = 0; i < 1000; ++i) {
    UsageContingency t;
    do {
      t = {rng() % 8, rng() % 8, rng() % 8, rng() % 8};
    } while (t.use_female + t.no_female == 0 || t.use_male + t.no_male == 0);
    const double mi = mutual_information(t);
    ASSERT_GE(mi, 0.0);
    ASSERT_NEAR(mi, mi_oracle(t.use_female, t.use_male, t.no_female, t.no_male), 1e-12);
    ASSERT_EQ(mi, mutual_information(UsageContingency{t.use_male, t.use_female, t.no_male, t.no_female}));
  }
  for (std::uint64_t a = 1; a < 6; ++a) {
    for (std::uint64_t s = 1; s < 5; ++s) {
      ASSERT_EQ(mutual_information(UsageContingency{a * s, a * (s + 1), (5 - a + 1) * s, (5 - a + 1) * (s + 1)}), 0.0);
    }
  }
}

TEST(ConditionalGender, Examples) {
  const auto p = conditional_gender_prob(table_users(7, 1, 0, 3), EmojiId{0});
  EXPECT_EQ(p.p_male, 0.125);
  EXPECT_EQ(p.p_female, 0.875);
  const auto all_male = conditional_gender_prob(UsageContingency{0, 4, 2, 1});
  EXPECT_EQ(all_male.p_male, 1.0);
  EXPECT_EQ(all_male.p_female, 0.0);
  const auto even = conditional_gender_prob(UsageContingency{3, 3, 0, 0});
  EXPECT_EQ(even.p_male, 0.5);
  EXPECT_THROW(conditional_gender_prob(UsageContingency{0, 0, 2, 2}), UndefinedError);
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    const UsageContingency t{1 + rng() % 97, rng() % 89, 0, 0};
    const auto q = conditional_gender_prob(t);
    ASSERT_EQ(q.p_male + q.p_female, 1.0);
  }
}

TEST(RankDiscriminative, FemaleOnlyEmojiRanksFirst) {
  const auto& lex = abc();
  std::vector<UserAggregate> users;
  for (int i = 0; i < 6; ++i) {
    std::map<EmojiId, std::uint64_t> c{{EmojiId{2}, 1}};
    if (i < 3) c[EmojiId{0}] = 4;
    if (i % 2) c[EmojiId{1}] = 1;
    users.push_back(user("u" + std::to_string(i), i < 3 ? Gender::Female : Gender::Male, c));
  }
  users.push_back(user("x", std::nullopt, {{EmojiId{3}, 9}}));
  const auto rows = rank_discriminative(users, lex);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].emoji, EmojiId{0});
  EXPECT_NEAR(rows[0].mi, std::log(2.0), 1e-15);
  EXPECT_EQ(rows[0].tag, GenderTag::FemaleEmoji);
  EXPECT_EQ(rows[0].p_female_given_e, 1.0);
  EXPECT_EQ(rows[0].female_users, 3u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GE(rows[i - 1].mi, rows[i].mi);
  EXPECT_EQ(rows[2].mi, 0.0);
  EXPECT_EQ(to_string(GenderTag::MaleEmoji), "male");
}

TEST(RankDiscriminative, ThresholdIsStrict) {
  std::vector<UserAggregate> users;
  // 47 male and 53 female users of emoji 0, plus non-users of both genders.
  for (int i = 0; i < 100; ++i) {
    users.push_back(user("u" + std::to_string(i), i < 47 ? Gender::Male : Gender::Female, {{EmojiId{0}, 1}}));
  }
  users.push_back(user("m", Gender::Male, {{EmojiId{1}, 1}}));
  users.push_back(user("f", Gender::Female, {{EmojiId{1}, 1}}));
  const auto rows = rank_discriminative(users, abc(), 0.47);
  const auto& r0 = rows[0].emoji == EmojiId{0} ? rows[0] : rows[1];
  EXPECT_EQ(r0.p_male_given_e, 0.47);
  EXPECT_EQ(r0.tag, GenderTag::FemaleEmoji);
  const auto rows2 = rank_discriminative(users, abc(), 0.46);
  const auto& r1 = rows2[0].emoji == EmojiId{0} ? rows2[0] : rows2[1];
  EXPECT_EQ(r1.tag, GenderTag::MaleEmoji);
  EXPECT_THROW(rank_discriminative(users, abc(), 1.0), ArgumentError);
}

TEST(RankDiscriminative, TiesBrokenBySequence) {
  const auto& lex = abc();
  std::vector<UserAggregate> users{user("a", Gender::Female, {{EmojiId{0}, 1}, {EmojiId{3}, 1}}),
                                   user("b", Gender::Male, {{EmojiId{2}, 1}})};
  const auto rows = rank_discriminative(users, lex);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ASSERT_EQ(rows[i - 1].mi, rows[i].mi);
    EXPECT_LT(lex.sequence(rows[i - 1].emoji), lex.sequence(rows[i].emoji));
  }
}

TEST(Pmi, Examples) {
  MessageCooccurrence single;
  const std::vector<EmojiId> both{EmojiId{0}, EmojiId{1}};
  single.add_message(both);
  EXPECT_EQ(pmi(single, EmojiId{0}, EmojiId{1}), 0.0);

  MessageCooccurrence ten;
  ten.add_message(both, 4);
  ten.add_message(std::vector<EmojiId>{EmojiId{0}});
  ten.add_message(std::vector<EmojiId>{}, 5);
  EXPECT_EQ(ten.n_messages, 10u);
  EXPECT_NEAR(pmi(ten, EmojiId{0}, EmojiId{1}), std::log(2.0), 1e-15);
  EXPECT_EQ(pmi(ten, EmojiId{1}, EmojiId{0}), pmi(ten, EmojiId{0}, EmojiId{1}));

  MessageCooccurrence apart;
  apart.add_message(std::vector<EmojiId>{EmojiId{0}});
  apart.add_message(std::vector<EmojiId>{EmojiId{1}});
  EXPECT_EQ(pmi(apart, EmojiId{0}, EmojiId{1}), -std::numeric_limits<double>::infinity());
  EXPECT_THROW(pmi(apart, EmojiId{0}, EmojiId{2}), UndefinedError);
}

TEST(Pmi, MatchesHandCountOnRandomCorpora) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::vector<std::uint32_t>> msgs(1 + rng() % 50);
    MessageCooccurrence c;
    for (auto& m : msgs) {
      std::set<std::uint32_t> s;
      const int k = static_cast<int>(rng() % 4);
      for (int j = 0; j < k; ++j) s.insert(static_cast<std::uint32_t>(rng() % 5));
      m.assign(s.begin(), s.end());
      std::vector<EmojiId> ids;
      for (auto e : m) ids.push_back(EmojiId{e});
      c.add_message(ids);
    }
    for (std::uint32_t a = 0; a < 5; ++a) {
      for (std::uint32_t b = a + 1; b < 5; ++b) {
        if (c.count(EmojiId{a}) == 0 || c.count(EmojiId{b}) == 0) continue;
        const double got = pmi(c, EmojiId{a}, EmojiId{b});
        const double want = pmi_oracle(msgs, a, b);
        if (std::isinf(want)) {
          ASSERT_EQ(got, want);
          continue;
        }
        ASSERT_NEAR(got, want, 1e-12);
        // Sign agrees with the exact comparison p12 > p1 p2.
        const auto n = static_cast<std::int64_t>(msgs.size());
        const auto lhs = static_cast<std::int64_t>(c.count(EmojiId{a}, EmojiId{b})) * n;
        const auto rhs = static_cast<std::int64_t>(c.count(EmojiId{a}) * c.count(EmojiId{b}));
        ASSERT_EQ(got > 0, lhs > rhs);
        ASSERT_EQ(got == 0, lhs == rhs);
      }
    }
  }
}

TEST(Cooccurrence, FromAggregatesRespectsGenderFilter) {
  const auto& lex = bundled_lexicon();
  const std::string joy = utf8("1F602"), fire = utf8("1F525");
  std::vector<UserAggregate> users{user_of("f", Gender::Female, {joy + fire, joy, "x"}, lex),
                                   user_of("m", Gender::Male, {fire, fire + fire}, lex),
                                   user_of("n", std::nullopt, {joy}, lex)};
  const auto all = message_cooccurrence(users, std::nullopt);
  EXPECT_EQ(all.n_messages, 6u);
  EXPECT_EQ(all.count(id_of(lex, "1F602")), 3u);
  EXPECT_EQ(all.count(id_of(lex, "1F602"), id_of(lex, "1F525")), 1u);
  const auto female = message_cooccurrence(users, Gender::Female);
  EXPECT_EQ(female.n_messages, 3u);
  EXPECT_EQ(female.count(id_of(lex, "1F525")), 1u);
}

TEST(TopEmojis, SharesAndOrder) {
  const auto& lex = abc();
  std::vector<UserAggregate> users{user("a", Gender::Female, {{EmojiId{0}, 3}, {EmojiId{1}, 1}}),
                                   user("b", Gender::Male, {{EmojiId{2}, 5}})};
  const auto f = top_emojis(users, Gender::Female, lex, 10);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].emoji, EmojiId{0});
  EXPECT_EQ(f[0].share, 0.75);
  EXPECT_EQ(f[1].share, 0.25);
  const auto all = top_emojis(users, std::nullopt, lex, 10);
  double s = 0;
  for (const auto& r : all) s += r.share;
  EXPECT_NEAR(s, 1.0, 1e-15);
  EXPECT_EQ(top_emojis(users, std::nullopt, lex, 1).size(), 1u);
  EXPECT_THROW(top_emojis(std::vector<UserAggregate>{user("c", Gender::Female, {})}, Gender::Female, lex, 3),
               ArgumentError);
}

TEST(Popularity, MessageLevelCounts) {
  std::vector<UserAggregate> users{user("a", Gender::Female, {}, 100, 8), user("b", Gender::Female, {}, 100, 8),
                                   user("c", Gender::Male, {}, 200, 14), user("d", std::nullopt, {}, 50, 50)};
  const auto s = popularity_stat(users);
  EXPECT_EQ(s.female_count, 16u);
  EXPECT_EQ(s.female_total, 200u);
  EXPECT_EQ(s.male_count, 14u);
  EXPECT_EQ(s.male_total, 200u);
  EXPECT_EQ(s.female_value, 0.08);
  EXPECT_EQ(s.male_value, 0.07);
  EXPECT_EQ(s.z, two_proportion_ztest(16, 200, 14, 200).z);
}

TEST(GenderSplit, BatchAdjustmentKeepsInvariants) {
  std::vector<GenderSplitStat> batch{gender_split("a", 30, 100, 20, 100), gender_split("b", 5, 5, 5, 5),
                                     gender_split("c", 50, 100, 50, 100)};
  EXPECT_EQ(batch[1].z, 0.0);
  EXPECT_EQ(batch[1].p_raw, 1.0);
  adjust_batch(batch);
  EXPECT_NEAR(batch[0].p_adjusted, std::min(1.0, 3 * batch[0].p_raw), 1e-15);
  for (const auto& s : batch) {
    EXPECT_GE(s.p_adjusted, s.p_raw);
    EXPECT_LE(s.p_adjusted, 1.0);
  }
  EXPECT_THROW(gender_split("d", 0, 0, 1, 2), ArgumentError);
}

TEST(Sentiment, AllPositiveIsTheEqualPath) {
  const auto& lex = abc();
  const std::vector<SentimentLabel> labels(lex.size(), SentimentLabel::Positive);
  std::vector<UserAggregate> users{user("a", Gender::Female, {{EmojiId{0}, 3}}), user("b", Gender::Male, {{EmojiId{2}, 5}})};
  const std::vector<SentimentClass> classes{SentimentClass::positive()};
  const auto s = sentiment_usage_stats(users, lex, labels, classes);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].female_value, 1.0);
  EXPECT_EQ(s[0].male_value, 1.0);
  EXPECT_EQ(s[0].z, 0.0);
  EXPECT_EQ(s[0].p_adjusted, 1.0);
}

TEST(Sentiment, GroupSharesUseAllTokensAsDenominator) {
  const auto& lex = abc();
  std::vector<SentimentLabel> labels{SentimentLabel::Positive, SentimentLabel::Positive, SentimentLabel::Negative,
                                     SentimentLabel::Neither};
  std::vector<UserAggregate> users{user("a", Gender::Female, {{EmojiId{0}, 6}, {EmojiId{1}, 2}, {EmojiId{2}, 2}}),
                                   user("b", Gender::Male, {{EmojiId{1}, 5}, {EmojiId{3}, 15}})};
  const std::vector<SentimentClass> classes{SentimentClass::positive(), SentimentClass::negative(),
                                            SentimentClass::named_group("heart"), SentimentClass::named_group("face")};
  const auto s = sentiment_usage_stats(users, lex, labels, classes);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0].female_value, 0.8);
  EXPECT_EQ(s[0].male_value, 0.25);
  EXPECT_EQ(s[1].female_value, 0.2);
  EXPECT_EQ(s[2].female_total, 10u);
  EXPECT_EQ(s[2].female_value, 0.2);
  EXPECT_EQ(s[2].male_value, 0.25);
  EXPECT_EQ(s[3].male_count, 0u);
  for (const auto& x : s) EXPECT_NEAR(x.p_adjusted, std::min(1.0, 4 * x.p_raw), 1e-15);
}

TEST(Sentiment, HeavierNegativeUseIsSignificant) {
  const auto& lex = abc();
  std::vector<SentimentLabel> labels{SentimentLabel::Positive, SentimentLabel::Negative, SentimentLabel::Neither,
                                     SentimentLabel::Neither};
  // 10,000 tokens per gender; females use the negative emoji at twice the male rate.
  std::vector<UserAggregate> users{user("f", Gender::Female, {{EmojiId{0}, 8000}, {EmojiId{1}, 2000}}),
                                   user("m", Gender::Male, {{EmojiId{0}, 9000}, {EmojiId{1}, 1000}})};
  const std::vector<SentimentClass> classes{SentimentClass::positive(), SentimentClass::negative()};
  const auto s = sentiment_usage_stats(users, lex, labels, classes);
  EXPECT_GT(s[1].female_value, s[1].male_value);
  EXPECT_LT(s[1].p_adjusted, 0.01);
}
