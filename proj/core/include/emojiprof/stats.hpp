#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "emojiprof/corpus.hpp"
#include "emojiprof/lexicon.hpp"
#include "emojiprof/sentiment.hpp"

namespace emojiprof {

// All logarithms are natural (nats).

double emoji_msg_fraction(const UserAggregate& user);

struct CdfStep {
  double x;
  double f;  // fraction of values <= x
};

std::vector<CdfStep> empirical_cdf(std::span<const double> values);
double cdf_at(std::span<const CdfStep> cdf, double x);
inline double fraction_above(std::span<const CdfStep> cdf, double x) { return 1.0 - cdf_at(cdf, x); }

struct ZTest {
  double z;
  double p_two_sided;
};

double normal_cdf(double x);
ZTest two_proportion_ztest(std::uint64_t k1, std::uint64_t n1, std::uint64_t k2, std::uint64_t n2);

std::vector<double> bonferroni(std::span<const double> p_values);

// User-level 2x2 table of (uses e, gender).
struct UsageContingency {
  std::uint64_t use_female = 0;
  std::uint64_t use_male = 0;
  std::uint64_t no_female = 0;
  std::uint64_t no_male = 0;

  std::uint64_t total() const { return use_female + use_male + no_female + no_male; }
};

UsageContingency usage_contingency(std::span<const UserAggregate> users, EmojiId e);
double mutual_information(const UsageContingency& table);
double mutual_information(std::span<const UserAggregate> users, EmojiId e);

struct GenderProb {
  double p_male;
  double p_female;
};

GenderProb conditional_gender_prob(const UsageContingency& table);
GenderProb conditional_gender_prob(std::span<const UserAggregate> users, EmojiId e);

enum class GenderTag { FemaleEmoji, MaleEmoji };
std::string_view to_string(GenderTag tag) noexcept;

struct DiscriminativeEmojiRow {
  EmojiId emoji;
  double mi;
  double p_male_given_e;
  double p_female_given_e;
  GenderTag tag;
  std::uint64_t female_users;  // labeled users of e
  std::uint64_t male_users;
};

// Share of labeled users that are male.
double male_user_share(std::span<const UserAggregate> users);

// Rows sorted by MI descending, ties by canonical sequence. Only labeled users count.
// Without a threshold the labeled male user share is used.
std::vector<DiscriminativeEmojiRow> rank_discriminative(std::span<const UserAggregate> users,
                                                        const EmojiLexicon& lexicon,
                                                        std::optional<double> male_threshold = std::nullopt);

// Message-level emoji indicator counts.
struct MessageCooccurrence {
  std::uint64_t n_messages = 0;  // all messages, with or without emojis
  std::map<EmojiId, std::uint64_t> marginal;
  std::map<std::pair<EmojiId, EmojiId>, std::uint64_t> joint;  // key.first < key.second

  std::uint64_t count(EmojiId e) const;
  std::uint64_t count(EmojiId a, EmojiId b) const;

  // Adds one message given its distinct emoji set.
  void add_message(std::span<const EmojiId> distinct, std::uint64_t times = 1);
};

// Includes every user when `gender` is empty, otherwise only users labeled with it.
MessageCooccurrence message_cooccurrence(std::span<const UserAggregate> users, std::optional<Gender> gender);

// ln(p12 / (p1 p2)); -infinity when the pair never co-occurs.
double pmi(const MessageCooccurrence& counts, EmojiId a, EmojiId b);

struct UsageShare {
  EmojiId emoji;
  std::uint64_t count;
  double share;
};

std::vector<UsageShare> top_emojis(std::span<const UserAggregate> users, std::optional<Gender> gender,
                                   const EmojiLexicon& lexicon, std::size_t n);

struct GenderSplitStat {
  std::string name;
  double female_value = 0.0;
  double male_value = 0.0;
  std::uint64_t female_count = 0;
  std::uint64_t female_total = 0;
  std::uint64_t male_count = 0;
  std::uint64_t male_total = 0;
  double z = 0.0;
  double p_raw = 1.0;
  double p_adjusted = 1.0;
};

// Fills z and p_raw; equal or degenerate proportions give z = 0, p = 1.
GenderSplitStat gender_split(std::string name, std::uint64_t female_count, std::uint64_t female_total,
                             std::uint64_t male_count, std::uint64_t male_total);

// Applies Bonferroni over the batch in place.
void adjust_batch(std::span<GenderSplitStat> stats);

// Message-level %emoji-msg across labeled users, female vs male, z-tested.
GenderSplitStat popularity_stat(std::span<const UserAggregate> users);

struct SentimentClass {
  enum class Kind { Positive, Negative, Group } kind;
  std::string group;

  static SentimentClass positive() { return {Kind::Positive, {}}; }
  static SentimentClass negative() { return {Kind::Negative, {}}; }
  static SentimentClass named_group(std::string g) { return {Kind::Group, std::move(g)}; }
  std::string name() const;
  bool matches(const EmojiEntry& entry, SentimentLabel label) const;
};

// Share of emoji tokens in each class, per gender, with one Bonferroni batch.
std::vector<GenderSplitStat> sentiment_usage_stats(std::span<const UserAggregate> users,
                                                   const EmojiLexicon& lexicon,
                                                   std::span<const SentimentLabel> labels,
                                                   std::span<const SentimentClass> classes);

}  // namespace emojiprof
