#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emojiprof/lexicon.hpp"
#include "emojiprof/rng.hpp"
#include "emojiprof/segmenter.hpp"

namespace emojiprof {

enum class Gender { Female, Male };

std::string_view to_string(Gender g) noexcept;  // "F" / "M"

struct Message {
  std::string user_id;
  std::optional<Gender> gender;
  std::optional<std::string> lang;
  std::optional<std::int64_t> timestamp;
  std::string text;

  bool operator==(const Message&) const = default;
};

struct Corpus {
  std::vector<Message> messages;
};

struct IngestReport {
  std::size_t lines = 0;  // non-blank lines seen
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t distinct_users = 0;
  std::map<std::string, std::size_t> rejection_reasons;
  // (line number, reason) for the first rejections, capped.
  std::vector<std::pair<std::size_t, std::string>> sample_rejections;
};

struct IngestResult {
  Corpus corpus;
  IngestReport report;
};

// Parses one JSONL record. On failure returns nullopt and sets `reason`.
std::optional<Message> parse_message(std::string_view line, std::string& reason);

// Serializes with a fixed key order; the inverse of parse_message.
std::string to_jsonl(const Message& message);

// Invalid lines are counted and skipped. Throws IoError when the stream fails
// and FormatError when more than half of the lines are rejected.
IngestResult ingest(std::istream& in);
IngestResult ingest_file(const std::filesystem::path& path);

// Keeps messages with from <= timestamp < to; messages without a timestamp are dropped
// whenever a bound is given.
Corpus filter_time_window(const Corpus& corpus, std::optional<std::int64_t> from,
                          std::optional<std::int64_t> to);

// Exact multiset of small non-negative counts, mergeable and order-free.
class CountHistogram {
 public:
  void add(std::uint32_t value, std::uint64_t times = 1);
  void merge(const CountHistogram& other);

  std::uint64_t total() const noexcept { return total_; }
  bool empty() const noexcept { return total_ == 0; }
  std::uint32_t max() const;
  double mean() const;
  double median() const;  // midpoint average for even totals
  std::vector<std::uint32_t> sorted_values() const;
  const std::map<std::uint32_t, std::uint64_t>& bins() const noexcept { return bins_; }

  bool operator==(const CountHistogram&) const = default;

 private:
  std::uint32_t value_at_rank(std::uint64_t rank) const;

  std::map<std::uint32_t, std::uint64_t> bins_;
  std::uint64_t total_ = 0;
  std::uint64_t sum_ = 0;
};

struct PatternCounts {
  std::uint64_t emoji_only = 0;
  std::uint64_t single_emoji_in_text = 0;
  std::uint64_t multi_nonconsecutive = 0;
  std::uint64_t multi_consecutive = 0;
  std::uint64_t repeating = 0;

  void add(const MessagePatternFlags& flags);
  void merge(const PatternCounts& other);
  bool operator==(const PatternCounts&) const = default;
};

// Sufficient statistics for one user, keyed by lexicon ids.
struct UserAggregate {
  std::string user_id;
  std::optional<Gender> gender;
  bool gender_conflict = false;  // messages carried both labels; treated as unlabeled
  std::map<std::string, std::uint64_t> lang_counts;
  std::uint64_t msg_count = 0;
  std::uint64_t emoji_msg_count = 0;
  std::map<EmojiId, std::uint64_t> per_emoji_counts;  // token counts, values >= 1
  PatternCounts pattern_counts;
  CountHistogram emoji_counts_per_emoji_msg;
  // Distinct-emoji set of each emoji message (sorted ids) -> number of messages.
  // Carries the message-level co-occurrence and sentiment information.
  std::map<std::vector<EmojiId>, std::uint64_t> emoji_set_counts;
  std::string lexicon_fingerprint;

  bool labeled() const noexcept { return gender.has_value() && !gender_conflict; }
  std::optional<Gender> label() const noexcept { return labeled() ? gender : std::nullopt; }

  // Majority language tag; ties go to the lexicographically smallest tag.
  std::string lang() const;

  std::uint64_t emoji_token_count() const;

  // Adds one message's tokens. `gender` is the message label.
  void add_message(std::optional<Gender> message_gender, const std::optional<std::string>& lang,
                   std::span<const Token> tokens);

  // Combines statistics of the same user from another shard.
  void merge(const UserAggregate& other);

  bool operator==(const UserAggregate&) const = default;
};

struct AggregateOptions {
  unsigned threads = 1;  // shards by user_id hash; result independent of thread count
};

// Per-user aggregates sorted by user_id.
std::vector<UserAggregate> aggregate(const Corpus& corpus, const EmojiLexicon& lexicon,
                                     const NormalizationPolicy& policy,
                                     const AggregateOptions& options = {});

// Merges two per-user aggregate lists (each sorted by user_id).
std::vector<UserAggregate> merge_aggregates(std::span<const UserAggregate> a,
                                            std::span<const UserAggregate> b);

// Keeps users with min_inclusive <= emoji_msg_count < max_exclusive.
std::vector<UserAggregate> filter_by_emoji_msgs(std::span<const UserAggregate> users,
                                                std::uint64_t min_inclusive,
                                                std::optional<std::uint64_t> max_exclusive = std::nullopt);

std::vector<UserAggregate> labeled_only(std::span<const UserAggregate> users);

struct SplitIndices {
  std::vector<std::size_t> train;  // ascending
  std::vector<std::size_t> test;   // ascending
};

// Seeded random partition; |train| = floor(n * train_fraction).
SplitIndices split_indices(std::size_t n, double train_fraction, std::uint64_t seed);

template <class T>
std::pair<std::vector<T>, std::vector<T>> split(std::span<const T> items, double train_fraction,
                                                std::uint64_t seed) {
  const auto idx = split_indices(items.size(), train_fraction, seed);
  std::pair<std::vector<T>, std::vector<T>> out;
  out.first.reserve(idx.train.size());
  out.second.reserve(idx.test.size());
  for (auto i : idx.train) out.first.push_back(items[i]);
  for (auto i : idx.test) out.second.push_back(items[i]);
  return out;
}

}  // namespace emojiprof
