#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "emojiprof/corpus.hpp"
#include "emojiprof/lexicon.hpp"
#include "emojiprof/matrix.hpp"
#include "emojiprof/sentiment.hpp"

namespace emojiprof {

inline constexpr std::size_t kFrequencyFeatures = 9;
inline constexpr std::size_t kSentimentFeatures = 5;

inline std::size_t feature_dimension(const EmojiLexicon& lexicon) {
  return kFrequencyFeatures + lexicon.size() + kSentimentFeatures;
}

// Column names: frequency block, one "pref:<hex>" per lexicon entry, sentiment block.
std::vector<std::string> feature_columns(const EmojiLexicon& lexicon);

// Throws ConsistencyError when the aggregate was built against another lexicon.
std::vector<double> build_features(const UserAggregate& user, const EmojiLexicon& lexicon,
                                   std::span<const SentimentLabel> labels);

struct FeatureManifest {
  std::string kind;  // "emoji" or "unigram"
  std::vector<std::string> columns;
  std::string lexicon_fingerprint;
  std::string policy;

  // Hash over kind, columns and lexicon fingerprint.
  std::string fingerprint() const;

  std::string to_json() const;
  static FeatureManifest from_json(std::string_view text);

  bool operator==(const FeatureManifest&) const = default;
};

// Label coding: 1 = Male, 0 = Female.
inline int label_code(Gender g) { return g == Gender::Male ? 1 : 0; }
inline Gender label_gender(int code) { return code == 1 ? Gender::Male : Gender::Female; }

struct LabeledMatrix {
  Matrix x;
  std::vector<int> y;
  std::vector<std::string> row_ids;  // ascending user_id
  std::vector<std::uint64_t> emoji_msg_counts;
  FeatureManifest manifest;

  std::size_t rows() const noexcept { return y.size(); }
  LabeledMatrix select_rows(std::span<const std::size_t> indices) const;
  // Rows with min_inclusive <= emoji_msg_count < max_exclusive.
  LabeledMatrix bucket(std::uint64_t min_inclusive, std::uint64_t max_exclusive) const;
};

// Rows sorted by user_id. Throws ArgumentError for unlabeled users.
LabeledMatrix feature_matrix(std::span<const UserAggregate> users, const EmojiLexicon& lexicon,
                             std::span<const SentimentLabel> labels);

// CSV header: user_id,label,emoji_msg_count,<columns>.
void write_matrix_csv(const LabeledMatrix& m, std::ostream& out);
// Columns must agree with the manifest (ConsistencyError otherwise).
LabeledMatrix read_matrix_csv(std::istream& in, const FeatureManifest& manifest);

void save_features(const LabeledMatrix& m, const std::filesystem::path& csv, const std::filesystem::path& manifest);
LabeledMatrix load_features(const std::filesystem::path& csv, const std::filesystem::path& manifest);

}  // namespace emojiprof
