#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "emojiprof/corpus.hpp"
#include "emojiprof/lexicon.hpp"

namespace emojiprof {

struct PreferenceWeight {
  EmojiSequence emoji;
  double probability = 0.0;
};

// Generator for corpora with known gender/emoji dependencies.
struct SyntheticConfig {
  std::uint32_t n_female = 0;
  std::uint32_t n_male = 0;
  std::uint32_t min_messages = 1;  // per user, inclusive range
  std::uint32_t max_messages = 1;
  double female_emoji_rate = 0.0;  // P(message contains emojis)
  double male_emoji_rate = 0.0;
  std::vector<PreferenceWeight> female_preference;  // must sum to 1
  std::vector<PreferenceWeight> male_preference;

  double continue_probability = 0.35;  // geometric number of emojis per emoji message
  std::uint32_t max_emojis_per_message = 6;
  double repeat_probability = 0.3;  // next emoji repeats the previous one
  double emoji_only_probability = 0.15;
  double run_probability = 0.5;  // emojis placed as one run (vs. scattered between words)
  std::vector<std::string> languages{"en"};
  std::int64_t start_timestamp = 1'500'000'000;
  std::int64_t timestamp_span = 90 * 86'400;
  std::uint64_t seed = 1;

  // Throws ConfigError.
  void validate() const;

  static SyntheticConfig from_json(std::string_view text);
  std::string to_json() const;
};

// Writes JSONL; output is a pure function of the config.
void generate_synthetic(const SyntheticConfig& config, std::ostream& out);
std::string generate_synthetic(const SyntheticConfig& config);

// A gender-balanced corpus where `planted` lexicon emojis carry a `skew`:1
// preference ratio (alternating female/male) among `planted + neutral` emojis,
// taken from the start of the lexicon.
struct PlantedSpec {
  std::uint32_t users_per_gender = 2000;
  std::uint32_t planted = 20;
  std::uint32_t neutral = 80;
  double skew = 3.0;
  double female_rate = 0.08;
  double male_rate = 0.07;
  std::uint32_t min_messages = 150;
  std::uint32_t max_messages = 250;
  std::uint64_t seed = 2018;
};

SyntheticConfig planted_config(const EmojiLexicon& lexicon, const PlantedSpec& spec);

// Sequences planted toward each gender by planted_config, in lexicon order.
struct PlantedTruth {
  std::vector<EmojiSequence> female_skewed;
  std::vector<EmojiSequence> male_skewed;
};
PlantedTruth planted_truth(const EmojiLexicon& lexicon, const PlantedSpec& spec);

}  // namespace emojiprof
