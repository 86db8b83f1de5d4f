#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "emojiprof/lexicon.hpp"

namespace emojiprof {

enum class SentimentLabel { Positive, Negative, Neither };

std::string_view to_string(SentimentLabel label) noexcept;

struct SentimentWeights {
  double posemo = 0.0;
  double negemo = 0.0;
};

// Word -> (posemo, negemo). Words are stored lowercase.
class SentimentLexicon {
 public:
  SentimentLexicon() = default;
  explicit SentimentLexicon(std::map<std::string, SentimentWeights, std::less<>> words);

  const SentimentWeights* find(std::string_view word) const;
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::map<std::string, SentimentWeights, std::less<>> words_;
};

// `<word>\t<posemo>\t<negemo>` rows; blank lines and '#' comments skipped.
SentimentLexicon load_sentiment_lexicon(std::istream& in);
SentimentLexicon load_sentiment_lexicon_file(const std::filesystem::path& path);

// Sums posemo/negemo over the lowercase whitespace/hyphen tokens of the
// entry's name and keywords, then compares the two totals.
SentimentLabel sentiment_of(const EmojiEntry& entry, const SentimentLexicon& words);

// One label per lexicon entry, indexed by EmojiId.
std::vector<SentimentLabel> label_lexicon(const EmojiLexicon& lexicon, const SentimentLexicon& words);

}  // namespace emojiprof
