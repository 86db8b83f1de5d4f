#include "emojiprof/sentiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>

#include "emojiprof/error.hpp"
#include "text_util.hpp"

namespace emojiprof {
namespace {

constexpr std::string_view kEdgePunctuation = ",:;.!?()\"'";

}  // namespace

std::string_view to_string(SentimentLabel label) noexcept {
  switch (label) {
    case SentimentLabel::Positive:
      return "positive";
    case SentimentLabel::Negative:
      return "negative";
    case SentimentLabel::Neither:
      return "neither";
  }
  return "neither";
}

SentimentLexicon::SentimentLexicon(std::map<std::string, SentimentWeights, std::less<>> words)
    : words_(std::move(words)) {
  for (const auto& [word, w] : words_) {
    if (!std::isfinite(w.posemo) || !std::isfinite(w.negemo) || w.posemo < 0 || w.negemo < 0) {
      throw ArgumentError("sentiment weights for '" + word + "' must be finite and non-negative");
    }
  }
}

const SentimentWeights* SentimentLexicon::find(std::string_view word) const {
  auto it = words_.find(word);
  return it == words_.end() ? nullptr : &it->second;
}

SentimentLexicon load_sentiment_lexicon(std::istream& in) {
  std::map<std::string, SentimentWeights, std::less<>> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::trim(line).empty() || line[0] == '#') continue;
    const auto fields = detail::split(line, '\t');
    if (fields.size() != 3) {
      throw ParseError(line_no, "expected 3 tab-separated fields, got " + std::to_string(fields.size()));
    }
    SentimentWeights w;
    if (!detail::parse_double(fields[1], w.posemo) || !detail::parse_double(fields[2], w.negemo)) {
      throw ParseError(line_no, "non-numeric sentiment weight");
    }
    if (!std::isfinite(w.posemo) || !std::isfinite(w.negemo) || w.posemo < 0 || w.negemo < 0) {
      throw ParseError(line_no, "sentiment weights must be finite and non-negative");
    }
    const std::string word = detail::ascii_lower(detail::trim(fields[0]));
    if (word.empty()) throw ParseError(line_no, "empty word");
    if (!words.emplace(word, w).second) throw ParseError(line_no, "duplicate word '" + word + "'");
  }
  if (in.bad()) throw IoError("failed reading sentiment lexicon");
  return SentimentLexicon(std::move(words));
}

SentimentLexicon load_sentiment_lexicon_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open sentiment lexicon '" + path.string() + "'");
  return load_sentiment_lexicon(in);
}

SentimentLabel sentiment_of(const EmojiEntry& entry, const SentimentLexicon& words) {
  // Tokens are sorted before summing so the label cannot depend on keyword order.
  std::vector<std::string> tokens;
  auto collect = [&](std::string_view text) {
    for (std::string_view tok : detail::split_any(text, " \t-")) {
      const auto b = tok.find_first_not_of(kEdgePunctuation);
      if (b == std::string_view::npos) continue;
      tok = tok.substr(b, tok.find_last_not_of(kEdgePunctuation) - b + 1);
      tokens.push_back(detail::ascii_lower(tok));
    }
  };
  collect(entry.name);
  for (const auto& kw : entry.keywords) collect(kw);
  std::sort(tokens.begin(), tokens.end());

  double posemo = 0.0;
  double negemo = 0.0;
  for (const auto& tok : tokens) {
    if (const auto* w = words.find(tok)) {
      posemo += w->posemo;
      negemo += w->negemo;
    }
  }
  if (posemo > negemo) return SentimentLabel::Positive;
  if (posemo < negemo) return SentimentLabel::Negative;
  return SentimentLabel::Neither;
}

std::vector<SentimentLabel> label_lexicon(const EmojiLexicon& lexicon, const SentimentLexicon& words) {
  std::vector<SentimentLabel> labels;
  labels.reserve(lexicon.size());
  for (const auto& e : lexicon.entries()) labels.push_back(sentiment_of(e, words));
  return labels;
}

}  // namespace emojiprof
