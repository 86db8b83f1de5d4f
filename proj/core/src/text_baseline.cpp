#include "emojiprof/text_baseline.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_map>

#include "emojiprof/segmenter.hpp"
#include "emojiprof/unicode.hpp"
#include "text_util.hpp"

namespace emojiprof {
namespace {

bool is_separator(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u <= 0x20 || u == 0x7F || (u < 0x80 && std::ispunct(u));
}

bool emoji_like(std::string_view word) {
  using namespace unicode;
  for (const auto& d : decode_utf8(word)) {
    if (!d.valid) continue;
    const auto cp = d.cp;
    if (is_extended_pictographic(cp) || is_skin_tone_modifier(cp) || is_regional_indicator(cp) ||
        cp == kZeroWidthJoiner || cp == kVariationSelector16 || cp == kCombiningKeycap) {
      return true;
    }
  }
  return false;
}

constexpr std::string_view kColumnPrefix = "w:";

}  // namespace

std::vector<std::string> unigram_tokens(std::string_view text, const EmojiLexicon& lexicon) {
  std::vector<std::string> out;
  for (const auto& tok : tokenize(text, lexicon)) {
    if (tok.kind != TokenKind::Text) continue;
    std::size_t i = 0;
    const auto s = tok.text;
    while (i < s.size()) {
      while (i < s.size() && is_separator(s[i])) ++i;
      std::size_t j = i;
      while (j < s.size() && !is_separator(s[j])) ++j;
      if (j > i) {
        const auto word = s.substr(i, j - i);
        if (!emoji_like(word)) out.push_back(detail::ascii_lower(word));
      }
      i = j;
    }
  }
  return out;
}

LabeledMatrix unigram_text_features(const Corpus& corpus, std::span<const UserAggregate> users,
                                    const EmojiLexicon& lexicon, const UnigramOptions& options,
                                    const std::vector<std::string>* vocabulary) {
  std::vector<const UserAggregate*> order;
  for (const auto& u : users) {
    if (!u.labeled()) throw ArgumentError("user " + u.user_id + " has no gender label");
    order.push_back(&u);
  }
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->user_id < b->user_id; });
  std::unordered_map<std::string_view, std::size_t> row_of;
  for (std::size_t r = 0; r < order.size(); ++r) row_of.emplace(order[r]->user_id, r);

  std::vector<std::map<std::string, std::uint64_t>> counts(order.size());
  std::vector<std::uint64_t> totals(order.size(), 0);
  for (const auto& msg : corpus.messages) {
    auto it = row_of.find(msg.user_id);
    if (it == row_of.end()) continue;
    for (auto& w : unigram_tokens(msg.text, lexicon)) {
      ++counts[it->second][std::move(w)];
      ++totals[it->second];
    }
  }

  std::vector<std::string> vocab;
  if (vocabulary) {
    vocab = *vocabulary;
  } else {
    std::map<std::string_view, std::size_t> df;
    for (const auto& c : counts) {
      for (const auto& [w, n] : c) ++df[w];
    }
    for (const auto& [w, n] : df) {
      if (n >= options.min_df) vocab.emplace_back(w);
    }
  }
  if (vocab.empty()) throw ArgumentError("unigram vocabulary is empty");

  LabeledMatrix m;
  m.manifest.kind = "unigram";
  m.manifest.lexicon_fingerprint = lexicon.fingerprint();
  m.manifest.policy = lexicon.policy().describe();
  for (const auto& w : vocab) m.manifest.columns.push_back(std::string(kColumnPrefix) + w);
  std::unordered_map<std::string_view, std::size_t> col_of;
  for (std::size_t c = 0; c < vocab.size(); ++c) col_of.emplace(vocab[c], c);

  m.x = Matrix(order.size(), vocab.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    for (const auto& [w, n] : counts[r]) {
      auto it = col_of.find(w);
      if (it != col_of.end()) m.x(r, it->second) = static_cast<double>(n) / static_cast<double>(totals[r]);
    }
    m.y.push_back(label_code(*order[r]->gender));
    m.row_ids.push_back(order[r]->user_id);
    m.emoji_msg_counts.push_back(order[r]->emoji_msg_count);
  }
  return m;
}

std::vector<std::string> unigram_vocabulary(const FeatureManifest& manifest) {
  if (manifest.kind != "unigram") throw ConsistencyError("manifest does not describe unigram features");
  std::vector<std::string> vocab;
  for (const auto& c : manifest.columns) {
    if (!c.starts_with(kColumnPrefix)) throw ConsistencyError("unexpected unigram column " + c);
    vocab.push_back(c.substr(kColumnPrefix.size()));
  }
  return vocab;
}

}  // namespace emojiprof
