#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emojiprof/corpus.hpp"
#include "emojiprof/features.hpp"
#include "emojiprof/lexicon.hpp"

namespace emojiprof {

// Lowercased word tokens of one message; emoji spans and emoji-like words are dropped.
std::vector<std::string> unigram_tokens(std::string_view text, const EmojiLexicon& lexicon);

struct UnigramOptions {
  std::size_t min_df = 2;  // minimum number of users containing a token
};

// Relative unigram frequencies (count / all tokens of the user) for the given
// labeled users, rows sorted by user_id. The vocabulary is built from these
// users unless `vocabulary` is given (sorted, as stored in a manifest).
LabeledMatrix unigram_text_features(const Corpus& corpus, std::span<const UserAggregate> users,
                                    const EmojiLexicon& lexicon, const UnigramOptions& options = {},
                                    const std::vector<std::string>* vocabulary = nullptr);

// Vocabulary stored in a unigram manifest, in column order.
std::vector<std::string> unigram_vocabulary(const FeatureManifest& manifest);

}  // namespace emojiprof
