#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "emojiprof/lexicon.hpp"

namespace emojiprof {

enum class TokenKind { Text, Emoji };

// A span of the input message. Tokens from one message tile it exactly.
// `text` views the caller's buffer.
struct Token {
  TokenKind kind = TokenKind::Text;
  std::uint32_t begin = 0;  // byte offsets into the message
  std::uint32_t end = 0;
  std::string_view text;
  EmojiId emoji{};  // meaningful for Emoji tokens only

  static Token make_text(std::string_view text, std::uint32_t begin = 0) {
    return {TokenKind::Text, begin, begin + static_cast<std::uint32_t>(text.size()), text, {}};
  }
  static Token make_emoji(EmojiId id, std::string_view text = {}, std::uint32_t begin = 0) {
    return {TokenKind::Emoji, begin, begin + static_cast<std::uint32_t>(text.size()), text, id};
  }
};

// Greedy longest match against the lexicon. A candidate window starts at a
// code point that the policy does not drop, is compared after normalization,
// and absorbs any trailing variation selectors / skin tones the policy drops.
// Everything else coalesces into Text tokens.
std::vector<Token> tokenize(std::string_view text, const EmojiLexicon& lexicon,
                            const NormalizationPolicy& policy);

inline std::vector<Token> tokenize(std::string_view text, const EmojiLexicon& lexicon) {
  return tokenize(text, lexicon, lexicon.policy());
}

// Per-message usage patterns. The flags are independent: one message may be
// both multi_consecutive and multi_nonconsecutive.
struct MessagePatternFlags {
  std::uint32_t emoji_count = 0;
  bool emoji_only = false;            // no non-whitespace text
  bool single_emoji_in_text = false;  // exactly one emoji, some non-whitespace text
  bool multi_nonconsecutive = false;  // two emojis in order with non-whitespace text between
  bool multi_consecutive = false;     // two emojis with nothing or whitespace between
  bool repeating = false;             // an adjacent pair with the same emoji

  bool operator==(const MessagePatternFlags&) const = default;
};

MessagePatternFlags classify_patterns(std::span<const Token> tokens);

bool is_whitespace_only(std::string_view text);

}  // namespace emojiprof
