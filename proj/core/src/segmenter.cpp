#include "emojiprof/segmenter.hpp"

#include "emojiprof/unicode.hpp"

namespace emojiprof {
namespace {

bool dropped_by(const NormalizationPolicy& policy, char32_t cp) noexcept {
  return (policy.strip_variation_selectors && cp == unicode::kVariationSelector16) ||
         (policy.fold_skin_tones && unicode::is_skin_tone_modifier(cp));
}

struct Match {
  std::size_t end = 0;  // one past the last code point consumed
  EmojiId id{};
};

bool longest_match(const std::vector<unicode::DecodedCodePoint>& cps, std::size_t start,
                   const EmojiLexicon& lexicon, const NormalizationPolicy& policy, Match& out) {
  if (!cps[start].valid || dropped_by(policy, cps[start].cp)) return false;
  std::uint32_t node = EmojiLexicon::kTrieRoot;
  bool found = false;
  for (std::size_t j = start; j < cps.size(); ++j) {
    const auto& d = cps[j];
    if (!d.valid) break;
    if (dropped_by(policy, d.cp)) continue;
    if (d.cp == unicode::kZeroWidthJoiner && !policy.keep_zwj_sequences_distinct) break;
    const auto next = lexicon.trie_step(node, d.cp);
    if (!next) break;
    node = *next;
    if (const auto id = lexicon.trie_terminal(node)) {
      out.end = j + 1;
      out.id = *id;
      found = true;
    }
  }
  if (!found) return false;
  while (out.end < cps.size() && cps[out.end].valid && dropped_by(policy, cps[out.end].cp)) ++out.end;
  return true;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, const EmojiLexicon& lexicon,
                            const NormalizationPolicy& policy) {
  std::vector<Token> tokens;
  if (text.empty()) return tokens;
  const auto cps = unicode::decode_utf8(text);
  const auto byte_at = [&](std::size_t i) -> std::uint32_t {
    return i < cps.size() ? cps[i].offset : static_cast<std::uint32_t>(text.size());
  };

  std::size_t text_start = cps.size();  // cps.size() means "no pending text"
  auto flush_text = [&](std::size_t upto) {
    if (text_start >= upto) return;
    const std::uint32_t b = byte_at(text_start);
    const std::uint32_t e = byte_at(upto);
    tokens.push_back({TokenKind::Text, b, e, text.substr(b, e - b), {}});
    text_start = cps.size();
  };

  std::size_t i = 0;
  Match m;
  while (i < cps.size()) {
    if (longest_match(cps, i, lexicon, policy, m)) {
      flush_text(i);
      const std::uint32_t b = byte_at(i);
      const std::uint32_t e = byte_at(m.end);
      tokens.push_back({TokenKind::Emoji, b, e, text.substr(b, e - b), m.id});
      i = m.end;
    } else {
      if (text_start == cps.size()) text_start = i;
      ++i;
    }
  }
  flush_text(cps.size());
  return tokens;
}

bool is_whitespace_only(std::string_view text) {
  for (const auto& d : unicode::decode_utf8(text)) {
    if (!d.valid || !unicode::is_white_space(d.cp)) return false;
  }
  return true;
}

MessagePatternFlags classify_patterns(std::span<const Token> tokens) {
  MessagePatternFlags flags;
  bool has_content_text = false;
  bool pending_gap = false;  // non-whitespace text since the previous emoji
  const Token* previous = nullptr;
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::Text) {
      if (!is_whitespace_only(t.text)) {
        has_content_text = true;
        pending_gap = true;
      }
      continue;
    }
    ++flags.emoji_count;
    if (previous != nullptr) {
      if (pending_gap) {
        flags.multi_nonconsecutive = true;
      } else {
        flags.multi_consecutive = true;
        if (previous->emoji == t.emoji) flags.repeating = true;
      }
    }
    previous = &t;
    pending_gap = false;
  }
  if (flags.emoji_count > 0) {
    flags.emoji_only = !has_content_text;
    flags.single_emoji_in_text = flags.emoji_count == 1 && has_content_text;
  }
  return flags;
}

}  // namespace emojiprof
