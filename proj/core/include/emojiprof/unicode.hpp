#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace emojiprof::unicode {

inline constexpr char32_t kZeroWidthJoiner = 0x200D;
inline constexpr char32_t kVariationSelector16 = 0xFE0F;
inline constexpr char32_t kCombiningKeycap = 0x20E3;
inline constexpr char32_t kReplacement = 0xFFFD;

bool is_extended_pictographic(char32_t cp) noexcept;

inline bool is_skin_tone_modifier(char32_t cp) noexcept { return cp >= 0x1F3FB && cp <= 0x1F3FF; }
inline bool is_regional_indicator(char32_t cp) noexcept { return cp >= 0x1F1E6 && cp <= 0x1F1FF; }
inline bool is_keycap_base(char32_t cp) noexcept {
  return (cp >= U'0' && cp <= U'9') || cp == U'#' || cp == U'*';
}

// White_Space property.
bool is_white_space(char32_t cp) noexcept;

struct DecodedCodePoint {
  char32_t cp;
  std::uint32_t offset;  // byte offset of the first code unit
  std::uint8_t length;   // number of bytes consumed
  bool valid;
};

// Decodes UTF-8. An ill-formed byte is reported as one invalid U+FFFD of
// length 1, so the decoded units always tile the input.
std::vector<DecodedCodePoint> decode_utf8(std::string_view text);

bool is_valid_utf8(std::string_view text) noexcept;

void append_utf8(std::string& out, char32_t cp);
std::string to_utf8(std::span<const char32_t> cps);

}  // namespace emojiprof::unicode
