#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace emojiprof {

// How raw emoji code-point sequences are mapped to lexicon identities.
// Fixed for the lifetime of a lexicon; reports echo it.
struct NormalizationPolicy {
  bool fold_skin_tones = true;
  bool strip_variation_selectors = true;
  // When false, the segmenter never matches across U+200D, so ZWJ sequences
  // decompose into their components.
  bool keep_zwj_sequences_distinct = true;

  bool operator==(const NormalizationPolicy&) const = default;

  // "fold_skin_tones=true strip_vs=true keep_zwj=true"
  std::string describe() const;
};

// Removes U+FE0F (when stripping) and U+1F3FB..U+1F3FF (when folding).
// Never reorders; idempotent.
std::vector<char32_t> normalize_sequence(std::span<const char32_t> raw,
                                         const NormalizationPolicy& policy);

// True for sequences with an Extended_Pictographic code point, a regional
// indicator pair, or a keycap sequence ([0-9#*] FE0F? 20E3).
bool is_emoji_sequence(std::span<const char32_t> cps);

class EmojiSequence {
 public:
  EmojiSequence() = default;
  explicit EmojiSequence(std::vector<char32_t> cps) : cps_(std::move(cps)) {}

  // Parses "1F44D 1F3FD" (optionally "U+" prefixed). Throws ArgumentError.
  static EmojiSequence from_hex(std::string_view hex);

  std::span<const char32_t> code_points() const noexcept { return cps_; }
  std::size_t size() const noexcept { return cps_.size(); }
  bool empty() const noexcept { return cps_.empty(); }

  std::string to_hex() const;   // "1F44D 1F3FD"
  std::string to_utf8() const;

  auto operator<=>(const EmojiSequence&) const = default;
  bool operator==(const EmojiSequence&) const = default;

 private:
  std::vector<char32_t> cps_;
};

// Index of an entry in its lexicon.
struct EmojiId {
  std::uint32_t value = 0;
  auto operator<=>(const EmojiId&) const = default;
};

struct EmojiEntry {
  EmojiSequence sequence;  // canonical under the lexicon policy
  std::string name;
  std::vector<std::string> keywords;
  std::optional<std::string> group;
};

class EmojiLexicon {
 public:
  static constexpr std::uint32_t kTrieRoot = 0;

  explicit EmojiLexicon(NormalizationPolicy policy = {});

  // Canonicalizes every entry under `policy`. Throws ArgumentError on an entry
  // that is not an emoji sequence and ConflictError on duplicate canonical forms.
  static EmojiLexicon from_entries(std::vector<EmojiEntry> entries, NormalizationPolicy policy);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const NormalizationPolicy& policy() const noexcept { return policy_; }
  const std::vector<EmojiEntry>& entries() const noexcept { return entries_; }
  const EmojiEntry& entry(EmojiId id) const { return entries_.at(id.value); }
  const EmojiSequence& sequence(EmojiId id) const { return entry(id).sequence; }
  bool contains(EmojiId id) const noexcept { return id.value < entries_.size(); }

  // Lookup by canonical sequence.
  std::optional<EmojiId> find(std::span<const char32_t> canonical) const;
  std::optional<EmojiId> find(const EmojiSequence& canonical) const { return find(canonical.code_points()); }

  std::size_t max_sequence_length() const noexcept { return max_length_; }

  // Hex SHA-256 over policy and canonical sequences, in order.
  const std::string& fingerprint() const noexcept { return fingerprint_; }

  // Prefix trie over canonical sequences.
  std::optional<std::uint32_t> trie_step(std::uint32_t node, char32_t cp) const;
  std::optional<EmojiId> trie_terminal(std::uint32_t node) const;

  // Orders ids by their canonical sequences.
  bool sequence_less(EmojiId a, EmojiId b) const { return sequence(a) < sequence(b); }

 private:
  struct TrieNode {
    std::vector<std::pair<char32_t, std::uint32_t>> children;  // sorted by code point
    std::int64_t terminal = -1;
  };

  void add(EmojiEntry entry, std::size_t source_line);
  void finalize();

  NormalizationPolicy policy_;
  std::vector<EmojiEntry> entries_;
  std::vector<std::size_t> source_lines_;
  std::vector<TrieNode> trie_;
  std::size_t max_length_ = 0;
  std::string fingerprint_;

  friend EmojiLexicon load_emoji_lexicon(std::istream&, std::optional<NormalizationPolicy>);
};

// Reads the lexicon TSV:
//   #policy fold_skin_tones=<bool> strip_vs=<bool> [keep_zwj=<bool>]
//   <hex code points>\t<name>\t<comma-separated keywords>[\t<group>]
// `override_policy`, when given, replaces the header policy.
EmojiLexicon load_emoji_lexicon(std::istream& in,
                                std::optional<NormalizationPolicy> override_policy = std::nullopt);
EmojiLexicon load_emoji_lexicon_file(const std::filesystem::path& path,
                                     std::optional<NormalizationPolicy> override_policy = std::nullopt);

}  // namespace emojiprof
