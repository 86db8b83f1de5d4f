#include "emojiprof/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "emojiprof/error.hpp"
#include "emojiprof/hash.hpp"
#include "emojiprof/unicode.hpp"
#include "text_util.hpp"

namespace emojiprof {

std::string NormalizationPolicy::describe() const {
  auto b = [](bool v) { return v ? "true" : "false"; };
  return std::string("fold_skin_tones=") + b(fold_skin_tones) + " strip_vs=" +
         b(strip_variation_selectors) + " keep_zwj=" + b(keep_zwj_sequences_distinct);
}

std::vector<char32_t> normalize_sequence(std::span<const char32_t> raw,
                                         const NormalizationPolicy& policy) {
  std::vector<char32_t> out;
  out.reserve(raw.size());
  for (char32_t cp : raw) {
    if (policy.strip_variation_selectors && cp == unicode::kVariationSelector16) continue;
    if (policy.fold_skin_tones && unicode::is_skin_tone_modifier(cp)) continue;
    out.push_back(cp);
  }
  return out;
}

bool is_emoji_sequence(std::span<const char32_t> cps) {
  if (cps.empty()) return false;
  if (std::any_of(cps.begin(), cps.end(), unicode::is_extended_pictographic)) return true;
  if (cps.size() == 2 && unicode::is_regional_indicator(cps[0]) &&
      unicode::is_regional_indicator(cps[1])) {
    return true;
  }
  if (unicode::is_keycap_base(cps[0])) {
    if (cps.size() == 2 && cps[1] == unicode::kCombiningKeycap) return true;
    if (cps.size() == 3 && cps[1] == unicode::kVariationSelector16 &&
        cps[2] == unicode::kCombiningKeycap) {
      return true;
    }
  }
  return false;
}

EmojiSequence EmojiSequence::from_hex(std::string_view hex) {
  std::vector<char32_t> cps;
  for (std::string_view tok : detail::split_any(hex, " ,")) {
    if (tok.empty()) continue;
    if (tok.size() > 2 && (tok[0] == 'U' || tok[0] == 'u') && tok[1] == '+') tok.remove_prefix(2);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value, 16);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value > 0x10FFFF ||
        (value >= 0xD800 && value <= 0xDFFF)) {
      throw ArgumentError("invalid code point '" + std::string(tok) + "'");
    }
    cps.push_back(static_cast<char32_t>(value));
  }
  if (cps.empty()) throw ArgumentError("empty code point sequence");
  return EmojiSequence(std::move(cps));
}

std::string EmojiSequence::to_hex() const {
  std::string out;
  char buf[16];
  for (std::size_t i = 0; i < cps_.size(); ++i) {
    if (i) out.push_back(' ');
    std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(cps_[i]));
    out += buf;
  }
  return out;
}

std::string EmojiSequence::to_utf8() const { return unicode::to_utf8(cps_); }

EmojiLexicon::EmojiLexicon(NormalizationPolicy policy) : policy_(policy) { finalize(); }

void EmojiLexicon::add(EmojiEntry entry, std::size_t source_line) {
  entry.sequence = EmojiSequence(normalize_sequence(entry.sequence.code_points(), policy_));
  if (!is_emoji_sequence(entry.sequence.code_points())) {
    throw ParseError(source_line, "not an emoji sequence: " + entry.sequence.to_hex());
  }
  entries_.push_back(std::move(entry));
  source_lines_.push_back(source_line);
}

void EmojiLexicon::finalize() {
  trie_.assign(1, TrieNode{});
  max_length_ = 0;
  std::map<std::vector<char32_t>, std::size_t> seen;
  std::string fp = policy_.describe() + "\n";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto cps = entries_[i].sequence.code_points();
    auto [it, inserted] = seen.emplace(std::vector<char32_t>(cps.begin(), cps.end()), i);
    if (!inserted) {
      const std::size_t j = it->second;
      throw ConflictError("duplicate canonical sequence " + entries_[i].sequence.to_hex() +
                          ": row " + std::to_string(source_lines_[j]) + " ('" + entries_[j].name +
                          "') and row " + std::to_string(source_lines_[i]) + " ('" +
                          entries_[i].name + "')");
    }
    std::uint32_t node = kTrieRoot;
    for (char32_t cp : cps) {
      auto& children = trie_[node].children;
      auto pos = std::lower_bound(children.begin(), children.end(), cp,
                                  [](const auto& c, char32_t v) { return c.first < v; });
      if (pos != children.end() && pos->first == cp) {
        node = pos->second;
      } else {
        const auto next = static_cast<std::uint32_t>(trie_.size());
        children.insert(pos, {cp, next});
        trie_.emplace_back();
        node = next;
      }
    }
    trie_[node].terminal = static_cast<std::int64_t>(i);
    max_length_ = std::max(max_length_, cps.size());
    fp += entries_[i].sequence.to_hex();
    fp += '\n';
  }
  fingerprint_ = sha256_hex(fp);
}

EmojiLexicon EmojiLexicon::from_entries(std::vector<EmojiEntry> entries, NormalizationPolicy policy) {
  EmojiLexicon lex(policy);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    try {
      lex.add(std::move(entries[i]), i + 1);
    } catch (const ParseError& e) {
      throw ArgumentError(std::string("entry ") + std::to_string(i + 1) + ": " + e.what());
    }
  }
  lex.finalize();
  return lex;
}

std::optional<EmojiId> EmojiLexicon::find(std::span<const char32_t> canonical) const {
  std::uint32_t node = kTrieRoot;
  for (char32_t cp : canonical) {
    auto next = trie_step(node, cp);
    if (!next) return std::nullopt;
    node = *next;
  }
  return trie_terminal(node);
}

std::optional<std::uint32_t> EmojiLexicon::trie_step(std::uint32_t node, char32_t cp) const {
  const auto& children = trie_[node].children;
  auto pos = std::lower_bound(children.begin(), children.end(), cp,
                              [](const auto& c, char32_t v) { return c.first < v; });
  if (pos == children.end() || pos->first != cp) return std::nullopt;
  return pos->second;
}

std::optional<EmojiId> EmojiLexicon::trie_terminal(std::uint32_t node) const {
  const auto t = trie_[node].terminal;
  if (t < 0) return std::nullopt;
  return EmojiId{static_cast<std::uint32_t>(t)};
}

namespace {

bool parse_bool(std::string_view v, std::size_t line) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ParseError(line, "invalid boolean '" + std::string(v) + "'");
}

NormalizationPolicy parse_policy_header(std::string_view header, std::size_t line) {
  NormalizationPolicy policy;
  header.remove_prefix(std::string_view("#policy").size());
  for (std::string_view kv : detail::split_any(header, " \t")) {
    if (kv.empty()) continue;
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos) throw ParseError(line, "malformed policy field '" + std::string(kv) + "'");
    const auto key = kv.substr(0, eq);
    const bool value = parse_bool(kv.substr(eq + 1), line);
    if (key == "fold_skin_tones") {
      policy.fold_skin_tones = value;
    } else if (key == "strip_vs") {
      policy.strip_variation_selectors = value;
    } else if (key == "keep_zwj") {
      policy.keep_zwj_sequences_distinct = value;
    } else {
      throw ParseError(line, "unknown policy key '" + std::string(key) + "'");
    }
  }
  return policy;
}

}  // namespace

EmojiLexicon load_emoji_lexicon(std::istream& in, std::optional<NormalizationPolicy> override_policy) {
  std::string line;
  std::size_t line_no = 0;
  NormalizationPolicy policy;
  struct Row {
    EmojiEntry entry;
    std::size_t line;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("#policy", 0) == 0) {
      if (!rows.empty()) throw ParseError(line_no, "policy header after data rows");
      policy = parse_policy_header(line, line_no);
      continue;
    }
    if (line[0] == '#') continue;
    if (!unicode::is_valid_utf8(line)) throw ParseError(line_no, "invalid UTF-8");
    const auto fields = detail::split(line, '\t');
    if (fields.size() < 3 || fields.size() > 4) {
      throw ParseError(line_no, "expected 3 or 4 tab-separated fields, got " + std::to_string(fields.size()));
    }
    EmojiEntry entry;
    try {
      entry.sequence = EmojiSequence::from_hex(fields[0]);
    } catch (const ArgumentError& e) {
      throw ParseError(line_no, e.what());
    }
    entry.name = std::string(detail::trim(fields[1]));
    if (entry.name.empty()) throw ParseError(line_no, "empty name");
    for (std::string_view kw : detail::split(fields[2], ',')) {
      kw = detail::trim(kw);
      if (!kw.empty()) entry.keywords.push_back(detail::ascii_lower(kw));
    }
    if (fields.size() == 4 && !detail::trim(fields[3]).empty()) {
      entry.group = std::string(detail::trim(fields[3]));
    }
    rows.push_back({std::move(entry), line_no});
  }
  if (in.bad()) throw IoError("failed reading emoji lexicon");

  EmojiLexicon lex(override_policy.value_or(policy));
  for (auto& row : rows) lex.add(std::move(row.entry), row.line);
  lex.finalize();
  return lex;
}

EmojiLexicon load_emoji_lexicon_file(const std::filesystem::path& path,
                                     std::optional<NormalizationPolicy> override_policy) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open emoji lexicon '" + path.string() + "'");
  return load_emoji_lexicon(in, override_policy);
}

}  // namespace emojiprof
