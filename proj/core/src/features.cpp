#include "emojiprof/features.hpp"

#include <algorithm>

#include "emojiprof/hash.hpp"
#include "json.hpp"

namespace emojiprof {

std::vector<std::string> feature_columns(const EmojiLexicon& lexicon) {
  std::vector<std::string> cols = {
      "emoji_msg_frac",       "emoji_count_mean",     "emoji_count_max",
      "emoji_count_median",   "prop_emoji_only",      "prop_single_emoji_in_text",
      "prop_multi_nonconsecutive", "prop_multi_consecutive", "prop_repeating",
  };
  cols.reserve(feature_dimension(lexicon));
  for (const auto& e : lexicon.entries()) cols.push_back("pref:" + e.sequence.to_hex());
  for (const char* name : {"sent_positive_share", "sent_negative_share", "sent_msgs_with_positive",
                           "sent_msgs_with_negative", "sent_msgs_with_both"}) {
    cols.emplace_back(name);
  }
  return cols;
}

std::vector<double> build_features(const UserAggregate& user, const EmojiLexicon& lexicon,
                                   std::span<const SentimentLabel> labels) {
  if (user.lexicon_fingerprint != lexicon.fingerprint()) {
    throw ConsistencyError("user " + user.user_id + " was aggregated with a different lexicon");
  }
  if (labels.size() != lexicon.size()) throw ArgumentError("sentiment labels do not match the lexicon");
  std::vector<double> v(feature_dimension(lexicon), 0.0);
  for (const auto& [e, c] : user.per_emoji_counts) {
    if (!lexicon.contains(e)) throw ConsistencyError("user " + user.user_id + " uses an emoji outside the lexicon");
  }
  if (user.emoji_msg_count == 0) return v;

  const double emsgs = static_cast<double>(user.emoji_msg_count);
  const auto& h = user.emoji_counts_per_emoji_msg;
  const auto& p = user.pattern_counts;
  v[0] = emsgs / static_cast<double>(user.msg_count);
  v[1] = h.mean();
  v[2] = static_cast<double>(h.max());
  v[3] = h.median();
  v[4] = static_cast<double>(p.emoji_only) / emsgs;
  v[5] = static_cast<double>(p.single_emoji_in_text) / emsgs;
  v[6] = static_cast<double>(p.multi_nonconsecutive) / emsgs;
  v[7] = static_cast<double>(p.multi_consecutive) / emsgs;
  v[8] = static_cast<double>(p.repeating) / emsgs;

  const double tokens = static_cast<double>(user.emoji_token_count());
  std::uint64_t pos_tokens = 0, neg_tokens = 0;
  for (const auto& [e, c] : user.per_emoji_counts) {
    v[kFrequencyFeatures + e.value] = static_cast<double>(c) / tokens;
    if (labels[e.value] == SentimentLabel::Positive) pos_tokens += c;
    if (labels[e.value] == SentimentLabel::Negative) neg_tokens += c;
  }
  std::uint64_t with_pos = 0, with_neg = 0, with_both = 0;
  for (const auto& [set, times] : user.emoji_set_counts) {
    bool pos = false, neg = false;
    for (auto e : set) {
      pos = pos || labels[e.value] == SentimentLabel::Positive;
      neg = neg || labels[e.value] == SentimentLabel::Negative;
    }
    if (pos) with_pos += times;
    if (neg) with_neg += times;
    if (pos && neg) with_both += times;
  }
  const std::size_t s = kFrequencyFeatures + lexicon.size();
  v[s + 0] = static_cast<double>(pos_tokens) / tokens;
  v[s + 1] = static_cast<double>(neg_tokens) / tokens;
  v[s + 2] = static_cast<double>(with_pos) / emsgs;
  v[s + 3] = static_cast<double>(with_neg) / emsgs;
  v[s + 4] = static_cast<double>(with_both) / emsgs;
  return v;
}

std::string FeatureManifest::fingerprint() const {
  std::string blob = kind;
  blob.push_back('\n');
  blob += lexicon_fingerprint;
  for (const auto& c : columns) {
    blob.push_back('\n');
    blob += c;
  }
  return sha256_hex(blob);
}

std::string FeatureManifest::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["fingerprint"] = fingerprint();
  j["lexicon_fingerprint"] = lexicon_fingerprint;
  j["policy"] = policy;
  j["columns"] = columns;
  return j.dump(1);
}

FeatureManifest FeatureManifest::from_json(std::string_view text) {
  auto j = nlohmann::json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw FormatError("feature manifest is not a JSON object");
  FeatureManifest m;
  try {
    m.kind = j.at("kind").get<std::string>();
    m.columns = j.at("columns").get<std::vector<std::string>>();
    m.lexicon_fingerprint = j.value("lexicon_fingerprint", std::string());
    m.policy = j.value("policy", std::string());
    if (j.contains("fingerprint") && j.at("fingerprint").get<std::string>() != m.fingerprint()) {
      throw ConsistencyError("feature manifest fingerprint does not match its columns");
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed feature manifest: ") + e.what());
  }
  if (m.kind != "emoji" && m.kind != "unigram") throw FormatError("unknown feature kind '" + m.kind + "'");
  return m;
}

LabeledMatrix LabeledMatrix::select_rows(std::span<const std::size_t> indices) const {
  LabeledMatrix out;
  out.x = x.select_rows(indices);
  out.manifest = manifest;
  for (auto i : indices) {
    out.y.push_back(y.at(i));
    out.row_ids.push_back(row_ids.at(i));
    out.emoji_msg_counts.push_back(emoji_msg_counts.at(i));
  }
  return out;
}

LabeledMatrix LabeledMatrix::bucket(std::uint64_t min_inclusive, std::uint64_t max_exclusive) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < rows(); ++i) {
    if (emoji_msg_counts[i] >= min_inclusive && emoji_msg_counts[i] < max_exclusive) idx.push_back(i);
  }
  return select_rows(idx);
}

LabeledMatrix feature_matrix(std::span<const UserAggregate> users, const EmojiLexicon& lexicon,
                             std::span<const SentimentLabel> labels) {
  std::vector<const UserAggregate*> order;
  order.reserve(users.size());
  for (const auto& u : users) {
    if (!u.labeled()) throw ArgumentError("user " + u.user_id + " has no gender label");
    order.push_back(&u);
  }
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->user_id < b->user_id; });
  LabeledMatrix m;
  m.manifest = {"emoji", feature_columns(lexicon), lexicon.fingerprint(), lexicon.policy().describe()};
  m.x = Matrix(0, m.manifest.columns.size());
  for (const auto* u : order) {
    m.x.append_row(build_features(*u, lexicon, labels));
    m.y.push_back(label_code(*u->gender));
    m.row_ids.push_back(u->user_id);
    m.emoji_msg_counts.push_back(u->emoji_msg_count);
  }
  return m;
}

}  // namespace emojiprof
