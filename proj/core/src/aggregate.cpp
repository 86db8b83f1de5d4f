#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "emojiprof/corpus.hpp"
#include "emojiprof/error.hpp"

namespace emojiprof {
namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void merge_label(UserAggregate& into, std::optional<Gender> g, bool conflict) {
  if (into.gender_conflict) return;
  if (conflict) {
    into.gender_conflict = true;
    into.gender.reset();
    return;
  }
  if (!g) return;
  if (!into.gender) {
    into.gender = g;
  } else if (*into.gender != *g) {
    into.gender_conflict = true;
    into.gender.reset();
  }
}

std::vector<UserAggregate> aggregate_shard(const Corpus& corpus, std::span<const std::size_t> indices,
                                           const EmojiLexicon& lexicon, const NormalizationPolicy& policy) {
  std::unordered_map<std::string_view, std::size_t> slot;
  std::vector<UserAggregate> users;
  for (std::size_t idx : indices) {
    const Message& m = corpus.messages[idx];
    auto [it, inserted] = slot.emplace(m.user_id, users.size());
    if (inserted) {
      users.emplace_back();
      users.back().user_id = m.user_id;
      users.back().lexicon_fingerprint = lexicon.fingerprint();
    }
    const auto tokens = tokenize(m.text, lexicon, policy);
    users[it->second].add_message(m.gender, m.lang, tokens);
  }
  return users;
}

}  // namespace

std::string UserAggregate::lang() const {
  std::string best;
  std::uint64_t best_count = 0;
  for (const auto& [tag, n] : lang_counts) {
    if (n > best_count) {
      best = tag;
      best_count = n;
    }
  }
  return best;
}

std::uint64_t UserAggregate::emoji_token_count() const {
  std::uint64_t n = 0;
  for (const auto& [id, c] : per_emoji_counts) n += c;
  return n;
}

void UserAggregate::add_message(std::optional<Gender> message_gender, const std::optional<std::string>& lang_tag,
                                std::span<const Token> tokens) {
  merge_label(*this, message_gender, false);
  if (lang_tag && !lang_tag->empty()) ++lang_counts[*lang_tag];
  ++msg_count;
  const MessagePatternFlags flags = classify_patterns(tokens);
  if (flags.emoji_count == 0) return;
  ++emoji_msg_count;
  pattern_counts.add(flags);
  emoji_counts_per_emoji_msg.add(flags.emoji_count);
  std::vector<EmojiId> distinct;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::Emoji) continue;
    ++per_emoji_counts[t.emoji];
    distinct.push_back(t.emoji);
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  ++emoji_set_counts[distinct];
}

void UserAggregate::merge(const UserAggregate& other) {
  if (other.user_id != user_id) throw ArgumentError("cannot merge aggregates of different users");
  if (other.lexicon_fingerprint != lexicon_fingerprint) {
    throw ConsistencyError("aggregates of user '" + user_id + "' were built with different lexicons");
  }
  merge_label(*this, other.gender, other.gender_conflict);
  for (const auto& [tag, n] : other.lang_counts) lang_counts[tag] += n;
  msg_count += other.msg_count;
  emoji_msg_count += other.emoji_msg_count;
  for (const auto& [id, n] : other.per_emoji_counts) per_emoji_counts[id] += n;
  pattern_counts.merge(other.pattern_counts);
  emoji_counts_per_emoji_msg.merge(other.emoji_counts_per_emoji_msg);
  for (const auto& [set, n] : other.emoji_set_counts) emoji_set_counts[set] += n;
}

std::vector<UserAggregate> aggregate(const Corpus& corpus, const EmojiLexicon& lexicon,
                                     const NormalizationPolicy& policy, const AggregateOptions& options) {
  const unsigned shards = std::max(1u, options.threads);
  std::vector<std::vector<std::size_t>> shard_indices(shards);
  for (std::size_t i = 0; i < corpus.messages.size(); ++i) {
    shard_indices[fnv1a(corpus.messages[i].user_id) % shards].push_back(i);
  }
  std::vector<std::vector<UserAggregate>> partial(shards);
  if (shards == 1) {
    partial[0] = aggregate_shard(corpus, shard_indices[0], lexicon, policy);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(shards);
    for (unsigned s = 0; s < shards; ++s) {
      workers.emplace_back([&, s] { partial[s] = aggregate_shard(corpus, shard_indices[s], lexicon, policy); });
    }
    for (auto& w : workers) w.join();
  }
  std::vector<UserAggregate> users;
  for (auto& p : partial) {
    for (auto& u : p) users.push_back(std::move(u));
  }
  std::sort(users.begin(), users.end(),
            [](const UserAggregate& a, const UserAggregate& b) { return a.user_id < b.user_id; });
  return users;
}

std::vector<UserAggregate> merge_aggregates(std::span<const UserAggregate> a, std::span<const UserAggregate> b) {
  std::vector<UserAggregate> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].user_id < b[j].user_id)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].user_id < a[i].user_id) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i++]);
      out.back().merge(b[j++]);
    }
  }
  return out;
}

std::vector<UserAggregate> filter_by_emoji_msgs(std::span<const UserAggregate> users, std::uint64_t min_inclusive,
                                                std::optional<std::uint64_t> max_exclusive) {
  if (max_exclusive && *max_exclusive <= min_inclusive) {
    throw ArgumentError("emoji-message bucket upper bound must exceed the lower bound");
  }
  std::vector<UserAggregate> out;
  for (const auto& u : users) {
    if (u.emoji_msg_count < min_inclusive) continue;
    if (max_exclusive && u.emoji_msg_count >= *max_exclusive) continue;
    out.push_back(u);
  }
  return out;
}

std::vector<UserAggregate> labeled_only(std::span<const UserAggregate> users) {
  std::vector<UserAggregate> out;
  for (const auto& u : users) {
    if (u.labeled()) out.push_back(u);
  }
  return out;
}

SplitIndices split_indices(std::size_t n, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) throw ArgumentError("train fraction must lie in (0, 1)");
  if (n == 0) throw ArgumentError("cannot split an empty user list");
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(seed);
  rng.shuffle(order.begin(), order.end());
  const auto n_train = static_cast<std::size_t>(std::floor(static_cast<double>(n) * train_fraction));
  SplitIndices out;
  out.train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
  out.test.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train), order.end());
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

}  // namespace emojiprof
