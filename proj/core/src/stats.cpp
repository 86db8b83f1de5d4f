#include "emojiprof/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "emojiprof/error.hpp"

namespace emojiprof {

double emoji_msg_fraction(const UserAggregate& user) {
  if (user.msg_count == 0) throw UndefinedError("%emoji-msg is undefined for a user without messages");
  return static_cast<double>(user.emoji_msg_count) / static_cast<double>(user.msg_count);
}

std::vector<CdfStep> empirical_cdf(std::span<const double> values) {
  if (values.empty()) throw ArgumentError("empirical CDF of an empty sample");
  std::vector<double> v(values.begin(), values.end());
  for (double x : v) {
    if (!std::isfinite(x)) throw ArgumentError("empirical CDF needs finite values");
  }
  std::sort(v.begin(), v.end());
  std::vector<CdfStep> steps;
  const double n = static_cast<double>(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i + 1 < v.size() && v[i + 1] == v[i]) continue;
    steps.push_back({v[i], static_cast<double>(i + 1) / n});
  }
  steps.back().f = 1.0;
  return steps;
}

double cdf_at(std::span<const CdfStep> cdf, double x) {
  auto it = std::upper_bound(cdf.begin(), cdf.end(), x, [](double v, const CdfStep& s) { return v < s.x; });
  return it == cdf.begin() ? 0.0 : std::prev(it)->f;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

ZTest two_proportion_ztest(std::uint64_t k1, std::uint64_t n1, std::uint64_t k2, std::uint64_t n2) {
  if (n1 == 0 || n2 == 0) throw ArgumentError("z-test needs non-empty samples");
  if (k1 > n1 || k2 > n2) throw ArgumentError("z-test counts exceed sample sizes");
  const double N1 = static_cast<double>(n1), N2 = static_cast<double>(n2);
  const auto pooled_k = k1 + k2;
  if (pooled_k == 0 || pooled_k == n1 + n2) {
    throw DegenerateError("z-test is undefined when the pooled proportion is 0 or 1");
  }
  const double p = static_cast<double>(pooled_k) / (N1 + N2);
  const double se = std::sqrt(p * (1.0 - p) * (1.0 / N1 + 1.0 / N2));
  const double z = (static_cast<double>(k1) / N1 - static_cast<double>(k2) / N2) / se;
  // 2 (1 - Phi(|z|)) = erfc(|z| / sqrt 2), without cancellation in the tail.
  const double pv = std::erfc(std::fabs(z) / std::sqrt(2.0));
  return {z, std::min(1.0, pv)};
}

std::vector<double> bonferroni(std::span<const double> p_values) {
  const double m = static_cast<double>(p_values.size());
  std::vector<double> out;
  out.reserve(p_values.size());
  for (double p : p_values) {
    if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("p-value outside [0, 1]");
    out.push_back(std::min(1.0, m * p));
  }
  return out;
}

UsageContingency usage_contingency(std::span<const UserAggregate> users, EmojiId e) {
  UsageContingency t;
  for (const auto& u : users) {
    const auto g = u.label();
    if (!g) continue;
    const bool uses = u.per_emoji_counts.contains(e);
    if (*g == Gender::Female) {
      ++(uses ? t.use_female : t.no_female);
    } else {
      ++(uses ? t.use_male : t.no_male);
    }
  }
  return t;
}

double mutual_information(const UsageContingency& t) {
  const std::uint64_t females = t.use_female + t.no_female;
  const std::uint64_t males = t.use_male + t.no_male;
  if (females == 0 || males == 0) throw ArgumentError("mutual information needs users of both genders");
  const double n = static_cast<double>(t.total());
  const std::uint64_t users = t.use_female + t.use_male;
  const std::uint64_t non_users = t.no_female + t.no_male;
  auto term = [n](std::uint64_t nxy, std::uint64_t nx, std::uint64_t ny) {
    if (nxy == 0) return 0.0;
    // p(x,y)/(p(x)p(y)) = nxy N / (nx ny); exactly 1 under empirical independence.
    const double ratio = (static_cast<double>(nxy) * n) / (static_cast<double>(nx) * static_cast<double>(ny));
    return static_cast<double>(nxy) / n * std::log(ratio);
  };
  std::array<double, 4> terms{term(t.use_female, users, females), term(t.use_male, users, males),
                              term(t.no_female, non_users, females), term(t.no_male, non_users, males)};
  std::sort(terms.begin(), terms.end());
  double mi = (terms[0] + terms[1]) + (terms[2] + terms[3]);
  if (mi < 0.0 && mi > -1e-15) mi = 0.0;
  return mi;
}

double mutual_information(std::span<const UserAggregate> users, EmojiId e) {
  return mutual_information(usage_contingency(users, e));
}

GenderProb conditional_gender_prob(const UsageContingency& t) {
  const auto n = t.use_female + t.use_male;
  if (n == 0) throw UndefinedError("no labeled user used this emoji");
  const double pf = static_cast<double>(t.use_female) / static_cast<double>(n);
  return {1.0 - pf, pf};
}

GenderProb conditional_gender_prob(std::span<const UserAggregate> users, EmojiId e) {
  return conditional_gender_prob(usage_contingency(users, e));
}

std::string_view to_string(GenderTag tag) noexcept {
  return tag == GenderTag::MaleEmoji ? "male" : "female";
}

double male_user_share(std::span<const UserAggregate> users) {
  std::uint64_t males = 0, labeled = 0;
  for (const auto& u : users) {
    if (!u.labeled()) continue;
    ++labeled;
    if (*u.gender == Gender::Male) ++males;
  }
  if (labeled == 0) throw ArgumentError("no gendered users");
  return static_cast<double>(males) / static_cast<double>(labeled);
}

std::vector<DiscriminativeEmojiRow> rank_discriminative(std::span<const UserAggregate> users,
                                                        const EmojiLexicon& lexicon,
                                                        std::optional<double> male_threshold) {
  std::uint64_t females = 0, males = 0;
  std::map<EmojiId, std::pair<std::uint64_t, std::uint64_t>> use;  // (female, male)
  for (const auto& u : users) {
    const auto g = u.label();
    if (!g) continue;
    (*g == Gender::Female ? females : males) += 1;
    for (const auto& [e, c] : u.per_emoji_counts) {
      auto& slot = use[e];
      (*g == Gender::Female ? slot.first : slot.second) += 1;
    }
  }
  if (females == 0 || males == 0) throw ArgumentError("ranking needs users of both genders");
  const double threshold =
      male_threshold.value_or(static_cast<double>(males) / static_cast<double>(females + males));
  if (!(threshold > 0.0 && threshold < 1.0)) throw ArgumentError("male threshold must lie in (0, 1)");

  std::vector<DiscriminativeEmojiRow> rows;
  rows.reserve(use.size());
  for (const auto& [e, c] : use) {
    if (!lexicon.contains(e)) throw ConsistencyError("aggregate refers to an emoji outside the lexicon");
    const UsageContingency t{c.first, c.second, females - c.first, males - c.second};
    const auto prob = conditional_gender_prob(t);
    rows.push_back({e, mutual_information(t), prob.p_male, prob.p_female,
                    prob.p_male > threshold ? GenderTag::MaleEmoji : GenderTag::FemaleEmoji, c.first, c.second});
  }
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    if (a.mi != b.mi) return a.mi > b.mi;
    return lexicon.sequence_less(a.emoji, b.emoji);
  });
  return rows;
}

std::uint64_t MessageCooccurrence::count(EmojiId e) const {
  auto it = marginal.find(e);
  return it == marginal.end() ? 0 : it->second;
}

std::uint64_t MessageCooccurrence::count(EmojiId a, EmojiId b) const {
  if (b < a) std::swap(a, b);
  auto it = joint.find({a, b});
  return it == joint.end() ? 0 : it->second;
}

void MessageCooccurrence::add_message(std::span<const EmojiId> distinct, std::uint64_t times) {
  n_messages += times;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    marginal[distinct[i]] += times;
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      auto a = distinct[i], b = distinct[j];
      if (b < a) std::swap(a, b);
      joint[{a, b}] += times;
    }
  }
}

MessageCooccurrence message_cooccurrence(std::span<const UserAggregate> users, std::optional<Gender> gender) {
  MessageCooccurrence out;
  for (const auto& u : users) {
    if (gender && u.label() != gender) continue;
    out.n_messages += u.msg_count - u.emoji_msg_count;
    for (const auto& [set, times] : u.emoji_set_counts) out.add_message(set, times);
  }
  return out;
}

double pmi(const MessageCooccurrence& counts, EmojiId a, EmojiId b) {
  const auto na = counts.count(a), nb = counts.count(b);
  if (na == 0 || nb == 0) throw UndefinedError("PMI is undefined for an emoji that never occurs");
  const auto nab = a == b ? na : counts.count(a, b);
  if (nab == 0) return -std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(counts.n_messages);
  return std::log((static_cast<double>(nab) * n) / (static_cast<double>(na) * static_cast<double>(nb)));
}

std::vector<UsageShare> top_emojis(std::span<const UserAggregate> users, std::optional<Gender> gender,
                                   const EmojiLexicon& lexicon, std::size_t n) {
  std::map<EmojiId, std::uint64_t> counts;
  std::uint64_t total = 0;
  for (const auto& u : users) {
    if (gender && u.label() != gender) continue;
    for (const auto& [e, c] : u.per_emoji_counts) {
      counts[e] += c;
      total += c;
    }
  }
  if (total == 0) throw ArgumentError("no emoji tokens in the selected population");
  std::vector<UsageShare> out;
  out.reserve(counts.size());
  for (const auto& [e, c] : counts) out.push_back({e, c, static_cast<double>(c) / static_cast<double>(total)});
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (a.count != b.count) return a.count > b.count;
    return lexicon.sequence_less(a.emoji, b.emoji);
  });
  if (n > 0 && out.size() > n) out.resize(n);
  return out;
}

GenderSplitStat gender_split(std::string name, std::uint64_t female_count, std::uint64_t female_total,
                             std::uint64_t male_count, std::uint64_t male_total) {
  if (female_total == 0 || male_total == 0) throw ArgumentError("empty gender population for " + name);
  GenderSplitStat s;
  s.name = std::move(name);
  s.female_count = female_count;
  s.female_total = female_total;
  s.male_count = male_count;
  s.male_total = male_total;
  s.female_value = static_cast<double>(female_count) / static_cast<double>(female_total);
  s.male_value = static_cast<double>(male_count) / static_cast<double>(male_total);
  const auto pooled = female_count + male_count;
  if (pooled == 0 || pooled == female_total + male_total) {
    s.z = 0.0;  // both proportions are 0 or both are 1
    s.p_raw = 1.0;
  } else {
    const auto t = two_proportion_ztest(female_count, female_total, male_count, male_total);
    s.z = t.z;
    s.p_raw = t.p_two_sided;
  }
  s.p_adjusted = s.p_raw;
  return s;
}

void adjust_batch(std::span<GenderSplitStat> stats) {
  std::vector<double> raw;
  for (const auto& s : stats) raw.push_back(s.p_raw);
  const auto adj = bonferroni(raw);
  for (std::size_t i = 0; i < stats.size(); ++i) stats[i].p_adjusted = adj[i];
}

GenderSplitStat popularity_stat(std::span<const UserAggregate> users) {
  std::uint64_t fk = 0, fn = 0, mk = 0, mn = 0;
  for (const auto& u : users) {
    const auto g = u.label();
    if (!g) continue;
    if (*g == Gender::Female) {
      fk += u.emoji_msg_count;
      fn += u.msg_count;
    } else {
      mk += u.emoji_msg_count;
      mn += u.msg_count;
    }
  }
  return gender_split("emoji_msg", fk, fn, mk, mn);
}

std::string SentimentClass::name() const {
  switch (kind) {
    case Kind::Positive: return "positive";
    case Kind::Negative: return "negative";
    case Kind::Group: break;
  }
  return group;
}

bool SentimentClass::matches(const EmojiEntry& entry, SentimentLabel label) const {
  switch (kind) {
    case Kind::Positive: return label == SentimentLabel::Positive;
    case Kind::Negative: return label == SentimentLabel::Negative;
    case Kind::Group: break;
  }
  return entry.group == group;
}

std::vector<GenderSplitStat> sentiment_usage_stats(std::span<const UserAggregate> users,
                                                   const EmojiLexicon& lexicon,
                                                   std::span<const SentimentLabel> labels,
                                                   std::span<const SentimentClass> classes) {
  if (labels.size() != lexicon.size()) throw ArgumentError("sentiment labels do not match the lexicon");
  std::vector<std::uint64_t> female(lexicon.size()), male(lexicon.size());
  std::uint64_t female_total = 0, male_total = 0;
  for (const auto& u : users) {
    const auto g = u.label();
    if (!g) continue;
    auto& dst = *g == Gender::Female ? female : male;
    auto& total = *g == Gender::Female ? female_total : male_total;
    for (const auto& [e, c] : u.per_emoji_counts) {
      if (!lexicon.contains(e)) throw ConsistencyError("aggregate refers to an emoji outside the lexicon");
      dst[e.value] += c;
      total += c;
    }
  }
  std::vector<GenderSplitStat> out;
  for (const auto& cls : classes) {
    std::uint64_t fk = 0, mk = 0;
    for (std::size_t i = 0; i < lexicon.size(); ++i) {
      if (!cls.matches(lexicon.entries()[i], labels[i])) continue;
      fk += female[i];
      mk += male[i];
    }
    out.push_back(gender_split(cls.name(), fk, female_total, mk, male_total));
  }
  adjust_batch(out);
  return out;
}

}  // namespace emojiprof
