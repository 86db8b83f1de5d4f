#include "emojiprof/synthetic.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "emojiprof/error.hpp"
#include "emojiprof/rng.hpp"
#include "json.hpp"

namespace emojiprof {
namespace {

using nlohmann::json;

constexpr std::string_view kWords[] = {
    "ok",    "see",   "you",   "later", "what",  "time",  "is",    "it",    "now",   "going",
    "home",  "call",  "me",    "when",  "can",   "we",    "meet",  "today", "sure",  "thanks",
    "lol",   "yes",   "no",    "maybe", "tomorrow", "work", "done", "where", "are",   "the",
    "movie", "food",  "game",  "ready", "wait",  "just",  "got",   "here",  "love",  "that",
    "good",  "night", "morning", "so",  "much",  "fun",   "really", "nice", "again", "soon",
};

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(std::string(what) + " must lie in [0, 1]");
}

void check_distribution(const std::vector<PreferenceWeight>& dist, const char* gender, bool required) {
  if (dist.empty()) {
    if (required) throw ConfigError(std::string("preference distribution for ") + gender + " is empty");
    return;
  }
  double total = 0.0;
  for (const auto& w : dist) {
    if (!std::isfinite(w.probability) || w.probability < 0.0) {
      throw ConfigError(std::string("negative or non-finite preference weight for ") + gender);
    }
    if (!is_emoji_sequence(w.emoji.code_points())) {
      throw ConfigError("preference entry " + w.emoji.to_hex() + " is not an emoji sequence");
    }
    total += w.probability;
  }
  if (std::fabs(total - 1.0) > 1e-9) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", total);
    throw ConfigError(std::string("preference distribution for ") + gender + " sums to " + buf + ", not 1");
  }
}

std::vector<double> cumulative(const std::vector<PreferenceWeight>& dist) {
  std::vector<double> c;
  c.reserve(dist.size());
  double acc = 0.0;
  for (const auto& w : dist) {
    acc += w.probability;
    c.push_back(acc);
  }
  return c;
}

struct GenderPlan {
  Gender gender;
  std::uint32_t users;
  double rate;
  const std::vector<PreferenceWeight>* dist;
  char prefix;
};

std::string make_message(const SyntheticConfig& cfg, const GenderPlan& plan,
                         const std::vector<std::string>& encoded, const std::vector<double>& cum, Rng& rng) {
  const bool with_emoji = plan.rate > 0.0 && rng.bernoulli(plan.rate);
  std::vector<std::string_view> words;
  const auto n_words = static_cast<std::size_t>(rng.between(1, 8));
  const auto vocab = std::size(kWords);

  if (!with_emoji) {
    std::string text;
    for (std::size_t i = 0; i < n_words; ++i) {
      if (i) text.push_back(' ');
      text += kWords[rng.below(vocab)];
    }
    return text;
  }

  std::uint32_t k = 1;
  while (k < cfg.max_emojis_per_message && rng.bernoulli(cfg.continue_probability)) ++k;
  std::vector<std::size_t> emojis;
  emojis.push_back(rng.categorical(cum));
  for (std::uint32_t i = 1; i < k; ++i) {
    emojis.push_back(rng.bernoulli(cfg.repeat_probability) ? emojis.back() : rng.categorical(cum));
  }

  if (rng.bernoulli(cfg.emoji_only_probability)) {
    std::string text;
    for (auto e : emojis) text += encoded[e];
    return text;
  }

  for (std::size_t i = 0; i < n_words; ++i) words.push_back(kWords[rng.below(vocab)]);
  // slot[i] holds the emojis placed before word i; slot[n_words] trails the text.
  std::vector<std::string> slots(n_words + 1);
  if (rng.bernoulli(cfg.run_probability)) {
    auto& slot = slots[rng.below(n_words + 1)];
    for (auto e : emojis) slot += encoded[e];
  } else {
    for (auto e : emojis) slots[rng.below(n_words + 1)] += encoded[e];
  }
  std::string text;
  for (std::size_t i = 0; i <= n_words; ++i) {
    if (!slots[i].empty()) {
      if (!text.empty()) text.push_back(' ');
      text += slots[i];
    }
    if (i < n_words) {
      if (!text.empty()) text.push_back(' ');
      text += words[i];
    }
  }
  return text;
}

}  // namespace

void SyntheticConfig::validate() const {
  if (min_messages > max_messages) throw ConfigError("min_messages exceeds max_messages");
  if (n_female + n_male > 0 && min_messages == 0 && max_messages == 0) {
    throw ConfigError("users need at least one message");
  }
  check_probability(female_emoji_rate, "female emoji rate");
  check_probability(male_emoji_rate, "male emoji rate");
  check_probability(continue_probability, "continue_probability");
  check_probability(repeat_probability, "repeat_probability");
  check_probability(emoji_only_probability, "emoji_only_probability");
  check_probability(run_probability, "run_probability");
  if (max_emojis_per_message == 0) throw ConfigError("max_emojis_per_message must be positive");
  if (languages.empty()) throw ConfigError("at least one language tag is required");
  if (timestamp_span <= 0) throw ConfigError("timestamp_span must be positive");
  check_distribution(female_preference, "F", n_female > 0 && female_emoji_rate > 0.0);
  check_distribution(male_preference, "M", n_male > 0 && male_emoji_rate > 0.0);
}

SyntheticConfig SyntheticConfig::from_json(std::string_view text) {
  json j = json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ConfigError("synthetic config is not a JSON object");
  SyntheticConfig c;
  try {
    c.n_female = j.value("n_female", c.n_female);
    c.n_male = j.value("n_male", c.n_male);
    if (j.contains("messages_per_user")) {
      const auto& r = j.at("messages_per_user");
      if (!r.is_array() || r.size() != 2) throw ConfigError("messages_per_user must be [min, max]");
      c.min_messages = r[0].get<std::uint32_t>();
      c.max_messages = r[1].get<std::uint32_t>();
    }
    if (j.contains("emoji_rate")) {
      c.female_emoji_rate = j.at("emoji_rate").value("F", 0.0);
      c.male_emoji_rate = j.at("emoji_rate").value("M", 0.0);
    }
    if (j.contains("preference")) {
      auto read = [&](const char* key, std::vector<PreferenceWeight>& dst) {
        const auto& p = j.at("preference");
        if (!p.contains(key)) return;
        for (const auto& pair : p.at(key)) {
          if (!pair.is_array() || pair.size() != 2) throw ConfigError("preference entries must be [hex, probability]");
          dst.push_back({EmojiSequence::from_hex(pair[0].get<std::string>()), pair[1].get<double>()});
        }
      };
      read("F", c.female_preference);
      read("M", c.male_preference);
    }
    c.continue_probability = j.value("continue_probability", c.continue_probability);
    c.max_emojis_per_message = j.value("max_emojis_per_message", c.max_emojis_per_message);
    c.repeat_probability = j.value("repeat_probability", c.repeat_probability);
    c.emoji_only_probability = j.value("emoji_only_probability", c.emoji_only_probability);
    c.run_probability = j.value("run_probability", c.run_probability);
    if (j.contains("languages")) c.languages = j.at("languages").get<std::vector<std::string>>();
    c.start_timestamp = j.value("start_timestamp", c.start_timestamp);
    c.timestamp_span = j.value("timestamp_span", c.timestamp_span);
    c.seed = j.value("seed", c.seed);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed synthetic config: ") + e.what());
  } catch (const ArgumentError& e) {
    throw ConfigError(std::string("malformed synthetic config: ") + e.what());
  }
  c.validate();
  return c;
}

std::string SyntheticConfig::to_json() const {
  auto dist = [](const std::vector<PreferenceWeight>& d) {
    json a = json::array();
    for (const auto& w : d) a.push_back(json::array({w.emoji.to_hex(), w.probability}));
    return a;
  };
  json j = {
      {"n_female", n_female},
      {"n_male", n_male},
      {"messages_per_user", {min_messages, max_messages}},
      {"emoji_rate", {{"F", female_emoji_rate}, {"M", male_emoji_rate}}},
      {"preference", {{"F", dist(female_preference)}, {"M", dist(male_preference)}}},
      {"continue_probability", continue_probability},
      {"max_emojis_per_message", max_emojis_per_message},
      {"repeat_probability", repeat_probability},
      {"emoji_only_probability", emoji_only_probability},
      {"run_probability", run_probability},
      {"languages", languages},
      {"start_timestamp", start_timestamp},
      {"timestamp_span", timestamp_span},
      {"seed", seed},
  };
  return j.dump(2);
}

void generate_synthetic(const SyntheticConfig& config, std::ostream& out) {
  config.validate();
  Rng rng(config.seed);
  const GenderPlan plans[] = {
      {Gender::Female, config.n_female, config.female_emoji_rate, &config.female_preference, 'f'},
      {Gender::Male, config.n_male, config.male_emoji_rate, &config.male_preference, 'm'},
  };
  for (const auto& plan : plans) {
    std::vector<std::string> encoded;
    for (const auto& w : *plan.dist) encoded.push_back(w.emoji.to_utf8());
    const auto cum = cumulative(*plan.dist);
    for (std::uint32_t u = 0; u < plan.users; ++u) {
      char id[32];
      std::snprintf(id, sizeof id, "%c%06u", plan.prefix, u);
      const auto n_msgs = static_cast<std::uint32_t>(rng.between(config.min_messages, config.max_messages));
      Message m;
      m.user_id = id;
      m.gender = plan.gender;
      for (std::uint32_t k = 0; k < n_msgs; ++k) {
        m.timestamp = config.start_timestamp +
                      static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(config.timestamp_span)));
        m.lang = config.languages[rng.below(config.languages.size())];
        m.text = make_message(config, plan, encoded, cum, rng);
        out << to_jsonl(m) << '\n';
      }
    }
  }
}

std::string generate_synthetic(const SyntheticConfig& config) {
  std::ostringstream os;
  generate_synthetic(config, os);
  return os.str();
}

SyntheticConfig planted_config(const EmojiLexicon& lexicon, const PlantedSpec& spec) {
  const std::size_t total = static_cast<std::size_t>(spec.planted) + spec.neutral;
  if (total == 0) throw ConfigError("planted corpus needs at least one emoji");
  if (lexicon.size() < total) throw ConfigError("lexicon too small for the planted corpus");
  if (!(spec.skew >= 1.0)) throw ConfigError("skew must be at least 1");
  SyntheticConfig c;
  c.n_female = spec.users_per_gender;
  c.n_male = spec.users_per_gender;
  c.min_messages = spec.min_messages;
  c.max_messages = spec.max_messages;
  c.female_emoji_rate = spec.female_rate;
  c.male_emoji_rate = spec.male_rate;
  c.seed = spec.seed;
  double f_total = 0.0, m_total = 0.0;
  for (std::size_t i = 0; i < total; ++i) {
    const bool planted = i < spec.planted;
    const bool toward_female = planted && i % 2 == 0;
    const bool toward_male = planted && i % 2 == 1;
    const double wf = toward_female ? spec.skew : 1.0;
    const double wm = toward_male ? spec.skew : 1.0;
    const auto& seq = lexicon.entries()[i].sequence;
    c.female_preference.push_back({seq, wf});
    c.male_preference.push_back({seq, wm});
    f_total += wf;
    m_total += wm;
  }
  for (auto& w : c.female_preference) w.probability /= f_total;
  for (auto& w : c.male_preference) w.probability /= m_total;
  c.validate();
  return c;
}

PlantedTruth planted_truth(const EmojiLexicon& lexicon, const PlantedSpec& spec) {
  PlantedTruth t;
  for (std::size_t i = 0; i < spec.planted && i < lexicon.size(); ++i) {
    (i % 2 == 0 ? t.female_skewed : t.male_skewed).push_back(lexicon.entries()[i].sequence);
  }
  return t;
}

}  // namespace emojiprof
