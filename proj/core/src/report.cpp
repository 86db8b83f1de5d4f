#include "emojiprof/report.hpp"

#include <sstream>

#include "json.hpp"
#include "text_util.hpp"

namespace emojiprof {
namespace {

using nlohmann::ordered_json;

ordered_json stat_object(const GenderSplitStat& s) {
  ordered_json j;
  j["name"] = s.name;
  j["female"] = s.female_value;
  j["male"] = s.male_value;
  j["female_count"] = s.female_count;
  j["female_total"] = s.female_total;
  j["male_count"] = s.male_count;
  j["male_total"] = s.male_total;
  j["z"] = s.z;
  j["p_raw"] = s.p_raw;
  j["p_adjusted"] = s.p_adjusted;
  return j;
}

}  // namespace

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string discriminative_csv(std::span<const DiscriminativeEmojiRow> rows, const EmojiLexicon& lexicon) {
  std::ostringstream os;
  os << "Rank,MI,Emoji e,p(Male|e),p(Female|e),tag,sequence,name,female_users,male_users\n";
  std::size_t rank = 0;
  for (const auto& r : rows) {
    const auto& e = lexicon.entry(r.emoji);
    os << ++rank << ',' << detail::format_double(r.mi) << ',' << csv_field(e.sequence.to_utf8()) << ','
       << detail::format_double(r.p_male_given_e) << ',' << detail::format_double(r.p_female_given_e) << ','
       << to_string(r.tag) << ',' << e.sequence.to_hex() << ',' << csv_field(e.name) << ',' << r.female_users << ','
       << r.male_users << '\n';
  }
  return os.str();
}

std::string cdf_csv(std::span<const NamedCdf> cdfs) {
  std::ostringstream os;
  os << "group,x,F\n";
  for (const auto& c : cdfs) {
    for (const auto& s : c.steps) {
      os << csv_field(c.group) << ',' << detail::format_double(s.x) << ',' << detail::format_double(s.f) << '\n';
    }
  }
  return os.str();
}

std::string split_stat_json(const GenderSplitStat& stat) { return stat_object(stat).dump(2) + "\n"; }

std::string popularity_json(const GenderSplitStat& stat, std::uint64_t female_users, std::uint64_t male_users,
                            std::string_view policy) {
  ordered_json j;
  j["policy"] = policy;
  j["female_users"] = female_users;
  j["male_users"] = male_users;
  j["emoji_msg"] = stat_object(stat);
  return j.dump(2) + "\n";
}

std::string split_stats_json(std::span<const GenderSplitStat> stats, std::string_view policy) {
  ordered_json j;
  j["policy"] = policy;
  j["denominator"] = "all emoji tokens";
  j["correction"] = "bonferroni";
  j["m"] = stats.size();
  auto arr = ordered_json::array();
  for (const auto& s : stats) arr.push_back(stat_object(s));
  j["classes"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string edges_csv(const CooccurrenceGraph& graph, const EmojiLexicon& lexicon) {
  std::ostringstream os;
  os << "e1,e2,pmi\n";
  for (const auto& e : graph.edges) {
    os << lexicon.sequence(graph.nodes[e.u]).to_hex() << ',' << lexicon.sequence(graph.nodes[e.v]).to_hex() << ','
       << detail::format_double(e.weight) << '\n';
  }
  return os.str();
}

std::string communities_csv(const CooccurrenceGraph& graph, const CommunityAssignment& communities,
                            const EmojiLexicon& lexicon) {
  std::ostringstream os;
  os << "emoji,community\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    os << lexicon.sequence(graph.nodes[i]).to_hex() << ',' << communities.community[i] << '\n';
  }
  return os.str();
}

std::string metrics_json(const Metrics& model, const Metrics& baseline, std::string_view label) {
  auto object = [](const Metrics& m) {
    ordered_json j;
    j["Accuracy"] = m.accuracy;
    j["Precision_M"] = m.precision_m ? ordered_json(*m.precision_m) : ordered_json(nullptr);
    j["Precision_F"] = m.precision_f ? ordered_json(*m.precision_f) : ordered_json(nullptr);
    if (!m.precision_m) j["Precision_M_note"] = m.precision_m_note;
    if (!m.precision_f) j["Precision_F_note"] = m.precision_f_note;
    j["n"] = m.n;
    j["n_male"] = m.n_male;
    j["n_female"] = m.n_female;
    if (m.confusion) {
      j["confusion"] = {{"tp", m.confusion->tp}, {"fp", m.confusion->fp}, {"tn", m.confusion->tn},
                        {"fn", m.confusion->fn}};
    }
    return j;
  };
  ordered_json j;
  j["label"] = label;
  j["positive_class"] = "M";
  j["model"] = object(model);
  j["baseline"] = object(baseline);
  return j.dump(2) + "\n";
}

}  // namespace emojiprof
