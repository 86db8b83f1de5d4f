#pragma once

#include <span>
#include <string>
#include <vector>

#include "emojiprof/evaluation.hpp"
#include "emojiprof/graph.hpp"
#include "emojiprof/lexicon.hpp"
#include "emojiprof/stats.hpp"

namespace emojiprof {

// Text renderings of analysis results. CSV fields are quoted when needed;
// numbers use the shortest round-trip form.

std::string csv_field(std::string_view s);

// Header: Rank,MI,Emoji e,p(Male|e),p(Female|e),tag,sequence,name,female_users,male_users
std::string discriminative_csv(std::span<const DiscriminativeEmojiRow> rows, const EmojiLexicon& lexicon);

struct NamedCdf {
  std::string group;
  std::vector<CdfStep> steps;
};
// Header: group,x,F
std::string cdf_csv(std::span<const NamedCdf> cdfs);

std::string split_stat_json(const GenderSplitStat& stat);  // one object
// Message-level %emoji-msg comparison plus per-gender user counts.
std::string popularity_json(const GenderSplitStat& stat, std::uint64_t female_users, std::uint64_t male_users,
                            std::string_view policy);
std::string split_stats_json(std::span<const GenderSplitStat> stats, std::string_view policy);

// Header: e1,e2,pmi (canonical sequences in hex)
std::string edges_csv(const CooccurrenceGraph& graph, const EmojiLexicon& lexicon);
// Header: emoji,community
std::string communities_csv(const CooccurrenceGraph& graph, const CommunityAssignment& communities,
                            const EmojiLexicon& lexicon);

// {"Accuracy":..,"Precision_M":..,"Precision_F":..,...}; absent precisions become null with a note.
std::string metrics_json(const Metrics& model, const Metrics& baseline, std::string_view label);

}  // namespace emojiprof
