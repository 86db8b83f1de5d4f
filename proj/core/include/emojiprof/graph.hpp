#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "emojiprof/stats.hpp"

namespace emojiprof {

struct WeightedEdge {
  std::uint32_t u;  // node indices, u < v
  std::uint32_t v;
  double weight;

  bool operator==(const WeightedEdge&) const = default;
};

// Undirected weighted graph on dense node indices.
struct WeightedGraph {
  std::uint32_t n_nodes = 0;
  std::vector<WeightedEdge> edges;  // self-loops allowed (u == v)
};

struct CooccurrenceGraph {
  std::vector<EmojiId> nodes;  // canonical sequence order
  std::vector<WeightedEdge> edges;  // sorted by (u, v)
  std::uint32_t k = 5;

  WeightedGraph graph() const { return {static_cast<std::uint32_t>(nodes.size()), edges}; }
};

// Each emoji keeps its k strongest positive-PMI partners; selections are unioned.
CooccurrenceGraph build_cooccurrence_graph(const MessageCooccurrence& counts, const EmojiLexicon& lexicon,
                                           std::uint32_t k = 5);

struct CommunityAssignment {
  std::vector<std::uint32_t> community;  // per node, ids contiguous from 0
  std::uint32_t n_communities = 0;
  double modularity = 0.0;
  double resolution = 1.0;
  std::vector<double> sweep_modularity;  // after each local-moving sweep
};

double modularity(const WeightedGraph& graph, std::span<const std::uint32_t> community, double resolution);

CommunityAssignment louvain(const WeightedGraph& graph, double resolution, std::uint64_t seed);

}  // namespace emojiprof
