#include "emojiprof/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "emojiprof/error.hpp"
#include "emojiprof/rng.hpp"

namespace emojiprof {

CooccurrenceGraph build_cooccurrence_graph(const MessageCooccurrence& counts, const EmojiLexicon& lexicon,
                                           std::uint32_t k) {
  if (k == 0) throw ArgumentError("k must be positive");
  CooccurrenceGraph g;
  g.k = k;
  for (const auto& [e, c] : counts.marginal) {
    if (c > 0) g.nodes.push_back(e);
  }
  std::sort(g.nodes.begin(), g.nodes.end(), [&](EmojiId a, EmojiId b) { return lexicon.sequence_less(a, b); });
  std::map<EmojiId, std::uint32_t> index;
  for (std::uint32_t i = 0; i < g.nodes.size(); ++i) index[g.nodes[i]] = i;

  struct Candidate {
    std::uint32_t other;
    double pmi;
  };
  std::vector<std::vector<Candidate>> candidates(g.nodes.size());
  for (const auto& [pair, c] : counts.joint) {
    if (c == 0) continue;
    const double w = pmi(counts, pair.first, pair.second);
    if (!(w > 0.0) || !std::isfinite(w)) continue;
    const auto a = index.at(pair.first), b = index.at(pair.second);
    candidates[a].push_back({b, w});
    candidates[b].push_back({a, w});
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> selected;
  for (std::uint32_t i = 0; i < candidates.size(); ++i) {
    auto& list = candidates[i];
    // Node indices follow sequence order, so index order breaks PMI ties.
    std::sort(list.begin(), list.end(), [](const Candidate& a, const Candidate& b) {
      if (a.pmi != b.pmi) return a.pmi > b.pmi;
      return a.other < b.other;
    });
    for (std::size_t j = 0; j < list.size() && j < k; ++j) {
      selected.emplace(std::minmax(i, list[j].other), list[j].pmi);
    }
  }
  for (const auto& [uv, w] : selected) g.edges.push_back({uv.first, uv.second, w});
  return g;
}

double modularity(const WeightedGraph& graph, std::span<const std::uint32_t> community, double resolution) {
  if (community.size() != graph.n_nodes) throw ArgumentError("community vector does not match the graph");
  double m = 0.0;
  for (const auto& e : graph.edges) m += e.weight;
  if (m == 0.0) return 0.0;
  std::unordered_map<std::uint32_t, double> internal, degree;
  for (const auto& e : graph.edges) {
    degree[community[e.u]] += e.weight;
    degree[community[e.v]] += e.weight;
    if (community[e.u] == community[e.v]) internal[community[e.u]] += e.weight;
  }
  // Sum in community-id order so the result does not depend on hashing.
  std::vector<std::uint32_t> ids;
  for (const auto& [c, d] : degree) ids.push_back(c);
  std::sort(ids.begin(), ids.end());
  double q = 0.0;
  for (auto c : ids) {
    const double frac = degree[c] / (2.0 * m);
    q += internal[c] / m - resolution * frac * frac;
  }
  return q;
}

namespace {

struct Adjacency {
  std::vector<std::vector<std::pair<std::uint32_t, double>>> neighbors;  // no self-loops
  std::vector<double> self_loop;
  std::vector<double> degree;  // self-loops count twice
  double total_weight = 0.0;   // m

  explicit Adjacency(const WeightedGraph& g)
      : neighbors(g.n_nodes), self_loop(g.n_nodes, 0.0), degree(g.n_nodes, 0.0) {
    for (const auto& e : g.edges) {
      if (!(e.weight > 0.0) || !std::isfinite(e.weight)) throw ArgumentError("edge weights must be positive");
      if (e.u >= g.n_nodes || e.v >= g.n_nodes) throw ArgumentError("edge endpoint out of range");
      total_weight += e.weight;
      degree[e.u] += e.weight;
      degree[e.v] += e.weight;
      if (e.u == e.v) {
        self_loop[e.u] += e.weight;
      } else {
        neighbors[e.u].emplace_back(e.v, e.weight);
        neighbors[e.v].emplace_back(e.u, e.weight);
      }
    }
  }
};

// One local-moving phase; returns whether any node changed community.
bool local_moving(const WeightedGraph& g, double resolution, Rng& rng, std::vector<std::uint32_t>& comm,
                  std::vector<double>& history) {
  const Adjacency adj(g);
  const double m2 = 2.0 * adj.total_weight;
  const std::uint32_t n = g.n_nodes;
  comm.resize(n);
  std::iota(comm.begin(), comm.end(), 0u);
  std::vector<double> tot(adj.degree);
  std::vector<std::uint32_t> size(n, 1);
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  rng.shuffle(order.begin(), order.end());

  std::vector<double> link(n, 0.0);
  std::vector<std::uint32_t> touched;
  bool moved_any = false;
  double last_q = modularity(g, comm, resolution);
  for (int sweep = 0; sweep < 10'000; ++sweep) {
    bool moved = false;
    for (auto i : order) {
      const auto own = comm[i];
      const double ki = adj.degree[i];
      touched.clear();
      for (const auto& [j, w] : adj.neighbors[i]) {
        const auto c = comm[j];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += w;
      }
      tot[own] -= ki;
      --size[own];
      auto gain = [&](std::uint32_t c) { return link[c] - resolution * ki * tot[c] / m2; };
      const double stay = gain(own);
      std::uint32_t best = own;
      double best_gain = stay;
      for (auto c : touched) {
        if (c == own) continue;
        const double gc = gain(c);
        if (gc > best_gain || (gc == best_gain && best != own && c < best)) {
          best = c;
          best_gain = gc;
        }
      }
      // Leaving for an empty community has gain 0.
      if (size[own] > 0 && best_gain < 0.0) {
        for (std::uint32_t c = 0; c < n; ++c) {
          if (size[c] == 0) {
            best = c;
            best_gain = 0.0;
            break;
          }
        }
      }
      if (best != own && !(best_gain > stay)) best = own;
      comm[i] = best;
      tot[best] += ki;
      ++size[best];
      if (best != own) moved = true;
      for (auto c : touched) link[c] = 0.0;
    }
    if (!moved) break;
    moved_any = true;
    const double q = modularity(g, comm, resolution);
    if (q < last_q - 1e-9 * std::max(1.0, std::fabs(last_q))) {
      throw NumericalError("modularity decreased during a local-moving sweep");
    }
    history.push_back(q);
    last_q = q;
  }
  return moved_any;
}

std::vector<std::uint32_t> renumber(std::span<const std::uint32_t> comm, std::uint32_t& count) {
  std::unordered_map<std::uint32_t, std::uint32_t> ids;
  std::vector<std::uint32_t> out(comm.size());
  for (std::size_t i = 0; i < comm.size(); ++i) {
    auto [it, fresh] = ids.emplace(comm[i], static_cast<std::uint32_t>(ids.size()));
    out[i] = it->second;
  }
  count = static_cast<std::uint32_t>(ids.size());
  return out;
}

WeightedGraph collapse(const WeightedGraph& g, std::span<const std::uint32_t> comm, std::uint32_t count) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> w;
  for (const auto& e : g.edges) w[std::minmax(comm[e.u], comm[e.v])] += e.weight;
  WeightedGraph out;
  out.n_nodes = count;
  for (const auto& [uv, x] : w) out.edges.push_back({uv.first, uv.second, x});
  return out;
}

}  // namespace

CommunityAssignment louvain(const WeightedGraph& graph, double resolution, std::uint64_t seed) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) throw ArgumentError("resolution must be positive");
  if (graph.n_nodes == 0) throw ArgumentError("Louvain needs a non-empty graph");
  CommunityAssignment result;
  result.resolution = resolution;
  std::vector<std::uint32_t> membership(graph.n_nodes);
  std::iota(membership.begin(), membership.end(), 0u);

  Rng rng(seed);
  WeightedGraph level = graph;
  for (;;) {
    std::vector<std::uint32_t> comm;
    const bool moved = local_moving(level, resolution, rng, comm, result.sweep_modularity);
    std::uint32_t count = 0;
    const auto ids = renumber(comm, count);
    for (auto& c : membership) c = ids[c];
    if (!moved || count == level.n_nodes) break;
    level = collapse(level, ids, count);
  }
  result.community = renumber(membership, result.n_communities);
  result.modularity = modularity(graph, result.community, resolution);
  return result;
}

}  // namespace emojiprof
