#pragma once

// Independent reference computations used to check the library.

#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "emojiprof/graph.hpp"
#include "emojiprof/stats.hpp"

namespace emojiprof::testing {

using Rational = boost::rational<std::int64_t>;

// MI of a 2x2 user table: every joint term formed with exact rationals, ln taken last.
inline double mi_oracle(std::int64_t use_f, std::int64_t use_m, std::int64_t no_f, std::int64_t no_m) {
  const std::int64_t n = use_f + use_m + no_f + no_m;
  const std::int64_t cells[2][2] = {{use_f, use_m}, {no_f, no_m}};
  double mi = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      if (cells[x][y] == 0) continue;
      const Rational pxy(cells[x][y], n);
      const Rational px(cells[x][0] + cells[x][1], n);
      const Rational py(cells[0][y] + cells[1][y], n);
      const Rational ratio = pxy / (px * py);
      mi += boost::rational_cast<double>(pxy) *
            std::log(boost::rational_cast<long double>(ratio));
    }
  }
  return mi;
}

// Standard normal CDF by composite Simpson integration of the density.
inline double normal_cdf_oracle(double z) {
  const double a = std::fabs(z);
  const int n = 20000;
  const double h = a / n;
  auto phi = [](double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * M_PI); };
  double s = phi(0) + phi(a);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * phi(i * h);
  const double half = s * h / 3.0;
  return z >= 0 ? 0.5 + half : 0.5 - half;
}

// PMI from explicit per-message emoji sets.
inline double pmi_oracle(const std::vector<std::vector<std::uint32_t>>& messages, std::uint32_t a, std::uint32_t b) {
  std::int64_t na = 0, nb = 0, nab = 0;
  for (const auto& m : messages) {
    bool ha = false, hb = false;
    for (auto e : m) {
      ha = ha || e == a;
      hb = hb || e == b;
    }
    na += ha;
    nb += hb;
    nab += ha && hb;
  }
  if (nab == 0) return -std::numeric_limits<double>::infinity();
  const std::int64_t n = static_cast<std::int64_t>(messages.size());
  const Rational ratio = Rational(nab, n) / (Rational(na, n) * Rational(nb, n));
  return std::log(boost::rational_cast<long double>(ratio));
}

// Modularity straight from the double sum over node pairs (no self-loops).
inline double modularity_oracle(const WeightedGraph& g, const std::vector<std::uint32_t>& c, double gamma) {
  const std::uint32_t n = g.n_nodes;
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges) {
    a[e.u][e.v] += e.weight;
    a[e.v][e.u] += e.weight;
  }
  std::vector<double> k(n, 0.0);
  double two_m = 0.0;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) k[i] += a[i][j];
    two_m += k[i];
  }
  if (two_m == 0.0) return 0.0;
  double q = 0.0;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (c[i] == c[j]) q += a[i][j] - gamma * k[i] * k[j] / two_m;
    }
  }
  return q / two_m;
}

// Maximum modularity over every set partition (restricted growth strings).
inline double best_modularity_oracle(const WeightedGraph& g, double gamma) {
  const std::uint32_t n = g.n_nodes;
  std::vector<std::uint32_t> c(n, 0);
  double best = -std::numeric_limits<double>::infinity();
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t i, std::uint32_t used) {
    if (i == n) {
      best = std::max(best, modularity_oracle(g, c, gamma));
      return;
    }
    for (std::uint32_t b = 0; b <= used && b < n; ++b) {
      c[i] = b;
      rec(i + 1, b == used ? used + 1 : used);
    }
  };
  rec(0, 0);
  return best;
}

template <class Rng>
WeightedGraph random_small_graph(Rng& rng, std::uint32_t max_nodes = 8) {
  WeightedGraph g;
  g.n_nodes = 1 + static_cast<std::uint32_t>(rng() % max_nodes);
  const double density = 0.2 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0;
  for (std::uint32_t u = 0; u < g.n_nodes; ++u) {
    for (std::uint32_t v = u + 1; v < g.n_nodes; ++v) {
      if (static_cast<double>(rng() % 1000) / 1000.0 < density) {
        g.edges.push_back({u, v, 0.1 + static_cast<double>(rng() % 1000) / 250.0});
      }
    }
  }
  return g;
}

inline WeightedGraph two_cliques() {
  WeightedGraph g{6, {}};
  for (std::uint32_t base : {0u, 3u}) {
    g.edges.push_back({base, base + 1, 1.0});
    g.edges.push_back({base, base + 2, 1.0});
    g.edges.push_back({base + 1, base + 2, 1.0});
  }
  g.edges.push_back({2, 3, 0.1});
  return g;
}

}  // namespace emojiprof::testing
