#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "emojiprof/error.hpp"
#include "emojiprof/model.hpp"

namespace emojiprof {
namespace {

double softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::fabs(z))); }
double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

struct BestSplit {
  double gain = -std::numeric_limits<double>::infinity();
  std::int32_t feature = -1;
  double threshold = 0.0;
};

struct NodeStats {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t count = 0;
};

// Fits one least-squares regression tree to `g`; leaf values use the Newton
// step sum(g) / sum(h). Writes the leaf index reached by every row.
struct SortedColumn {
  std::vector<std::uint32_t> rows;  // ascending by value, stable
  std::vector<double> values;       // x(rows[k], f)
};

Tree fit_tree(const Matrix& x, std::span<const double> g, std::span<const double> h,
              const std::vector<SortedColumn>& sorted, std::span<const std::uint32_t> columns,
              const GbcHyper& hyper, std::vector<std::int32_t>& leaf_of) {
  const std::size_t n = x.rows();
  Tree tree;
  tree.nodes.push_back({});
  std::vector<std::int32_t> node_of(n, 0);
  std::vector<std::int32_t> frontier{0};

  for (std::uint32_t depth = 0; depth < hyper.max_depth && !frontier.empty(); ++depth) {
    const std::size_t m = frontier.size();
    // Map node id -> slot in this level.
    std::vector<std::int32_t> slot(tree.nodes.size(), -1);
    for (std::size_t s = 0; s < m; ++s) slot[static_cast<std::size_t>(frontier[s])] = static_cast<std::int32_t>(s);
    std::vector<NodeStats> stats(m);
    for (std::size_t i = 0; i < n; ++i) {
      const auto s = node_of[i] >= 0 ? slot[static_cast<std::size_t>(node_of[i])] : -1;
      if (s < 0) continue;
      auto& st = stats[static_cast<std::size_t>(s)];
      st.sum += g[i];
      st.sum_sq += g[i] * g[i];
      ++st.count;
    }
    std::vector<BestSplit> best(m);
    // Nodes whose residuals are (numerically) constant stay leaves; any other
    // node takes its best split even when that split alone gains nothing.
    std::vector<char> impure(m);
    for (std::size_t s = 0; s < m; ++s) {
      const auto& st = stats[s];
      impure[s] = st.count > 1 && st.sum_sq - st.sum * st.sum / static_cast<double>(st.count) > 1e-12 * st.sum_sq;
    }
    std::vector<double> left_sum(m), last(m);
    std::vector<std::size_t> left_n(m);
    for (auto f : columns) {
      std::fill(left_sum.begin(), left_sum.end(), 0.0);
      std::fill(left_n.begin(), left_n.end(), 0);
      const auto& col = sorted[f];
      for (std::size_t k = 0; k < col.rows.size(); ++k) {
        const auto i = col.rows[k];
        const auto node = node_of[i];
        if (node < 0) continue;
        const auto s32 = slot[static_cast<std::size_t>(node)];
        if (s32 < 0) continue;
        const auto s = static_cast<std::size_t>(s32);
        const double v = col.values[k];
        const auto& st = stats[s];
        if (impure[s] && left_n[s] > 0 && v > last[s] && left_n[s] >= hyper.min_leaf && st.count - left_n[s] >= hyper.min_leaf) {
          const double nl = static_cast<double>(left_n[s]);
          const double nr = static_cast<double>(st.count - left_n[s]);
          const double sr = st.sum - left_sum[s];
          const double gain = left_sum[s] * left_sum[s] / nl + sr * sr / nr - st.sum * st.sum / static_cast<double>(st.count);
          if (gain > best[s].gain) {
            double thr = last[s] + (v - last[s]) / 2.0;
            if (!(thr < v)) thr = last[s];
            best[s] = {gain, static_cast<std::int32_t>(f), thr};
          }
        }
        left_sum[s] += g[i];
        ++left_n[s];
        last[s] = v;
      }
    }
    std::vector<std::int32_t> next;
    std::vector<std::int32_t> left_child(m, -1), right_child(m, -1);
    for (std::size_t s = 0; s < m; ++s) {
      if (best[s].feature < 0) continue;
      const auto id = static_cast<std::size_t>(frontier[s]);
      const auto l = static_cast<std::int32_t>(tree.nodes.size());
      tree.nodes.push_back({});
      tree.nodes.push_back({});
      auto& node = tree.nodes[id];
      node.feature = best[s].feature;
      node.threshold = best[s].threshold;
      node.left = l;
      node.right = l + 1;
      left_child[s] = l;
      right_child[s] = l + 1;
      next.push_back(l);
      next.push_back(l + 1);
    }
    if (next.empty()) break;
    for (std::size_t i = 0; i < n; ++i) {
      const auto s32 = slot[static_cast<std::size_t>(node_of[i])];
      if (s32 < 0) continue;
      const auto s = static_cast<std::size_t>(s32);
      if (left_child[s] < 0) continue;
      node_of[i] = x(i, static_cast<std::size_t>(best[s].feature)) <= best[s].threshold ? left_child[s] : right_child[s];
    }
    frontier = std::move(next);
  }

  std::vector<double> sg(tree.nodes.size(), 0.0), sh(tree.nodes.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    sg[static_cast<std::size_t>(node_of[i])] += g[i];
    sh[static_cast<std::size_t>(node_of[i])] += h[i];
  }
  for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
    auto& node = tree.nodes[k];
    if (node.feature < 0) node.value = sh[k] > 1e-12 ? sg[k] / sh[k] : 0.0;
  }
  leaf_of = std::move(node_of);
  return tree;
}

}  // namespace

double Tree::evaluate(std::span<const double> x) const {
  std::size_t k = 0;
  while (nodes[k].feature >= 0) {
    const auto& node = nodes[k];
    k = static_cast<std::size_t>(x[static_cast<std::size_t>(node.feature)] <= node.threshold ? node.left : node.right);
  }
  return nodes[k].value;
}

double log_loss(std::span<const double> scores, std::span<const int> y) {
  if (scores.size() != y.size() || y.empty()) throw ArgumentError("log-loss needs matching non-empty inputs");
  double total = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) total += softplus(y[i] ? -scores[i] : scores[i]);
  return total / static_cast<double>(y.size());
}

TrainedModel train_gbc(const Matrix& x, std::span<const int> y, const GbcHyper& hyper, GbcTrace* trace) {
  const std::size_t n = x.rows(), d = x.cols();
  if (y.size() != n) throw ArgumentError("label count does not match the matrix");
  if (hyper.n_trees < 1) throw ArgumentError("n_trees must be at least 1");
  if (hyper.max_depth < 1) throw ArgumentError("max_depth must be at least 1");
  if (!(hyper.learning_rate > 0.0 && hyper.learning_rate <= 1.0)) throw ArgumentError("learning_rate must lie in (0, 1]");
  if (hyper.min_leaf < 1) throw ArgumentError("min_leaf must be at least 1");
  std::size_t positives = 0;
  for (int v : y) {
    if (v != 0 && v != 1) throw ArgumentError("labels must be 0 or 1");
    positives += static_cast<std::size_t>(v);
  }
  if (positives == 0 || positives == n) throw ArgumentError("boosting needs both classes");
  for (double v : x.data()) {
    if (!std::isfinite(v)) throw ArgumentError("feature matrix contains non-finite values");
  }

  // Presorted row order for every column that is not constant.
  std::vector<SortedColumn> sorted(d);
  std::vector<std::uint32_t> columns;
  for (std::size_t f = 0; f < d; ++f) {
    bool constant = true;
    for (std::size_t i = 1; i < n && constant; ++i) constant = x(i, f) == x(0, f);
    if (constant) continue;
    auto& order = sorted[f].rows;
    order.resize(n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return x(a, f) < x(b, f); });
    sorted[f].values.reserve(n);
    for (auto i : order) sorted[f].values.push_back(x(i, f));
    columns.push_back(static_cast<std::uint32_t>(f));
  }

  TrainedModel m;
  m.kind = ModelKind::GradientBoostedTrees;
  m.n_features = d;
  m.hyper = hyper;
  const double prior = static_cast<double>(positives) / static_cast<double>(n);
  m.ensemble.base_score = std::log(prior / (1.0 - prior));

  std::vector<double> f(n, m.ensemble.base_score), trial(n), g(n), h(n);
  double loss = log_loss(f, y);
  if (trace) trace->stage_loss.assign(1, loss);
  std::vector<std::int32_t> leaf_of;
  for (std::uint32_t t = 0; t < hyper.n_trees && !columns.empty(); ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      const double p = sigmoid(f[i]);
      g[i] = static_cast<double>(y[i]) - p;
      h[i] = p * (1.0 - p);
    }
    Tree tree = fit_tree(x, g, h, sorted, columns, hyper, leaf_of);
    if (tree.nodes.size() == 1) break;  // root cannot be split

    // Backtracking keeps the training loss from increasing.
    double step = hyper.learning_rate;
    double new_loss = std::numeric_limits<double>::infinity();
    for (int attempt = 0; attempt < 40; ++attempt) {
      for (std::size_t i = 0; i < n; ++i) {
        trial[i] = f[i] + step * tree.nodes[static_cast<std::size_t>(leaf_of[i])].value;
      }
      new_loss = log_loss(trial, y);
      if (new_loss <= loss) break;
      step /= 2.0;
    }
    if (!(new_loss <= loss)) break;
    tree.weight = step;
    f.swap(trial);
    loss = new_loss;
    m.ensemble.trees.push_back(std::move(tree));
    if (trace) trace->stage_loss.push_back(loss);
  }
  return m;
}

}  // namespace emojiprof
