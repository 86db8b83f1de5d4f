#include "emojiprof/evaluation.hpp"

#include <map>
#include <tuple>

#include "emojiprof/error.hpp"
#include "emojiprof/rng.hpp"

namespace emojiprof {

Metrics evaluate(std::span<const int> predicted, std::span<const int> truth) {
  if (predicted.size() != truth.size()) throw ArgumentError("prediction and label counts differ");
  if (truth.empty()) throw ArgumentError("cannot evaluate an empty test set");
  Confusion c;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool pm = predicted[i] == 1, tm = truth[i] == 1;
    if (pm && tm) ++c.tp;
    else if (pm) ++c.fp;
    else if (tm) ++c.fn;
    else ++c.tn;
  }
  Metrics m;
  m.n = c.total();
  m.n_male = c.tp + c.fn;
  m.n_female = c.tn + c.fp;
  m.accuracy = static_cast<double>(c.tp + c.tn) / static_cast<double>(m.n);
  if (c.tp + c.fp > 0) {
    m.precision_m = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  } else {
    m.precision_m_note = "no user predicted male";
  }
  if (c.tn + c.fn > 0) {
    m.precision_f = static_cast<double>(c.tn) / static_cast<double>(c.tn + c.fn);
  } else {
    m.precision_f_note = "no user predicted female";
  }
  m.confusion = c;
  return m;
}

Metrics majority_baseline(std::span<const int> truth) {
  if (truth.empty()) throw ArgumentError("cannot compute a baseline for an empty label set");
  Metrics m;
  m.n = truth.size();
  for (int v : truth) (v == 1 ? m.n_male : m.n_female) += 1;
  const double n = static_cast<double>(m.n);
  const double male = static_cast<double>(m.n_male) / n;
  const double female = static_cast<double>(m.n_female) / n;
  m.accuracy = std::max(male, female);
  m.precision_m = male;
  m.precision_f = female;
  return m;
}

std::vector<std::uint32_t> stratified_folds(std::span<const int> y, std::uint32_t folds, std::uint64_t seed) {
  if (folds < 2) throw ArgumentError("cross-validation needs at least 2 folds");
  std::vector<std::size_t> by_class[2];
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] != 0 && y[i] != 1) throw ArgumentError("labels must be 0 or 1");
    by_class[y[i]].push_back(i);
  }
  for (const auto& cls : by_class) {
    if (cls.size() < folds) throw ArgumentError("a class has fewer rows than folds; cannot stratify");
  }
  Rng rng(seed);
  std::vector<std::uint32_t> fold(y.size());
  for (auto& cls : by_class) {
    rng.shuffle(cls.begin(), cls.end());
    for (std::size_t k = 0; k < cls.size(); ++k) fold[cls[k]] = static_cast<std::uint32_t>(k % folds);
  }
  return fold;
}

CvResult cross_validate(const Matrix& x, std::span<const int> y, std::uint32_t folds, std::span<const Hyper> grid,
                        std::uint64_t seed) {
  if (grid.empty()) throw ArgumentError("hyper-parameter grid is empty");
  if (y.size() != x.rows()) throw ArgumentError("label count does not match the matrix");
  const auto fold = stratified_folds(y, folds, seed);
  CvResult r;
  r.grid.assign(grid.begin(), grid.end());
  r.fold_accuracy.assign(grid.size(), std::vector<double>(folds, 0.0));

  // Boosting is deterministic and stagewise, so grid points that differ only in
  // n_trees share one fit and read off prefix scores.
  using Key = std::tuple<std::uint32_t, double, std::uint32_t>;
  std::map<Key, std::vector<std::size_t>> gbc_groups;
  std::vector<std::size_t> ridge_points;
  for (std::size_t p = 0; p < grid.size(); ++p) {
    if (const auto* g = std::get_if<GbcHyper>(&grid[p])) {
      gbc_groups[{g->max_depth, g->learning_rate, g->min_leaf}].push_back(p);
    } else {
      ridge_points.push_back(p);
    }
  }

  for (std::uint32_t k = 0; k < folds; ++k) {
    std::vector<std::size_t> tr, te;
    for (std::size_t i = 0; i < y.size(); ++i) (fold[i] == k ? te : tr).push_back(i);
    const Matrix xtr = x.select_rows(tr), xte = x.select_rows(te);
    std::vector<int> ytr, yte;
    for (auto i : tr) ytr.push_back(y[i]);
    for (auto i : te) yte.push_back(y[i]);
    auto accuracy = [&](std::span<const double> scores) {
      std::size_t correct = 0;
      for (std::size_t i = 0; i < yte.size(); ++i) correct += ((scores[i] > 0.0 ? 1 : 0) == yte[i]);
      return static_cast<double>(correct) / static_cast<double>(yte.size());
    };
    for (auto p : ridge_points) {
      const auto model = train(xtr, ytr, grid[p]);
      r.fold_accuracy[p][k] = accuracy(predict(model, xte).scores);
    }
    for (const auto& [key, points] : gbc_groups) {
      GbcHyper h = std::get<GbcHyper>(grid[points.front()]);
      for (auto p : points) h.n_trees = std::max(h.n_trees, std::get<GbcHyper>(grid[p]).n_trees);
      const auto model = train_gbc(xtr, ytr, h);
      for (auto p : points) {
        r.fold_accuracy[p][k] = accuracy(staged_scores(model, xte, std::get<GbcHyper>(grid[p]).n_trees));
      }
    }
  }
  r.mean_accuracy.resize(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    double s = 0.0;
    for (double a : r.fold_accuracy[p]) s += a;
    r.mean_accuracy[p] = s / static_cast<double>(folds);
    if (r.mean_accuracy[p] > r.mean_accuracy[r.chosen]) r.chosen = p;
  }
  return r;
}

std::vector<Hyper> default_grid(ModelKind kind) {
  std::vector<Hyper> grid;
  if (kind == ModelKind::GradientBoostedTrees) {
    for (std::uint32_t trees : {50u, 200u}) {
      for (std::uint32_t depth : {2u, 3u, 5u}) {
        for (double lr : {0.05, 0.1, 0.3}) grid.emplace_back(GbcHyper{trees, depth, lr, 1});
      }
    }
  } else {
    for (double lambda : {0.01, 0.1, 1.0, 10.0}) grid.emplace_back(RidgeHyper{lambda});
  }
  return grid;
}

}  // namespace emojiprof
