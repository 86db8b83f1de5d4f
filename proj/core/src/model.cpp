#include "emojiprof/model.hpp"

#include <algorithm>

#include "emojiprof/error.hpp"
#include "text_util.hpp"

namespace emojiprof {

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::RidgeLinear: return "ridge";
    case ModelKind::GradientBoostedTrees: return "gbc";
    case ModelKind::UnigramLinear: return "unigram";
  }
  return "ridge";
}

ModelKind model_kind_from_string(std::string_view name) {
  if (name == "ridge") return ModelKind::RidgeLinear;
  if (name == "gbc") return ModelKind::GradientBoostedTrees;
  if (name == "unigram") return ModelKind::UnigramLinear;
  throw ArgumentError("unknown model kind '" + std::string(name) + "'");
}

std::string describe(const Hyper& h) {
  if (const auto* r = std::get_if<RidgeHyper>(&h)) return "lambda=" + detail::format_double(r->lambda);
  const auto& g = std::get<GbcHyper>(h);
  return "n_trees=" + std::to_string(g.n_trees) + " max_depth=" + std::to_string(g.max_depth) +
         " learning_rate=" + detail::format_double(g.learning_rate) + " min_leaf=" + std::to_string(g.min_leaf);
}

double TrainedModel::score(std::span<const double> x) const {
  if (x.size() != n_features) throw ArgumentError("feature row has the wrong number of columns");
  if (kind == ModelKind::GradientBoostedTrees) {
    double s = ensemble.base_score;
    for (const auto& t : ensemble.trees) s += t.weight * t.evaluate(x);
    return s;
  }
  double s = linear.bias;
  for (std::size_t j = 0; j < x.size(); ++j) s += linear.weights[j] * x[j];
  return s;
}

Prediction predict(const TrainedModel& model, const Matrix& x) {
  if (x.cols() != model.n_features) {
    throw ArgumentError("matrix has " + std::to_string(x.cols()) + " columns, model expects " +
                        std::to_string(model.n_features));
  }
  Prediction p;
  p.scores.reserve(x.rows());
  p.labels.reserve(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const double s = model.score(x.row(i));
    p.scores.push_back(s);
    p.labels.push_back(s > 0.0 ? 1 : 0);
  }
  return p;
}

std::vector<double> staged_scores(const TrainedModel& model, const Matrix& x, std::size_t n_trees) {
  if (model.kind != ModelKind::GradientBoostedTrees) throw ArgumentError("staged scores need a tree ensemble");
  if (x.cols() != model.n_features) throw ArgumentError("matrix column count does not match the model");
  const auto used = std::min(n_trees, model.ensemble.trees.size());
  std::vector<double> out(x.rows(), model.ensemble.base_score);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const auto row = x.row(i);
    for (std::size_t t = 0; t < used; ++t) {
      out[i] += model.ensemble.trees[t].weight * model.ensemble.trees[t].evaluate(row);
    }
  }
  return out;
}

TrainedModel train(const Matrix& x, std::span<const int> y, const Hyper& hyper) {
  if (const auto* r = std::get_if<RidgeHyper>(&hyper)) return train_ridge(x, y, r->lambda);
  return train_gbc(x, y, std::get<GbcHyper>(hyper));
}

}  // namespace emojiprof
