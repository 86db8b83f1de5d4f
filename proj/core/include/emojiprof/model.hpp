#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "emojiprof/matrix.hpp"

namespace emojiprof {

// Labels are coded 1 = Male (positive class), 0 = Female.

enum class ModelKind { RidgeLinear, GradientBoostedTrees, UnigramLinear };
std::string_view to_string(ModelKind kind) noexcept;  // "ridge", "gbc", "unigram"
ModelKind model_kind_from_string(std::string_view name);

struct RidgeHyper {
  double lambda = 1.0;
  bool operator==(const RidgeHyper&) const = default;
};

struct GbcHyper {
  std::uint32_t n_trees = 100;
  std::uint32_t max_depth = 3;
  double learning_rate = 0.1;
  std::uint32_t min_leaf = 1;
  bool operator==(const GbcHyper&) const = default;
};

using Hyper = std::variant<RidgeHyper, GbcHyper>;
std::string describe(const Hyper& h);

struct LinearParams {
  std::vector<double> weights;
  double bias = 0.0;
  bool operator==(const LinearParams&) const = default;
};

struct TreeNode {
  std::int32_t feature = -1;  // -1 marks a leaf
  double threshold = 0.0;     // x[feature] <= threshold goes left
  std::int32_t left = -1;
  std::int32_t right = -1;
  double value = 0.0;  // leaf output
  bool operator==(const TreeNode&) const = default;
};

struct Tree {
  std::vector<TreeNode> nodes;  // root at 0
  double weight = 0.0;          // learning rate times line-search step
  double evaluate(std::span<const double> x) const;
  bool operator==(const Tree&) const = default;
};

struct TreeEnsemble {
  double base_score = 0.0;  // prior log-odds
  std::vector<Tree> trees;
  bool operator==(const TreeEnsemble&) const = default;
};

struct TrainedModel {
  ModelKind kind = ModelKind::RidgeLinear;
  std::string manifest_fingerprint;
  std::size_t n_features = 0;
  std::uint64_t seed = 0;
  Hyper hyper;
  LinearParams linear;     // RidgeLinear, UnigramLinear
  TreeEnsemble ensemble;   // GradientBoostedTrees

  // Real margin; positive means Male.
  double score(std::span<const double> x) const;
  int label(std::span<const double> x) const { return score(x) > 0.0 ? 1 : 0; }

  bool operator==(const TrainedModel&) const = default;
};

struct Prediction {
  std::vector<int> labels;
  std::vector<double> scores;
};

// Throws ArgumentError on a column-count mismatch.
Prediction predict(const TrainedModel& model, const Matrix& x);

// Scores using only the first `n_trees` trees of an ensemble.
std::vector<double> staged_scores(const TrainedModel& model, const Matrix& x, std::size_t n_trees);

// Minimizes (1/n) sum (s_i - w.x_i - b)^2 + lambda |w|^2 with s = +-1, bias unpenalized.
TrainedModel train_ridge(const Matrix& x, std::span<const int> y, double lambda);

struct GbcTrace {
  std::vector<double> stage_loss;  // mean log-loss before the first and after every stage
};

TrainedModel train_gbc(const Matrix& x, std::span<const int> y, const GbcHyper& hyper,
                       GbcTrace* trace = nullptr);

TrainedModel train(const Matrix& x, std::span<const int> y, const Hyper& hyper);

double log_loss(std::span<const double> scores, std::span<const int> y);

// JSON encoding; doubles round-trip exactly.
std::string save_model(const TrainedModel& model);
void save_model(const TrainedModel& model, std::ostream& out);
TrainedModel load_model(std::string_view json_text);
TrainedModel load_model(std::istream& in);

inline constexpr int kModelFormatVersion = 1;

}  // namespace emojiprof
