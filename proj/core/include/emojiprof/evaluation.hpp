#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emojiprof/matrix.hpp"
#include "emojiprof/model.hpp"

namespace emojiprof {

struct Confusion {
  std::uint64_t tp = 0;  // Male predicted Male
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;
  std::uint64_t total() const { return tp + fp + tn + fn; }
};

struct Metrics {
  double accuracy = 0.0;
  std::optional<double> precision_m;  // absent when nobody is predicted Male
  std::optional<double> precision_f;
  std::string precision_m_note;  // reason when absent
  std::string precision_f_note;
  std::optional<Confusion> confusion;  // absent for the majority baseline
  std::uint64_t n = 0;
  std::uint64_t n_male = 0;
  std::uint64_t n_female = 0;
};

Metrics evaluate(std::span<const int> predicted, std::span<const int> truth);

// Accuracy of predicting the majority class; precisions are the chance rates.
Metrics majority_baseline(std::span<const int> truth);

// Fold index per row; each class is shuffled and dealt round-robin.
std::vector<std::uint32_t> stratified_folds(std::span<const int> y, std::uint32_t folds, std::uint64_t seed);

struct CvResult {
  std::vector<Hyper> grid;
  std::vector<double> mean_accuracy;
  std::vector<std::vector<double>> fold_accuracy;
  std::size_t chosen = 0;
  const Hyper& best() const { return grid.at(chosen); }
};

CvResult cross_validate(const Matrix& x, std::span<const int> y, std::uint32_t folds, std::span<const Hyper> grid,
                        std::uint64_t seed);

std::vector<Hyper> default_grid(ModelKind kind);

}  // namespace emojiprof
