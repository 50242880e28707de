#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace rigkit {

/// Abnormal is the positive class.
struct ConfusionMatrix {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;

  std::int64_t total() const { return tp + fp + fn + tn; }
  void add(bool actual_positive, bool predicted_positive) {
    if (actual_positive) {
      (predicted_positive ? tp : fn) += 1;
    } else {
      (predicted_positive ? fp : tn) += 1;
    }
  }
  ConfusionMatrix& operator+=(const ConfusionMatrix& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    tn += o.tn;
    return *this;
  }
  bool operator==(const ConfusionMatrix&) const = default;
};

/// Undefined ratios (zero denominators) are reported as 0 with the matching
/// flag set, so fold averages stay finite.
struct Metrics {
  double accuracy = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  bool accuracy_undefined = false;
  bool precision_undefined = false;
  bool recall_undefined = false;
  bool f1_undefined = false;
};

Metrics metrics(const ConfusionMatrix& cm);

/// Arithmetic mean of each metric; flags are OR-ed.
Metrics mean_metrics(std::span<const Metrics> items);

/// Group sizes by largest remainder: floor(f_i * n) plus one extra item to the
/// groups with the largest fractional parts (earlier groups win ties).
std::vector<std::size_t> partition_sizes(std::size_t n, std::span<const double> fractions);

/// Seeded shuffle of 0..n-1 cut into groups of partition_sizes(). Throws
/// DataError if n == 0 or fractions do not sum to 1 within 1e-9.
std::vector<std::vector<std::size_t>> seeded_partition(std::size_t n, std::span<const double> fractions,
                                                       std::uint64_t seed);

/// One line of experiment bookkeeping.
struct ExperimentRow {
  std::string scenario;
  std::string mode;
  std::string detector;
  std::string fold;
  double threshold = 0;
  ConfusionMatrix cm;
  Metrics m;
};

std::string experiment_csv_header();
std::string experiment_csv_row(const ExperimentRow& row);
nlohmann::ordered_json experiment_json(const ExperimentRow& row);
nlohmann::ordered_json metrics_json(const ConfusionMatrix& cm, const Metrics& m);

}  // namespace rigkit
