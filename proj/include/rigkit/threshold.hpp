#pragma once

#include <span>

#include "rigkit/eval.hpp"
#include "rigkit/labeler.hpp"

namespace rigkit {

/// Link scores near 1 mean "expected", so an edge is predicted ABNORMAL iff
/// its score is strictly below the threshold. Throws DataError on empty input
/// or mismatched lengths.
ConfusionMatrix classify(std::span<const double> scores, std::span<const Label> labels, double threshold);

struct SweepResult {
  double threshold = 0;
  ConfusionMatrix cm;
  Metrics m;
};

/// Thresholds 0.00, 0.01, ..., 1.00; keeps the highest F1, the smallest
/// threshold among equals.
SweepResult sweep_threshold(std::span<const double> scores, std::span<const Label> labels);

}  // namespace rigkit
