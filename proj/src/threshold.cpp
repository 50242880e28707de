#include "rigkit/threshold.hpp"

#include <algorithm>
#include <vector>

namespace rigkit {

namespace {

void check_inputs(std::span<const double> scores, std::span<const Label> labels) {
  if (scores.empty()) throw DataError("classify: empty test set");
  if (scores.size() != labels.size()) throw DataError("classify: score and label counts differ");
}

}  // namespace

ConfusionMatrix classify(std::span<const double> scores, std::span<const Label> labels, double threshold) {
  check_inputs(scores, labels);
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    cm.add(labels[i] == Label::Abnormal, scores[i] < threshold);
  }
  return cm;
}

SweepResult sweep_threshold(std::span<const double> scores, std::span<const Label> labels) {
  check_inputs(scores, labels);
  // Sort once and walk the grid with a moving cut instead of re-classifying.
  std::vector<std::size_t> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  std::int64_t positives = 0;
  for (Label l : labels) positives += l == Label::Abnormal;
  const auto total = static_cast<std::int64_t>(scores.size());

  SweepResult best;
  bool have = false;
  std::int64_t best_num = 0;
  std::int64_t best_den = 1;
  std::size_t cut = 0;
  ConfusionMatrix below;  // counts among items predicted ABNORMAL
  for (int step = 0; step <= 100; ++step) {
    const double t = step / 100.0;
    while (cut < order.size() && scores[order[cut]] < t) {
      (labels[order[cut]] == Label::Abnormal ? below.tp : below.fp) += 1;
      ++cut;
    }
    ConfusionMatrix cm;
    cm.tp = below.tp;
    cm.fp = below.fp;
    cm.fn = positives - below.tp;
    cm.tn = total - positives - below.fp;
    // F1 = 2TP / (2TP + FP + FN), compared exactly so that ties are real ties.
    const std::int64_t num = 2 * cm.tp;
    const std::int64_t den = 2 * cm.tp + cm.fp + cm.fn;
    if (!have || num * best_den > best_num * den) {
      best = {t, cm, metrics(cm)};
      best_num = num;
      best_den = den == 0 ? 1 : den;
      have = true;
    }
  }
  return best;
}

}  // namespace rigkit
