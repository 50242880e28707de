#include "rigkit/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rigkit/csv.hpp"
#include "rigkit/random.hpp"
#include "rigkit/types.hpp"

namespace rigkit {

namespace {

double ratio(std::int64_t num, std::int64_t den, bool& undefined) {
  if (den == 0) {
    undefined = true;
    return 0.0;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

Metrics metrics(const ConfusionMatrix& cm) {
  Metrics m;
  m.accuracy = ratio(cm.tp + cm.tn, cm.total(), m.accuracy_undefined);
  m.precision = ratio(cm.tp, cm.tp + cm.fp, m.precision_undefined);
  m.recall = ratio(cm.tp, cm.tp + cm.fn, m.recall_undefined);
  if (m.precision + m.recall > 0) {
    m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
  } else {
    m.f1 = 0.0;
    m.f1_undefined = true;
  }
  return m;
}

Metrics mean_metrics(std::span<const Metrics> items) {
  Metrics out;
  if (items.empty()) return out;
  for (const Metrics& m : items) {
    out.accuracy += m.accuracy;
    out.precision += m.precision;
    out.recall += m.recall;
    out.f1 += m.f1;
    out.accuracy_undefined |= m.accuracy_undefined;
    out.precision_undefined |= m.precision_undefined;
    out.recall_undefined |= m.recall_undefined;
    out.f1_undefined |= m.f1_undefined;
  }
  const auto n = static_cast<double>(items.size());
  out.accuracy /= n;
  out.precision /= n;
  out.recall /= n;
  out.f1 /= n;
  return out;
}

std::vector<std::size_t> partition_sizes(std::size_t n, std::span<const double> fractions) {
  if (fractions.empty()) throw DataError("partition: no fractions");
  double sum = 0;
  for (double f : fractions) {
    if (f < 0) throw DataError("partition: negative fraction");
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DataError("partition: fractions must sum to 1");

  std::vector<std::size_t> sizes(fractions.size());
  std::vector<double> remainder(fractions.size());
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    const double exact = fractions[i] * static_cast<double>(n);
    sizes[i] = static_cast<std::size_t>(std::floor(exact + 1e-9));
    remainder[i] = exact - static_cast<double>(sizes[i]);
    assigned += sizes[i];
  }
  std::vector<std::size_t> order(fractions.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b] + 1e-12; });
  for (std::size_t k = 0; assigned < n; ++k, ++assigned) sizes[order[k % order.size()]] += 1;
  return sizes;
}

std::vector<std::vector<std::size_t>> seeded_partition(std::size_t n, std::span<const double> fractions,
                                                       std::uint64_t seed) {
  if (n == 0) throw DataError("partition: no items");
  const auto sizes = partition_sizes(n, fractions);
  std::vector<std::size_t> items(n);
  std::iota(items.begin(), items.end(), 0);
  Rng rng(seed);
  rng.shuffle(items);
  std::vector<std::vector<std::size_t>> groups;
  std::size_t at = 0;
  for (std::size_t s : sizes) {
    groups.emplace_back(items.begin() + static_cast<std::ptrdiff_t>(at),
                        items.begin() + static_cast<std::ptrdiff_t>(at + s));
    at += s;
  }
  return groups;
}

std::string experiment_csv_header() {
  return "scenario,mode,detector,fold,threshold,TP,FP,FN,TN,accuracy,precision,recall,f1";
}

std::string experiment_csv_row(const ExperimentRow& r) {
  return csv_row({r.scenario, r.mode, r.detector, r.fold, format_fixed(r.threshold, 2),
                  std::to_string(r.cm.tp), std::to_string(r.cm.fp), std::to_string(r.cm.fn),
                  std::to_string(r.cm.tn), format_fixed(r.m.accuracy, 4), format_fixed(r.m.precision, 4),
                  format_fixed(r.m.recall, 4), format_fixed(r.m.f1, 4)});
}

nlohmann::ordered_json metrics_json(const ConfusionMatrix& cm, const Metrics& m) {
  nlohmann::ordered_json j;
  j["TP"] = cm.tp;
  j["FP"] = cm.fp;
  j["FN"] = cm.fn;
  j["TN"] = cm.tn;
  j["accuracy"] = m.accuracy;
  j["precision"] = m.precision;
  j["recall"] = m.recall;
  j["f1"] = m.f1;
  nlohmann::ordered_json flags = nlohmann::ordered_json::array();
  if (m.accuracy_undefined) flags.push_back("accuracy_undefined");
  if (m.precision_undefined) flags.push_back("precision_undefined");
  if (m.recall_undefined) flags.push_back("recall_undefined");
  if (m.f1_undefined) flags.push_back("f1_undefined");
  j["flags"] = std::move(flags);
  return j;
}

nlohmann::ordered_json experiment_json(const ExperimentRow& r) {
  nlohmann::ordered_json j;
  j["scenario"] = r.scenario;
  j["mode"] = r.mode;
  j["detector"] = r.detector;
  j["fold"] = r.fold;
  j["threshold"] = r.threshold;
  const auto metrics = metrics_json(r.cm, r.m);
  for (const auto& [k, v] : metrics.items()) j[k] = v;
  return j;
}

}  // namespace rigkit
