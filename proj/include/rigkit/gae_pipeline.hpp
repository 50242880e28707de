#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rigkit/eval.hpp"
#include "rigkit/gae.hpp"
#include "rigkit/labeler.hpp"
#include "rigkit/linkpred.hpp"
#include "rigkit/threshold.hpp"

namespace rigkit {

using GaeModel = GraphAutoencoder<double>;

struct GaeRunOptions {
  GaeConfig config;
  FeatureOptions features;
  double train_fraction = 0.5;
  /// Fixed threshold; nullopt sweeps the 0.01 grid.
  std::optional<double> threshold;
  std::function<void(int, double)> on_epoch;
};

struct GaeRunResult {
  LinkPredGraph lp;
  EdgeSplit split;
  GaeModel model;
  std::vector<double> loss_trace;
  std::vector<double> test_scores;  // parallel to split.test
  double threshold = 0;
  ConfusionMatrix cm;
  Metrics m;
};

/// Link-prediction protocol on one labelled graph: convert, split the NORMAL
/// edges, train on the training half with an adjacency of training edges
/// only, then score and classify every held-out edge.
GaeRunResult run_gae(const RiGraph& g, const EdgeLabels& labels, const SyscallTable& table,
                     const GaeRunOptions& options);

/// Scores arbitrary node pairs by id with a trained model. The adjacency is
/// rebuilt from `train_edges`. Throws DataError for an unknown id.
std::vector<double> score_pairs(const GaeModel& model, const LinkPredGraph& lp, const Eigen::MatrixXd& features,
                                std::span<const NodePair> train_edges,
                                std::span<const std::pair<std::string, std::string>> pairs);

nlohmann::ordered_json model_to_json(const GaeModel& model, const GaeConfig& config);
/// Throws DataError on a wrong format tag, version or shape.
std::pair<GaeModel, GaeConfig> model_from_json(const nlohmann::json& j);

std::string_view to_string(Optimizer o);
std::optional<Optimizer> parse_optimizer(std::string_view name);

}  // namespace rigkit
