#include "rigkit/crossval.hpp"

namespace rigkit {

std::vector<AuditEvent> pre_attack_events(const ScenarioLog& log) {
  if (!log.window) return log.events;
  std::vector<AuditEvent> out;
  for (const AuditEvent& e : log.events) {
    if (e.timestamp < log.window->start) out.push_back(e);
  }
  return out;
}

CrossvalResult crossval(std::span<const ScenarioLog> logs, const CrossvalOptions& options) {
  if (options.folds < 2) throw DataError("crossval: need at least 2 folds");
  if (logs.size() < options.folds) {
    throw DataError("crossval: " + std::to_string(logs.size()) + " logs is fewer than " +
                    std::to_string(options.folds) + " folds");
  }
  const std::vector<double> shares(options.folds, 1.0 / static_cast<double>(options.folds));
  const auto blocks = seeded_partition(logs.size(), shares, options.seed);

  std::vector<RiGraph> benign;
  std::vector<RiGraph> whole;
  benign.reserve(logs.size());
  whole.reserve(logs.size());
  for (const ScenarioLog& log : logs) {
    benign.push_back(build_graph(pre_attack_events(log), options.mode).graph);
    whole.push_back(log.window ? build_graph(log.events, options.mode).graph : benign.back());
  }

  CrossvalResult result;
  std::vector<Metrics> per_fold;
  for (std::size_t f = 0; f < options.folds; ++f) {
    const std::vector<std::size_t>& block = blocks[f];
    const std::size_t n_test = partition_sizes(block.size(), std::vector<double>{0.5, 0.5})[0];
    FoldResult fold;
    std::vector<RiGraph> train;
    std::vector<RiGraph> validate;
    for (std::size_t b = 0; b < options.folds; ++b) {
      if (b == f) continue;
      for (std::size_t i : blocks[b]) {
        train.push_back(benign[i]);
        fold.train_ids.push_back(logs[i].id);
      }
    }
    for (std::size_t j = n_test; j < block.size(); ++j) {
      validate.push_back(benign[block[j]]);
      fold.validate_ids.push_back(logs[block[j]].id);
    }
    FitOptions fo = options.fit;
    fo.seed = options.seed + f;
    fold.fit = fit(train, validate, fo);
    const ClusterModel& model = fold.fit.model;

    for (std::size_t j = 0; j < n_test; ++j) {
      const std::size_t i = block[j];
      fold.test_ids.push_back(logs[i].id);
      const bool attack = logs[i].window.has_value();
      const ClusterPrediction p = predict(model, sketch(whole[i], model.max_chunk, logs[i].id));
      fold.outcomes.push_back({logs[i].id, attack, p});
      fold.cm.add(attack, p.label == Label::Abnormal);
      if (attack) {
        const ClusterPrediction q = predict(model, sketch(benign[i], model.max_chunk, logs[i].id + "#pre"));
        fold.outcomes.push_back({logs[i].id + "#pre", false, q});
        fold.cm.add(false, q.label == Label::Abnormal);
      }
    }
    fold.m = metrics(fold.cm);
    per_fold.push_back(fold.m);
    result.folds.push_back(std::move(fold));
  }
  result.mean = mean_metrics(per_fold);
  return result;
}

}  // namespace rigkit
