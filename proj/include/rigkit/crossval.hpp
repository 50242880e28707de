#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rigkit/audit_parser.hpp"
#include "rigkit/cluster.hpp"
#include "rigkit/eval.hpp"
#include "rigkit/labeler.hpp"

namespace rigkit {

struct ScenarioLog {
  std::string id;
  std::vector<AuditEvent> events;
  std::optional<AttackWindow> window;
};

/// Events strictly before the attack start; all events without a window.
std::vector<AuditEvent> pre_attack_events(const ScenarioLog& log);

struct CrossvalOptions {
  std::size_t folds = 4;
  GraphMode mode = GraphMode::PseudoProcess;
  FitOptions fit;
  std::uint64_t seed = 7;
};

struct TestOutcome {
  std::string log_id;
  bool attack_graph = false;  // whole log with a window
  ClusterPrediction prediction;
};

struct FoldResult {
  std::vector<std::string> train_ids;
  std::vector<std::string> validate_ids;
  std::vector<std::string> test_ids;
  FitResult fit;
  std::vector<TestOutcome> outcomes;
  ConfusionMatrix cm;
  Metrics m;
};

struct CrossvalResult {
  std::vector<FoldResult> folds;
  Metrics mean;
};

/// Logs are shuffled once under the seed and cut into `folds` equal blocks.
/// Fold f tests on the first half of block f, validates on the second half
/// and trains on every other block, which gives the 75/12.5/12.5 split at
/// four folds. Training and validation use pre-attack graphs. Each test log
/// contributes its whole-log graph (positive iff it has a window) and, when
/// it has a window, its pre-attack graph as a negative.
CrossvalResult crossval(std::span<const ScenarioLog> logs, const CrossvalOptions& options);

}  // namespace rigkit
