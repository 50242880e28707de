#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "rigkit/audit_parser.hpp"
#include "rigkit/rig_graph.hpp"

namespace rigkit {

struct GrowthPoint {
  std::size_t events = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t interactions = 0;
};

struct GrowthOptions {
  std::size_t stride = 200;
  std::size_t skip_head = 200;
  std::size_t skip_tail = 200;
  BuildOptions build;
};

/// Folds the events between the skipped head and tail, sampling the graph
/// size every `stride` events and once more after the last event.
std::vector<GrowthPoint> growth(std::span<const AuditEvent> events, GraphMode mode, const GrowthOptions& options = {});

/// ln(n) / ln(base).
double log_reference(std::size_t n, double base = 1.02);
std::vector<double> log_reference(std::span<const std::size_t> counts, double base = 1.02);

/// `events,vertices,edges,interactions,log_reference`
void write_growth_csv(std::ostream& out, std::span<const GrowthPoint> points, double base = 1.02);

}  // namespace rigkit
