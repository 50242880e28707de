#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rigkit/rig_graph.hpp"

namespace rigkit {

enum class Label { Normal, Abnormal };

std::string_view to_string(Label label);

/// Known attack interval; both endpoints are inclusive.
struct AttackWindow {
  Timestamp start;
  std::int64_t duration_ms = 0;

  /// Throws DataError unless duration > 0.
  static AttackWindow from_seconds(double start, double duration);

  Timestamp end() const { return Timestamp{start.ms + duration_ms}; }
  bool contains(Timestamp t) const { return t >= start && t <= end(); }
};

/// Sidecar format: one line `start_seconds duration_seconds`. An empty file
/// means "no attack in this log".
std::optional<AttackWindow> read_window(std::istream& in);
std::string format_window(const AttackWindow& w);

struct EdgeLabels {
  std::vector<Label> labels;  // indexed like RiGraph::edges()
  std::size_t normal = 0;
  std::size_t abnormal = 0;
  /// The window does not intersect the graph's time span.
  bool window_outside_span = false;
};

/// An edge is ABNORMAL iff it was created inside the window; later
/// interactions on an older edge do not change its label.
EdgeLabels label_edges(const RiGraph& g, const std::optional<AttackWindow>& window);

/// `from,to,label`
std::string labels_to_csv(const RiGraph& g, const EdgeLabels& labels);

}  // namespace rigkit
