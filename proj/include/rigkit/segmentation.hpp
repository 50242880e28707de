#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "rigkit/audit_parser.hpp"
#include "rigkit/rig_graph.hpp"
#include "rigkit/syscall_table.hpp"

namespace rigkit {

/// Dense syscall histogram, indexed by syscall number.
using CountVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Interval length for time segmentation: a finite duration, the infinite
/// interval (one vector per edge) or "unit" (one vector per interaction).
class SegmentWidth {
 public:
  enum class Kind { Finite, Infinite, Unit };

  /// Throws DataError unless seconds >= 0.001.
  static SegmentWidth seconds(double seconds);
  static SegmentWidth infinite() { return SegmentWidth(Kind::Infinite, 0); }
  static SegmentWidth unit() { return SegmentWidth(Kind::Unit, 0); }

  Kind kind() const { return kind_; }
  std::int64_t millis() const { return millis_; }

 private:
  SegmentWidth(Kind kind, std::int64_t millis) : kind_(kind), millis_(millis) {}
  Kind kind_;
  std::int64_t millis_;
};

/// A syscall number that does not fit the table's vector length.
class SyscallIndexError : public DataError {
 public:
  SyscallIndexError(int index, int max_index);
  int index() const { return index_; }

 private:
  int index_;
};

/// Whole-log histogram over the half-open window [start, end).
struct SegmentVector {
  Timestamp start;
  Timestamp end;
  CountVector counts;
};

struct EdgeVector {
  std::size_t edge = 0;
  Timestamp start;
  std::optional<Timestamp> end;  // nullopt for the infinite interval
  CountVector counts;
};

/// Windows start at the first event and advance by `stride`; the last window
/// is the first one that reaches past the final event. Every event adds 1 at
/// its syscall index to each window containing it. Requires 0 < stride <= delta.
std::vector<SegmentVector> segment_log(std::span<const AuditEvent> events, const SyscallTable& table,
                                       double delta_seconds, double stride_seconds);

/// Per-edge histograms. Finite windows are anchored at the edge's creation
/// time and only non-empty windows are emitted.
std::vector<EdgeVector> edge_vectors(const RiGraph& g, const SyscallTable& table, SegmentWidth width);

/// Histogram of all interactions of one edge.
CountVector aggregate_edge_vector(const RigEdge& edge, const SyscallTable& table);

/// One logical edge per (timestamp, syscall) interaction.
struct UnitEdge {
  std::size_t edge = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  Timestamp time;
  int syscall = 0;
};

/// Sorted by time; ties keep edge order, then interaction order.
std::vector<UnitEdge> unit_edges(const RiGraph& g);

/// `scope,edge,start,end,counts` with counts as space-separated idx:count pairs.
void write_segments_csv(std::ostream& out, std::span<const SegmentVector> log_vectors);
void write_edge_vectors_csv(std::ostream& out, const RiGraph& g, std::span<const EdgeVector> vectors);

}  // namespace rigkit
