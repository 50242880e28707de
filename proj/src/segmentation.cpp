#include "rigkit/segmentation.hpp"

#include <algorithm>
#include <cmath>

#include "rigkit/csv.hpp"

namespace rigkit {

SegmentWidth SegmentWidth::seconds(double seconds) {
  const auto ms = static_cast<std::int64_t>(std::llround(seconds * 1000.0));
  if (!(seconds > 0) || ms < 1) throw DataError("segment width must be at least 1 ms");
  return SegmentWidth(Kind::Finite, ms);
}

SyscallIndexError::SyscallIndexError(int index, int max_index)
    : DataError("syscall index " + std::to_string(index) + " exceeds table max_index " +
                std::to_string(max_index) + " (table mismatch?)"),
      index_(index) {}

namespace {

void check_index(int syscall, const SyscallTable& table) {
  if (syscall < 0 || syscall > table.max_index()) throw SyscallIndexError(syscall, table.max_index());
}

CountVector zeros(const SyscallTable& table) {
  return CountVector::Zero(static_cast<Eigen::Index>(table.width()));
}

}  // namespace

std::vector<SegmentVector> segment_log(std::span<const AuditEvent> events, const SyscallTable& table,
                                       double delta_seconds, double stride_seconds) {
  const std::int64_t delta = SegmentWidth::seconds(delta_seconds).millis();
  const std::int64_t stride = SegmentWidth::seconds(stride_seconds).millis();
  if (stride > delta) throw DataError("segment stride must not exceed the interval");
  std::vector<SegmentVector> out;
  if (events.empty()) return out;

  auto [lo, hi] = std::minmax_element(events.begin(), events.end(),
                                      [](const AuditEvent& a, const AuditEvent& b) {
                                        return a.timestamp < b.timestamp;
                                      });
  const Timestamp t0 = lo->timestamp;
  const std::int64_t span = hi->timestamp.ms - t0.ms;
  const std::int64_t last = span < delta ? 0 : (span - delta) / stride + 1;

  out.reserve(static_cast<std::size_t>(last + 1));
  for (std::int64_t k = 0; k <= last; ++k) {
    const Timestamp start{t0.ms + k * stride};
    out.push_back({start, Timestamp{start.ms + delta}, zeros(table)});
  }
  for (const AuditEvent& e : events) {
    check_index(e.syscall, table);
    const std::int64_t d = e.timestamp.ms - t0.ms;
    const std::int64_t k_max = std::min(d / stride, last);
    const std::int64_t k_min = d < delta ? 0 : (d - delta) / stride + 1;
    for (std::int64_t k = k_min; k <= k_max; ++k) out[static_cast<std::size_t>(k)].counts[e.syscall] += 1;
  }
  return out;
}

CountVector aggregate_edge_vector(const RigEdge& edge, const SyscallTable& table) {
  CountVector c = zeros(table);
  for (const Interaction& ix : edge.interactions) {
    check_index(ix.syscall, table);
    c[ix.syscall] += 1;
  }
  return c;
}

std::vector<EdgeVector> edge_vectors(const RiGraph& g, const SyscallTable& table, SegmentWidth width) {
  std::vector<EdgeVector> out;
  for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
    const RigEdge& edge = g.edge(ei);
    switch (width.kind()) {
      case SegmentWidth::Kind::Infinite:
        out.push_back({ei, edge.created_at, std::nullopt, aggregate_edge_vector(edge, table)});
        break;
      case SegmentWidth::Kind::Unit:
        for (const Interaction& ix : edge.interactions) {
          check_index(ix.syscall, table);
          EdgeVector v{ei, ix.time, ix.time, zeros(table)};
          v.counts[ix.syscall] = 1;
          out.push_back(std::move(v));
        }
        break;
      case SegmentWidth::Kind::Finite: {
        const std::int64_t delta = width.millis();
        auto bucket_of = [&](Timestamp t) {
          const std::int64_t d = t.ms - edge.created_at.ms;
          return d >= 0 ? d / delta : -((-d + delta - 1) / delta);
        };
        std::vector<std::pair<std::int64_t, int>> items;
        items.reserve(edge.interactions.size());
        for (const Interaction& ix : edge.interactions) {
          check_index(ix.syscall, table);
          items.emplace_back(bucket_of(ix.time), ix.syscall);
        }
        std::stable_sort(items.begin(), items.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < items.size();) {
          const std::int64_t b = items[i].first;
          const Timestamp start{edge.created_at.ms + b * delta};
          EdgeVector v{ei, start, Timestamp{start.ms + delta}, zeros(table)};
          for (; i < items.size() && items[i].first == b; ++i) v.counts[items[i].second] += 1;
          out.push_back(std::move(v));
        }
        break;
      }
    }
  }
  return out;
}

std::vector<UnitEdge> unit_edges(const RiGraph& g) {
  std::vector<UnitEdge> out;
  out.reserve(g.interaction_count());
  for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
    const RigEdge& e = g.edge(ei);
    for (const Interaction& ix : e.interactions) out.push_back({ei, e.from, e.to, ix.time, ix.syscall});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const UnitEdge& a, const UnitEdge& b) { return a.time < b.time; });
  return out;
}

namespace {

std::string sparse_counts(const CountVector& counts) {
  std::string out;
  for (Eigen::Index i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(i) + ":" + std::to_string(counts[i]);
  }
  return out;
}

}  // namespace

void write_segments_csv(std::ostream& out, std::span<const SegmentVector> log_vectors) {
  out << "scope,edge,start,end,counts\n";
  for (const SegmentVector& v : log_vectors) {
    out << csv_row({"log", "-", format_seconds(v.start), format_seconds(v.end), sparse_counts(v.counts)})
        << '\n';
  }
}

void write_edge_vectors_csv(std::ostream& out, const RiGraph& g, std::span<const EdgeVector> vectors) {
  out << "scope,edge,start,end,counts\n";
  for (const EdgeVector& v : vectors) {
    const EdgeKey key = g.edge_key(v.edge);
    out << csv_row({"edge", key.from + "->" + key.to, format_seconds(v.start),
                    v.end ? format_seconds(*v.end) : "inf", sparse_counts(v.counts)})
        << '\n';
  }
}

}  // namespace rigkit
