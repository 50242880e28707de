#include "rigkit/growth.hpp"

#include <cmath>

#include "rigkit/csv.hpp"

namespace rigkit {

std::vector<GrowthPoint> growth(std::span<const AuditEvent> events, GraphMode mode, const GrowthOptions& options) {
  if (options.stride == 0) throw DataError("growth: stride must be at least 1");
  if (events.size() <= options.skip_head + options.skip_tail) {
    throw DataError("growth: " + std::to_string(events.size()) + " events do not cover the skipped head and tail");
  }
  const auto body = events.subspan(options.skip_head, events.size() - options.skip_head - options.skip_tail);
  RiGraph g(mode);
  std::vector<GrowthPoint> out;
  auto sample = [&](std::size_t n) {
    out.push_back({n, g.node_count(), g.edge_count(), g.interaction_count()});
  };
  for (std::size_t i = 0; i < body.size(); ++i) {
    apply_event(g, body[i], options.build);
    if ((i + 1) % options.stride == 0) sample(i + 1);
  }
  if (body.size() % options.stride != 0) sample(body.size());
  return out;
}

double log_reference(std::size_t n, double base) {
  if (!(base > 1)) throw DataError("log_reference: base must exceed 1");
  if (n == 0) throw DataError("log_reference: count must be at least 1");
  return std::log(static_cast<double>(n)) / std::log(base);
}

std::vector<double> log_reference(std::span<const std::size_t> counts, double base) {
  std::vector<double> out;
  out.reserve(counts.size());
  for (std::size_t n : counts) out.push_back(log_reference(n, base));
  return out;
}

void write_growth_csv(std::ostream& out, std::span<const GrowthPoint> points, double base) {
  out << "events,vertices,edges,interactions,log_reference\n";
  for (const GrowthPoint& p : points) {
    out << p.events << ',' << p.vertices << ',' << p.edges << ',' << p.interactions << ','
        << format_fixed(log_reference(p.events, base), 6) << '\n';
  }
}

}  // namespace rigkit
