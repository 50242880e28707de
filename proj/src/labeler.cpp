#include "rigkit/labeler.hpp"

#include <sstream>

#include "rigkit/csv.hpp"

namespace rigkit {

std::string_view to_string(Label label) { return label == Label::Abnormal ? "abnormal" : "normal"; }

AttackWindow AttackWindow::from_seconds(double start, double duration) {
  AttackWindow w{Timestamp::from_seconds(start), std::llround(duration * 1000.0)};
  if (!(duration > 0) || w.duration_ms <= 0) throw DataError("attack window duration must be > 0");
  return w;
}

std::optional<AttackWindow> read_window(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double start = 0;
    double duration = 0;
    if (!(fields >> start)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw DataError("window file: expected `start_seconds duration_seconds`");
    }
    if (!(fields >> duration)) throw DataError("window file: missing duration");
    return AttackWindow::from_seconds(start, duration);
  }
  return std::nullopt;
}

std::string format_window(const AttackWindow& w) {
  return format_seconds(w.start) + " " + format_seconds(Timestamp{w.duration_ms}) + "\n";
}

EdgeLabels label_edges(const RiGraph& g, const std::optional<AttackWindow>& window) {
  EdgeLabels out;
  out.labels.assign(g.edge_count(), Label::Normal);
  if (window && g.edge_count() > 0) {
    Timestamp lo = g.edge(0).created_at;
    Timestamp hi = lo;
    for (const RigEdge& e : g.edges()) {
      lo = std::min(lo, e.created_at);
      for (const Interaction& ix : e.interactions) hi = std::max(hi, ix.time);
    }
    out.window_outside_span = window->end() < lo || window->start > hi;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (window->contains(g.edge(i).created_at)) out.labels[i] = Label::Abnormal;
    }
  } else if (window) {
    out.window_outside_span = true;
  }
  for (Label l : out.labels) (l == Label::Abnormal ? out.abnormal : out.normal) += 1;
  return out;
}

std::string labels_to_csv(const RiGraph& g, const EdgeLabels& labels) {
  std::string out = "from,to,label\n";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const EdgeKey key = g.edge_key(i);
    out += csv_row({key.from, key.to, std::string(to_string(labels.labels[i]))});
    out += '\n';
  }
  return out;
}

}  // namespace rigkit
