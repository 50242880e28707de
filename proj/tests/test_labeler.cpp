#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "rigkit/labeler.hpp"
#include "rigkit/synth.hpp"

using namespace rigkit;

namespace {

/// Eight edges created one second apart, from t=1s to t=8s, each later
/// revisited at t=20s.
RiGraph ladder() {
  RiGraph g;
  const auto p = g.add_update_node("p", NodeType::Process, {});
  for (int i = 1; i <= 8; ++i) {
    const auto f = g.add_update_node("/f" + std::to_string(i), NodeType::File, {});
    g.add_update_edge(p, f, {Timestamp{i * 1000}, 0});
  }
  for (int i = 1; i <= 8; ++i) g.add_update_edge(p, *g.find_node("/f" + std::to_string(i)), {Timestamp{20000}, 1});
  return g;
}

}  // namespace

TEST_CASE("five edges before the window, three inside") {
  const EdgeLabels l = label_edges(ladder(), AttackWindow::from_seconds(6, 2));
  CHECK(l.normal == 5);
  CHECK(l.abnormal == 3);
  for (int i = 0; i < 8; ++i) CHECK(l.labels[i] == (i >= 5 ? Label::Abnormal : Label::Normal));
  CHECK_FALSE(l.window_outside_span);
}

TEST_CASE("later interactions never relabel an older edge") {
  // Every edge is touched again at t=20s, inside this window.
  const EdgeLabels l = label_edges(ladder(), AttackWindow::from_seconds(19, 5));
  CHECK(l.abnormal == 0);
}

TEST_CASE("window endpoints are inclusive") {
  const EdgeLabels l = label_edges(ladder(), AttackWindow::from_seconds(3, 2));
  CHECK(l.abnormal == 3);  // t = 3, 4, 5
}

TEST_CASE("window outside the graph span") {
  const EdgeLabels l = label_edges(ladder(), AttackWindow::from_seconds(100, 1));
  CHECK(l.window_outside_span);
  CHECK(l.abnormal == 0);
  CHECK(label_edges(ladder(), std::nullopt).abnormal == 0);
  CHECK_THROWS_AS(AttackWindow::from_seconds(1, 0), DataError);
}

TEST_CASE("widening the window never clears an ABNORMAL label") {
  const auto events = parse_text(generate(default_scenario(AttackKind::DosLike, 5)).text, fixtures::x64()).events;
  const RiGraph g = build_graph(events, GraphMode::PseudoProcess).graph;
  const std::int64_t first = g.edge(0).created_at.ms;
  for (std::int64_t start : {first + 1000, first + 60000, first + 150000}) {
    EdgeLabels prev = label_edges(g, AttackWindow{Timestamp{start}, 1000});
    for (std::int64_t grow : {2000, 10000, 50000}) {
      const EdgeLabels wider = label_edges(g, AttackWindow{Timestamp{start - grow}, 1000 + 2 * grow});
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (prev.labels[i] == Label::Abnormal) CHECK(wider.labels[i] == Label::Abnormal);
      }
      prev = wider;
    }
  }
}

TEST_CASE("window sidecar") {
  std::istringstream in("# start duration\n1632851805.333 12.5\n");
  const auto w = read_window(in);
  REQUIRE(w.has_value());
  CHECK(w->start.ms == 1632851805333);
  CHECK(w->duration_ms == 12500);
  CHECK(format_window(*w) == "1632851805.333 12.500\n");
  std::istringstream empty("");
  CHECK_FALSE(read_window(empty).has_value());
  std::istringstream bad("soon\n");
  CHECK_THROWS_AS(read_window(bad), DataError);
}

TEST_CASE("label CSV") {
  const RiGraph g = ladder();
  const std::string csv = labels_to_csv(g, label_edges(g, AttackWindow::from_seconds(8, 1)));
  CHECK(csv.starts_with("from,to,label\np,/f1,normal\n"));
  CHECK(csv.ends_with("p,/f8,abnormal\n"));
}
