#include <doctest.h>

#include <map>
#include <sstream>

#include "fixtures.hpp"
#include "rigkit/segmentation.hpp"
#include "rigkit/synth.hpp"

using namespace rigkit;

namespace {

AuditEvent at(std::int64_t ms, int syscall) {
  AuditEvent e;
  e.timestamp = Timestamp{ms};
  e.syscall = syscall;
  e.pid = "1";
  e.uid = "0";
  e.exe = "/bin/x";
  return e;
}

SyscallTable small_table() {
  std::istringstream in("a 0\nb 1\nc 2\nd 3\ne 4\nf 5\n");
  return load_syscall_table(in);
}

}  // namespace

TEST_CASE("two events inside one window") {
  const std::vector<AuditEvent> events = {at(0, 3), at(1000, 4)};
  const auto v = segment_log(events, small_table(), 10, 10);
  REQUIRE(v.size() == 1);
  CHECK(v[0].counts.size() == 6);
  CHECK(v[0].counts[3] == 1);
  CHECK(v[0].counts[4] == 1);
  CHECK(v[0].counts.sum() == 2);
}

TEST_CASE("overlapping windows agree with per-event membership") {
  std::vector<AuditEvent> events;
  for (int i = 0; i < 100; ++i) events.push_back(at(i * 1000, i % 5));
  const auto v = segment_log(events, small_table(), 10, 5);
  REQUIRE(v.size() == 19);
  for (std::size_t w = 0; w < v.size(); ++w) {
    const std::int64_t lo = static_cast<std::int64_t>(w) * 5000;
    CHECK(v[w].start.ms == lo);
    CHECK(v[w].end.ms == lo + 10000);
    CountVector expect = CountVector::Zero(6);
    for (const AuditEvent& e : events) {
      if (e.timestamp.ms >= lo && e.timestamp.ms < lo + 10000) expect[e.syscall] += 1;
    }
    CHECK(v[w].counts == expect);
  }
  // Interior events sit in exactly two windows; the first five and the last
  // five (past the final stride) in one.
  std::int64_t total = 0;
  for (const auto& s : v) total += s.counts.sum();
  CHECK(total == 2 * 100 - 10);
}

TEST_CASE("stride equal to delta conserves the event count") {
  const auto events = parse_text(generate(default_scenario(AttackKind::DosLike, 3)).text, fixtures::x64()).events;
  const auto v = segment_log(events, fixtures::x64(), 7, 7);
  std::int64_t total = 0;
  for (const auto& s : v) total += s.counts.sum();
  CHECK(total == static_cast<std::int64_t>(events.size()));
}

TEST_CASE("invalid segmentation arguments") {
  const std::vector<AuditEvent> events = {at(0, 3)};
  CHECK_THROWS_AS(segment_log(events, small_table(), 10, 20), DataError);
  CHECK_THROWS_AS(segment_log(events, small_table(), 10, 0), DataError);
  CHECK_THROWS_AS(SegmentWidth::seconds(0.0001), DataError);
  const std::vector<AuditEvent> wide = {at(0, 20)};
  try {
    segment_log(wide, small_table(), 10, 10);
    FAIL("expected SyscallIndexError");
  } catch (const SyscallIndexError& e) {
    CHECK(e.index() == 20);
  }
}

TEST_CASE("edge vectors keep edges apart") {
  // A->B carries e2 and e5, C->D carries e3 and e4.
  RiGraph g;
  const auto a = g.add_update_node("A", NodeType::Process, {});
  const auto b = g.add_update_node("B", NodeType::File, {});
  const auto c = g.add_update_node("C", NodeType::Process, {});
  const auto d = g.add_update_node("D", NodeType::File, {});
  g.add_update_edge(a, b, {Timestamp{2000}, 0});
  g.add_update_edge(c, d, {Timestamp{3000}, 1});
  g.add_update_edge(c, d, {Timestamp{4000}, 2});
  g.add_update_edge(a, b, {Timestamp{5000}, 3});

  const auto inf = edge_vectors(g, small_table(), SegmentWidth::infinite());
  REQUIRE(inf.size() == 2);
  CHECK(inf[0].counts.sum() == 2);
  CHECK(inf[1].counts.sum() == 2);
  CHECK(inf[0].counts[1] == 0);
  CHECK(inf[0].counts[2] == 0);
  CHECK(inf[0].counts[0] == 1);
  CHECK(inf[0].counts[3] == 1);
  CHECK_FALSE(inf[0].end.has_value());
  CHECK(aggregate_edge_vector(g.edge(1), small_table()) == inf[1].counts);

  const auto unit = edge_vectors(g, small_table(), SegmentWidth::unit());
  CHECK(unit.size() == 4);
  for (const auto& v : unit) CHECK(v.counts.sum() == 1);

  // Finite windows anchor at the edge's creation: A->B spans [2,4) and [4,6).
  const auto fin = edge_vectors(g, small_table(), SegmentWidth::seconds(2));
  std::map<std::size_t, std::int64_t> per_edge;
  for (const auto& v : fin) per_edge[v.edge] += v.counts.sum();
  CHECK(per_edge[0] == 2);
  CHECK(per_edge[1] == 2);
  CHECK(fin.front().start.ms == 2000);
}

TEST_CASE("unit edges follow time order and count every interaction") {
  const auto events = parse_text(generate(default_scenario(AttackKind::PrivescLike, 4)).text, fixtures::x64()).events;
  const RiGraph g = build_graph(events, GraphMode::PseudoProcess).graph;
  const auto units = unit_edges(g);
  CHECK(units.size() == g.interaction_count());
  for (std::size_t i = 1; i < units.size(); ++i) CHECK(units[i - 1].time <= units[i].time);
}

TEST_CASE("CSV layout") {
  const std::vector<AuditEvent> events = {at(0, 3), at(1000, 3)};
  const auto v = segment_log(events, small_table(), 10, 10);
  std::ostringstream out;
  write_segments_csv(out, v);
  CHECK(out.str() == "scope,edge,start,end,counts\nlog,-,0.000,10.000,3:2\n");
}
