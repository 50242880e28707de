#include <doctest.h>

#include "fixtures.hpp"
#include "rigkit/labeler.hpp"
#include "rigkit/synth.hpp"

using namespace rigkit;

TEST_CASE("benign logs carry no window and label nothing") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const GeneratedLog log = generate(default_scenario(AttackKind::None, seed));
    CHECK_FALSE(log.window.has_value());
    CHECK(log.attack_events == 0);
    const auto parsed = parse_text(log.text, fixtures::x64());
    CHECK(parsed.warnings.empty());
    CHECK(parsed.events.size() == log.syscall_events);
    const RiGraph g = build_graph(parsed.events, GraphMode::PseudoProcess).graph;
    CHECK(label_edges(g, log.window).abnormal == 0);
  }
}

TEST_CASE("attack logs") {
  for (std::uint64_t seed : {4u, 5u}) {
    const GeneratedLog dos = generate(default_scenario(AttackKind::DosLike, seed));
    const GeneratedLog priv = generate(default_scenario(AttackKind::PrivescLike, seed));
    REQUIRE(dos.window.has_value());
    REQUIRE(priv.window.has_value());
    CHECK(dos.attack_events > priv.attack_events);

    const auto events = parse_text(dos.text, fixtures::x64()).events;
    CHECK(events.size() == dos.syscall_events);
    std::size_t inside = 0;
    for (const auto& e : events) inside += dos.window->contains(e.timestamp);
    CHECK(inside >= dos.attack_events);

    // The attack starts between 40% and 70% of the run.
    const ScenarioSpec spec = default_scenario(AttackKind::DosLike, seed);
    const double offset = dos.window->start.seconds() - spec.epoch;
    CHECK(offset >= 0.4 * spec.duration - 1e-3);
    CHECK(offset <= 0.7 * spec.duration + 1e-3);

    const RiGraph g = build_graph(events, GraphMode::PseudoProcess).graph;
    CHECK(label_edges(g, dos.window).abnormal > 0);
  }
}

TEST_CASE("generation is deterministic in the scenario") {
  const ScenarioSpec spec = default_scenario(AttackKind::PrivescLike, 9);
  CHECK(generate(spec).text == generate(spec).text);
  ScenarioSpec other = spec;
  other.seed = 10;
  CHECK(generate(other).text != generate(spec).text);
}

TEST_CASE("attack scale multiplies attack steps") {
  ScenarioSpec spec = default_scenario(AttackKind::DosLike, 2);
  const std::size_t one = generate(spec).attack_events;
  spec.attack_scale = 4;
  CHECK(generate(spec).attack_events > one);
}

TEST_CASE("scenario JSON round trip") {
  ScenarioSpec spec = default_scenario(AttackKind::DosLike, 3);
  spec.attack_start = 42.0;
  spec.attack_scale = 2;
  const auto j = spec_to_json(spec);
  const ScenarioSpec back = spec_from_json(nlohmann::json::parse(j.dump()));
  CHECK(spec_to_json(back).dump() == j.dump());
  CHECK(generate(back).text == generate(spec).text);

  CHECK(parse_attack_kind("dos_like") == AttackKind::DosLike);
  CHECK_FALSE(parse_attack_kind("meteor").has_value());
  CHECK_THROWS_AS(spec_from_json(nlohmann::json{{"attack", "meteor"}}), DataError);
  nlohmann::json bad = nlohmann::json::parse(j.dump());
  bad["duration"] = -1;
  CHECK_THROWS_AS(generate(spec_from_json(bad)), DataError);
}
