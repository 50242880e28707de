#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "rigkit/cluster.hpp"
#include "rigkit/crossval.hpp"
#include "rigkit/random.hpp"
#include "rigkit/synth.hpp"

using namespace rigkit;

namespace {

GraphSketch make(std::map<std::string, std::int64_t> counts, std::string id = {}) {
  return GraphSketch{std::move(id), std::move(counts)};
}

std::vector<GraphSketch> random_sketches(Rng& rng, std::size_t n) {
  static const char* alphabet[] = {"a", "b", "c", "d", "e", "f"};
  std::vector<GraphSketch> out;
  for (std::size_t i = 0; i < n; ++i) {
    GraphSketch s;
    s.id = "s" + std::to_string(i);
    for (const char* key : alphabet) {
      if (rng.uniform() < 0.6) s.shingles[key] = 1 + static_cast<std::int64_t>(rng.index(9));
    }
    if (s.empty()) s.shingles["a"] = 1;
    out.push_back(std::move(s));
  }
  return out;
}

/// Minimum cost over every k-subset.
double brute_force_cost(const Eigen::MatrixXd& d, std::size_t k) {
  const auto n = static_cast<std::size_t>(d.rows());
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  double best = std::numeric_limits<double>::infinity();
  do {
    double cost = 0;
    for (std::size_t p = 0; p < n; ++p) {
      double near = std::numeric_limits<double>::infinity();
      for (std::size_t m = 0; m < n; ++m) {
        if (pick[m]) near = std::min(near, d(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(m)));
      }
      cost += near;
    }
    best = std::min(best, cost);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

RiGraph single_edge() {
  RiGraph g;
  const auto u = g.add_update_node("0", NodeType::User, {});
  const auto p = g.add_update_node("p", NodeType::Process, {});
  g.add_update_edge(u, p, {Timestamp{1}, 59});
  return g;
}

std::vector<AuditEvent> events_for(AttackKind kind, std::uint64_t seed, double duration = 60) {
  ScenarioSpec spec = default_scenario(kind, seed);
  spec.duration = duration;
  spec.attack_scale = 4;
  return parse_text(generate(spec).text, fixtures::x64()).events;
}

}  // namespace

TEST_CASE("sketch of a single edge") {
  const GraphSketch s = sketch(single_edge(), 50);
  CHECK(s.shingles == std::map<std::string, std::int64_t>{{"U59;P", 1}, {"P", 1}});
  CHECK(sketch(RiGraph{}, 50).empty());
  CHECK_THROWS_AS(sketch(single_edge(), 0), DataError);
}

TEST_CASE("chunks split the traversal string") {
  RiGraph g;
  const auto p = g.add_update_node("p", NodeType::Process, {});
  const auto f = g.add_update_node("/f", NodeType::File, {});
  for (int t = 0; t < 4; ++t) g.add_update_edge(p, f, {Timestamp{t}, 0});
  // "P0;F0;F0;F0;F" cut every 4 characters; the file node itself is "F".
  const GraphSketch s = sketch(g, 4);
  CHECK(s.shingles == std::map<std::string, std::int64_t>{{"P0;F", 1}, {"0;F0", 1}, {";F0;", 1}, {"F", 2}});
}

TEST_CASE("token mass follows the interaction count") {
  // Each interaction contributes one "<syscall>;<type>" token, so the number
  // of ';' characters across all shingles equals the number of interactions.
  const auto events = events_for(AttackKind::PrivescLike, 3);
  const RiGraph g = build_graph(events, GraphMode::ProcessTree).graph;
  std::vector<AuditEvent> doubled = events;
  doubled.insert(doubled.end(), events.begin(), events.end());
  const RiGraph g2 = build_graph(doubled, GraphMode::ProcessTree).graph;
  auto mass = [](const GraphSketch& s) {
    std::int64_t m = 0;
    for (const auto& [k, c] : s.shingles) m += c * std::count(k.begin(), k.end(), ';');
    return m;
  };
  for (std::size_t chunk : {10u, 24u, 50u}) {
    CHECK(mass(sketch(g, chunk)) == static_cast<std::int64_t>(g.interaction_count()));
    CHECK(mass(sketch(g2, chunk)) == 2 * mass(sketch(g, chunk)));
    CHECK(sketch(g, chunk) == sketch(g, chunk));
  }
}

TEST_CASE("cosine distance") {
  const auto xy = make({{"x", 1}, {"y", 1}});
  const auto x = make({{"x", 1}});
  CHECK(cosine_distance(xy, x) == doctest::Approx(1 - 1 / std::sqrt(2.0)));
  CHECK(cosine_distance(xy, xy) == 0.0);
  CHECK(cosine_distance(x, make({{"z", 4}})) == 1.0);
  CHECK(cosine_distance(make({}), make({})) == 0.0);
  CHECK(cosine_distance(make({}), x) == 1.0);
  CHECK(cosine_distance(x, xy) == cosine_distance(xy, x));
}

TEST_CASE("k-medoids matches exhaustive search") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const std::size_t n = 3 + rng.index(6);
    const auto sketches = random_sketches(rng, n);
    const Eigen::MatrixXd d = distance_matrix(sketches);
    for (std::size_t k = 1; k <= std::min<std::size_t>(3, n); ++k) {
      const MedoidSet ms = kmedoids(d, k, seed);
      CHECK(ms.medoids.size() == k);
      CHECK(std::is_sorted(ms.medoids.begin(), ms.medoids.end()));
      CHECK(std::abs(ms.cost - brute_force_cost(d, k)) < 1e-12);
      CHECK(ms.cost == doctest::Approx(medoid_cost(d, ms.medoids)));
    }
  }
  const Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
  CHECK_THROWS_AS(kmedoids(d, 0, 1), DataError);
  CHECK_THROWS_AS(kmedoids(d, 3, 1), DataError);
}

TEST_CASE("k-medoids cost ignores input order") {
  Rng rng(5);
  auto sketches = random_sketches(rng, 8);
  const double cost = kmedoids(distance_matrix(sketches), 3, 1).cost;
  for (int round = 0; round < 5; ++round) {
    rng.shuffle(sketches);
    CHECK(kmedoids(distance_matrix(sketches), 3, 1).cost == doctest::Approx(cost).epsilon(1e-12));
  }
}

TEST_CASE("fitting fixed candidates") {
  SUBCASE("identical sketches give a zero radius") {
    const std::vector<GraphSketch> same(3, make({{"a", 2}, {"b", 1}}));
    const ClusterModel m = fit_fixed(same, 10, 1, 1.5, 1);
    CHECK(m.radii == std::vector<double>{0.0});
    CHECK(predict(m, same[0]).label == Label::Normal);
    CHECK(predict(m, make({{"a", 1}})).label == Label::Abnormal);
  }
  SUBCASE("two tight pairs get one medoid each") {
    const std::vector<GraphSketch> pairs = {make({{"a", 10}, {"b", 1}}), make({{"a", 9}, {"b", 1}}),
                                            make({{"c", 10}, {"d", 1}}), make({{"c", 9}, {"d", 1}})};
    const ClusterModel m = fit_fixed(pairs, 10, 2, 1.0, 1);
    REQUIRE(m.medoids.size() == 2);
    const bool first_left = m.medoids[0].shingles.contains("a");
    CHECK(first_left != m.medoids[1].shingles.contains("a"));
  }
}

TEST_CASE("prediction") {
  const std::vector<GraphSketch> train = {make({{"a", 3}}), make({{"a", 3}, {"b", 1}}), make({{"a", 2}, {"b", 2}})};
  const ClusterModel m = fit_fixed(train, 10, 1, 1.0, 1);
  const ClusterPrediction at_medoid = predict(m, m.medoids[0]);
  CHECK(at_medoid.label == Label::Normal);
  CHECK(at_medoid.distance == 0.0);
  CHECK(predict(m, make({{"zz", 1}})).label == Label::Abnormal);
  const ClusterPrediction empty = predict(m, make({}));
  CHECK(empty.label == Label::Abnormal);
  CHECK(empty.distance == 1.0);

  // Larger slack never turns a NORMAL verdict into ABNORMAL.
  Rng rng(9);
  const auto probes = random_sketches(rng, 40);
  const auto pool = random_sketches(rng, 8);
  for (std::size_t k = 1; k <= 3; ++k) {
    const ClusterModel tight = fit_fixed(pool, 10, k, 1.0, 2);
    const ClusterModel loose = fit_fixed(pool, 10, k, 1.5, 2);
    for (const auto& p : probes) {
      if (predict(tight, p).label == Label::Normal) CHECK(predict(loose, p).label == Label::Normal);
    }
  }
}

TEST_CASE("fit keeps the first candidate with the fewest validation false positives") {
  std::vector<RiGraph> train;
  std::vector<RiGraph> validate;
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) train.push_back(build_graph(events_for(AttackKind::None, seed, 30), GraphMode::PseudoProcess).graph);
  for (std::uint64_t seed : {6u, 7u}) validate.push_back(build_graph(events_for(AttackKind::None, seed, 30), GraphMode::PseudoProcess).graph);
  FitOptions o;
  o.k_values = {1, 2, 3};
  o.chunk_values = {10, 20, 30};
  o.slack_values = {1.0, 1.25};
  const FitResult r = fit(train, validate, o);
  CHECK(r.candidates == 18);

  // Oracle: rebuild every candidate and scan in (chunk, k, slack) order.
  std::size_t best_fp = std::numeric_limits<std::size_t>::max();
  std::tuple<std::size_t, std::size_t, double> best{};
  for (std::size_t chunk : o.chunk_values) {
    std::vector<GraphSketch> ts;
    for (const auto& g : train) ts.push_back(sketch(g, chunk));
    for (std::size_t k : o.k_values) {
      for (double slack : o.slack_values) {
        const ClusterModel m = fit_fixed(ts, chunk, k, slack, o.seed, o.restarts);
        std::size_t fp = 0;
        for (const auto& g : validate) fp += predict(m, sketch(g, chunk)).label == Label::Abnormal;
        if (fp < best_fp) {
          best_fp = fp;
          best = {chunk, k, slack};
        }
      }
    }
  }
  CHECK(r.validation_false_positives == best_fp);
  CHECK(r.model.max_chunk == std::get<0>(best));
  CHECK(r.model.k == std::get<1>(best));
  CHECK(r.model.slack == std::get<2>(best));

  o.k_values = {9};
  CHECK_THROWS_AS(fit(train, validate, o), DataError);
}

TEST_CASE("model JSON round trip") {
  const std::vector<GraphSketch> train = {make({{"a", 3}}, "x"), make({{"a", 3}, {"b", 1}}, "y")};
  const ClusterModel m = fit_fixed(train, 12, 2, 1.1, 1);
  const auto j = cluster_model_to_json(m);
  const ClusterModel back = cluster_model_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.k == m.k);
  CHECK(back.max_chunk == 12);
  CHECK(back.medoids == m.medoids);
  CHECK(back.radii == m.radii);
  nlohmann::json broken = nlohmann::json::parse(j.dump());
  broken["radii"] = {0.1};
  CHECK_THROWS_AS(cluster_model_from_json(broken), DataError);
}

TEST_CASE("cross-validation bookkeeping") {
  std::vector<ScenarioLog> logs;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    ScenarioSpec spec = default_scenario(seed <= 2 ? AttackKind::DosLike : AttackKind::None, seed);
    spec.duration = 20;
    const GeneratedLog log = generate(spec);
    logs.push_back({"log" + std::to_string(seed), parse_text(log.text, fixtures::x64()).events, log.window});
  }
  CrossvalOptions o;
  o.fit.k_values = {1, 2};
  o.fit.chunk_values = {10, 30};
  const CrossvalResult r = crossval(logs, o);
  REQUIRE(r.folds.size() == 4);
  std::set<std::string> tested;
  for (const FoldResult& f : r.folds) {
    CHECK(f.train_ids.size() == 6);
    CHECK(f.validate_ids.size() == 1);
    CHECK(f.test_ids.size() == 1);
    tested.insert(f.test_ids.begin(), f.test_ids.end());
  }
  CHECK(tested.size() == 4);
  const CrossvalResult again = crossval(logs, o);
  for (std::size_t f = 0; f < 4; ++f) CHECK(again.folds[f].cm == r.folds[f].cm);

  o.folds = 1;
  CHECK_THROWS_AS(crossval(logs, o), DataError);
  o.folds = 9;
  CHECK_THROWS_AS(crossval(logs, o), DataError);
}

TEST_CASE("identical logs give identical folds") {
  ScenarioSpec spec = default_scenario(AttackKind::None, 3);
  spec.duration = 15;
  const auto events = parse_text(generate(spec).text, fixtures::x64()).events;
  std::vector<ScenarioLog> logs;
  for (int i = 0; i < 8; ++i) logs.push_back({"same" + std::to_string(i), events, std::nullopt});
  CrossvalOptions o;
  o.fit.k_values = {1};
  o.fit.chunk_values = {10, 20};
  const CrossvalResult r = crossval(logs, o);
  for (const FoldResult& f : r.folds) {
    CHECK(f.cm == r.folds[0].cm);
    CHECK(f.cm.fp == 0);
  }
}

TEST_CASE("attack graphs fall outside a benign model") {
  // Model from benign graphs of seeds 101..108, probed with attack graphs
  // of other seeds.
  std::vector<RiGraph> train;
  std::vector<RiGraph> validate;
  for (std::uint64_t seed = 101; seed <= 108; ++seed) {
    train.push_back(build_graph(events_for(AttackKind::None, seed), GraphMode::ProcessTree).graph);
  }
  validate.push_back(build_graph(events_for(AttackKind::None, 109), GraphMode::ProcessTree).graph);
  const FitResult fr = fit(train, validate, FitOptions{});
  int flagged = 0;
  const int trials = 10;
  for (std::uint64_t seed = 1; seed <= trials; ++seed) {
    const RiGraph g = build_graph(events_for(seed % 2 ? AttackKind::DosLike : AttackKind::PrivescLike, seed),
                                  GraphMode::ProcessTree)
                          .graph;
    flagged += predict(fr.model, sketch(g, fr.model.max_chunk)).label == Label::Abnormal;
  }
  CHECK(flagged >= 9);
}
