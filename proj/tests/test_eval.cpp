#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "rigkit/eval.hpp"
#include "rigkit/random.hpp"
#include "rigkit/types.hpp"

using namespace rigkit;

TEST_CASE("confusion matrix from the detection table") {
  const Metrics m = metrics({72, 20, 8, 612});
  CHECK(m.precision == doctest::Approx(72.0 / 92.0));
  CHECK(m.recall == doctest::Approx(0.9));
  CHECK(m.f1 == doctest::Approx(2.0 * 72 / (2.0 * 72 + 20 + 8)));
  CHECK(m.f1 == doctest::Approx(0.837).epsilon(0.001));
  CHECK(m.accuracy == doctest::Approx(684.0 / 712.0));
}

TEST_CASE("degenerate matrices") {
  const Metrics perfect = metrics({9, 0, 0, 0});
  CHECK(perfect.accuracy == 1.0);
  CHECK(perfect.precision == 1.0);
  CHECK(perfect.recall == 1.0);
  CHECK(perfect.f1 == 1.0);

  const Metrics none = metrics({0, 0, 5, 5});
  CHECK(none.precision == 0.0);
  CHECK(none.precision_undefined);
  CHECK(none.recall == 0.0);
  CHECK_FALSE(none.recall_undefined);
  CHECK(none.f1 == 0.0);
  CHECK(none.f1_undefined);
}

TEST_CASE("F1 ignores true negatives") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    ConfusionMatrix cm{static_cast<std::int64_t>(rng.index(50)), static_cast<std::int64_t>(rng.index(50)),
                       static_cast<std::int64_t>(rng.index(50)), static_cast<std::int64_t>(rng.index(50))};
    ConfusionMatrix more = cm;
    more.tn += 1000;
    CHECK(metrics(cm).f1 == metrics(more).f1);
  }
}

TEST_CASE("mean metrics") {
  const Metrics a = metrics({1, 1, 0, 0});
  const Metrics b = metrics({0, 0, 1, 1});
  const Metrics mean = mean_metrics(std::vector{a, b});
  CHECK(mean.f1 == doctest::Approx(a.f1 / 2));
  CHECK(mean.f1_undefined);
}

TEST_CASE("partition sizes by largest remainder") {
  const double three[] = {0.75, 0.125, 0.125};
  CHECK(partition_sizes(8, three) == std::vector<std::size_t>{6, 1, 1});
  const double halves[] = {0.5, 0.5};
  CHECK(partition_sizes(7, halves) == std::vector<std::size_t>{4, 3});
  const double whole[] = {1.0};
  CHECK(partition_sizes(5, whole) == std::vector<std::size_t>{5});
}

TEST_CASE("seeded partition is a deterministic partition") {
  const double fr[] = {0.75, 0.125, 0.125};
  for (std::size_t n : {1u, 8u, 13u, 100u}) {
    const auto g1 = seeded_partition(n, fr, 3);
    CHECK(g1 == seeded_partition(n, fr, 3));
    std::vector<std::size_t> all;
    for (const auto& g : g1) all.insert(all.end(), g.begin(), g.end());
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> expect(n);
    std::iota(expect.begin(), expect.end(), 0);
    CHECK(all == expect);
  }
  const double whole[] = {1.0};
  CHECK(seeded_partition(4, whole, 9)[0].size() == 4);
  CHECK_THROWS_AS(seeded_partition(0, fr, 1), DataError);
  const double bad[] = {0.5, 0.4};
  CHECK_THROWS_AS(seeded_partition(4, bad, 1), DataError);
}

TEST_CASE("experiment rows") {
  ExperimentRow row{"dos", "pseudo", "gae", "1", 0.3, {72, 20, 8, 612}, metrics({72, 20, 8, 612})};
  CHECK(experiment_csv_header() == "scenario,mode,detector,fold,threshold,TP,FP,FN,TN,accuracy,precision,recall,f1");
  CHECK(experiment_csv_row(row) == "dos,pseudo,gae,1,0.30,72,20,8,612,0.9607,0.7826,0.9000,0.8372");
  const auto j = experiment_json(row);
  CHECK(j.at("TP") == 72);
  CHECK(j.at("f1").get<double>() == doctest::Approx(0.8372).epsilon(1e-4));
}
