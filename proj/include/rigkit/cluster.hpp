#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "rigkit/labeler.hpp"
#include "rigkit/rig_graph.hpp"

namespace rigkit {

/// Shingle counts of one graph. Ordered so that iteration, dot products and
/// serialisation are deterministic.
struct GraphSketch {
  std::string id;
  std::map<std::string, std::int64_t> shingles;

  bool empty() const { return shingles.empty(); }
  double norm() const;
  bool operator==(const GraphSketch&) const = default;
};

/// For every node: its type letter followed by `<syscall>;<target type>` for
/// each outgoing interaction in time order, cut into chunks of at most
/// `max_chunk` characters. Chunk counts are summed over nodes.
GraphSketch sketch(const RiGraph& g, std::size_t max_chunk, std::string id = {});

/// 1 - cos(a, b). Two empty sketches are at distance 0, an empty and a
/// non-empty one at distance 1.
double cosine_distance(const GraphSketch& a, const GraphSketch& b);

Eigen::MatrixXd distance_matrix(std::span<const GraphSketch> sketches);

struct MedoidSet {
  std::vector<std::size_t> medoids;     // sorted indices
  std::vector<std::size_t> assignment;  // nearest medoid position per point
  double cost = 0;
};

/// Sum over points of the distance to the nearest medoid.
double medoid_cost(const Eigen::MatrixXd& d, std::span<const std::size_t> medoids);

/// PAM: greedy BUILD followed by steepest-descent SWAP, then `restarts`
/// seeded random starts pushed through the same SWAP phase; the cheapest
/// result wins (earliest on ties). Requires 1 <= k <= n.
MedoidSet kmedoids(const Eigen::MatrixXd& d, std::size_t k, std::uint64_t seed, int restarts = 8);

struct ClusterModel {
  std::size_t k = 0;
  std::size_t max_chunk = 0;
  double slack = 1.0;
  std::vector<GraphSketch> medoids;
  std::vector<double> radii;
};

struct ClusterPrediction {
  Label label = Label::Normal;
  std::size_t nearest = 0;
  double distance = 0;
};

/// ABNORMAL iff the distance to the nearest medoid exceeds that medoid's
/// radius. An empty sketch is ABNORMAL at distance 1.
ClusterPrediction predict(const ClusterModel& model, const GraphSketch& s);

struct FitOptions {
  std::vector<std::size_t> k_values = {1, 2, 3, 4, 5};
  std::vector<std::size_t> chunk_values = default_chunks();
  std::vector<double> slack_values = {1.0, 1.1, 1.25, 1.5};
  std::uint64_t seed = 7;
  int restarts = 8;

  static std::vector<std::size_t> default_chunks() {
    std::vector<std::size_t> out;
    for (std::size_t c = 10; c <= 50; c += 2) out.push_back(c);
    return out;
  }
};

struct FitResult {
  ClusterModel model;
  std::size_t validation_false_positives = 0;
  std::size_t candidates = 0;
};

/// Model for fixed chunk size and k over precomputed sketches.
ClusterModel fit_fixed(std::span<const GraphSketch> train, std::size_t max_chunk, std::size_t k, double slack,
                       std::uint64_t seed, int restarts = 8);

/// Searches chunk x k x slack and keeps the candidate with the fewest false
/// positives on the benign validation graphs; ties go to the smaller chunk,
/// then smaller k, then smaller slack. Candidates with k > |train| are skipped.
FitResult fit(std::span<const RiGraph> train, std::span<const RiGraph> validate, const FitOptions& options);

nlohmann::ordered_json cluster_model_to_json(const ClusterModel& m);
ClusterModel cluster_model_from_json(const nlohmann::json& j);

}  // namespace rigkit
