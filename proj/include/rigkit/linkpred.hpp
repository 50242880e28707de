#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rigkit/labeler.hpp"
#include "rigkit/rig_graph.hpp"
#include "rigkit/syscall_table.hpp"

namespace rigkit {

using NodePair = std::pair<std::size_t, std::size_t>;

/// Undirected view of a RIG whose edge histograms have been moved onto the
/// nodes: row i is onehot(type_i) followed by the sum of the infinite-interval
/// edge vectors of every edge incident to i.
struct LinkPredGraph {
  std::vector<std::string> ids;
  std::vector<NodeType> types;
  Eigen::MatrixXd attributes;
  /// Unique undirected edges, first < second, in order of first appearance.
  std::vector<NodePair> edges;
  /// RIG edge indices folded into each undirected edge.
  std::vector<std::vector<std::size_t>> sources;

  std::size_t node_count() const { return ids.size(); }
  Eigen::Index type_width() const { return static_cast<Eigen::Index>(kNodeTypeCount); }
};

LinkPredGraph to_linkpred(const RiGraph& g, const SyscallTable& table);

struct FeatureOptions {
  /// Keep only the one-hot type columns.
  bool node_attributes_only = false;
  /// log1p then divide each edge-count column by its maximum.
  bool log_scale = true;
};

Eigen::MatrixXd node_features(const LinkPredGraph& lp, const FeatureOptions& options);

/// An undirected edge is ABNORMAL if any RIG edge folded into it is.
std::vector<Label> undirected_labels(const LinkPredGraph& lp, const EdgeLabels& labels);

struct EdgeSplit {
  std::vector<std::size_t> train;  // indices into lp.edges, all NORMAL
  std::vector<std::size_t> test;   // remaining NORMAL edges and every ABNORMAL edge
  std::vector<Label> test_labels;
};

/// Training positives are a seeded `train_fraction` share of the NORMAL edges.
EdgeSplit split_edges(const LinkPredGraph& lp, std::span<const Label> labels, double train_fraction,
                      std::uint64_t seed);

}  // namespace rigkit
