#include "rigkit/linkpred.hpp"

#include <algorithm>
#include <unordered_map>

#include "rigkit/eval.hpp"
#include "rigkit/segmentation.hpp"

namespace rigkit {

LinkPredGraph to_linkpred(const RiGraph& g, const SyscallTable& table) {
  LinkPredGraph lp;
  const auto n = static_cast<Eigen::Index>(g.node_count());
  const auto types = static_cast<Eigen::Index>(kNodeTypeCount);
  lp.attributes = Eigen::MatrixXd::Zero(n, types + static_cast<Eigen::Index>(table.width()));
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    lp.ids.push_back(g.node(i).id);
    lp.types.push_back(g.node(i).type);
    lp.attributes(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(g.node(i).type)) = 1.0;
  }

  std::unordered_map<std::uint64_t, std::size_t> seen;
  for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
    const RigEdge& e = g.edge(ei);
    const Eigen::VectorXd c = aggregate_edge_vector(e, table).cast<double>();
    // Added to both endpoints.
    lp.attributes.row(static_cast<Eigen::Index>(e.from)).tail(c.size()) += c.transpose();
    lp.attributes.row(static_cast<Eigen::Index>(e.to)).tail(c.size()) += c.transpose();
    if (e.from == e.to) continue;
    const std::size_t u = std::min(e.from, e.to);
    const std::size_t v = std::max(e.from, e.to);
    const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
    auto [it, inserted] = seen.emplace(key, lp.edges.size());
    if (inserted) {
      lp.edges.emplace_back(u, v);
      lp.sources.emplace_back();
    }
    lp.sources[it->second].push_back(ei);
  }
  return lp;
}

Eigen::MatrixXd node_features(const LinkPredGraph& lp, const FeatureOptions& options) {
  const Eigen::Index types = lp.type_width();
  if (options.node_attributes_only) return lp.attributes.leftCols(types);
  Eigen::MatrixXd x = lp.attributes;
  if (options.log_scale) {
    auto counts = x.rightCols(x.cols() - types);
    counts = counts.array().log1p().matrix();
    for (Eigen::Index c = 0; c < counts.cols(); ++c) {
      const double peak = counts.col(c).maxCoeff();
      if (peak > 0) counts.col(c) /= peak;
    }
  }
  return x;
}

std::vector<Label> undirected_labels(const LinkPredGraph& lp, const EdgeLabels& labels) {
  std::vector<Label> out(lp.edges.size(), Label::Normal);
  for (std::size_t i = 0; i < lp.edges.size(); ++i) {
    for (std::size_t src : lp.sources[i]) {
      if (labels.labels.at(src) == Label::Abnormal) out[i] = Label::Abnormal;
    }
  }
  return out;
}

EdgeSplit split_edges(const LinkPredGraph& lp, std::span<const Label> labels, double train_fraction,
                      std::uint64_t seed) {
  if (labels.size() != lp.edges.size()) throw DataError("split: label count does not match edges");
  if (!(train_fraction > 0 && train_fraction < 1)) throw DataError("split: train fraction must be in (0,1)");
  std::vector<std::size_t> normal;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == Label::Normal) normal.push_back(i);
  }
  if (normal.size() < 2) throw DataError("split: need at least 2 NORMAL edges");

  const double fractions[] = {train_fraction, 1.0 - train_fraction};
  const auto groups = seeded_partition(normal.size(), fractions, seed);
  if (groups[0].empty()) throw DataError("split: empty training set");

  EdgeSplit split;
  std::vector<bool> is_train(labels.size(), false);
  for (std::size_t k : groups[0]) is_train[normal[k]] = true;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (is_train[i]) {
      split.train.push_back(i);
    } else {
      split.test.push_back(i);
      split.test_labels.push_back(labels[i]);
    }
  }
  return split;
}

}  // namespace rigkit
