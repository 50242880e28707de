#include "rigkit/gae_pipeline.hpp"

#include <unordered_map>

namespace rigkit {

namespace {

constexpr int kCheckpointVersion = 1;

std::vector<NodePair> select_edges(const LinkPredGraph& lp, std::span<const std::size_t> idx) {
  std::vector<NodePair> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(lp.edges[i]);
  return out;
}

nlohmann::ordered_json matrix_json(const Eigen::MatrixXd& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
  }
  j["data"] = std::move(data);
  return j;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j, const char* name) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto data = j.at("data").get<std::vector<double>>();
  if (rows < 0 || cols < 0 || static_cast<std::size_t>(rows * cols) != data.size()) {
    throw DataError(std::string("checkpoint: bad shape for ") + name);
  }
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = data[static_cast<std::size_t>(r * cols + c)];
  }
  if (!m.allFinite()) throw DataError(std::string("checkpoint: non-finite weight in ") + name);
  return m;
}

}  // namespace

std::string_view to_string(Optimizer o) { return o == Optimizer::Adam ? "adam" : "gd"; }

std::optional<Optimizer> parse_optimizer(std::string_view name) {
  if (name == "adam") return Optimizer::Adam;
  if (name == "gd") return Optimizer::GradientDescent;
  return std::nullopt;
}

GaeRunResult run_gae(const RiGraph& g, const EdgeLabels& labels, const SyscallTable& table,
                     const GaeRunOptions& options) {
  LinkPredGraph lp = to_linkpred(g, table);
  const std::vector<Label> ulabels = undirected_labels(lp, labels);
  EdgeSplit split = split_edges(lp, ulabels, options.train_fraction, options.config.seed);
  const Eigen::MatrixXd x = node_features(lp, options.features);
  const std::vector<NodePair> train = select_edges(lp, split.train);
  const auto adj = normalized_adjacency<double>(x.rows(), train);

  GaeModel model = GaeModel::initialized(x.cols(), options.config.hidden0, options.config.hidden1,
                                         options.config.seed);
  std::vector<double> trace = train_autoencoder(model, adj, x, train, options.config, options.on_epoch);

  const Eigen::MatrixXd z = model.encode(adj, x);
  std::vector<double> scores;
  scores.reserve(split.test.size());
  for (std::size_t i : split.test) scores.push_back(GaeModel::score(z, lp.edges[i].first, lp.edges[i].second));

  double threshold;
  ConfusionMatrix cm;
  if (options.threshold) {
    threshold = *options.threshold;
    cm = classify(scores, split.test_labels, threshold);
  } else {
    const SweepResult s = sweep_threshold(scores, split.test_labels);
    threshold = s.threshold;
    cm = s.cm;
  }
  return GaeRunResult{std::move(lp),  std::move(split), std::move(model), std::move(trace),
                      std::move(scores), threshold,     cm,               metrics(cm)};
}

std::vector<double> score_pairs(const GaeModel& model, const LinkPredGraph& lp, const Eigen::MatrixXd& features,
                                std::span<const NodePair> train_edges,
                                std::span<const std::pair<std::string, std::string>> pairs) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < lp.ids.size(); ++i) index.emplace(lp.ids[i], i);
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw DataError("score: unknown node id '" + id + "'");
    return it->second;
  };
  const auto adj = normalized_adjacency<double>(features.rows(), train_edges);
  const Eigen::MatrixXd z = model.encode(adj, features);
  std::vector<double> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) out.push_back(GaeModel::score(z, lookup(a), lookup(b)));
  return out;
}

nlohmann::ordered_json model_to_json(const GaeModel& model, const GaeConfig& config) {
  nlohmann::ordered_json j;
  j["format"] = "rigkit-gae";
  j["version"] = kCheckpointVersion;
  j["input_width"] = model.input_width();
  j["hyperparams"] = {{"hidden0", config.hidden0},
                      {"hidden1", config.hidden1},
                      {"learning_rate", config.learning_rate},
                      {"epochs", config.epochs},
                      {"negative_ratio", config.negative_ratio},
                      {"optimizer", to_string(config.optimizer)}};
  j["seed"] = config.seed;
  j["w0"] = matrix_json(model.w0());
  j["w1"] = matrix_json(model.w1());
  return j;
}

std::pair<GaeModel, GaeConfig> model_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "rigkit-gae") throw DataError("checkpoint: not a rigkit-gae model");
    if (j.at("version").get<int>() != kCheckpointVersion) throw DataError("checkpoint: unsupported version");
    GaeConfig c;
    const auto& h = j.at("hyperparams");
    c.hidden0 = h.at("hidden0").get<Eigen::Index>();
    c.hidden1 = h.at("hidden1").get<Eigen::Index>();
    c.learning_rate = h.at("learning_rate").get<double>();
    c.epochs = h.at("epochs").get<int>();
    c.negative_ratio = h.at("negative_ratio").get<double>();
    auto opt = parse_optimizer(h.at("optimizer").get<std::string>());
    if (!opt) throw DataError("checkpoint: unknown optimizer");
    c.optimizer = *opt;
    c.seed = j.at("seed").get<std::uint64_t>();
    Eigen::MatrixXd w0 = matrix_from_json(j.at("w0"), "w0");
    Eigen::MatrixXd w1 = matrix_from_json(j.at("w1"), "w1");
    if (w0.rows() != j.at("input_width").get<Eigen::Index>() || w0.cols() != c.hidden0 || w1.rows() != c.hidden0 ||
        w1.cols() != c.hidden1) {
      throw DataError("checkpoint: weight shapes disagree with hyperparameters");
    }
    return {GaeModel(std::move(w0), std::move(w1)), c};
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("checkpoint: ") + e.what());
  }
}

}  // namespace rigkit
