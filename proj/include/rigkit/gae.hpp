#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rigkit/random.hpp"
#include "rigkit/types.hpp"

namespace rigkit {

enum class Optimizer { GradientDescent, Adam };

struct GaeConfig {
  Eigen::Index hidden0 = 32;
  Eigen::Index hidden1 = 16;
  double learning_rate = 0.005;
  int epochs = 10000;
  /// Negatives drawn per training positive, resampled every epoch.
  double negative_ratio = 1.0;
  std::uint64_t seed = 7;
  Optimizer optimizer = Optimizer::GradientDescent;
};

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using SparseMatrix = Eigen::SparseMatrix<Scalar>;

/// Symmetric normalisation with self-loops, D^-1/2 (A + I) D^-1/2, built from
/// an undirected edge list. Duplicate and self pairs are ignored.
template <typename Scalar>
SparseMatrix<Scalar> normalized_adjacency(Eigen::Index n,
                                          std::span<const std::pair<std::size_t, std::size_t>> edges) {
  std::vector<Eigen::Triplet<Scalar>> triplets;
  std::unordered_set<std::uint64_t> seen;
  std::vector<Scalar> degree(static_cast<std::size_t>(n), Scalar(1));
  std::vector<std::pair<Eigen::Index, Eigen::Index>> links;
  for (auto [a, b] : edges) {
    if (a == b) continue;
    if (static_cast<Eigen::Index>(std::max(a, b)) >= n) throw std::out_of_range("adjacency: node index");
    const auto u = std::min(a, b);
    const auto v = std::max(a, b);
    if (!seen.insert((static_cast<std::uint64_t>(u) << 32) | v).second) continue;
    degree[u] += 1;
    degree[v] += 1;
    links.emplace_back(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
  }
  triplets.reserve(links.size() * 2 + static_cast<std::size_t>(n));
  using std::sqrt;
  for (Eigen::Index i = 0; i < n; ++i) triplets.emplace_back(i, i, Scalar(1) / degree[i]);
  for (auto [u, v] : links) {
    const Scalar w = Scalar(1) / sqrt(degree[u] * degree[v]);
    triplets.emplace_back(u, v, w);
    triplets.emplace_back(v, u, w);
  }
  SparseMatrix<Scalar> adj(n, n);
  adj.setFromTriplets(triplets.begin(), triplets.end());
  return adj;
}

/// Node pairs with binary targets, the unit of the reconstruction loss.
template <typename Scalar>
struct LabeledPairs {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Scalar> targets;
};

template <typename Scalar>
struct LossGradient {
  Scalar loss = 0;
  DenseMatrix<Scalar> grad_w0;
  DenseMatrix<Scalar> grad_w1;
};

/// Two-layer graph convolutional encoder with an inner-product decoder:
///   Z = A relu(A X W0) W1,   score(u, v) = sigmoid(z_u . z_v)
/// where A is the normalised adjacency.
template <typename Scalar>
class GraphAutoencoder {
 public:
  using Matrix = DenseMatrix<Scalar>;
  using Sparse = SparseMatrix<Scalar>;

  GraphAutoencoder(Matrix w0, Matrix w1) : w0_(std::move(w0)), w1_(std::move(w1)) {
    if (w0_.cols() != w1_.rows()) throw std::invalid_argument("GAE: W0 cols must equal W1 rows");
  }

  /// Glorot-uniform weights drawn from `seed`.
  static GraphAutoencoder initialized(Eigen::Index input_width, Eigen::Index hidden0, Eigen::Index hidden1,
                                      std::uint64_t seed) {
    Rng rng(seed);
    return GraphAutoencoder(glorot(input_width, hidden0, rng), glorot(hidden0, hidden1, rng));
  }

  const Matrix& w0() const { return w0_; }
  const Matrix& w1() const { return w1_; }
  Matrix& w0() { return w0_; }
  Matrix& w1() { return w1_; }
  Eigen::Index input_width() const { return w0_.rows(); }

  /// Intermediate products kept for back-propagation. `ax` is A X.
  struct Forward {
    Matrix pre;  // A X W0
    Matrix ar;   // A relu(pre)
    Matrix z;
  };

  Forward forward(const Sparse& adj, const Matrix& ax) const {
    Forward f;
    f.pre = ax * w0_;
    f.ar = adj * f.pre.cwiseMax(Scalar(0));
    f.z = f.ar * w1_;
    return f;
  }

  Matrix encode(const Sparse& adj, const Matrix& features) const {
    check_features(features);
    const Matrix ax = adj * features;
    return forward(adj, ax).z;
  }

  static Scalar logit(const Matrix& z, std::size_t u, std::size_t v) {
    return z.row(static_cast<Eigen::Index>(u)).dot(z.row(static_cast<Eigen::Index>(v)));
  }

  static Scalar score(const Matrix& z, std::size_t u, std::size_t v) { return sigmoid(logit(z, u, v)); }

  static Scalar sigmoid(Scalar s) {
    using std::exp;
    return s >= 0 ? Scalar(1) / (Scalar(1) + exp(-s)) : exp(s) / (Scalar(1) + exp(s));
  }

  /// Mean binary cross-entropy over `batch` and its gradient w.r.t. W0, W1.
  LossGradient<Scalar> loss_and_gradient(const Sparse& adj, const Matrix& ax,
                                         const LabeledPairs<Scalar>& batch) const {
    using std::abs;
    using std::exp;
    using std::log1p;
    const Forward f = forward(adj, ax);
    const auto m = static_cast<Scalar>(batch.pairs.size());
    LossGradient<Scalar> out;
    Matrix dz = Matrix::Zero(f.z.rows(), f.z.cols());
    for (std::size_t i = 0; i < batch.pairs.size(); ++i) {
      const auto [u, v] = batch.pairs[i];
      const Scalar y = batch.targets[i];
      const Scalar s = logit(f.z, u, v);
      // log(1 + e^s) - y s, written to avoid overflow.
      out.loss += (s > 0 ? s : Scalar(0)) - y * s + log1p(exp(-abs(s)));
      const Scalar g = (sigmoid(s) - y) / m;
      const auto ui = static_cast<Eigen::Index>(u);
      const auto vi = static_cast<Eigen::Index>(v);
      dz.row(ui) += g * f.z.row(vi);
      dz.row(vi) += g * f.z.row(ui);
    }
    out.loss /= m;
    out.grad_w1 = f.ar.transpose() * dz;
    // A is symmetric, so A^T (dZ W1^T) = A (dZ W1^T).
    Matrix d_relu = adj * (dz * w1_.transpose());
    d_relu = d_relu.cwiseProduct((f.pre.array() > Scalar(0)).matrix().template cast<Scalar>());
    out.grad_w0 = ax.transpose() * d_relu;
    return out;
  }

  Scalar loss(const Sparse& adj, const Matrix& ax, const LabeledPairs<Scalar>& batch) const {
    return loss_and_gradient(adj, ax, batch).loss;
  }

  void check_features(const Matrix& features) const {
    if (features.cols() != w0_.rows()) {
      throw DataError("GAE: feature width " + std::to_string(features.cols()) + " does not match model input " +
                      std::to_string(w0_.rows()));
    }
  }

 private:
  static Matrix glorot(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    const double range = std::sqrt(6.0 / static_cast<double>(rows + cols));
    Matrix w(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) w(i, j) = static_cast<Scalar>(rng.uniform(-range, range));
    }
    return w;
  }

  Matrix w0_;
  Matrix w1_;
};

/// Raised when training produces a non-finite loss.
class TrainingDiverged : public DataError {
 public:
  explicit TrainingDiverged(int epoch)
      : DataError("GAE training diverged: non-finite loss at epoch " + std::to_string(epoch)), epoch_(epoch) {}
  int epoch() const { return epoch_; }

 private:
  int epoch_;
};

/// Full-batch training on `positives` plus uniformly drawn non-edges
/// (self pairs and training edges excluded), resampled each epoch. Returns the
/// loss of every epoch, measured before that epoch's update.
///
/// Columns of A X that are identically zero contribute nothing to the forward
/// pass and receive zero gradient, so the optimisation runs on the active
/// columns only and writes the result back into W0.
template <typename Scalar>
std::vector<double> train_autoencoder(GraphAutoencoder<Scalar>& model, const SparseMatrix<Scalar>& adj,
                                      const DenseMatrix<Scalar>& features,
                                      std::span<const std::pair<std::size_t, std::size_t>> positives,
                                      const GaeConfig& config,
                                      const std::function<void(int, double)>& on_epoch = {}) {
  using Matrix = DenseMatrix<Scalar>;
  using std::isfinite;
  using std::sqrt;
  model.check_features(features);
  const Eigen::Index n = features.rows();
  if (positives.empty()) throw DataError("GAE: no training edges");
  if (n < 3) throw DataError("GAE: need at least 3 nodes");

  const Matrix ax_full = adj * features;
  std::vector<Eigen::Index> active;
  for (Eigen::Index c = 0; c < ax_full.cols(); ++c) {
    if (!ax_full.col(c).isZero(0)) active.push_back(c);
  }
  Matrix ax = ax_full(Eigen::all, active);
  GraphAutoencoder<Scalar> compact(model.w0()(active, Eigen::all), model.w1());

  std::unordered_set<std::uint64_t> known;
  auto pair_key = [](std::size_t u, std::size_t v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  };
  for (auto [u, v] : positives) known.insert(pair_key(u, v));
  const auto max_pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t available = max_pairs > known.size() ? max_pairs - known.size() : 0;
  const auto negatives = std::min<std::size_t>(
      available, static_cast<std::size_t>(std::llround(config.negative_ratio * static_cast<double>(positives.size()))));

  LabeledPairs<Scalar> batch;
  batch.pairs.assign(positives.begin(), positives.end());
  batch.targets.assign(positives.size(), Scalar(1));
  batch.pairs.resize(positives.size() + negatives);
  batch.targets.resize(positives.size() + negatives, Scalar(0));

  Rng rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  const Scalar lr = static_cast<Scalar>(config.learning_rate);
  Matrix m0 = Matrix::Zero(compact.w0().rows(), compact.w0().cols());
  Matrix v0 = m0;
  Matrix m1 = Matrix::Zero(compact.w1().rows(), compact.w1().cols());
  Matrix v1 = m1;
  const Scalar beta1 = Scalar(0.9);
  const Scalar beta2 = Scalar(0.999);
  const Scalar eps = Scalar(1e-8);

  std::vector<double> trace;
  trace.reserve(static_cast<std::size_t>(std::max(config.epochs, 0)));
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    for (std::size_t k = positives.size(); k < batch.pairs.size(); ++k) {
      std::size_t u;
      std::size_t v;
      do {
        u = rng.index(static_cast<std::size_t>(n));
        v = rng.index(static_cast<std::size_t>(n));
      } while (u == v || known.contains(pair_key(u, v)));
      batch.pairs[k] = {u, v};
    }
    const LossGradient<Scalar> lg = compact.loss_and_gradient(adj, ax, batch);
    if (!isfinite(lg.loss) || !lg.grad_w0.allFinite() || !lg.grad_w1.allFinite()) throw TrainingDiverged(epoch);
    trace.push_back(static_cast<double>(lg.loss));
    if (on_epoch) on_epoch(epoch, static_cast<double>(lg.loss));

    if (config.optimizer == Optimizer::GradientDescent) {
      compact.w0() -= lr * lg.grad_w0;
      compact.w1() -= lr * lg.grad_w1;
    } else {
      const Scalar c1 = Scalar(1) - static_cast<Scalar>(std::pow(0.9, epoch));
      const Scalar c2 = Scalar(1) - static_cast<Scalar>(std::pow(0.999, epoch));
      auto step = [&](Matrix& w, Matrix& m, Matrix& v, const Matrix& g) {
        m = beta1 * m + (Scalar(1) - beta1) * g;
        v = beta2 * v + (Scalar(1) - beta2) * g.cwiseProduct(g);
        w.array() -= lr * (m.array() / c1) / ((v.array() / c2).sqrt() + eps);
      };
      step(compact.w0(), m0, v0, lg.grad_w0);
      step(compact.w1(), m1, v1, lg.grad_w1);
    }
  }
  model.w0()(active, Eigen::all) = compact.w0();
  model.w1() = compact.w1();
  return trace;
}

}  // namespace rigkit
