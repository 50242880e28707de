#include "rigkit/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rigkit/random.hpp"
#include "rigkit/segmentation.hpp"

namespace rigkit {

double GraphSketch::norm() const {
  double s = 0;
  for (const auto& [_, c] : shingles) s += static_cast<double>(c) * static_cast<double>(c);
  return std::sqrt(s);
}

GraphSketch sketch(const RiGraph& g, std::size_t max_chunk, std::string id) {
  if (max_chunk == 0) throw DataError("sketch: max_chunk must be positive");
  std::vector<std::string> walk(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) walk[i] = std::string(1, type_char(g.node(i).type));
  for (const UnitEdge& u : unit_edges(g)) {
    std::string& s = walk[u.from];
    s += std::to_string(u.syscall);
    s += ';';
    s += type_char(g.node(u.to).type);
  }
  GraphSketch out;
  out.id = std::move(id);
  for (const std::string& s : walk) {
    for (std::size_t pos = 0; pos < s.size(); pos += max_chunk) out.shingles[s.substr(pos, max_chunk)] += 1;
  }
  return out;
}

double cosine_distance(const GraphSketch& a, const GraphSketch& b) {
  if (a.empty() && b.empty()) return 0;
  if (a.empty() || b.empty()) return 1;
  // Exact zero for identical sketches; the floating-point form can leave a
  // residue of a few ulps that would trip a zero radius.
  if (a.shingles == b.shingles) return 0;
  double dot = 0;
  auto ia = a.shingles.begin();
  auto ib = b.shingles.begin();
  while (ia != a.shingles.end() && ib != b.shingles.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += static_cast<double>(ia->second) * static_cast<double>(ib->second);
      ++ia;
      ++ib;
    }
  }
  return std::clamp(1.0 - dot / (a.norm() * b.norm()), 0.0, 1.0);
}

Eigen::MatrixXd distance_matrix(std::span<const GraphSketch> sketches) {
  const auto n = static_cast<Eigen::Index>(sketches.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      d(i, j) = d(j, i) = cosine_distance(sketches[static_cast<std::size_t>(i)], sketches[static_cast<std::size_t>(j)]);
    }
  }
  return d;
}

double medoid_cost(const Eigen::MatrixXd& d, std::span<const std::size_t> medoids) {
  double cost = 0;
  for (Eigen::Index p = 0; p < d.rows(); ++p) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t m : medoids) best = std::min(best, d(p, static_cast<Eigen::Index>(m)));
    cost += best;
  }
  return cost;
}

namespace {

void swap_phase(const Eigen::MatrixXd& d, std::vector<std::size_t>& medoids, double& cost) {
  const std::size_t n = static_cast<std::size_t>(d.rows());
  for (;;) {
    double best_cost = cost;
    std::size_t best_slot = 0;
    std::size_t best_point = 0;
    for (std::size_t slot = 0; slot < medoids.size(); ++slot) {
      for (std::size_t o = 0; o < n; ++o) {
        if (std::find(medoids.begin(), medoids.end(), o) != medoids.end()) continue;
        std::vector<std::size_t> trial = medoids;
        trial[slot] = o;
        const double c = medoid_cost(d, trial);
        if (c < best_cost) {
          best_cost = c;
          best_slot = slot;
          best_point = o;
        }
      }
    }
    // Require a real decrease so that rounding noise cannot cycle.
    if (!(best_cost < cost - 1e-15 * std::max(1.0, cost))) return;
    medoids[best_slot] = best_point;
    cost = best_cost;
  }
}

MedoidSet finish(const Eigen::MatrixXd& d, std::vector<std::size_t> medoids) {
  std::sort(medoids.begin(), medoids.end());
  MedoidSet out;
  out.cost = medoid_cost(d, medoids);
  out.assignment.resize(static_cast<std::size_t>(d.rows()));
  for (Eigen::Index p = 0; p < d.rows(); ++p) {
    std::size_t best = 0;
    for (std::size_t m = 1; m < medoids.size(); ++m) {
      if (d(p, static_cast<Eigen::Index>(medoids[m])) < d(p, static_cast<Eigen::Index>(medoids[best]))) best = m;
    }
    out.assignment[static_cast<std::size_t>(p)] = best;
  }
  out.medoids = std::move(medoids);
  return out;
}

}  // namespace

MedoidSet kmedoids(const Eigen::MatrixXd& d, std::size_t k, std::uint64_t seed, int restarts) {
  const std::size_t n = static_cast<std::size_t>(d.rows());
  if (k == 0 || k > n) throw DataError("kmedoids: k must be in [1, n]");

  // BUILD: each step adds the point that lowers the total cost the most.
  std::vector<std::size_t> medoids;
  while (medoids.size() < k) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t pick = 0;
    for (std::size_t o = 0; o < n; ++o) {
      if (std::find(medoids.begin(), medoids.end(), o) != medoids.end()) continue;
      medoids.push_back(o);
      const double c = medoid_cost(d, medoids);
      medoids.pop_back();
      if (c < best) {
        best = c;
        pick = o;
      }
    }
    medoids.push_back(pick);
  }
  double cost = medoid_cost(d, medoids);
  swap_phase(d, medoids, cost);
  std::vector<std::size_t> best_set = medoids;
  double best_cost = cost;

  Rng rng(seed);
  std::vector<std::size_t> points(n);
  std::iota(points.begin(), points.end(), std::size_t{0});
  for (int r = 0; r < restarts && k < n; ++r) {
    rng.shuffle(points);
    std::vector<std::size_t> start(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(k));
    double c = medoid_cost(d, start);
    swap_phase(d, start, c);
    if (c < best_cost) {
      best_cost = c;
      best_set = start;
    }
  }
  return finish(d, std::move(best_set));
}

ClusterModel fit_fixed(std::span<const GraphSketch> train, std::size_t max_chunk, std::size_t k, double slack,
                       std::uint64_t seed, int restarts) {
  const Eigen::MatrixXd d = distance_matrix(train);
  const MedoidSet ms = kmedoids(d, k, seed, restarts);
  ClusterModel model;
  model.k = k;
  model.max_chunk = max_chunk;
  model.slack = slack;
  model.radii.assign(k, 0.0);
  for (std::size_t p = 0; p < train.size(); ++p) {
    const std::size_t c = ms.assignment[p];
    model.radii[c] = std::max(model.radii[c], d(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(ms.medoids[c])));
  }
  for (double& r : model.radii) r *= slack;
  for (std::size_t m : ms.medoids) model.medoids.push_back(train[m]);
  return model;
}

ClusterPrediction predict(const ClusterModel& model, const GraphSketch& s) {
  if (model.medoids.empty()) throw DataError("predict: model has no clusters");
  if (s.empty()) return {Label::Abnormal, 0, 1.0};
  ClusterPrediction out;
  out.distance = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < model.medoids.size(); ++c) {
    const double dist = cosine_distance(s, model.medoids[c]);
    if (dist < out.distance) {
      out.distance = dist;
      out.nearest = c;
    }
  }
  out.label = out.distance > model.radii[out.nearest] ? Label::Abnormal : Label::Normal;
  return out;
}

FitResult fit(std::span<const RiGraph> train, std::span<const RiGraph> validate, const FitOptions& options) {
  if (train.empty()) throw DataError("fit: no training graphs");
  FitResult best;
  bool have = false;
  std::vector<std::size_t> chunks = options.chunk_values;
  std::vector<std::size_t> ks = options.k_values;
  std::vector<double> slacks = options.slack_values;
  std::sort(chunks.begin(), chunks.end());
  std::sort(ks.begin(), ks.end());
  std::sort(slacks.begin(), slacks.end());
  std::size_t evaluated = 0;
  for (std::size_t chunk : chunks) {
    std::vector<GraphSketch> ts;
    std::vector<GraphSketch> vs;
    for (std::size_t i = 0; i < train.size(); ++i) ts.push_back(sketch(train[i], chunk, "train" + std::to_string(i)));
    for (std::size_t i = 0; i < validate.size(); ++i) vs.push_back(sketch(validate[i], chunk, "validate" + std::to_string(i)));
    const Eigen::MatrixXd d = distance_matrix(ts);
    for (std::size_t k : ks) {
      if (k == 0 || k > ts.size()) continue;
      const MedoidSet ms = kmedoids(d, k, options.seed, options.restarts);
      std::vector<double> base(k, 0.0);
      for (std::size_t p = 0; p < ts.size(); ++p) {
        const std::size_t c = ms.assignment[p];
        base[c] = std::max(base[c], d(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(ms.medoids[c])));
      }
      ClusterModel model;
      model.k = k;
      model.max_chunk = chunk;
      for (std::size_t m : ms.medoids) model.medoids.push_back(ts[m]);
      for (double slack : slacks) {
        model.slack = slack;
        model.radii = base;
        for (double& r : model.radii) r *= slack;
        std::size_t fp = 0;
        for (const GraphSketch& v : vs) fp += predict(model, v).label == Label::Abnormal;
        ++evaluated;
        // Loop order already realises the tie-break (chunk, k, slack ascending).
        if (!have || fp < best.validation_false_positives) {
          best.model = model;
          best.validation_false_positives = fp;
          have = true;
        }
      }
    }
  }
  if (!have) throw DataError("fit: no admissible (k, chunk) candidate");
  best.candidates = evaluated;
  return best;
}

nlohmann::ordered_json cluster_model_to_json(const ClusterModel& m) {
  nlohmann::ordered_json j;
  j["k"] = m.k;
  j["max_chunk"] = m.max_chunk;
  j["slack"] = m.slack;
  j["medoids"] = nlohmann::ordered_json::array();
  for (const GraphSketch& s : m.medoids) {
    nlohmann::ordered_json sh = nlohmann::ordered_json::object();
    for (const auto& [key, c] : s.shingles) sh[key] = c;
    j["medoids"].push_back({{"id", s.id}, {"shingles", std::move(sh)}});
  }
  j["radii"] = m.radii;
  return j;
}

ClusterModel cluster_model_from_json(const nlohmann::json& j) {
  try {
    ClusterModel m;
    m.k = j.at("k").get<std::size_t>();
    m.max_chunk = j.at("max_chunk").get<std::size_t>();
    m.slack = j.at("slack").get<double>();
    for (const auto& med : j.at("medoids")) {
      GraphSketch s;
      s.id = med.at("id").get<std::string>();
      for (const auto& [key, c] : med.at("shingles").items()) s.shingles[key] = c.get<std::int64_t>();
      m.medoids.push_back(std::move(s));
    }
    m.radii = j.at("radii").get<std::vector<double>>();
    if (m.k == 0 || m.medoids.size() != m.k || m.radii.size() != m.k) throw DataError("cluster model: k disagrees with medoids/radii");
    for (double r : m.radii) {
      if (!(r >= 0)) throw DataError("cluster model: negative radius");
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("cluster model: ") + e.what());
  }
}

}  // namespace rigkit
