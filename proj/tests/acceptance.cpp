// Acceptance run: one PASS/FAIL/SKIP line per criterion, non-zero exit if any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

#include "rigkit/audit_parser.hpp"
#include "rigkit/cluster.hpp"
#include "rigkit/crossval.hpp"
#include "rigkit/eval.hpp"
#include "rigkit/gae.hpp"
#include "rigkit/gae_pipeline.hpp"
#include "rigkit/growth.hpp"
#include "rigkit/labeler.hpp"
#include "rigkit/random.hpp"
#include "rigkit/rig_graph.hpp"
#include "rigkit/segmentation.hpp"
#include "rigkit/synth.hpp"

using namespace rigkit;
namespace fs = std::filesystem;
using Mat = Eigen::MatrixXd;

namespace {

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
  Verdict verdict = Verdict::Fail;
  std::string detail;
};

Outcome fail(std::string d) { return {Verdict::Fail, std::move(d)}; }
Outcome check(bool ok, std::string d) { return {ok ? Verdict::Pass : Verdict::Fail, std::move(d)}; }

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

const SyscallTable& x64() {
  static const SyscallTable t = builtin_syscall_table("x86-64");
  return t;
}

constexpr std::string_view kSampleEvent =
    "type=SYSCALL msg=audit(1632851805.333:76118):\n"
    "    syscall=59 ppid=12261 pid=12272 uid=0 comm=\"escape.sh\" exe=\"/bin/busybox\"\n"
    "type=EXECVE: argc=2 a0=\"/bin/sh\" a1=\"/escape.sh\"\n"
    "type=CWD: cwd=\"/privesc\"\n"
    "type=PATH: name=\"/escape.sh\" inode=667188\n"
    "type=PATH: name=\"/bin/sh\" inode=65711\n"
    "type=PATH: name=\"/lib/ld-musl-x86_64.so.1\" inode=65873\n"
    "type=PROCTITLE: proctitle=72756E6300696E6974\n";

// ---------------------------------------------------------------------------

Outcome sample_event_fidelity() {
  const auto parsed = parse_text(kSampleEvent, x64());
  if (parsed.events.size() != 1) return fail("expected 1 event, got " + std::to_string(parsed.events.size()));
  const RiGraph tree = build_graph(parsed.events, GraphMode::ProcessTree).graph;
  std::set<std::pair<std::string, NodeType>> nodes;
  for (const RigNode& n : tree.nodes()) nodes.insert({n.id, n.type});
  const std::set<std::pair<std::string, NodeType>> want_nodes = {
      {"0", NodeType::User},
      {"12261", NodeType::Process},
      {"12272", NodeType::Process},
      {"executable:/bin/busybox", NodeType::Executable},
      {"/escape.sh", NodeType::File},
      {"/bin/sh", NodeType::File},
      {"/lib/ld-musl-x86_64.so.1", NodeType::File}};
  std::set<EdgeKey> edges;
  for (std::size_t i = 0; i < tree.edge_count(); ++i) edges.insert(tree.edge_key(i));
  const std::set<EdgeKey> want_edges = {{"0", "12272"},
                                        {"12261", "12272"},
                                        {"12272", "executable:/bin/busybox"},
                                        {"12272", "/escape.sh"},
                                        {"12272", "/bin/sh"},
                                        {"12272", "/lib/ld-musl-x86_64.so.1"}};
  const RiGraph pseudo = build_graph(parsed.events, GraphMode::PseudoProcess).graph;
  const InvariantReport r = check_invariants(pseudo);
  const bool ok = nodes == want_nodes && edges == want_edges && tree.edge_count() == 6 && r.acyclic &&
                  r.max_path_len == 2;
  return check(ok, "tree " + std::to_string(tree.node_count()) + " nodes/" + std::to_string(tree.edge_count()) +
                       " edges, pseudo max path " + std::to_string(r.max_path_len));
}

Outcome metrics_fidelity() {
  const Metrics m = metrics({72, 20, 8, 612});
  return check(std::abs(m.f1 - 0.837) <= 0.001, "F1 " + fmt(m.f1));
}

/// Interactions one event should add in pseudo mode: user->process plus one
/// per distinct process target.
std::size_t pseudo_interactions(const AuditEvent& e) {
  if (e.pid.empty() || e.exe.empty()) return 0;
  std::set<std::string> targets{"exe:" + e.exe};
  for (const auto& p : e.paths) {
    if (!p.name.empty()) targets.insert("file:" + p.name);
  }
  for (const auto& a : e.execve_args) {
    if (a.starts_with('/')) targets.insert("file:" + a);
  }
  if (e.sockaddr) targets.insert("sock:" + e.sockaddr->address);
  return 1 + targets.size();
}

Outcome invariant_suite() {
  int failures = 0;
  std::string first;
  auto note = [&](bool ok, std::uint64_t seed, const char* what) {
    if (ok) return;
    if (failures++ == 0) first = std::string(what) + " at seed " + std::to_string(seed);
  };
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const AttackKind kind = seed % 3 == 0 ? AttackKind::None : seed % 3 == 1 ? AttackKind::DosLike
                                                                             : AttackKind::PrivescLike;
    ScenarioSpec spec = default_scenario(kind, seed);
    spec.duration = 60;
    const GeneratedLog log = generate(spec);
    const auto events = parse_text(log.text, x64()).events;

    const RiGraph tree = build_graph(events, GraphMode::ProcessTree).graph;
    const BuildResult pb = build_graph(events, GraphMode::PseudoProcess);
    const RiGraph& pseudo = pb.graph;
    const InvariantReport rt = check_invariants(tree);
    const InvariantReport rp = check_invariants(pseudo);
    note(rt.acyclic && rp.acyclic, seed, "cycle");
    note(rp.max_path_len <= 2, seed, "pseudo path");
    note(rt.type_conflicts == 0 && rp.type_conflicts == 0, seed, "type conflict");

    // Dedup law: edge keys are unique and every event adds exactly one
    // interaction per edge it touches.
    std::set<EdgeKey> keys;
    for (std::size_t i = 0; i < pseudo.edge_count(); ++i) keys.insert(pseudo.edge_key(i));
    std::size_t expected = 0;
    for (const auto& e : events) expected += pseudo_interactions(e);
    note(keys.size() == pseudo.edge_count() && pseudo.interaction_count() == expected, seed, "dedup law");

    // Labeler monotonicity: growing the window never clears ABNORMAL.
    if (log.window) {
      const EdgeLabels base = label_edges(pseudo, log.window);
      const AttackWindow wide{Timestamp{log.window->start.ms - 5000}, log.window->duration_ms + 10000};
      const EdgeLabels wider = label_edges(pseudo, wide);
      bool mono = wider.abnormal >= base.abnormal;
      for (std::size_t i = 0; i < pseudo.edge_count(); ++i) {
        if (base.labels[i] == Label::Abnormal && wider.labels[i] != Label::Abnormal) mono = false;
      }
      note(mono, seed, "labeler monotonicity");
    }

    // Segmentation conservation: stride == delta counts every event once.
    const auto segs = segment_log(events, x64(), 10, 10);
    std::int64_t total = 0;
    for (const auto& s : segs) total += s.counts.sum();
    note(total == static_cast<std::int64_t>(events.size()), seed, "segmentation conservation");
  }
  return check(failures == 0, failures == 0 ? "50 logs" : std::to_string(failures) + " violations, first " + first);
}

Outcome gae_numerics() {
  using Model = GraphAutoencoder<double>;
  struct Instance {
    SparseMatrix<double> adj;
    Mat x;
    LabeledPairs<double> batch;
    std::vector<NodePair> edges;
  };
  auto instance = [](Rng& rng, std::size_t n, Eigen::Index width) {
    Instance in;
    std::set<NodePair> edges;
    for (std::size_t v = 1; v < n; ++v) edges.insert({rng.index(v), v});
    for (int extra = 0; extra < 3; ++extra) {
      const std::size_t a = rng.index(n);
      const std::size_t b = rng.index(n);
      if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
    }
    in.edges.assign(edges.begin(), edges.end());
    in.adj = normalized_adjacency<double>(static_cast<Eigen::Index>(n), in.edges);
    in.x = Mat(static_cast<Eigen::Index>(n), width);
    for (Eigen::Index i = 0; i < in.x.size(); ++i) in.x.data()[i] = rng.uniform(-1, 1);
    for (auto e : in.edges) {
      in.batch.pairs.push_back(e);
      in.batch.targets.push_back(1);
    }
    for (std::size_t k = 0; k < in.edges.size(); ++k) {
      in.batch.pairs.push_back({rng.index(n), rng.index(n)});
      in.batch.targets.push_back(0);
    }
    return in;
  };

  Rng rng(31);
  double worst = 0;
  for (int trial = 0; trial < 3; ++trial) {
    const std::size_t n = 5 + rng.index(6);
    const Instance in = instance(rng, n, 4);
    const Model m = Model::initialized(4, 6, 3, 200 + static_cast<std::uint64_t>(trial));
    const Mat ax = in.adj * in.x;
    const auto lg = m.loss_and_gradient(in.adj, ax, in.batch);
    const double h = 1e-6;
    auto numeric = [&](bool first) {
      Mat out(first ? m.w0().rows() : m.w1().rows(), first ? m.w0().cols() : m.w1().cols());
      for (Eigen::Index i = 0; i < out.size(); ++i) {
        Model plus = m;
        Model minus = m;
        (first ? plus.w0() : plus.w1()).data()[i] += h;
        (first ? minus.w0() : minus.w1()).data()[i] -= h;
        out.data()[i] = (plus.loss(in.adj, ax, in.batch) - minus.loss(in.adj, ax, in.batch)) / (2 * h);
      }
      return out;
    };
    for (bool first : {true, false}) {
      const Mat num = numeric(first);
      const Mat& ana = first ? lg.grad_w0 : lg.grad_w1;
      worst = std::max(worst, (ana - num).norm() / std::max(ana.norm() + num.norm(), 1e-12));
    }
  }

  const Instance big = instance(rng, 50, 6);
  Model model = Model::initialized(6, 32, 16, 3);
  GaeConfig cfg;
  cfg.epochs = 10000;
  const auto trace = train_autoencoder(model, big.adj, big.x, std::span<const NodePair>(big.edges), cfg);
  const bool ok = worst < 1e-4 && trace.size() == 10000 && trace.back() < trace.front();
  return check(ok, "max relative gradient error " + fmt(worst * 1e9, 3) + "e-9, loss " + fmt(trace.front()) +
                       " -> " + fmt(trace.back()));
}

struct GaeStudy {
  double dos = 0;
  double dos_node_only = 0;
  double privesc = 0;
  bool ran = false;
};

GaeStudy& gae_study() {
  static GaeStudy study;
  if (study.ran) return study;
  auto mean_f1 = [](AttackKind kind, bool node_only) {
    double sum = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const GeneratedLog log = generate(default_scenario(kind, seed));
      const RiGraph g = build_graph(parse_text(log.text, x64()).events, GraphMode::PseudoProcess).graph;
      GaeRunOptions o;
      o.config.seed = seed;
      o.features.node_attributes_only = node_only;
      sum += run_gae(g, label_edges(g, log.window), x64(), o).m.f1;
    }
    return sum / 10;
  };
  study.dos = mean_f1(AttackKind::DosLike, false);
  study.privesc = mean_f1(AttackKind::PrivescLike, false);
  study.dos_node_only = mean_f1(AttackKind::DosLike, true);
  study.ran = true;
  return study;
}

Outcome gae_detection() {
  const GaeStudy& s = gae_study();
  return check(s.dos >= 0.80 && s.privesc >= 0.80 && s.dos >= s.privesc,
               "mean F1 dos " + fmt(s.dos) + ", privesc " + fmt(s.privesc));
}

Outcome attribute_ablation() {
  const GaeStudy& s = gae_study();
  return check(s.dos > s.dos_node_only, "dos node+edge " + fmt(s.dos) + " vs node-only " + fmt(s.dos_node_only));
}

Outcome kmedoids_oracle() {
  double worst = 0;
  int instances = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(1000 + seed);
    const std::size_t n = 2 + rng.index(7);
    std::vector<GraphSketch> sketches;
    for (std::size_t i = 0; i < n; ++i) {
      GraphSketch s;
      for (const char* key : {"P", "U59;P", "P0;F", "P2;F", "P42;S", "E", "F"}) {
        if (rng.uniform() < 0.5) s.shingles[key] = 1 + static_cast<std::int64_t>(rng.index(9));
      }
      if (s.empty()) s.shingles["P"] = 1;
      sketches.push_back(std::move(s));
    }
    const Mat d = distance_matrix(sketches);
    for (std::size_t k = 1; k <= std::min<std::size_t>(3, n); ++k) {
      const double got = kmedoids(d, k, seed).cost;
      double best = std::numeric_limits<double>::infinity();
      std::vector<bool> pick(n, false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        double cost = 0;
        for (std::size_t p = 0; p < n; ++p) {
          double near = std::numeric_limits<double>::infinity();
          for (std::size_t q = 0; q < n; ++q) {
            if (pick[q]) near = std::min(near, d(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)));
          }
          cost += near;
        }
        best = std::min(best, cost);
      } while (std::prev_permutation(pick.begin(), pick.end()));
      worst = std::max(worst, std::abs(got - best));
      ++instances;
    }
  }
  return check(worst <= 1e-12, std::to_string(instances) + " instances, max cost gap " + fmt(worst * 1e12, 3) + "e-12");
}

Outcome cluster_detection() {
  std::string detail;
  bool ok = true;
  for (AttackKind kind : {AttackKind::DosLike, AttackKind::PrivescLike}) {
    std::vector<ScenarioLog> logs;
    for (std::uint64_t seed = 1; seed <= 16; ++seed) {
      ScenarioSpec spec = default_scenario(kind, seed);
      spec.duration = 60;
      spec.attack_scale = 4;
      const GeneratedLog log = generate(spec);
      logs.push_back({std::string(to_string(kind)) + "-" + std::to_string(seed), parse_text(log.text, x64()).events,
                      log.window});
    }
    CrossvalOptions o;
    o.mode = GraphMode::ProcessTree;
    const CrossvalResult r = crossval(logs, o);
    ok = ok && r.mean.f1 >= 0.80;
    if (!detail.empty()) detail += ", ";
    detail += std::string(to_string(kind)) + " mean F1 " + fmt(r.mean.f1);
  }
  return check(ok, detail);
}

double r_squared(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  const double cov = sxy - sx * sy / n;
  const double vx = sxx - sx * sx / n;
  const double vy = syy - sy * sy / n;
  return cov * cov / (vx * vy);
}

Outcome growth_behaviour() {
  // Fixed pool: the long-running services only, no short-lived children and
  // no rare maintenance jobs.
  ScenarioSpec fixed = default_scenario(AttackKind::None, 3);
  std::erase_if(fixed.profiles, [](const BackgroundProfile& p) { return p.short_lived || p.rate < 0.1; });
  const auto events = parse_text(generate(fixed).text, x64()).events;
  GrowthOptions go;
  const auto points = growth(events, GraphMode::PseudoProcess, go);
  if (points.size() < 4) return fail("only " + std::to_string(points.size()) + " growth samples");
  const std::size_t half = points.size() / 2;
  bool plateau = true;
  for (std::size_t i = half; i < points.size(); ++i) {
    plateau = plateau && points[i].vertices == points[half].vertices && points[i].edges == points[half].edges;
  }
  std::vector<double> x, y;
  for (const auto& p : points) {
    x.push_back(static_cast<double>(p.events));
    y.push_back(static_cast<double>(p.interactions));
  }
  const double r2 = r_squared(x, y);
  std::size_t exact = 0;
  for (std::size_t i = go.skip_head; i < events.size() - go.skip_tail; ++i) exact += pseudo_interactions(events[i]);
  const bool linear = r2 >= 0.999 && points.back().interactions == exact;

  // Short-lived children: one new process per spawn in tree mode.
  ScenarioSpec spawning;
  spawning.name = "spawning";
  spawning.seed = 3;
  spawning.duration = 120;
  BackgroundProfile check_job;
  check_job.name = "healthcheck";
  check_job.user = "0";
  check_job.exe = "/usr/bin/curl";
  check_job.files = {"/etc/hosts"};
  check_job.rate = 5;
  check_job.short_lived = true;
  spawning.profiles = {check_job};
  const auto spawn_events = parse_text(generate(spawning).text, x64()).events;
  const auto tree = growth(spawn_events, GraphMode::ProcessTree, go);
  const auto pseudo = growth(spawn_events, GraphMode::PseudoProcess, go);
  const double ratio = static_cast<double>(tree.back().vertices) / static_cast<double>(pseudo.back().vertices);

  return check(plateau && linear && ratio >= 5,
               std::string("plateau ") + (plateau ? "yes" : "no") + " (" + std::to_string(points.back().vertices) +
                   " vertices), interactions R^2 " + fmt(r2, 6) + (points.back().interactions == exact ? "" : " count mismatch") +
                   ", tree/pseudo vertices " + fmt(ratio, 1));
}

Outcome real_data() {
  const char* dir = std::getenv("RIGKIT_DATASET_DIR");
  if (!dir || !*dir || !fs::is_directory(dir)) return {Verdict::Skip, "RIGKIT_DATASET_DIR not set"};
  std::optional<fs::path> um, vm;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string name = entry.path().filename().string();
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    if (!um && name.find("um") != std::string::npos) um = entry.path();
    if (!vm && name.find("vm") != std::string::npos) vm = entry.path();
  }
  if (!um || !vm) return {Verdict::Skip, "no UM/VM log under " + std::string(dir)};
  std::string detail;
  bool ok = true;
  for (const fs::path& p : {*um, *vm}) {
    std::ifstream in(p);
    const ParseResult pr = parse_stream(in, x64());
    const double warn_rate =
        pr.events.empty() ? 1.0 : static_cast<double>(pr.warnings.size()) / static_cast<double>(pr.events.size());
    const RiGraph tree = build_graph(pr.events, GraphMode::ProcessTree).graph;
    const RiGraph pseudo = build_graph(pr.events, GraphMode::PseudoProcess).graph;
    ok = ok && warn_rate <= 0.01 && pseudo.node_count() < tree.node_count() && pseudo.edge_count() < tree.edge_count();
    if (!detail.empty()) detail += "; ";
    detail += p.filename().string() + ": warnings " + fmt(100 * warn_rate, 2) + "%, pseudo " +
              std::to_string(pseudo.node_count()) + "/" + std::to_string(pseudo.edge_count()) + " tree " +
              std::to_string(tree.node_count()) + "/" + std::to_string(tree.edge_count());
  }
  return check(ok, detail);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"sample event fidelity", sample_event_fidelity},
      {"metrics fidelity", metrics_fidelity},
      {"invariant suite", invariant_suite},
      {"GAE numerical correctness", gae_numerics},
      {"GAE detection", gae_detection},
      {"node+edge vs node-only", attribute_ablation},
      {"k-medoids oracle", kmedoids_oracle},
      {"cluster detection", cluster_detection},
      {"growth behaviour", growth_behaviour},
      {"real-data ingestion", real_data},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const char* tag = o.verdict == Verdict::Pass ? "PASS" : o.verdict == Verdict::Skip ? "SKIP" : "FAIL";
    failed += o.verdict == Verdict::Fail;
    std::cout << tag << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail << " (" << fmt(secs, 1) << "s)"
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
