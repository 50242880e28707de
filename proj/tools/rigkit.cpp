#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rigkit/audit_parser.hpp"
#include "rigkit/cluster.hpp"
#include "rigkit/crossval.hpp"
#include "rigkit/csv.hpp"
#include "rigkit/eval.hpp"
#include "rigkit/event_json.hpp"
#include "rigkit/gae_pipeline.hpp"
#include "rigkit/graph_io.hpp"
#include "rigkit/growth.hpp"
#include "rigkit/labeler.hpp"
#include "rigkit/segmentation.hpp"
#include "rigkit/synth.hpp"

namespace fs = std::filesystem;
using namespace rigkit;

namespace {

// Exit codes: 0 success, 1 unusable data, 2 bad command line.
constexpr int kDataExit = 1;
constexpr int kUsageExit = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void report_error(std::string_view kind, std::string_view message) {
  nlohmann::ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  if (!fs::exists(path)) throw DataError("input not found: " + path);
  return read_file(path);
}

void write_output(const std::string& path, std::string_view text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  write_file_atomic(path, text);
}

/// --table beats RIGKIT_SYSCALL_TABLE, which beats the built-in default.
SyscallTable load_table(const std::string& flag) {
  if (!flag.empty()) return resolve_syscall_table(flag);
  if (const char* env = std::getenv("RIGKIT_SYSCALL_TABLE"); env && *env) return resolve_syscall_table(env);
  return builtin_syscall_table(kDefaultSyscallTable);
}

GraphMode mode_from(const std::string& name) {
  auto m = parse_graph_mode(name);
  if (!m) throw UsageError("unknown mode '" + name + "' (expected tree or pseudo)");
  return *m;
}

bool looks_like_json(std::string_view text) {
  const auto at = text.find_first_not_of(" \t\r\n");
  return at != std::string_view::npos && text[at] == '{';
}

/// A graph JSON document is imported as-is; anything else is parsed as an
/// audit log and folded in `mode`.
RiGraph load_graph(const std::string& path, GraphMode mode, const SyscallTable& table, const BuildOptions& build) {
  const std::string text = read_input(path);
  if (looks_like_json(text)) return graph_from_json_text(text);
  const ParseResult pr = parse_text(text, table);
  return build_graph(pr.events, mode, build).graph;
}

fs::path sidecar_for(const std::string& log) {
  fs::path p(log);
  p.replace_extension(".window");
  return p;
}

/// An explicit window file wins; otherwise a `<log>.window` sidecar is used
/// when present.
std::optional<AttackWindow> load_window(const std::string& explicit_path, const std::string& log) {
  std::string path = explicit_path;
  if (path.empty()) {
    if (log == "-") return std::nullopt;
    const fs::path side = sidecar_for(log);
    if (!fs::exists(side)) return std::nullopt;
    path = side.string();
  }
  std::istringstream in(read_input(path));
  return read_window(in);
}

std::string scenario_name(const std::string& path) {
  return path == "-" ? std::string("stdin") : fs::path(path).stem().string();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::size_t to_size(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a non-negative integer: '" + s + "'");
  }
  if (used != s.size() || s.starts_with('-')) throw UsageError("not a non-negative integer: '" + s + "'");
  return static_cast<std::size_t>(v);
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

/// "a-b[:step]" or "a,b,c".
std::vector<std::size_t> parse_size_range(const std::string& text, std::size_t default_step) {
  if (text.find('-') != std::string::npos) {
    std::string body = text;
    std::size_t step = default_step;
    if (auto colon = body.find(':'); colon != std::string::npos) {
      step = to_size(body.substr(colon + 1));
      body.erase(colon);
    }
    const auto dash = body.find('-');
    const std::size_t lo = to_size(body.substr(0, dash));
    const std::size_t hi = to_size(body.substr(dash + 1));
    if (step == 0 || lo > hi) throw UsageError("bad range '" + text + "'");
    std::vector<std::size_t> out;
    for (std::size_t v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  }
  std::vector<std::size_t> out;
  for (const auto& item : split_list(text)) out.push_back(to_size(item));
  if (out.empty()) throw UsageError("empty range '" + text + "'");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) out.push_back(to_double(item));
  if (out.empty()) throw UsageError("empty list '" + text + "'");
  return out;
}

ScenarioLog load_scenario_log(const std::string& path, const SyscallTable& table) {
  ScenarioLog log;
  log.id = scenario_name(path);
  log.events = parse_text(read_input(path), table).events;
  log.window = load_window({}, path);
  return log;
}

// --- subcommands -------------------------------------------------------------

struct Common {
  std::string table;
};

struct ParseArgs {
  std::string log;
  std::string out = "-";
  bool names = false;
  bool stats = false;
};

void run_parse(const Common& c, const ParseArgs& a) {
  const SyscallTable table = load_table(c.table);
  const ParseResult pr = parse_text(read_input(a.log), table);
  std::ostringstream out;
  write_ndjson(out, pr.events, a.names ? &table : nullptr);
  write_output(a.out, out.str());
  if (a.stats) {
    nlohmann::ordered_json j;
    j["events"] = pr.events.size();
    j["skipped_events"] = pr.skipped_events;
    j["distinct_keys"] = pr.distinct_keys;
    j["warnings"] = pr.warnings.size();
    std::cerr << j.dump() << "\n";
  }
}

struct BuildArgs {
  std::string log;
  std::string out = "-";
  std::string mode = "pseudo";
  std::string format = "json";
  bool cwd_node = false;
};

std::string render_graph(const RiGraph& g, const std::string& format) {
  if (format == "json") return graph_to_json_text(g);
  if (format == "dot") return graph_to_dot(g);
  if (format == "csv") return graph_to_csv(g);
  throw UsageError("unknown graph format '" + format + "'");
}

void run_build(const Common& c, const BuildArgs& a) {
  const SyscallTable table = load_table(c.table);
  const ParseResult pr = parse_text(read_input(a.log), table);
  const BuildResult br = build_graph(pr.events, mode_from(a.mode), BuildOptions{a.cwd_node});
  write_output(a.out, render_graph(br.graph, a.format));
}

struct GrowthArgs {
  std::string log;
  std::string out = "-";
  std::string mode = "pseudo";
  std::size_t stride = 200;
  std::size_t skip_head = 200;
  std::size_t skip_tail = 200;
  double log_base = 1.02;
};

void run_growth(const Common& c, const GrowthArgs& a) {
  const SyscallTable table = load_table(c.table);
  const ParseResult pr = parse_text(read_input(a.log), table);
  GrowthOptions o;
  o.stride = a.stride;
  o.skip_head = a.skip_head;
  o.skip_tail = a.skip_tail;
  const auto points = growth(pr.events, mode_from(a.mode), o);
  std::ostringstream out;
  write_growth_csv(out, points, a.log_base);
  write_output(a.out, out.str());
}

struct LabelArgs {
  std::string input;
  std::string window;
  std::string out = "-";
  std::string mode = "pseudo";
};

void run_label(const Common& c, const LabelArgs& a) {
  const SyscallTable table = load_table(c.table);
  const RiGraph g = load_graph(a.input, mode_from(a.mode), table, {});
  const auto window = load_window(a.window, a.input);
  const EdgeLabels labels = label_edges(g, window);
  write_output(a.out, labels_to_csv(g, labels));
  nlohmann::ordered_json j;
  j["normal"] = labels.normal;
  j["abnormal"] = labels.abnormal;
  if (labels.window_outside_span) j["warning"] = "attack window lies outside the graph's time span";
  std::cerr << j.dump() << "\n";
}

struct GaeArgs {
  std::string input;
  std::string window;
  std::string out = "-";
  std::string mode = "pseudo";
  int epochs = 10000;
  std::optional<double> threshold;
  bool sweep = false;
  std::uint64_t seed = 7;
  std::string hidden = "32,16";
  bool node_attrs_only = false;
  bool raw_counts = false;
  double learning_rate = 0.005;
  std::string optimizer = "gd";
  double train_fraction = 0.5;
  std::string model_out;
  std::string scores_out;
  std::string metrics_json;
};

void run_gae_cmd(const Common& c, const GaeArgs& a) {
  const SyscallTable table = load_table(c.table);
  const GraphMode mode = mode_from(a.mode);
  const RiGraph g = load_graph(a.input, mode, table, {});
  const EdgeLabels labels = label_edges(g, load_window(a.window, a.input));

  GaeRunOptions o;
  o.config.epochs = a.epochs;
  o.config.seed = a.seed;
  o.config.learning_rate = a.learning_rate;
  const auto hidden = split_list(a.hidden);
  if (hidden.size() != 2) throw UsageError("--hidden expects h0,h1");
  o.config.hidden0 = static_cast<Eigen::Index>(to_size(hidden[0]));
  o.config.hidden1 = static_cast<Eigen::Index>(to_size(hidden[1]));
  if (o.config.hidden0 == 0 || o.config.hidden1 == 0) throw UsageError("--hidden sizes must be positive");
  const auto opt = parse_optimizer(a.optimizer);
  if (!opt) throw UsageError("unknown optimizer '" + a.optimizer + "' (expected gd or adam)");
  o.config.optimizer = *opt;
  o.features.node_attributes_only = a.node_attrs_only;
  o.features.log_scale = !a.raw_counts;
  o.train_fraction = a.train_fraction;
  if (!a.sweep) o.threshold = a.threshold.value_or(0.5);

  const GaeRunResult r = run_gae(g, labels, table, o);

  ExperimentRow row;
  row.scenario = scenario_name(a.input);
  row.mode = std::string(to_string(mode));
  row.detector = a.node_attrs_only ? "gae-node" : "gae";
  row.fold = "-";
  row.threshold = r.threshold;
  row.cm = r.cm;
  row.m = r.m;
  write_output(a.out, experiment_csv_header() + "\n" + experiment_csv_row(row) + "\n");
  if (!a.metrics_json.empty()) write_output(a.metrics_json, experiment_json(row).dump(2) + "\n");
  if (!a.model_out.empty()) write_output(a.model_out, model_to_json(r.model, o.config).dump() + "\n");
  if (!a.scores_out.empty()) {
    std::string csv = "u,v,score,label\n";
    for (std::size_t i = 0; i < r.split.test.size(); ++i) {
      const auto [u, v] = r.lp.edges[r.split.test[i]];
      csv += csv_row({r.lp.ids[u], r.lp.ids[v], format_fixed(r.test_scores[i], 6),
                      std::string(to_string(r.split.test_labels[i]))}) +
             "\n";
    }
    write_output(a.scores_out, csv);
  }
}

struct ClusterArgs {
  std::vector<std::string> logs;
  std::string out = "-";
  std::string mode = "pseudo";
  std::string k_range = "1-5";
  std::string chunk_range = "10-50";
  std::string slack_range = "1.0,1.1,1.25,1.5";
  std::size_t folds = 4;
  std::uint64_t seed = 7;
  bool fit_only = false;
  std::string model;
  std::string model_out;
};

FitOptions fit_options(const ClusterArgs& a) {
  FitOptions f;
  f.k_values = parse_size_range(a.k_range, 1);
  f.chunk_values = parse_size_range(a.chunk_range, 2);
  f.slack_values = parse_double_list(a.slack_range);
  f.seed = a.seed;
  return f;
}

void run_cluster(const Common& c, const ClusterArgs& a) {
  const SyscallTable table = load_table(c.table);
  const GraphMode mode = mode_from(a.mode);

  if (!a.model.empty()) {
    const ClusterModel model = cluster_model_from_json(nlohmann::json::parse(read_input(a.model)));
    std::string csv = "log,label,nearest,distance\n";
    for (const auto& path : a.logs) {
      const RiGraph g = load_graph(path, mode, table, {});
      const ClusterPrediction p = predict(model, sketch(g, model.max_chunk, scenario_name(path)));
      csv += csv_row({scenario_name(path), std::string(to_string(p.label)), std::to_string(p.nearest),
                      format_fixed(p.distance, 6)}) +
             "\n";
    }
    write_output(a.out, csv);
    return;
  }

  std::vector<ScenarioLog> logs;
  for (const auto& path : a.logs) logs.push_back(load_scenario_log(path, table));
  const FitOptions fopts = fit_options(a);

  if (a.fit_only) {
    // Same 7:1 train/validate ratio as a cross-validation fold, on benign
    // (pre-attack) graphs of every log.
    const double fractions[] = {0.875, 0.125};
    const auto groups = seeded_partition(logs.size(), fractions, a.seed);
    std::vector<RiGraph> train;
    std::vector<RiGraph> validate;
    for (std::size_t i : groups[0]) train.push_back(build_graph(pre_attack_events(logs[i]), mode).graph);
    for (std::size_t i : groups[1]) validate.push_back(build_graph(pre_attack_events(logs[i]), mode).graph);
    const FitResult fr = fit(train, validate, fopts);
    const std::string text = cluster_model_to_json(fr.model).dump() + "\n";
    write_output(a.model_out.empty() ? a.out : a.model_out, text);
    return;
  }

  CrossvalOptions o;
  o.folds = a.folds;
  o.mode = mode;
  o.fit = fopts;
  o.seed = a.seed;
  const CrossvalResult r = crossval(logs, o);
  std::string csv = experiment_csv_header() + "\n";
  const std::string scenario = "crossval";
  ConfusionMatrix total;
  for (std::size_t f = 0; f < r.folds.size(); ++f) {
    const FoldResult& fold = r.folds[f];
    total += fold.cm;
    csv += experiment_csv_row({scenario, std::string(to_string(mode)), "cluster", std::to_string(f + 1),
                               fold.fit.model.slack, fold.cm, fold.m}) +
           "\n";
  }
  csv += experiment_csv_row({scenario, std::string(to_string(mode)), "cluster", "mean", 0, total, r.mean}) + "\n";
  write_output(a.out, csv);
  if (!a.model_out.empty() && !r.folds.empty()) {
    write_output(a.model_out, cluster_model_to_json(r.folds.front().fit.model).dump() + "\n");
  }
}

struct EvalArgs {
  std::string cm;
  std::vector<std::string> inputs;
  std::string out = "-";
};

void run_eval(const EvalArgs& a) {
  if (!a.cm.empty()) {
    const auto parts = split_list(a.cm);
    if (parts.size() != 4) throw UsageError("--cm expects tp,fp,fn,tn");
    ConfusionMatrix cm{static_cast<std::int64_t>(to_size(parts[0])), static_cast<std::int64_t>(to_size(parts[1])),
                       static_cast<std::int64_t>(to_size(parts[2])), static_cast<std::int64_t>(to_size(parts[3]))};
    write_output(a.out, metrics_json(cm, metrics(cm)).dump(2) + "\n");
    return;
  }
  if (a.inputs.empty()) throw UsageError("eval needs --cm or experiment CSV files");

  // Mean of per-row metrics per (scenario, mode, detector); "mean" rows are
  // summaries already and are skipped.
  struct Group {
    ConfusionMatrix cm;
    std::vector<Metrics> items;
  };
  std::vector<std::pair<std::array<std::string, 3>, Group>> groups;
  for (const auto& path : a.inputs) {
    std::istringstream in(read_input(path));
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (header) {
        if (line != experiment_csv_header()) throw DataError(path + ": not an experiment CSV");
        header = false;
        continue;
      }
      const auto f = csv_split(line);
      if (f.size() != 13) throw DataError(path + ": expected 13 fields, got " + std::to_string(f.size()));
      if (f[3] == "mean") continue;
      ConfusionMatrix cm{static_cast<std::int64_t>(to_size(f[5])), static_cast<std::int64_t>(to_size(f[6])),
                         static_cast<std::int64_t>(to_size(f[7])), static_cast<std::int64_t>(to_size(f[8]))};
      std::array<std::string, 3> key{f[0], f[1], f[2]};
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == key; });
      if (it == groups.end()) it = groups.insert(groups.end(), {key, {}});
      it->second.cm += cm;
      it->second.items.push_back(metrics(cm));
    }
  }
  std::string csv = experiment_csv_header() + "\n";
  for (const auto& [key, g] : groups) {
    csv += experiment_csv_row({key[0], key[1], key[2], "mean", 0, g.cm, mean_metrics(g.items)}) + "\n";
  }
  write_output(a.out, csv);
}

struct SynthArgs {
  std::string spec;
  std::string attack = "none";
  std::uint64_t seed = 7;
  double duration = 300;
  int attack_scale = 1;
  double attack_start = 0;
  std::string name;
  std::string out_dir;
  std::string out = "-";
  std::string window_out;
  bool print_spec = false;
};

void run_synth(const SynthArgs& a, const CLI::App& sub) {
  auto kind = parse_attack_kind(a.attack);
  if (!kind) throw UsageError("unknown attack '" + a.attack + "'");
  ScenarioSpec spec = a.spec.empty() ? default_scenario(*kind, a.seed)
                                     : spec_from_json(nlohmann::json::parse(read_input(a.spec)));
  // Flags given explicitly override the spec file.
  if (sub.count("--attack")) spec.attack = *kind;
  if (sub.count("--seed")) spec.seed = a.seed;
  if (sub.count("--duration")) spec.duration = a.duration;
  if (sub.count("--attack-scale")) spec.attack_scale = a.attack_scale;
  if (sub.count("--attack-start")) spec.attack_start = a.attack_start;
  if (!a.name.empty()) spec.name = a.name;
  if (a.print_spec) {
    write_output(a.out, spec_to_json(spec).dump(2) + "\n");
    return;
  }
  const GeneratedLog log = generate(spec);
  const std::string window = log.window ? format_window(*log.window) : std::string();
  if (!a.out_dir.empty()) {
    fs::create_directories(a.out_dir);
    write_file_atomic(fs::path(a.out_dir) / (spec.name + ".log"), log.text);
    write_file_atomic(fs::path(a.out_dir) / (spec.name + ".window"), window);
    return;
  }
  write_output(a.out, log.text);
  if (!a.window_out.empty()) write_output(a.window_out, window);
}

struct ExportArgs {
  std::string input;
  std::string out = "-";
  std::string mode = "pseudo";
  std::string format = "dot";
  std::string delta = "inf";
  double stride = 0;
};

SegmentWidth width_from(const std::string& text) {
  if (text == "inf") return SegmentWidth::infinite();
  if (text == "unit") return SegmentWidth::unit();
  return SegmentWidth::seconds(to_double(text));
}

void run_export(const Common& c, const ExportArgs& a) {
  const SyscallTable table = load_table(c.table);
  if (a.format == "segments") {
    const std::string text = read_input(a.input);
    if (looks_like_json(text)) throw DataError("segments need an audit log, not a graph");
    const ParseResult pr = parse_text(text, table);
    const double delta = to_double(a.delta);
    const auto vectors = segment_log(pr.events, table, delta, a.stride > 0 ? a.stride : delta);
    std::ostringstream out;
    write_segments_csv(out, vectors);
    write_output(a.out, out.str());
    return;
  }
  const RiGraph g = load_graph(a.input, mode_from(a.mode), table, {});
  if (a.format == "vectors") {
    const auto vectors = edge_vectors(g, table, width_from(a.delta));
    std::ostringstream out;
    write_edge_vectors_csv(out, g, vectors);
    write_output(a.out, out.str());
    return;
  }
  write_output(a.out, render_graph(g, a.format));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigkit: resource-interaction graphs from auditd logs"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--table", common.table, "Syscall table: x86-64, x86-32 or a table file");

  const auto mode_check = CLI::IsMember({"tree", "pseudo"});

  ParseArgs pa;
  auto* parse = app.add_subcommand("parse", "Parse an audit log into NDJSON events");
  parse->add_option("log", pa.log, "Audit log ('-' for stdin)")->required();
  parse->add_option("-o,--out", pa.out, "Output path ('-' for stdout)");
  parse->add_flag("--names", pa.names, "Add symbolic syscall names");
  parse->add_flag("--stats", pa.stats, "Print parse counters to stderr");

  BuildArgs ba;
  auto* build = app.add_subcommand("build", "Build a resource-interaction graph");
  build->add_option("log", ba.log, "Audit log ('-' for stdin)")->required();
  build->add_option("-o,--out", ba.out, "Output path");
  build->add_option("--mode", ba.mode, "tree or pseudo")->check(mode_check);
  build->add_option("--format", ba.format, "json, dot or csv")->check(CLI::IsMember({"json", "dot", "csv"}));
  build->add_flag("--cwd-node", ba.cwd_node, "Add the working directory as a FILE node");

  GrowthArgs ga;
  auto* grow = app.add_subcommand("growth", "Graph size series versus event count");
  grow->add_option("log", ga.log, "Audit log")->required();
  grow->add_option("-o,--out", ga.out, "CSV output path");
  grow->add_option("--mode", ga.mode, "tree or pseudo")->check(mode_check);
  grow->add_option("--stride", ga.stride, "Events between samples")->check(CLI::PositiveNumber);
  grow->add_option("--skip-head", ga.skip_head, "Events dropped at the start");
  grow->add_option("--skip-tail", ga.skip_tail, "Events dropped at the end");
  grow->add_option("--log-base", ga.log_base, "Base of the logarithmic reference curve");

  LabelArgs la;
  auto* label = app.add_subcommand("label", "Label edges from an attack window");
  label->add_option("input", la.input, "Graph JSON or audit log")->required();
  label->add_option("--window", la.window, "Window sidecar (default: <input>.window if present)");
  label->add_option("-o,--out", la.out, "CSV output path");
  label->add_option("--mode", la.mode, "Mode used when the input is a log")->check(mode_check);

  GaeArgs ea;
  auto* gae = app.add_subcommand("gae", "Graph autoencoder link-prediction detector");
  gae->add_option("input", ea.input, "Audit log or graph JSON")->required();
  gae->add_option("--window", ea.window, "Window sidecar (default: <input>.window if present)");
  gae->add_option("-o,--out", ea.out, "Metrics CSV output path");
  gae->add_option("--mode", ea.mode, "tree or pseudo")->check(mode_check);
  gae->add_option("--epochs", ea.epochs, "Training epochs")->check(CLI::NonNegativeNumber);
  auto* thr = gae->add_option("--threshold", ea.threshold, "Fixed decision threshold (default 0.5)")
                  ->check(CLI::Range(0.0, 1.0));
  gae->add_flag("--sweep", ea.sweep, "Pick the threshold with the best F1 on a 0.01 grid")->excludes(thr);
  gae->add_option("--seed", ea.seed, "Seed for split, initialisation and negatives");
  gae->add_option("--hidden", ea.hidden, "Hidden sizes h0,h1");
  gae->add_flag("--node-attrs-only", ea.node_attrs_only, "Use only the node-type columns");
  gae->add_flag("--raw-counts", ea.raw_counts, "Do not log-scale the syscall columns");
  gae->add_option("--lr", ea.learning_rate, "Learning rate")->check(CLI::PositiveNumber);
  gae->add_option("--optimizer", ea.optimizer, "gd or adam");
  gae->add_option("--train-fraction", ea.train_fraction, "Share of NORMAL edges used for training");
  gae->add_option("--model-out", ea.model_out, "Write the trained model as JSON");
  gae->add_option("--scores-out", ea.scores_out, "Write held-out edge scores as CSV");
  gae->add_option("--metrics-json", ea.metrics_json, "Also write the metrics as JSON");

  ClusterArgs ca;
  auto* cluster = app.add_subcommand("cluster", "Shingle/k-medoids graph clustering detector");
  cluster->add_option("logs", ca.logs, "Audit logs; <log>.window sidecars mark attacks")->required();
  cluster->add_option("-o,--out", ca.out, "Output path");
  cluster->add_option("--mode", ca.mode, "tree or pseudo")->check(mode_check);
  cluster->add_option("--k-range", ca.k_range, "k values: a-b or a,b,c");
  cluster->add_option("--chunk-range", ca.chunk_range, "Max chunk sizes: a-b[:step] or a,b,c");
  cluster->add_option("--slack-range", ca.slack_range, "Radius slack factors: a,b,c");
  cluster->add_option("--folds", ca.folds, "Cross-validation folds")->check(CLI::Range(2, 1000));
  cluster->add_option("--seed", ca.seed, "Seed for folds and medoid restarts");
  auto* fit_only = cluster->add_flag("--fit", ca.fit_only, "Fit one model on all logs instead of cross-validating");
  cluster->add_option("--model", ca.model, "Score the logs with a saved model")->excludes(fit_only);
  cluster->add_option("--model-out", ca.model_out, "Write the fitted model (first fold when cross-validating)");

  EvalArgs va;
  auto* eval = app.add_subcommand("eval", "Metrics from a confusion matrix or experiment CSVs");
  auto* cm_opt = eval->add_option("--cm", va.cm, "tp,fp,fn,tn");
  eval->add_option("inputs", va.inputs, "Experiment CSV files to average")->excludes(cm_opt);
  eval->add_option("-o,--out", va.out, "Output path");

  SynthArgs sa;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic audit log");
  synth->add_option("--spec", sa.spec, "Scenario spec JSON");
  synth->add_option("--attack", sa.attack, "none, dos_like or privesc_like");
  synth->add_option("--seed", sa.seed, "Generator seed");
  synth->add_option("--duration", sa.duration, "Seconds of activity")->check(CLI::PositiveNumber);
  synth->add_option("--attack-scale", sa.attack_scale, "Attack step multiplier")->check(CLI::PositiveNumber);
  synth->add_option("--attack-start", sa.attack_start, "Attack offset in seconds");
  synth->add_option("--name", sa.name, "Scenario name (file stem with --out-dir)");
  auto* out_dir = synth->add_option("--out-dir", sa.out_dir, "Write <name>.log and <name>.window here");
  synth->add_option("-o,--out", sa.out, "Log output path")->excludes(out_dir);
  synth->add_option("--window-out", sa.window_out, "Window sidecar path")->excludes(out_dir);
  synth->add_flag("--print-spec", sa.print_spec, "Print the effective spec instead of generating");

  ExportArgs xa;
  auto* exp = app.add_subcommand("export", "Export a graph or its count vectors");
  exp->add_option("input", xa.input, "Graph JSON or audit log")->required();
  exp->add_option("-o,--out", xa.out, "Output path");
  exp->add_option("--mode", xa.mode, "Mode used when the input is a log")->check(mode_check);
  exp->add_option("--format", xa.format, "dot, json, csv, vectors or segments")
      ->check(CLI::IsMember({"dot", "json", "csv", "vectors", "segments"}));
  exp->add_option("--delta", xa.delta, "Interval: seconds, inf or unit (segments need seconds)");
  exp->add_option("--stride", xa.stride, "Segment stride in seconds (default: delta)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    report_error("usage", e.what());
    return kUsageExit;
  }

  try {
    if (*parse) run_parse(common, pa);
    if (*build) run_build(common, ba);
    if (*grow) run_growth(common, ga);
    if (*label) run_label(common, la);
    if (*gae) run_gae_cmd(common, ea);
    if (*cluster) run_cluster(common, ca);
    if (*eval) run_eval(va);
    if (*synth) run_synth(sa, *synth);
    if (*exp) run_export(common, xa);
  } catch (const UsageError& e) {
    report_error("usage", e.what());
    return kUsageExit;
  } catch (const nlohmann::json::exception& e) {
    report_error("data", e.what());
    return kDataExit;
  } catch (const std::exception& e) {
    report_error("data", e.what());
    return kDataExit;
  }
  return 0;
}
