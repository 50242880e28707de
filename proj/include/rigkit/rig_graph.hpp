#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rigkit/audit_parser.hpp"
#include "rigkit/types.hpp"

namespace rigkit {

enum class NodeType : std::uint8_t { Process, Executable, User, File, Socket };

inline constexpr std::size_t kNodeTypeCount = 5;
inline constexpr std::array<NodeType, kNodeTypeCount> kAllNodeTypes = {
    NodeType::Process, NodeType::Executable, NodeType::User, NodeType::File, NodeType::Socket};

std::string_view to_string(NodeType type);
std::optional<NodeType> parse_node_type(std::string_view name);
/// Single-letter alphabet used by graph sketches: P, E, U, F, S.
char type_char(NodeType type);

enum class GraphMode { ProcessTree, PseudoProcess };

std::string_view to_string(GraphMode mode);  // "tree" / "pseudo"
std::optional<GraphMode> parse_graph_mode(std::string_view name);

struct Interaction {
  Timestamp time;
  int syscall = 0;

  bool operator==(const Interaction&) const = default;
};

struct RigNode {
  std::string id;
  NodeType type = NodeType::File;
  Timestamp created_at;
};

struct EdgeKey {
  std::string from;
  std::string to;

  auto operator<=>(const EdgeKey&) const = default;
};

struct RigEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Timestamp created_at;
  std::vector<Interaction> interactions;
};

/// Directed resource-interaction graph. Nodes and edges are kept in creation
/// order; at most one edge exists per ordered node pair.
class RiGraph {
 public:
  explicit RiGraph(GraphMode mode = GraphMode::PseudoProcess) : mode_(mode) {}

  GraphMode mode() const { return mode_; }

  std::span<const RigNode> nodes() const { return nodes_; }
  std::span<const RigEdge> edges() const { return edges_; }
  const RigNode& node(std::size_t i) const { return nodes_[i]; }
  const RigEdge& edge(std::size_t i) const { return edges_[i]; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> find_node(const std::string& id) const;
  std::optional<std::size_t> find_edge(std::size_t from, std::size_t to) const;
  std::optional<std::size_t> find_edge(const std::string& from, const std::string& to) const;
  EdgeKey edge_key(std::size_t edge) const;

  /// Adds the node if absent. An existing node is never updated; a differing
  /// type is recorded as a type conflict.
  std::size_t add_update_node(const std::string& id, NodeType type, Timestamp time);

  struct EdgeUpdate {
    std::size_t edge;
    bool created;
  };
  /// Appends an interaction, creating the edge on first use.
  EdgeUpdate add_update_edge(std::size_t from, std::size_t to, Interaction interaction);

  /// Raw insertion used by importers: no dedup beyond id uniqueness.
  std::size_t insert_node(RigNode node);
  std::size_t insert_edge(RigEdge edge);

  std::size_t type_conflicts() const { return type_conflicts_; }
  std::size_t interaction_count() const { return interaction_count_; }

  /// Outgoing edge indices per node, in edge creation order.
  std::vector<std::vector<std::size_t>> out_edges() const;

 private:
  static std::uint64_t pair_key(std::size_t from, std::size_t to) {
    return (static_cast<std::uint64_t>(from) << 32) | static_cast<std::uint64_t>(to);
  }

  GraphMode mode_;
  std::vector<RigNode> nodes_;
  std::vector<RigEdge> edges_;
  std::unordered_map<std::string, std::size_t> node_index_;
  std::unordered_map<std::uint64_t, std::size_t> edge_index_;
  std::size_t type_conflicts_ = 0;
  std::size_t interaction_count_ = 0;
};

// --- Event folding ----------------------------------------------------------

struct BuildOptions {
  /// Also add the event's working directory as a FILE node.
  bool cwd_node = false;
};

struct BuildCounters {
  std::size_t applied = 0;
  std::size_t skipped_missing_fields = 0;  // no pid or no exe
  std::size_t unset_uid = 0;               // uid defaulted to "unset"
};

inline constexpr std::string_view kExecutablePrefix = "executable:";
inline constexpr std::string_view kUnsetUid = "unset";

struct ApplyResult {
  bool applied = false;
  std::vector<std::size_t> created_edges;
};

/// Folds one SYSCALL event into the graph. Tree or pseudo behaviour follows
/// `g.mode()`. Each edge touched by the event receives exactly one
/// (timestamp, syscall) interaction, however many records reference it.
ApplyResult apply_event(RiGraph& g, const AuditEvent& e, const BuildOptions& options = {},
                        BuildCounters* counters = nullptr);

struct BuildResult {
  RiGraph graph;
  /// journal[i] = edges created by events[i].
  std::vector<std::vector<std::size_t>> journal;
  BuildCounters counters;
};

BuildResult build_graph(std::span<const AuditEvent> events, GraphMode mode,
                        const BuildOptions& options = {});

struct InvariantReport {
  bool acyclic = true;
  /// Longest directed path in edges; meaningful only when acyclic.
  std::size_t max_path_len = 0;
  std::size_t type_conflicts = 0;
  /// FILE/SOCKET/EXECUTABLE nodes with no PROCESS in-edge.
  std::size_t resources_without_process = 0;
  /// PROCESS nodes with no USER in-edge (parent-only processes in tree mode).
  std::size_t processes_without_user = 0;
};

InvariantReport check_invariants(const RiGraph& g);

}  // namespace rigkit
