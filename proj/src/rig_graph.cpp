#include "rigkit/rig_graph.hpp"

#include <algorithm>
#include <deque>

namespace rigkit {

std::string_view to_string(NodeType type) {
  switch (type) {
    case NodeType::Process: return "PROCESS";
    case NodeType::Executable: return "EXECUTABLE";
    case NodeType::User: return "USER";
    case NodeType::File: return "FILE";
    case NodeType::Socket: return "SOCKET";
  }
  return "?";
}

std::optional<NodeType> parse_node_type(std::string_view name) {
  for (NodeType t : kAllNodeTypes) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

char type_char(NodeType type) {
  switch (type) {
    case NodeType::Process: return 'P';
    case NodeType::Executable: return 'E';
    case NodeType::User: return 'U';
    case NodeType::File: return 'F';
    case NodeType::Socket: return 'S';
  }
  return '?';
}

std::string_view to_string(GraphMode mode) {
  return mode == GraphMode::ProcessTree ? "tree" : "pseudo";
}

std::optional<GraphMode> parse_graph_mode(std::string_view name) {
  if (name == "tree") return GraphMode::ProcessTree;
  if (name == "pseudo") return GraphMode::PseudoProcess;
  return std::nullopt;
}

std::optional<std::size_t> RiGraph::find_node(const std::string& id) const {
  auto it = node_index_.find(id);
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RiGraph::find_edge(std::size_t from, std::size_t to) const {
  auto it = edge_index_.find(pair_key(from, to));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RiGraph::find_edge(const std::string& from, const std::string& to) const {
  auto f = find_node(from);
  auto t = find_node(to);
  if (!f || !t) return std::nullopt;
  return find_edge(*f, *t);
}

EdgeKey RiGraph::edge_key(std::size_t edge) const {
  const RigEdge& e = edges_[edge];
  return EdgeKey{nodes_[e.from].id, nodes_[e.to].id};
}

std::size_t RiGraph::add_update_node(const std::string& id, NodeType type, Timestamp time) {
  if (auto it = node_index_.find(id); it != node_index_.end()) {
    if (nodes_[it->second].type != type) ++type_conflicts_;
    return it->second;
  }
  return insert_node(RigNode{id, type, time});
}

RiGraph::EdgeUpdate RiGraph::add_update_edge(std::size_t from, std::size_t to, Interaction ix) {
  if (auto existing = find_edge(from, to)) {
    edges_[*existing].interactions.push_back(ix);
    ++interaction_count_;
    return {*existing, false};
  }
  RigEdge edge;
  edge.from = from;
  edge.to = to;
  edge.created_at = ix.time;
  edge.interactions.push_back(ix);
  return {insert_edge(std::move(edge)), true};
}

std::size_t RiGraph::insert_node(RigNode node) {
  if (node_index_.contains(node.id)) throw DataError("duplicate node id: " + node.id);
  const std::size_t idx = nodes_.size();
  node_index_.emplace(node.id, idx);
  nodes_.push_back(std::move(node));
  return idx;
}

std::size_t RiGraph::insert_edge(RigEdge edge) {
  if (edge.from >= nodes_.size() || edge.to >= nodes_.size()) {
    throw DataError("edge endpoint out of range");
  }
  const auto key = pair_key(edge.from, edge.to);
  if (edge_index_.contains(key)) {
    throw DataError("duplicate edge " + nodes_[edge.from].id + " -> " + nodes_[edge.to].id);
  }
  const std::size_t idx = edges_.size();
  edge_index_.emplace(key, idx);
  interaction_count_ += edge.interactions.size();
  edges_.push_back(std::move(edge));
  return idx;
}

std::vector<std::vector<std::size_t>> RiGraph::out_edges() const {
  std::vector<std::vector<std::size_t>> out(nodes_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) out[edges_[i].from].push_back(i);
  return out;
}

InvariantReport check_invariants(const RiGraph& g) {
  InvariantReport report;
  report.type_conflicts = g.type_conflicts();
  const std::size_t n = g.node_count();

  std::vector<std::size_t> indegree(n, 0);
  std::vector<bool> has_process_parent(n, false);
  std::vector<bool> has_user_parent(n, false);
  for (const RigEdge& e : g.edges()) {
    ++indegree[e.to];
    const NodeType from_type = g.node(e.from).type;
    if (from_type == NodeType::Process) has_process_parent[e.to] = true;
    if (from_type == NodeType::User) has_user_parent[e.to] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const NodeType t = g.node(i).type;
    if ((t == NodeType::File || t == NodeType::Socket || t == NodeType::Executable) &&
        !has_process_parent[i]) {
      ++report.resources_without_process;
    }
    if (t == NodeType::Process && !has_user_parent[i]) ++report.processes_without_user;
  }

  // Kahn's algorithm; longest path relaxed along the topological order.
  const auto out = g.out_edges();
  std::deque<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::vector<std::size_t> depth(n, 0);
  std::size_t visited = 0;
  while (!ready.empty()) {
    const std::size_t u = ready.front();
    ready.pop_front();
    ++visited;
    for (std::size_t ei : out[u]) {
      const std::size_t v = g.edge(ei).to;
      depth[v] = std::max(depth[v], depth[u] + 1);
      if (--indegree[v] == 0) ready.push_back(v);
    }
  }
  report.acyclic = visited == n;
  if (report.acyclic && n > 0) report.max_path_len = *std::max_element(depth.begin(), depth.end());
  return report;
}

}  // namespace rigkit
