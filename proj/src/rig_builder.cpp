#include <algorithm>

#include "rigkit/rig_graph.hpp"

namespace rigkit {

ApplyResult apply_event(RiGraph& g, const AuditEvent& e, const BuildOptions& options,
                        BuildCounters* counters) {
  ApplyResult result;
  if (e.pid.empty() || e.exe.empty()) {
    if (counters) ++counters->skipped_missing_fields;
    return result;
  }
  std::string uid = e.uid;
  if (uid.empty()) {
    uid = kUnsetUid;
    if (counters) ++counters->unset_uid;
  }
  // The prefix keeps an executable distinct from a FILE node of the same path.
  const std::string exe = std::string(kExecutablePrefix) + e.exe;
  const bool build_tree = g.mode() == GraphMode::ProcessTree;
  const std::string pid = build_tree ? e.pid : uid + exe;

  const Interaction ix{e.timestamp, e.syscall};
  std::vector<std::size_t> touched;
  auto link = [&](std::size_t from, std::size_t to) {
    if (from == to) return;
    if (auto existing = g.find_edge(from, to);
        existing && std::find(touched.begin(), touched.end(), *existing) != touched.end()) {
      return;
    }
    auto update = g.add_update_edge(from, to, ix);
    touched.push_back(update.edge);
    if (update.created) result.created_edges.push_back(update.edge);
  };

  const std::size_t pid_node = g.add_update_node(pid, NodeType::Process, e.timestamp);
  const std::size_t exe_node = g.add_update_node(exe, NodeType::Executable, e.timestamp);
  const std::size_t uid_node = g.add_update_node(uid, NodeType::User, e.timestamp);
  link(uid_node, pid_node);
  link(pid_node, exe_node);

  // ppid 0 is the kernel, not a process; as a node it would also collide
  // with the root user's id.
  if (build_tree && !e.ppid.empty() && e.ppid != "0") {
    const std::size_t ppid_node = g.add_update_node(e.ppid, NodeType::Process, e.timestamp);
    link(ppid_node, pid_node);
  }
  if (e.sockaddr) {
    const std::size_t sock = g.add_update_node(e.sockaddr->address, NodeType::Socket, e.timestamp);
    link(pid_node, sock);
  }
  for (const PathEntry& path : e.paths) {
    if (path.name.empty()) continue;
    link(pid_node, g.add_update_node(path.name, NodeType::File, e.timestamp));
  }
  for (const std::string& arg : e.execve_args) {
    if (!arg.starts_with('/')) continue;
    link(pid_node, g.add_update_node(arg, NodeType::File, e.timestamp));
  }
  if (options.cwd_node && e.cwd && !e.cwd->empty()) {
    link(pid_node, g.add_update_node(*e.cwd, NodeType::File, e.timestamp));
  }

  result.applied = true;
  if (counters) ++counters->applied;
  return result;
}

BuildResult build_graph(std::span<const AuditEvent> events, GraphMode mode,
                        const BuildOptions& options) {
  BuildResult result{RiGraph(mode), {}, {}};
  result.journal.reserve(events.size());
  for (const AuditEvent& e : events) {
    result.journal.push_back(apply_event(result.graph, e, options, &result.counters).created_edges);
  }
  return result;
}

}  // namespace rigkit
