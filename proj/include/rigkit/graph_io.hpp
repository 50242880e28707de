#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "rigkit/rig_graph.hpp"

namespace rigkit {

/// Graphviz DOT. Node shape encodes the node type; edge labels are
/// "n=<interaction count>".
std::string graph_to_dot(const RiGraph& g);

/// {mode, nodes:[{id,type,created_at}], edges:[{from,to,created_at,
/// interactions:[[ts,syscall],...]}]}, keys in that order.
nlohmann::ordered_json graph_to_json(const RiGraph& g);
std::string graph_to_json_text(const RiGraph& g);

/// Inverse of graph_to_json; export(import(x)) reproduces x byte for byte.
RiGraph graph_from_json(const nlohmann::ordered_json& j);
RiGraph graph_from_json_text(std::string_view text);

/// Header `from,to,created_at,interactions`, one row per edge.
std::string graph_to_csv(const RiGraph& g);

}  // namespace rigkit
