#include "rigkit/graph_io.hpp"

#include <sstream>

#include "rigkit/csv.hpp"

namespace rigkit {

namespace {

std::string_view dot_shape(NodeType t) {
  switch (t) {
    case NodeType::Process: return "ellipse";
    case NodeType::Executable: return "diamond";
    case NodeType::User: return "house";
    case NodeType::File: return "box";
    case NodeType::Socket: return "hexagon";
  }
  return "ellipse";
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string graph_to_dot(const RiGraph& g) {
  std::ostringstream os;
  os << "digraph rig {\n";
  os << "  // mode=" << to_string(g.mode()) << "\n";
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    const RigNode& n = g.node(i);
    os << "  n" << i << " [label=" << dot_quote(n.id) << ", shape=" << dot_shape(n.type)
       << ", type=" << to_string(n.type) << "];\n";
  }
  for (const RigEdge& e : g.edges()) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"n=" << e.interactions.size()
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json graph_to_json(const RiGraph& g) {
  nlohmann::ordered_json j;
  j["mode"] = std::string(to_string(g.mode()));
  auto nodes = nlohmann::ordered_json::array();
  for (const RigNode& n : g.nodes()) {
    nlohmann::ordered_json nj;
    nj["id"] = n.id;
    nj["type"] = std::string(to_string(n.type));
    nj["created_at"] = n.created_at.seconds();
    nodes.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes);
  auto edges = nlohmann::ordered_json::array();
  for (const RigEdge& e : g.edges()) {
    nlohmann::ordered_json ej;
    ej["from"] = g.node(e.from).id;
    ej["to"] = g.node(e.to).id;
    ej["created_at"] = e.created_at.seconds();
    auto ix = nlohmann::ordered_json::array();
    for (const Interaction& i : e.interactions) {
      ix.push_back(nlohmann::ordered_json::array({i.time.seconds(), i.syscall}));
    }
    ej["interactions"] = std::move(ix);
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);
  return j;
}

std::string graph_to_json_text(const RiGraph& g) { return graph_to_json(g).dump(1) + "\n"; }

RiGraph graph_from_json(const nlohmann::ordered_json& j) {
  try {
    auto mode = parse_graph_mode(j.at("mode").get<std::string>());
    if (!mode) throw DataError("graph json: unknown mode");
    RiGraph g(*mode);
    for (const auto& nj : j.at("nodes")) {
      auto type = parse_node_type(nj.at("type").get<std::string>());
      if (!type) throw DataError("graph json: unknown node type");
      g.insert_node(RigNode{nj.at("id").get<std::string>(), *type,
                            Timestamp::from_seconds(nj.at("created_at").get<double>())});
    }
    for (const auto& ej : j.at("edges")) {
      auto from = g.find_node(ej.at("from").get<std::string>());
      auto to = g.find_node(ej.at("to").get<std::string>());
      if (!from || !to) throw DataError("graph json: edge references unknown node");
      RigEdge edge;
      edge.from = *from;
      edge.to = *to;
      edge.created_at = Timestamp::from_seconds(ej.at("created_at").get<double>());
      for (const auto& pair : ej.at("interactions")) {
        if (!pair.is_array() || pair.size() != 2) {
          throw DataError("graph json: interaction must be [ts, syscall]");
        }
        edge.interactions.push_back(
            Interaction{Timestamp::from_seconds(pair[0].get<double>()), pair[1].get<int>()});
      }
      g.insert_edge(std::move(edge));
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw DataError(std::string("graph json: ") + ex.what());
  }
}

RiGraph graph_from_json_text(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw DataError(std::string("graph json: ") + ex.what());
  }
  return graph_from_json(j);
}

std::string graph_to_csv(const RiGraph& g) {
  std::string out = "from,to,created_at,interactions\n";
  for (const RigEdge& e : g.edges()) {
    out += csv_row({g.node(e.from).id, g.node(e.to).id, format_seconds(e.created_at),
                    std::to_string(e.interactions.size())});
    out += '\n';
  }
  return out;
}

}  // namespace rigkit
