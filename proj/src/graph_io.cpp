#include <fstream>
#include <sstream>

#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/json_io.hpp"

namespace lpa {

Graph parse_graph_text(const std::string& text) {
  std::vector<std::string> verts;
  std::vector<Edge> edges;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // '#' starts a comment only at line start or after whitespace, so ids
    // containing '#' (splice vertices) survive the round trip.
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] != '#') continue;
      if (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t') {
        line.resize(i);
        break;
      }
    }
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "vertex" && tok.size() == 2) {
      verts.push_back(tok[1]);
    } else if (tok[0] == "edge" && tok.size() == 4) {
      edges.push_back({tok[1], tok[2], tok[3]});
    } else {
      throw ParseError("graph line " + std::to_string(lineno) +
                       ": expected 'vertex <id>' or 'edge <id> <src> <dst>'");
    }
  }
  try {
    return {verts, edges};
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

std::string print_graph_text(const Graph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) out << "vertex " << v << "\n";
  for (const auto& e : g.edges())
    out << "edge " << e.id << " " << e.src << " " << e.dst << "\n";
  return out.str();
}

Graph graph_from_json(const nlohmann::json& j) {
  std::vector<std::string> verts;
  std::vector<Edge> edges;
  for (const auto& v : j.at("vertices")) verts.push_back(v.get<std::string>());
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at("id").get<std::string>(),
                     e.at("src").get<std::string>(),
                     e.at("dst").get<std::string>()});
  try {
    return {verts, edges};
  } catch (const GraphError& err) {
    throw ParseError(err.what());
  }
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertices();
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges())
    j["edges"].push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
  return j;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open graph file: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  std::string text = buf.str();
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad graph json: ") + e.what());
    }
    return graph_from_json(j);
  }
  return parse_graph_text(text);
}

}  // namespace lpa
