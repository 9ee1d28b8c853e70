#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpa/intmatrix.hpp"

namespace lpa {

struct Edge {
  std::string id;
  std::string src;
  std::string dst;
  bool operator==(const Edge& o) const = default;
};

struct VertexClassification {
  std::vector<std::string> sinks;
  std::vector<std::string> sources;
  std::vector<std::string> regular;
  std::vector<std::string> singular;  // = sinks for finite graphs
};

struct PisReport {
  bool value = false;
  /// Name of the first failing condition ("condition (L)", "cofinality",
  /// "no cycle"), empty when the graph is purely infinite simple.
  std::string failed_condition;
  /// Human-readable witness of the failure.
  std::string witness;
};

/// Finite directed graph.  Vertex and edge order is part of the value: it
/// fixes the row/column indexing of every derived matrix.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  size_t vertex_index(const std::string& id) const;
  bool has_vertex(const std::string& id) const;

  size_t out_degree(size_t v) const { return out_[v].size(); }
  size_t in_degree(size_t v) const { return in_[v].size(); }
  /// Indices of edges with source v.
  const std::vector<size_t>& out_edges(size_t v) const { return out_[v]; }

  VertexClassification classify_vertices() const;
  std::vector<size_t> regular_indices() const;
  std::vector<size_t> sink_indices() const;
  bool is_regular() const;
  /// No sources and no sinks.
  bool is_essential() const;

  /// Reduced incidence matrix A_E: rows reg(E), columns E^0, entry (v,w) the
  /// number of edges v -> w.
  IntMatrix incidence_matrix() const;
  /// I - A_E^t with rows E^0 and columns reg(E); I is the identity with the
  /// singular-vertex columns removed.
  IntMatrix bf_matrix() const;
  /// I^t - A_E with rows reg(E) and columns E^0 (the dual presentation).
  IntMatrix bf_dual_matrix() const;

  PisReport is_purely_infinite_simple() const;

  Graph source_eliminate(const std::string& v) const;
  /// Edge matrix B_E over E^1 x (E^1 u sink(E)) and the companion matrix J
  /// over (E^1 u sink(E)) x E^1, with index labels.
  std::pair<IntMatrix, IntMatrix> out_split_matrices() const;
  /// Out-split graph E_s on vertex set E^1 u sink(E); its incidence matrix
  /// restricted to regular rows equals B_E.
  Graph out_split_graph() const;
  Graph dual_graph() const;
  Graph cuntz_splice(const std::string& v) const;
  /// Level-flipping double cover: vertices E^0 x {0,1}, sources preserve the
  /// level, ranges flip it.
  Graph double_cover() const;
  /// Same vertices, one edge per length-2 path.
  Graph square_graph() const;

  bool operator==(const Graph& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, size_t> vindex_;
  std::vector<std::vector<size_t>> out_;
  std::vector<std::vector<size_t>> in_;
};

/// Line-oriented text format: `vertex <id>`, `edge <id> <src> <dst>`, `#`
/// comments.  Printing a parsed graph reproduces the canonical byte form.
Graph parse_graph_text(const std::string& text);
std::string print_graph_text(const Graph& g);
Graph load_graph_file(const std::string& path);

}  // namespace lpa
