#include "lpa/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lpa/errors.hpp"

namespace lpa {

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (!vindex_.emplace(vertices_[i], i).second)
      throw GraphError("duplicate vertex id: " + vertices_[i]);
  }
  std::set<std::string> eids;
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (!eids.insert(e.id).second)
      throw GraphError("duplicate edge id: " + e.id);
    auto s = vindex_.find(e.src);
    auto r = vindex_.find(e.dst);
    if (s == vindex_.end())
      throw GraphError("edge " + e.id + " has undeclared source " + e.src);
    if (r == vindex_.end())
      throw GraphError("edge " + e.id + " has undeclared range " + e.dst);
    out_[s->second].push_back(k);
    in_[r->second].push_back(k);
  }
}

size_t Graph::vertex_index(const std::string& id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) throw UnknownVertex("unknown vertex: " + id);
  return it->second;
}

bool Graph::has_vertex(const std::string& id) const {
  return vindex_.count(id) > 0;
}

VertexClassification Graph::classify_vertices() const {
  VertexClassification c;
  for (size_t v = 0; v < vertices_.size(); ++v) {
    if (out_[v].empty()) {
      c.sinks.push_back(vertices_[v]);
      c.singular.push_back(vertices_[v]);
    } else {
      c.regular.push_back(vertices_[v]);
    }
    if (in_[v].empty()) c.sources.push_back(vertices_[v]);
  }
  return c;
}

std::vector<size_t> Graph::regular_indices() const {
  std::vector<size_t> r;
  for (size_t v = 0; v < vertices_.size(); ++v)
    if (!out_[v].empty()) r.push_back(v);
  return r;
}

std::vector<size_t> Graph::sink_indices() const {
  std::vector<size_t> r;
  for (size_t v = 0; v < vertices_.size(); ++v)
    if (out_[v].empty()) r.push_back(v);
  return r;
}

bool Graph::is_regular() const { return sink_indices().empty(); }

bool Graph::is_essential() const {
  for (size_t v = 0; v < vertices_.size(); ++v)
    if (out_[v].empty() || in_[v].empty()) return false;
  return true;
}

IntMatrix Graph::incidence_matrix() const {
  auto reg = regular_indices();
  IntMatrix a(reg.size(), vertices_.size());
  for (size_t i = 0; i < reg.size(); ++i) {
    for (size_t k : out_[reg[i]])
      a.at(i, vertex_index(edges_[k].dst)) += 1;
    a.row_labels.push_back(vertices_[reg[i]]);
  }
  a.col_labels = vertices_;
  return a;
}

IntMatrix Graph::bf_matrix() const {
  auto reg = regular_indices();
  IntMatrix a = incidence_matrix();
  IntMatrix m(vertices_.size(), reg.size());
  for (size_t v = 0; v < vertices_.size(); ++v)
    for (size_t j = 0; j < reg.size(); ++j) {
      m.at(v, j) = Int(v == reg[j] ? 1 : 0) - a.at(j, v);
    }
  m.row_labels = vertices_;
  for (size_t j = 0; j < reg.size(); ++j)
    m.col_labels.push_back(vertices_[reg[j]]);
  return m;
}

IntMatrix Graph::bf_dual_matrix() const {
  auto reg = regular_indices();
  IntMatrix a = incidence_matrix();
  IntMatrix m(reg.size(), vertices_.size());
  for (size_t j = 0; j < reg.size(); ++j) {
    for (size_t v = 0; v < vertices_.size(); ++v)
      m.at(j, v) = Int(reg[j] == v ? 1 : 0) - a.at(j, v);
    m.row_labels.push_back(vertices_[reg[j]]);
  }
  m.col_labels = vertices_;
  return m;
}

namespace {

// Strongly connected components, Kosaraju on adjacency index lists.
std::vector<int> scc_of(const Graph& g) {
  const size_t n = g.vertices().size();
  std::vector<std::vector<size_t>> fwd(n), bwd(n);
  for (const Edge& e : g.edges()) {
    size_t s = g.vertex_index(e.src), r = g.vertex_index(e.dst);
    fwd[s].push_back(r);
    bwd[r].push_back(s);
  }
  std::vector<bool> seen(n, false);
  std::vector<size_t> order;
  for (size_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    // iterative post-order
    std::vector<std::pair<size_t, size_t>> stack{{v, 0}};
    seen[v] = true;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      if (i < fwd[u].size()) {
        size_t w = fwd[u][i++];
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] >= 0) continue;
    std::vector<size_t> stack{*it};
    comp[*it] = nc;
    while (!stack.empty()) {
      size_t u = stack.back();
      stack.pop_back();
      for (size_t w : bwd[u])
        if (comp[w] < 0) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  return comp;
}

std::vector<std::vector<bool>> reachability(const Graph& g) {
  const size_t n = g.vertices().size();
  std::vector<std::vector<size_t>> fwd(n);
  for (const Edge& e : g.edges())
    fwd[g.vertex_index(e.src)].push_back(g.vertex_index(e.dst));
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (size_t v = 0; v < n; ++v) {
    std::vector<size_t> stack{v};
    reach[v][v] = true;
    while (!stack.empty()) {
      size_t u = stack.back();
      stack.pop_back();
      for (size_t w : fwd[u])
        if (!reach[v][w]) {
          reach[v][w] = true;
          stack.push_back(w);
        }
    }
  }
  return reach;
}

}  // namespace

PisReport Graph::is_purely_infinite_simple() const {
  const size_t n = vertices_.size();
  PisReport rep;

  // (a) condition (L): no cycle may consist solely of out-degree-1 vertices.
  for (size_t v = 0; v < n; ++v) {
    if (out_[v].size() != 1) continue;
    std::vector<size_t> path{v};
    std::vector<bool> onpath(n, false);
    onpath[v] = true;
    size_t cur = v;
    while (out_[cur].size() == 1) {
      cur = vertex_index(edges_[out_[cur][0]].dst);
      if (onpath[cur]) {
        std::ostringstream w;
        w << "cycle without exit through";
        bool in_cycle = false;
        for (size_t u : path) {
          if (u == cur) in_cycle = true;
          if (in_cycle) w << " " << vertices_[u];
        }
        rep.failed_condition = "condition (L)";
        rep.witness = w.str();
        return rep;
      }
      onpath[cur] = true;
      path.push_back(cur);
    }
  }

  // (b) cofinality; for finite graphs: every vertex reaches every sink and
  // every strongly connected component containing an edge.
  auto comp = scc_of(*this);
  int nc = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<bool> comp_has_edge(nc, false);
  std::vector<size_t> comp_size(nc, 0);
  for (size_t v = 0; v < n; ++v) comp_size[comp[v]] += 1;
  for (const Edge& e : edges_)
    if (comp[vertex_index(e.src)] == comp[vertex_index(e.dst)])
      comp_has_edge[comp[vertex_index(e.src)]] = true;
  auto reach = reachability(*this);
  for (size_t v = 0; v < n; ++v) {
    for (size_t w = 0; w < n; ++w) {
      if (out_[w].empty() && !reach[v][w]) {
        rep.failed_condition = "cofinality";
        rep.witness = vertices_[v] + " does not reach sink " + vertices_[w];
        return rep;
      }
    }
    for (int c = 0; c < nc; ++c) {
      if (!comp_has_edge[c]) continue;
      bool hits = false;
      for (size_t w = 0; w < n && !hits; ++w)
        if (comp[w] == c && reach[v][w]) hits = true;
      if (!hits) {
        std::string target;
        for (size_t w = 0; w < n; ++w)
          if (comp[w] == c) {
            target = vertices_[w];
            break;
          }
        rep.failed_condition = "cofinality";
        rep.witness =
            vertices_[v] + " does not reach the cycle component of " + target;
        return rep;
      }
    }
  }

  // (c) at least one cycle.
  bool has_cycle = false;
  for (int c = 0; c < nc; ++c) has_cycle = has_cycle || comp_has_edge[c];
  if (!has_cycle) {
    rep.failed_condition = "no cycle";
    rep.witness = "the graph is acyclic";
    return rep;
  }
  rep.value = true;
  return rep;
}

Graph Graph::source_eliminate(const std::string& v) const {
  size_t vi = vertex_index(v);
  if (!in_[vi].empty())
    throw NotAnEliminableSource(v + " is not a source");
  if (out_[vi].empty())
    throw NotAnEliminableSource(v + " is a sink");
  std::vector<std::string> verts;
  for (const auto& w : vertices_)
    if (w != v) verts.push_back(w);
  std::vector<Edge> edges;
  for (const Edge& e : edges_)
    if (e.src != v) edges.push_back(e);
  return {verts, edges};
}

namespace {

std::string unique_id(std::set<std::string>& used, std::string candidate) {
  while (!used.insert(candidate).second) candidate += "'";
  return candidate;
}

}  // namespace

std::pair<IntMatrix, IntMatrix> Graph::out_split_matrices() const {
  auto sinks = sink_indices();
  const size_t ne = edges_.size(), ns = sinks.size();
  IntMatrix b(ne, ne + ns);
  IntMatrix j(ne + ns, ne);
  std::vector<std::string> colnames;
  for (const Edge& e : edges_) colnames.push_back(e.id);
  for (size_t s : sinks) colnames.push_back(vertices_[s]);
  for (size_t ei = 0; ei < ne; ++ei) {
    const std::string& re = edges_[ei].dst;
    for (size_t x = 0; x < ne; ++x) {
      b.at(ei, x) = re == edges_[x].src ? 1 : 0;
      j.at(x, ei) = edges_[x].src == re ? 1 : 0;
    }
    for (size_t x = 0; x < ns; ++x) {
      b.at(ei, ne + x) = re == vertices_[sinks[x]] ? 1 : 0;
      j.at(ne + x, ei) = vertices_[sinks[x]] == re ? 1 : 0;
    }
    b.row_labels.push_back(edges_[ei].id);
    j.col_labels.push_back(edges_[ei].id);
  }
  b.col_labels = colnames;
  j.row_labels = colnames;
  return {std::move(b), std::move(j)};
}

Graph Graph::out_split_graph() const {
  auto [b, j] = out_split_matrices();
  std::set<std::string> used;
  std::vector<std::string> verts;
  for (const std::string& name : b.col_labels)
    verts.push_back(unique_id(used, name));
  // rows of B are indexed by edges = the first columns, in the same order
  std::vector<Edge> edges;
  std::set<std::string> eused;
  for (size_t e = 0; e < b.rows(); ++e)
    for (size_t x = 0; x < b.cols(); ++x)
      if (b.at(e, x) == 1)
        edges.push_back(
            {unique_id(eused, verts[e] + ">" + verts[x]), verts[e], verts[x]});
  return {verts, edges};
}

Graph Graph::dual_graph() const {
  std::vector<Edge> edges;
  for (const Edge& e : edges_) edges.push_back({e.id, e.dst, e.src});
  return {vertices_, edges};
}

Graph Graph::cuntz_splice(const std::string& v) const {
  vertex_index(v);  // throws UnknownVertex
  std::set<std::string> vused(vertices_.begin(), vertices_.end());
  std::string v1 = unique_id(vused, v + "#1");
  std::string v2 = unique_id(vused, v + "#2");
  std::vector<std::string> verts = vertices_;
  verts.push_back(v1);
  verts.push_back(v2);
  std::set<std::string> eused;
  for (const Edge& e : edges_) eused.insert(e.id);
  std::vector<Edge> edges = edges_;
  auto add = [&](const std::string& s, const std::string& r) {
    edges.push_back({unique_id(eused, s + ">" + r), s, r});
  };
  add(v, v1);
  add(v1, v);
  add(v1, v1);
  add(v1, v2);
  add(v2, v1);
  add(v2, v2);
  return {verts, edges};
}

Graph Graph::double_cover() const {
  std::vector<std::string> verts;
  for (const auto& v : vertices_) verts.push_back(v + "@0");
  for (const auto& v : vertices_) verts.push_back(v + "@1");
  std::vector<Edge> edges;
  for (int level = 0; level < 2; ++level)
    for (const Edge& e : edges_)
      edges.push_back({e.id + "@" + std::to_string(level),
                       e.src + "@" + std::to_string(level),
                       e.dst + "@" + std::to_string(1 - level)});
  return {verts, edges};
}

Graph Graph::square_graph() const {
  std::vector<Edge> edges;
  std::set<std::string> eused;
  for (const Edge& e : edges_)
    for (const Edge& f : edges_)
      if (e.dst == f.src)
        edges.push_back({unique_id(eused, e.id + "." + f.id), e.src, f.dst});
  return {vertices_, edges};
}

}  // namespace lpa
