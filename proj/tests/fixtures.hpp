#pragma once

#include <random>
#include <string>

#include "lpa/graph.hpp"

namespace fixtures {

/// Rose with n loops at a single vertex.
inline lpa::Graph rose(int n) {
  std::vector<lpa::Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({"e" + std::to_string(i + 1), "v", "v"});
  return {{"v"}, edges};
}

/// Two vertices, a loop at v1, edges v1 -> v2 and v2 -> v1.
inline lpa::Graph looped_cycle() {
  return {{"v1", "v2"},
          {{"l", "v1", "v1"}, {"a", "v1", "v2"}, {"b", "v2", "v1"}}};
}

/// Incidence matrix [[1,3],[1,1]].
inline lpa::Graph graph1311() {
  return {{"u", "w"},
          {{"uu", "u", "u"},
           {"uw1", "u", "w"},
           {"uw2", "u", "w"},
           {"uw3", "u", "w"},
           {"wu", "w", "u"},
           {"ww", "w", "w"}}};
}

inline lpa::Graph single_vertex() { return {{"v"}, {}}; }

/// Random graph on up to max_v vertices with up to max_e edges.
inline lpa::Graph random_graph(std::mt19937_64& rng, int max_v, int max_e) {
  std::uniform_int_distribution<int> nv(1, max_v);
  int n = nv(rng);
  std::uniform_int_distribution<int> ne(0, max_e);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<std::string> verts;
  for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
  std::vector<lpa::Edge> edges;
  int m = ne(rng);
  for (int k = 0; k < m; ++k)
    edges.push_back({"e" + std::to_string(k), verts[pick(rng)],
                     verts[pick(rng)]});
  return {verts, edges};
}

/// Random regular graph given by a dense incidence matrix with entries in
/// [0, max_entry]; rows with all zeros get a loop to stay regular.
inline lpa::Graph random_regular_graph(std::mt19937_64& rng, int max_v,
                                       int max_entry) {
  std::uniform_int_distribution<int> nv(1, max_v);
  int n = nv(rng);
  std::uniform_int_distribution<int> cnt(0, max_entry);
  std::vector<std::string> verts;
  for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
  std::vector<lpa::Edge> edges;
  int id = 0;
  for (int i = 0; i < n; ++i) {
    bool emitted = false;
    for (int j = 0; j < n; ++j) {
      int c = cnt(rng);
      for (int k = 0; k < c; ++k) {
        edges.push_back({"e" + std::to_string(id++), verts[i], verts[j]});
        emitted = true;
      }
    }
    if (!emitted)
      edges.push_back({"e" + std::to_string(id++), verts[i], verts[i]});
  }
  return {verts, edges};
}

}  // namespace fixtures
