#pragma once

#include <algorithm>
#include <vector>

#include "pathcover/colouring.hpp"
#include "pathcover/witness.hpp"

namespace pathcover::detail {

// Red graph under construction, adjacency indexed by vertex.
struct Forest {
  VertexSet verts;
  std::vector<VertexSet> adj;

  Forest() : adj(kMaxVertices) {}

  void add_vertex(Vertex v) { verts.insert(v); }
  void add_edge(Vertex u, Vertex v) {
    verts.insert(u);
    verts.insert(v);
    adj[u].insert(v);
    adj[v].insert(u);
  }
  void remove_edge(Vertex u, Vertex v) {
    adj[u].erase(v);
    adj[v].erase(u);
  }
  void remove_vertex(Vertex v) {
    for (Vertex w : adj[v]) adj[w].erase(v);
    adj[v] = {};
    verts.erase(v);
  }
  int degree(Vertex v) const { return adj[v].size(); }

  // Vertices of degree <= 1.
  VertexSet leaves() const {
    VertexSet out;
    for (Vertex v : verts) {
      if (adj[v].size() <= 1) out.insert(v);
    }
    return out;
  }

  // Vertices left after repeatedly stripping degree-1 vertices; for a
  // connected unicyclic graph this is the cycle.
  VertexSet core() const {
    std::vector<int> deg(adj.size(), 0);
    VertexSet alive = verts;
    for (Vertex v : verts) deg[v] = adj[v].size();
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v : alive) {
        if (deg[v] <= 1) {
          alive.erase(v);
          for (Vertex w : adj[v] & alive) --deg[w];
          changed = true;
        }
      }
    }
    return alive;
  }

  // Breaks the unique cycle at its least vertex of degree >= 3, removing the
  // edge to that vertex's least cycle neighbour. Returns the neighbour.
  Vertex break_cycle() {
    const VertexSet cyc = core();
    for (Vertex y : cyc) {
      if (degree(y) >= 3) {
        const Vertex w = (adj[y] & cyc).front();
        remove_edge(y, w);
        return w;
      }
    }
    return -1;
  }

  TreeCover to_tree() const {
    std::vector<Edge> edges;
    for (Vertex u : verts) {
      for (Vertex v : adj[u]) {
        if (u < v) edges.emplace_back(u, v);
      }
    }
    return TreeCover::from_edges(verts, std::move(edges));
  }
};

// Shortest red path from `from` to `to` whose vertices all lie in `allowed`
// (endpoints included). Empty when none exists.
inline std::vector<Vertex> red_path_within(const Colouring& g, Vertex from, Vertex to, VertexSet allowed) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  VertexSet seen = VertexSet::single(from);
  std::vector<Vertex> queue{from};
  for (std::size_t h = 0; h < queue.size() && !seen.contains(to); ++h) {
    for (Vertex w : (g.red_neighbours(queue[h]) & allowed) - seen) {
      seen.insert(w);
      parent[w] = queue[h];
      queue.push_back(w);
    }
  }
  if (!seen.contains(to)) return {};
  std::vector<Vertex> path;
  for (Vertex v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace pathcover::detail
