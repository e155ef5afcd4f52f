#include <algorithm>

#include "pathcover/errors.hpp"
#include "pathcover/witness.hpp"

namespace pathcover {

TreeCover TreeCover::from_edges(VertexSet vertices, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  std::vector<int> degree(kMaxVertices, 0);
  for (auto [u, v] : edges) {
    if (u >= 0 && u < kMaxVertices) ++degree[u];
    if (v >= 0 && v < kMaxVertices) ++degree[v];
  }
  TreeCover t;
  t.vertices = vertices;
  t.edges = std::move(edges);
  for (Vertex v : vertices) {
    if (degree[v] <= 1) t.leaves.push_back(v);
  }
  return t;
}

VertexSet PartiteWitness::vertices() const noexcept {
  VertexSet all;
  for (VertexSet p : parts) all |= p;
  return all;
}

bool PartiteWitness::balanced() const noexcept {
  return std::all_of(parts.begin(), parts.end(),
                     [&](VertexSet p) { return p.size() == parts.front().size(); });
}

namespace {
constexpr std::pair<ShapeKind, const char*> kShapeNames[] = {
    {ShapeKind::TwoPath, "two-path"},
    {ShapeKind::PathBipartite, "path-bipartite"},
    {ShapeKind::PathBipartiteGap, "path-bipartite-gap"},
    {ShapeKind::PathMultipartite, "path-multipartite"},
    {ShapeKind::TreeMultipartite, "tree-multipartite"},
    {ShapeKind::PathsConnected, "paths-connected"},
    {ShapeKind::WeakTree, "weak-tree"},
    {ShapeKind::PowerPath, "power-path"},
};
}  // namespace

std::string to_string(ShapeKind kind) {
  for (auto [k, name] : kShapeNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

ShapeKind shape_kind_from_string(const std::string& name) {
  for (auto [k, n] : kShapeNames) {
    if (name == n) return k;
  }
  throw PreconditionError("unknown cover shape '" + name + "'");
}

}  // namespace pathcover
