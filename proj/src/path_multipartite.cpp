#include <algorithm>

#include "pathcover/errors.hpp"
#include "pathcover/partition.hpp"

namespace pathcover {

PathsPartite paths_multipartite_connected(const Colouring& g, int k, SearchStats* stats) {
  if (k < 1) throw PreconditionError("paths_multipartite_connected needs k >= 1");
  TreePartite tp = tree_multipartite_cover(g, k + 1, stats);
  PathsPartite out;
  out.paths = tree_to_paths(tp.tree);
  if (static_cast<int>(out.paths.size()) > k) {
    throw InternalError("tree with " + std::to_string(tp.tree.leaf_count()) + " leaves gave too many paths");
  }
  out.paths.resize(static_cast<std::size_t>(k));
  out.witness = std::move(tp.witness);
  return out;
}

PathsPartite path_multipartite_cover(const Colouring& g, int k, SearchStats* stats) {
  if (k < 1) throw PreconditionError("path_multipartite_cover needs k >= 1");
  if (k == 1) return path_bipartite_cover(g, stats);
  if (g.order() >= kMaxVertices) throw PreconditionError("path_multipartite_cover needs at most 63 vertices");
  const Vertex apex = g.order();
  const Colouring h = g.with_apex(Colour::Red);
  TreePartite tp = tree_multipartite_cover(h, k, stats);
  if (!tp.tree.vertices.contains(apex)) throw InternalError("apex vertex outside the tree");

  PathsPartite out;
  for (PathSeq& p : tree_to_paths(tp.tree)) {
    auto it = std::find(p.vertices.begin(), p.vertices.end(), apex);
    if (it == p.vertices.end()) {
      out.paths.push_back(std::move(p));
      continue;
    }
    PathSeq head{{p.vertices.begin(), it}, Colour::Red};
    PathSeq tail{{it + 1, p.vertices.end()}, Colour::Red};
    if (!head.empty()) out.paths.push_back(std::move(head));
    if (!tail.empty()) out.paths.push_back(std::move(tail));
  }
  if (static_cast<int>(out.paths.size()) > k) throw InternalError("apex removal left more than k paths");
  out.paths.resize(static_cast<std::size_t>(k));
  out.witness = std::move(tp.witness);
  return out;
}

}  // namespace pathcover
