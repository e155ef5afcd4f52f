#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathcover/colouring.hpp"

namespace pathcover {

/// Ordered vertex sequence claimed to be a monochromatic path. Order is the
/// vertex count; order 0 and 1 are valid paths.
struct PathSeq {
  std::vector<Vertex> vertices;
  Colour colour = Colour::Red;

  int order() const noexcept { return static_cast<int>(vertices.size()); }
  bool empty() const noexcept { return vertices.empty(); }
  bool operator==(const PathSeq&) const = default;
};

/// Ordered vertex sequence claimed to be the `exponent`-th power of a path:
/// every pair at sequence distance 1..exponent has the declared colour.
struct PowerWitness {
  std::vector<Vertex> vertices;
  int exponent = 1;
  Colour colour = Colour::Blue;

  int order() const noexcept { return static_cast<int>(vertices.size()); }
  bool operator==(const PowerWitness&) const = default;
};

using Edge = std::pair<Vertex, Vertex>;

/// Red tree given by its edges. A single vertex is a tree with one leaf; the
/// empty tree has none.
struct TreeCover {
  VertexSet vertices;
  std::vector<Edge> edges;   ///< normalised (min, max), sorted
  std::vector<Vertex> leaves;  ///< vertices of degree <= 1, ascending

  static TreeCover from_edges(VertexSet vertices, std::vector<Edge> edges);
  int leaf_count() const noexcept { return static_cast<int>(leaves.size()); }
  bool operator==(const TreeCover&) const = default;
};

/// Pairwise disjoint parts of a claimed blue complete multipartite graph.
/// Edges inside a part are unconstrained.
struct PartiteWitness {
  std::vector<VertexSet> parts;

  VertexSet vertices() const noexcept;
  int order() const noexcept { return vertices().size(); }
  bool balanced() const noexcept;
  /// Size of every part of a balanced witness (0 for an empty list).
  int part_size() const noexcept { return parts.empty() ? 0 : parts.front().size(); }
  bool operator==(const PartiteWitness&) const = default;
};

enum class ShapeKind {
  TwoPath,             ///< red path + blue path
  PathBipartite,       ///< red path + blue balanced complete bipartite
  PathBipartiteGap,    ///< red path + blue K_{m, m+gap}
  PathMultipartite,    ///< k red paths + blue balanced (k+1)-partite
  TreeMultipartite,    ///< red tree with <= k leaves + blue balanced (k+1)-partite
  PathsConnected,      ///< k red paths + blue balanced (k+2)-partite
  WeakTree,            ///< red tree with <= k leaves + set S with (k+1) c(S) <= |S|
  PowerPath,           ///< blue k-th power of a path of order >= n; not a cover
};

struct CoverShape {
  ShapeKind kind = ShapeKind::PathBipartite;
  int k = 1;
  int gap = 0;
  int n = 0;  ///< PowerPath only: required order

  bool is_cover() const noexcept { return kind != ShapeKind::PowerPath; }
  bool operator==(const CoverShape&) const = default;
};

std::string to_string(ShapeKind kind);
/// Accepts the CLI spellings (two-path, path-bipartite, path-bipartite-gap,
/// path-multipartite, tree-multipartite, paths-connected, weak-tree,
/// power-path). Throws PreconditionError otherwise.
ShapeKind shape_kind_from_string(const std::string& name);

struct CoverCertificate {
  std::vector<PathSeq> red_paths;
  std::optional<TreeCover> red_tree;
  PartiteWitness witness;
  std::optional<PowerWitness> power;
  CoverShape shape;

  bool operator==(const CoverCertificate&) const = default;
};

}  // namespace pathcover
