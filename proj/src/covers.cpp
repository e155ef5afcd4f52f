#include <algorithm>
#include <string>

#include "pathcover/errors.hpp"
#include "pathcover/partition.hpp"

namespace pathcover {

TwoPathCover two_path_cover(const Colouring& g) {
  std::vector<Vertex> red;
  std::vector<Vertex> blue;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (red.empty() && blue.empty()) {
      red.push_back(x);
    } else if (!red.empty() && g.is_red(x, red.back())) {
      red.push_back(x);
    } else if (!blue.empty() && g.is_blue(x, blue.back())) {
      blue.push_back(x);
    } else if (blue.empty()) {
      blue.push_back(x);
    } else if (red.empty()) {
      red.push_back(x);
    } else {
      // x-r blue and x-b red: the triangle x, r, b has a usable edge.
      const Vertex r = red.back();
      const Vertex b = blue.back();
      if (g.is_red(r, b)) {
        blue.pop_back();
        red.push_back(b);
        red.push_back(x);
      } else {
        red.pop_back();
        blue.push_back(r);
        blue.push_back(x);
      }
    }
  }
  return {PathSeq{red, Colour::Red}, PathSeq{blue, Colour::Blue}};
}

PathsPartite path_bipartite_gap(const Colouring& g, int t, SearchStats* stats) {
  const int n = g.order();
  if (t < 0 || t > n) {
    throw PreconditionError("gap " + std::to_string(t) + " outside [0, " + std::to_string(n) + "]");
  }
  VertexSet x;
  VertexSet y = g.vertices();
  std::vector<Vertex> p;
  auto potential = [&] { return std::pair{std::max(x.size(), y.size()), static_cast<int>(p.size())}; };
  auto before = potential();
  while (y.size() - x.size() > t) {
    if (p.empty()) {
      p.push_back(y.front());
      y.erase(y.front());
    } else {
      const VertexSet red = g.red_neighbours(p.back()) & y;
      if (!red.empty()) {
        p.push_back(red.front());
        y.erase(red.front());
      } else {
        x.insert(p.back());
        p.pop_back();
      }
    }
    const auto after = potential();
    if (stats) ++stats->steps;
    if (!(after < before)) {
      if (stats) ++stats->potential_violations;
      throw InternalError("bipartite search: potential did not decrease",
                          "P size " + std::to_string(p.size()) + ", X " + std::to_string(x.size()) +
                              ", Y " + std::to_string(y.size()));
    }
    before = after;
  }
  PathsPartite out;
  out.paths.push_back(PathSeq{p, Colour::Red});
  out.witness.parts = {x, y};
  return out;
}

PathsPartite path_bipartite_cover(const Colouring& g, SearchStats* stats) {
  return path_bipartite_gap(g, 0, stats);
}

std::vector<PathSeq> tree_to_paths(const TreeCover& t) {
  if (t.vertices.empty()) return {};
  std::vector<VertexSet> adj(kMaxVertices);
  for (auto [u, v] : t.edges) {
    if (!t.vertices.contains(u) || !t.vertices.contains(v)) throw PreconditionError("tree edge leaves vertex set");
    adj[u].insert(v);
    adj[v].insert(u);
  }
  if (static_cast<int>(t.edges.size()) != t.vertices.size() - 1) throw PreconditionError("malformed tree");
  std::vector<Vertex> leaves;
  for (Vertex v : t.vertices) {
    if (adj[v].size() <= 1) leaves.push_back(v);
  }
  const Vertex root = leaves.front();
  std::vector<Vertex> parent(kMaxVertices, -1);
  VertexSet seen = VertexSet::single(root);
  std::vector<Vertex> queue{root};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (Vertex w : adj[queue[h]] - seen) {
      seen.insert(w);
      parent[w] = queue[h];
      queue.push_back(w);
    }
  }
  if (seen != t.vertices) throw PreconditionError("tree is disconnected");
  if (leaves.size() == 1) return {PathSeq{{root}, Colour::Red}};
  std::vector<PathSeq> out;
  VertexSet covered;
  for (std::size_t i = 1; i < leaves.size(); ++i) {
    PathSeq path;
    for (Vertex v = leaves[i]; v != -1 && !covered.contains(v); v = parent[v]) {
      path.vertices.push_back(v);
      covered.insert(v);
    }
    out.push_back(std::move(path));
  }
  return out;
}

PowerWitness multipartite_to_power(const PartiteWitness& w) {
  if (!w.balanced()) throw PreconditionError("multipartite_to_power needs equal parts");
  PowerWitness out;
  out.colour = Colour::Blue;
  out.exponent = std::max(0, static_cast<int>(w.parts.size()) - 1);
  std::vector<std::vector<Vertex>> cols;
  for (VertexSet p : w.parts) cols.push_back(p.to_vector());
  for (int c = 0; c < w.part_size(); ++c) {
    for (const auto& col : cols) out.vertices.push_back(col[c]);
  }
  return out;
}

CoverCertificate to_certificate(const TwoPathCover& c) {
  CoverCertificate cert;
  cert.red_paths = {c.red};
  cert.power = PowerWitness{c.blue.vertices, 1, Colour::Blue};
  cert.shape = CoverShape{ShapeKind::TwoPath, 1, 0, 0};
  return cert;
}

CoverCertificate to_certificate(const PathsPartite& c, CoverShape shape) {
  CoverCertificate cert;
  cert.red_paths = c.paths;
  cert.witness = c.witness;
  cert.shape = shape;
  return cert;
}

CoverCertificate to_certificate(const TreePartite& c, int k) {
  CoverCertificate cert;
  cert.red_tree = c.tree;
  cert.witness = c.witness;
  cert.shape = CoverShape{ShapeKind::TreeMultipartite, k, 0, 0};
  return cert;
}

CoverCertificate to_certificate(const WeakTreeCover& c, int k) {
  CoverCertificate cert;
  cert.red_tree = c.tree;
  if (!c.s.empty()) cert.witness.parts = {c.s};
  cert.shape = CoverShape{ShapeKind::WeakTree, k, 0, 0};
  return cert;
}

}  // namespace pathcover
