#include <sstream>
#include <tuple>

#include "pathcover/errors.hpp"
#include "pathcover/partition.hpp"
#include "pathcover/validate.hpp"
#include "tree_util.hpp"

namespace pathcover {
namespace {

// Red path v_i, w_1, ..., w_r, v_j with interior in `inner` and r >= 1.
std::vector<Vertex> leaf_to_leaf(const Colouring& g, Vertex vi, Vertex vj, VertexSet inner) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue;
  VertexSet seen;
  for (Vertex w : g.red_neighbours(vi) & inner) {
    seen.insert(w);
    parent[w] = vi;
    queue.push_back(w);
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const Vertex w = queue[h];
    if (g.is_red(w, vj)) {
      std::vector<Vertex> path{vj};
      for (Vertex x = w; x != -1; x = parent[x]) path.push_back(x);
      return {path.rbegin(), path.rend()};
    }
    for (Vertex x : (g.red_neighbours(w) & inner) - seen) {
      seen.insert(x);
      parent[x] = w;
      queue.push_back(x);
    }
  }
  return {};
}

std::string dump(const detail::Forest& t, VertexSet s) {
  std::ostringstream os;
  os << "T=" << t.verts << " edges";
  for (auto [u, v] : t.to_tree().edges) os << ' ' << u << '-' << v;
  os << " S=" << s;
  return os.str();
}

}  // namespace

WeakTreeCover weak_tree_cover(const Colouring& g, int k, SearchStats* stats) {
  if (k < 2) throw PreconditionError("weak_tree_cover needs k >= 2");
  const int n = g.order();
  if (n < 1) throw PreconditionError("weak_tree_cover needs at least one vertex");
  if (!g.red_connected()) throw PreconditionError("weak_tree_cover needs a red-connected colouring");

  detail::Forest t;
  t.add_vertex(0);
  VertexSet s = g.vertices() - VertexSet::single(0);
  auto potential = [&] {
    const auto st = red_component_stats(g, s);
    return std::tuple{st.largest, st.count_of_reference, t.verts.size()};
  };
  auto before = potential();

  for (;;) {
    const auto st = red_component_stats(g, s);
    const int c = st.largest;
    if ((k + 1) * c <= s.size()) break;
    VertexSet plus;
    for (VertexSet comp : st.components) {
      if (comp.size() == c) plus |= comp;
    }
    const VertexSet minus = s - plus;
    const std::vector<Vertex> leaves = t.leaves().to_vector();

    bool moved = false;
    for (Vertex v : leaves) {
      const VertexSet nb = g.red_neighbours(v) & plus;
      if (!nb.empty()) {
        t.add_edge(v, nb.front());
        moved = true;
        break;
      }
    }
    std::vector<VertexSet> closure;
    if (!moved) {
      for (Vertex v : leaves) closure.push_back(red_component_of(g, minus | VertexSet::single(v), v));
      for (std::size_t i = 0; i < leaves.size() && !moved; ++i) {
        for (std::size_t j = i + 1; j < leaves.size() && !moved; ++j) {
          if (!closure[i].intersects(closure[j])) continue;
          const auto path = leaf_to_leaf(g, leaves[i], leaves[j], minus);
          if (path.empty()) throw InternalError("weak tree search: overlapping closures without a path", dump(t, s));
          for (std::size_t p = 0; p + 1 < path.size(); ++p) t.add_edge(path[p], path[p + 1]);
          Vertex u = -1;
          for (Vertex x : plus) {
            if (g.red_neighbours(x).intersects(t.verts)) {
              u = x;
              break;
            }
          }
          if (u < 0) throw InternalError("weak tree search: no red edge into S+", dump(t, s));
          t.add_edge((g.red_neighbours(u) & t.verts).front(), u);
          if (t.break_cycle() < 0) throw InternalError("weak tree search: cycle without a branch vertex", dump(t, s));
          moved = true;
        }
      }
    }
    if (!moved) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < leaves.size(); ++i) {
        if (closure[i].size() < closure[best].size()) best = i;
      }
      if (closure[best].size() >= c) {
        if (stats) ++stats->fallbacks;
        TreePartite tp = tree_multipartite_cover(g, k);
        return WeakTreeCover{std::move(tp.tree), tp.witness.vertices()};
      }
      t.remove_vertex(leaves[best]);
    }
    s = g.vertices() - t.verts;

    if (stats) ++stats->steps;
    const auto after = potential();
    if (!(after < before)) {
      if (stats) ++stats->potential_violations;
      throw InternalError("weak tree search: potential did not decrease", dump(t, s));
    }
    if (t.leaves().size() > k) throw InternalError("weak tree search: leaf bound broken", dump(t, s));
    before = after;
  }

  WeakTreeCover out{t.to_tree(), s};
  if (!is_red_tree(g, out.tree)) throw InternalError("weak tree search: result is not a red tree", dump(t, s));
  return out;
}

}  // namespace pathcover
