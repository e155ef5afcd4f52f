#include <algorithm>
#include <array>
#include <sstream>

#include "pathcover/errors.hpp"
#include "pathcover/partition.hpp"
#include "pathcover/validate.hpp"
#include "tree_util.hpp"

namespace pathcover {
namespace {

using Potential = std::array<long, 9>;

int count_of_order(const Colouring& g, VertexSet s, int c) {
  int f = 0;
  for (VertexSet comp : red_components(g, s)) f += comp.size() == c;
  return f;
}

// First red component of `s` of order c, or empty.
VertexSet component_of_order(const Colouring& g, VertexSet s, int c) {
  for (VertexSet comp : red_components(g, s)) {
    if (comp.size() == c) return comp;
  }
  return {};
}

// Component (in ascending order of least vertex) of order below c.
VertexSet component_below(const Colouring& g, VertexSet s, int c) {
  for (VertexSet comp : red_components(g, s)) {
    if (comp.size() < c) return comp;
  }
  return {};
}

class TreeSearch {
public:
  TreeSearch(const Colouring& g, int k, SearchStats* stats)
      : g_(g), k_(k), stats_(stats), a_(k + 1), b_(k), leaf_(k, -1) {
    t_.add_vertex(0);
    leaf_[0] = 0;
    a_[0] = g.vertices() - VertexSet::single(0);
  }

  TreeSearch(const Colouring& g, const TreeSearchState& st)
      : g_(g), k_(static_cast<int>(st.B.size())), stats_(nullptr), a_(st.A), b_(st.B), leaf_(st.leaf) {
    t_.verts = st.tree;
    for (Vertex v : st.tree) t_.adj[v] = st.adj[v];
  }

  VertexSet working() const { return g_.vertices() - t_.verts; }
  VertexSet all_a() const {
    VertexSet s;
    for (VertexSet x : a_) s |= x;
    return s;
  }
  int c() const { return largest_red_component(g_, working()); }

  Potential potential() const {
    const int c = this->c();
    Potential p{};
    p[0] = c;
    for (VertexSet bi : b_) p[1] += std::abs(2 * count_of_order(g_, bi, c) - 1);
    p[2] = count_of_order(g_, all_a(), c);
    p[3] = t_.verts.size();
    for (VertexSet bi : b_) {
      if (bi.size() >= c) {
        --p[4];
      } else {
        p[5] -= bi.size();
      }
      p[6] += bi.size();
    }
    int mx = 0;
    for (VertexSet x : a_) mx = std::max(mx, x.size());
    p[7] = mx;
    for (VertexSet x : a_) p[8] += x.size() == mx;
    return p;
  }

  std::vector<int> violated() const {
    std::vector<int> out;
    const VertexSet w = working();
    if (w.empty()) return out;
    const int c = this->c();
    auto any = [&](auto pred) {
      for (int i = 0; i < k_; ++i) {
        if (pred(i)) return true;
      }
      return false;
    };
    if (any([&](int i) { return count_of_order(g_, b_[i], c) >= 2; })) out.push_back(1);
    if (any([&](int i) { return count_of_order(g_, b_[i], c) == 1 && b_[i].size() != c; })) out.push_back(2);
    if (count_of_order(g_, all_a(), c) == 0) out.push_back(3);
    if (any([&](int i) { return leaf_[i] < 0 && count_of_order(g_, b_[i], c) != 1; })) out.push_back(4);
    if (std::any_of(a_.begin() + 1, a_.end(), [&](VertexSet x) { return a_[0].size() > x.size() + c; })) {
      out.push_back(5);
    }
    if (any([&](int i) { return b_[i].size() < c; })) out.push_back(6);
    if (any([&](int i) { return b_[i].size() > 2 * c; })) out.push_back(7);
    return out;
  }

  // Applies the move of the first claim whose conclusion fails. False at a
  // fixed point.
  bool step() {
    const VertexSet w = working();
    if (w.empty()) return false;
    const int c = this->c();
    for (int i = 0; i < k_; ++i) {
      if (count_of_order(g_, b_[i], c) >= 2) {
        const VertexSet comp = component_of_order(g_, b_[i], c);
        b_[i] -= comp;
        a_[0] |= comp;
        return true;
      }
    }
    for (int i = 0; i < k_; ++i) {
      if (count_of_order(g_, b_[i], c) == 1 && b_[i].size() > c) {
        const VertexSet comp = component_below(g_, b_[i], c);
        b_[i] -= comp;
        a_[0] |= comp;
        return true;
      }
    }
    if (count_of_order(g_, all_a(), c) == 0) {
      claim3(c);
      return true;
    }
    for (int i = 0; i < k_; ++i) {
      if (leaf_[i] < 0 && count_of_order(g_, b_[i], c) == 0) {
        const VertexSet comp = take_from_a(component_of_order(g_, all_a(), c));
        b_[i] |= comp;
        return true;
      }
    }
    for (std::size_t i = 1; i < a_.size(); ++i) {
      if (a_[0].size() > a_[i].size() + c) {
        const VertexSet comp = red_components(g_, a_[0]).front();
        a_[0] -= comp;
        a_[i] |= comp;
        return true;
      }
    }
    for (int i = 0; i < k_; ++i) {
      if (b_[i].size() < c) {
        claim6(i, c);
        return true;
      }
    }
    for (int i = 0; i < k_; ++i) {
      if (b_[i].size() > 2 * c) {
        const VertexSet comp = component_below(g_, b_[i], c);
        b_[i] -= comp;
        a_[0] |= comp;
        return true;
      }
    }
    return false;
  }

  void run() {
    Potential before = potential();
    while (step()) {
      std::stable_sort(a_.begin(), a_.end(), [](VertexSet x, VertexSet y) { return x.size() > y.size(); });
      if (stats_) ++stats_->steps;
      const Potential after = potential();
      if (!(after < before)) {
        if (stats_) ++stats_->potential_violations;
        throw InternalError("tree search: potential did not decrease", dump());
      }
      if (auto why = problem(); !why.empty()) throw InternalError("tree search: " + why, dump());
      before = after;
    }
  }

  TreeSearchState state() const {
    TreeSearchState st;
    st.tree = t_.verts;
    st.adj.assign(static_cast<std::size_t>(g_.order()), VertexSet{});
    for (Vertex v : t_.verts) st.adj[v] = t_.adj[v];
    st.A = a_;
    st.B = b_;
    st.leaf = leaf_;
    return st;
  }

  TreePartite finish() const {
    const VertexSet w = working();
    VertexSet tree_nbrs;
    for (Vertex v : t_.verts) tree_nbrs |= g_.red_neighbours(v);
    BalancingState bs;
    bs.A = a_;
    bs.B = b_;
    for (int i = 0; i < k_; ++i) {
      bs.N.push_back((leaf_[i] >= 0 ? g_.red_neighbours(leaf_[i]) : tree_nbrs) & w);
    }
    PathsPartite refined;
    try {
      refined = balanced_refine(g_, bs);
    } catch (const PreconditionError& e) {
      throw InternalError(std::string("tree search: fixed point rejected by refinement: ") + e.what(), dump());
    }
    detail::Forest out = t_;
    for (int i = 0; i < k_; ++i) {
      const auto& p = refined.paths[i].vertices;
      if (p.empty()) continue;
      Vertex anchor = leaf_[i];
      if (anchor < 0) {
        const VertexSet cand = g_.red_neighbours(p.front()) & t_.verts;
        if (cand.empty()) throw InternalError("tree search: path start has no red edge to the tree", dump());
        anchor = cand.front();
      }
      if (!g_.is_red(anchor, p.front())) throw InternalError("tree search: graft edge is blue", dump());
      out.add_edge(anchor, p.front());
      for (std::size_t q = 0; q + 1 < p.size(); ++q) out.add_edge(p[q], p[q + 1]);
    }
    TreePartite result{out.to_tree(), refined.witness};
    if (!is_red_tree(g_, result.tree)) throw InternalError("tree search: grafted graph is not a red tree", dump());
    if (result.tree.leaf_count() > k_) {
      throw InternalError("tree search: grafted tree has " + std::to_string(result.tree.leaf_count()) +
                              " leaves, bound " + std::to_string(k_),
                          dump());
    }
    return result;
  }

  std::string dump() const {
    std::ostringstream os;
    os << "T=" << t_.verts << " edges";
    for (auto [u, v] : t_.to_tree().edges) os << ' ' << u << '-' << v;
    for (std::size_t i = 0; i < a_.size(); ++i) os << " A_" << i << '=' << a_[i];
    for (int i = 0; i < k_; ++i) os << " B_" << i + 1 << '=' << b_[i] << " v_" << i + 1 << '=' << leaf_[i];
    return os.str();
  }

  // Empty when criteria (I) and (II) and the slot bookkeeping hold.
  std::string problem() const {
    VertexSet seen = t_.verts;
    std::vector<VertexSet> sets(a_.begin(), a_.end());
    sets.insert(sets.end(), b_.begin(), b_.end());
    for (VertexSet s : sets) {
      if (s.intersects(seen)) return "sets overlap";
      seen |= s;
    }
    if (seen != g_.vertices()) return "sets do not cover the vertices";
    const VertexSet w = working();
    for (VertexSet s : sets) {
      for (Vertex v : s) {
        if (!(g_.red_neighbours(v) & w).subset_of(s)) return "criterion (I): red edge between sets";
      }
    }
    if (!is_red_tree(g_, t_.to_tree())) return "T is not a red tree";
    VertexSet slot_leaves;
    for (int i = 0; i < k_; ++i) {
      if (leaf_[i] < 0) continue;
      if (slot_leaves.contains(leaf_[i])) return "leaf in two slots";
      slot_leaves.insert(leaf_[i]);
      for (VertexSet comp : red_components(g_, b_[i])) {
        if (!g_.red_neighbours(leaf_[i]).intersects(comp)) return "criterion (II) fails for slot " + std::to_string(i + 1);
      }
    }
    if (slot_leaves != t_.leaves()) return "slot leaves differ from the leaves of T";
    return {};
  }

private:
  // Removes `comp` (a red component of A) from whichever A_t holds it.
  VertexSet take_from_a(VertexSet comp) {
    if (comp.empty()) throw InternalError("tree search: expected a component in A", dump());
    for (VertexSet& x : a_) {
      if (comp.subset_of(x)) {
        x -= comp;
        return comp;
      }
    }
    throw InternalError("tree search: component spans several A sets", dump());
  }

  int slot_of(Vertex v) const {
    for (int i = 0; i < k_; ++i) {
      if (leaf_[i] == v) return i;
    }
    return -1;
  }

  void claim3(int c) {
    std::vector<Vertex> u(k_, -1);
    std::vector<Vertex> anchor(k_, -1);
    for (int i = 0; i < k_; ++i) {
      const VertexSet ci = component_of_order(g_, b_[i], c);
      if (ci.empty()) continue;
      if (leaf_[i] >= 0) {
        const VertexSet nb = g_.red_neighbours(leaf_[i]) & ci;
        if (nb.empty()) throw InternalError("tree search: leaf not joined to its B component", dump());
        u[i] = nb.front();
        anchor[i] = leaf_[i];
      } else {
        for (Vertex x : ci) {
          const VertexSet nb = g_.red_neighbours(x) & t_.verts;
          if (!nb.empty()) {
            u[i] = x;
            anchor[i] = nb.front();
            break;
          }
        }
        if (u[i] < 0) throw InternalError("tree search: component without a red edge to T", dump());
      }
    }
    VertexSet rest = working();
    for (int i = 0; i < k_; ++i) {
      if (u[i] < 0) continue;
      t_.add_edge(anchor[i], u[i]);
      rest.erase(u[i]);
    }
    std::fill(a_.begin(), a_.end(), VertexSet{});
    std::fill(b_.begin(), b_.end(), VertexSet{});
    a_[0] = rest;
    reassign_leaves();
  }

  void reassign_leaves() {
    std::fill(leaf_.begin(), leaf_.end(), -1);
    const auto leaves = t_.leaves().to_vector();
    if (static_cast<int>(leaves.size()) > k_) {
      throw InternalError("tree search: move produced " + std::to_string(leaves.size()) + " leaves", dump());
    }
    for (std::size_t i = 0; i < leaves.size(); ++i) leaf_[i] = leaves[i];
  }

  void claim6(int i, int c) {
    const Vertex vi = leaf_[i];
    if (vi < 0) throw InternalError("tree search: short B set in a slot without a leaf", dump());
    const VertexSet nb = g_.red_neighbours(vi) & working();
    const VertexSet in_a = nb & all_a();
    if (!in_a.empty()) {
      b_[i] |= take_from_a(red_component_of(g_, all_a(), in_a.front()));
      return;
    }
    if (nb.subset_of(b_[i])) {
      if (t_.adj[vi].empty()) throw InternalError("tree search: short B set beside a one-vertex tree", dump());
      const Vertex parent = t_.adj[vi].front();
      const bool was_leaf = t_.degree(parent) <= 1;
      t_.remove_vertex(vi);
      b_[i].insert(vi);
      leaf_[i] = (!was_leaf && t_.degree(parent) <= 1) ? parent : -1;
      return;
    }
    int j = -1;
    for (int t = 0; t < k_; ++t) {
      if (t != i && nb.intersects(b_[t])) {
        j = t;
        break;
      }
    }
    if (j < 0) throw InternalError("tree search: leaf neighbourhood outside every set", dump());
    const VertexSet comp = red_component_of(g_, b_[j], (nb & b_[j]).front());
    const VertexSet ca = component_of_order(g_, all_a(), c);
    if (leaf_[j] < 0) {
      take_from_a(ca);
      b_[i] |= comp;
      b_[j] = (b_[j] | ca) - comp;
      return;
    }

    const Vertex vj = leaf_[j];
    const Vertex ui = (g_.red_neighbours(vi) & comp).front();
    const VertexSet uj_cand = g_.red_neighbours(vj) & comp;
    if (uj_cand.empty()) throw InternalError("tree search: leaf not joined to its B component", dump());
    const auto path = detail::red_path_within(g_, ui, uj_cand.front(), comp);
    if (path.empty()) throw InternalError("tree search: component is not red-connected", dump());
    if (ca.empty()) throw InternalError("tree search: no component of order c in A", dump());
    const VertexSet old_tree = t_.verts;
    Vertex x = -1;
    for (Vertex v : old_tree) {
      if (g_.red_neighbours(v).intersects(ca)) {
        x = v;
        break;
      }
    }
    if (x < 0) throw InternalError("tree search: A component without a red edge to T", dump());
    const Vertex vj2 = (g_.red_neighbours(x) & ca).front();

    t_.add_edge(vi, path.front());
    for (std::size_t p = 0; p + 1 < path.size(); ++p) t_.add_edge(path[p], path[p + 1]);
    t_.add_edge(path.back(), vj);
    t_.add_edge(x, vj2);

    VertexSet absorbed = all_a() | b_[i] | b_[j];
    const int s = (x == vi || x == vj) ? -1 : slot_of(x);
    Vertex vs2 = -1;
    if (s >= 0) {
      if (count_of_order(g_, b_[s], c) == 1) {
        const VertexSet cand = g_.red_neighbours(x) & b_[s];
        if (cand.empty()) throw InternalError("tree search: leaf not joined to its B component", dump());
        vs2 = cand.front();
        t_.add_edge(x, vs2);
        b_[s].erase(vs2);
      } else {
        absorbed |= b_[s];
        b_[s] = {};
      }
    }
    const Vertex vi2 = t_.break_cycle();
    if (vi2 < 0) throw InternalError("tree search: cycle without a branch vertex", dump());

    std::fill(a_.begin(), a_.end(), VertexSet{});
    a_[0] = absorbed - t_.verts;
    b_[i] = {};
    b_[j] = {};
    leaf_[j] = vj2;
    if (s >= 0) leaf_[s] = vs2;
    leaf_[i] = t_.degree(vi2) <= 1 ? vi2 : -1;
  }

  const Colouring& g_;
  int k_;
  SearchStats* stats_;
  detail::Forest t_;
  std::vector<VertexSet> a_;
  std::vector<VertexSet> b_;
  std::vector<Vertex> leaf_;
};

}  // namespace

std::vector<int> violated_claims(const Colouring& g, const TreeSearchState& st) {
  return TreeSearch(g, st).violated();
}

TreePartite tree_multipartite_cover(const Colouring& g, int k, SearchStats* stats) {
  if (k < 1) throw PreconditionError("tree_multipartite_cover needs k >= 1");
  if (!g.red_connected()) throw PreconditionError("tree_multipartite_cover needs a red-connected colouring");
  const int n = g.order();
  if (n <= 1) {
    TreePartite out;
    out.tree = TreeCover::from_edges(g.vertices(), {});
    out.witness.parts.assign(static_cast<std::size_t>(k) + 1, VertexSet{});
    return out;
  }
  TreeSearch search(g, k, stats);
  search.run();
  if (stats) stats->fixed_point = search.state();
  if (auto v = search.violated(); !v.empty()) {
    throw InternalError("tree search: fixed point violates claim " + std::to_string(v.front()), search.dump());
  }
  return search.finish();
}

}  // namespace pathcover
