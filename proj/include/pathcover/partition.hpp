#pragma once

#include <optional>
#include <vector>

#include "pathcover/colouring.hpp"
#include "pathcover/witness.hpp"

namespace pathcover {

struct TwoPathCover {
  PathSeq red;
  PathSeq blue;
};

/// Red paths plus a blue complete multipartite witness.
struct PathsPartite {
  std::vector<PathSeq> paths;
  PartiteWitness witness;
};

struct TreePartite {
  TreeCover tree;
  PartiteWitness witness;
};

struct WeakTreeCover {
  TreeCover tree;
  VertexSet s;
};

/// Input of balanced_refine: A_0..A_k, B_1..B_k, N_1..N_k (B[i-1] is B_i).
struct BalancingState {
  std::vector<VertexSet> A;
  std::vector<VertexSet> B;
  std::vector<VertexSet> N;
};

/// Working state of the tree search.
struct TreeSearchState {
  VertexSet tree;                 ///< V(T)
  std::vector<VertexSet> adj;     ///< tree adjacency, indexed by vertex
  std::vector<VertexSet> A;       ///< A_0..A_k, kept in non-increasing size order
  std::vector<VertexSet> B;       ///< B_1..B_k
  std::vector<Vertex> leaf;       ///< leaf of slot i, or -1
};

struct SearchStats {
  long steps = 0;
  long potential_violations = 0;
  /// Weak tree search only: runs that stalled and were finished through the
  /// multipartite search instead.
  long fallbacks = 0;
  /// Tree search only: the state at which no claim fired.
  std::optional<TreeSearchState> fixed_point;
};

TwoPathCover two_path_cover(const Colouring& g);

/// One red path (possibly empty) and two equal parts.
PathsPartite path_bipartite_cover(const Colouring& g, SearchStats* stats = nullptr);
/// One red path and parts {X, Y} with |Y| - |X| = t.
PathsPartite path_bipartite_gap(const Colouring& g, int t, SearchStats* stats = nullptr);

/// Falls back to tree_multipartite_cover (whose balanced part satisfies the
/// c(S) bound) when leaf removal would raise the count of largest components.
WeakTreeCover weak_tree_cover(const Colouring& g, int k, SearchStats* stats = nullptr);

/// Paths are indexed like st.B and each is empty or starts in the matching N.
PathsPartite balanced_refine(const Colouring& g, const BalancingState& st, int* iterations = nullptr);

TreePartite tree_multipartite_cover(const Colouring& g, int k, SearchStats* stats = nullptr);

/// Numbers (1..7) of the tree-search claims whose conclusion fails in `st`.
std::vector<int> violated_claims(const Colouring& g, const TreeSearchState& st);

/// Exactly k paths (some empty) and k+2 equal parts.
PathsPartite paths_multipartite_connected(const Colouring& g, int k, SearchStats* stats = nullptr);
/// Exactly k paths (some empty) and k+1 equal parts.
PathsPartite path_multipartite_cover(const Colouring& g, int k, SearchStats* stats = nullptr);

std::vector<PathSeq> tree_to_paths(const TreeCover& t);

PowerWitness multipartite_to_power(const PartiteWitness& w);

CoverCertificate to_certificate(const TwoPathCover& c);
CoverCertificate to_certificate(const PathsPartite& c, CoverShape shape);
CoverCertificate to_certificate(const TreePartite& c, int k);
CoverCertificate to_certificate(const WeakTreeCover& c, int k);

}  // namespace pathcover
