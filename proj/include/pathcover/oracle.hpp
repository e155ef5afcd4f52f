#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "pathcover/colouring.hpp"
#include "pathcover/witness.hpp"

namespace pathcover {

/// Caps for the exact searches. Exceeding any cap throws BudgetExceeded.
struct SearchBudget {
  int max_vertices = kMaxVertices;
  std::uint64_t max_nodes = 2'000'000'000ULL;
  double max_seconds = 600.0;
};

/// Node counter and clock shared by one search.
class BudgetMeter {
public:
  explicit BudgetMeter(const SearchBudget& b);
  /// Counts one node expansion; throws BudgetExceeded past a cap.
  void tick();
  void check_order(int n) const;
  std::uint64_t nodes() const noexcept { return nodes_; }

private:
  SearchBudget budget_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

enum class PathMethod {
  Auto,        ///< subset DP up to 20 vertices, branch and bound beyond
  SubsetDP,
  BranchBound,
};

struct PathResult {
  int order = 0;
  PathSeq path;
};

/// Longest path of colour c inside `within`.
PathResult longest_path_exact(const Colouring& g, Colour c, VertexSet within, const SearchBudget& budget = {},
                              PathMethod method = PathMethod::Auto);
PathResult longest_red_path_exact(const Colouring& g, const SearchBudget& budget = {},
                                  PathMethod method = PathMethod::Auto);
/// A path of colour c inside `within` with exactly `order` vertices, if any.
std::optional<PathSeq> find_path_of_order(const Colouring& g, Colour c, VertexSet within, int order,
                                          const SearchBudget& budget = {});

struct PowerResult {
  int order = 0;
  PowerWitness power;
};

/// Largest order of a blue t-th power of a path (t >= 1; t = 0 gives |g|).
PowerResult largest_blue_power_exact(const Colouring& g, int t, const SearchBudget& budget = {});
/// A blue t-th power of a path on exactly m vertices, if any.
std::optional<PowerWitness> find_blue_power(const Colouring& g, int t, int m, const SearchBudget& budget = {});

/// A blue complete multipartite subgraph whose part sizes are `sizes`, if any.
std::optional<PartiteWitness> find_blue_multipartite(const Colouring& g, std::vector<int> sizes,
                                                     const SearchBudget& budget = {});
/// Balanced case: t parts of size m.
std::optional<PartiteWitness> has_blue_balanced_multipartite(const Colouring& g, int m, int t,
                                                             const SearchBudget& budget = {});

/// Brute-force isomorphism-invariant code: least lexicographic-pair code over
/// all relabellings that sort vertices by red degree.
std::uint64_t canonical_code(const Colouring& g);

}  // namespace pathcover
