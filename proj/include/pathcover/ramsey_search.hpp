#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathcover/colouring.hpp"
#include "pathcover/oracle.hpp"

namespace pathcover {

/// Monochromatic target graph for an exhaustive Ramsey search.
struct RamseyTarget {
  enum class Kind {
    Power,         ///< t-th power of a path on m vertices (t = 1 is the path P_m)
    Multipartite,  ///< balanced complete t-partite graph with parts of size m
  };
  Kind kind = Kind::Power;
  Colour colour = Colour::Red;
  int m = 1;
  int t = 1;

  static RamseyTarget path(Colour c, int m) { return {Kind::Power, c, m, 1}; }
  static RamseyTarget power(Colour c, int m, int t) { return {Kind::Power, c, m, t}; }
  static RamseyTarget multipartite(Colour c, int m, int t) { return {Kind::Multipartite, c, m, t}; }
  std::string describe() const;
};

/// Whether g contains the target in the target's colour.
bool contains_target(const Colouring& g, const RamseyTarget& target, const SearchBudget& budget = {});

struct RamseySearchOptions {
  int max_n = 8;
  /// Extend target-free colourings one vertex at a time and keep one
  /// representative per isomorphism class. Off: enumerate every labelled
  /// colouring of every K_N independently.
  bool prune = true;
  int jobs = 1;
  SearchBudget budget;
};

struct RamseySearchResult {
  /// Least N <= max_n such that every colouring of K_N contains a target;
  /// empty if some colouring of K_{max_n} avoids both.
  std::optional<int> value;
  /// Number of target-free colourings found per order 1..N (classes when
  /// pruning, labelled colourings otherwise).
  std::vector<std::uint64_t> free_counts;
  /// Least-code target-free colouring of the largest order reached.
  std::optional<Colouring> extremal;
};

RamseySearchResult ramsey_exhaustive(const RamseyTarget& first, const RamseyTarget& second,
                                     const RamseySearchOptions& options = {});

}  // namespace pathcover
