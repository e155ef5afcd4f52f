#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathcover/colouring.hpp"
#include "pathcover/witness.hpp"

namespace pathcover {

enum class RamseyFamily {
  PathPath,          ///< red P_n vs blue P_m
  PathMultipartite,  ///< red P_n vs blue K_{m x t}, m = 1 mod n-1
  PathPower,         ///< red P_n vs blue P_n^k
  Haggkvist,         ///< red P_n vs blue K_{m,l}, m, l = 1 mod n-1
  Burr,              ///< connected red G vs blue H, lower bound only
};

std::string to_string(RamseyFamily f);
/// CLI spellings path-path, path-multipartite, path-power, haggkvist, burr.
RamseyFamily ramsey_family_from_string(const std::string& name);

struct RamseyFormulaQuery {
  RamseyFamily family = RamseyFamily::PathPath;
  int n = 0;
  int m = 0;
  int l = 0;
  int t = 0;
  int k = 0;
  int host_order = 0;  ///< |G|
  int chi = 0;         ///< chromatic number of H
  int sigma = 0;       ///< least colour class of H
};

struct RamseyValue {
  long value = 0;
  bool lower_bound = false;  ///< only a lower bound is known (Burr)
};

/// Throws PreconditionError naming the violated constraint.
RamseyValue ramsey_formula(const RamseyFormulaQuery& q);

/// Order of the extremal colouring for the family (formula value minus one).
int extremal_order(const RamseyFormulaQuery& q);
/// Disjoint red cliques with every other edge blue: the lower-bound colouring.
Colouring extremal_construction(const RamseyFormulaQuery& q);
/// Colouring on sum(sizes) vertices whose red graph is the disjoint union of
/// cliques of the given sizes, placed on consecutive ids.
Colouring red_cliques(const std::vector<int>& sizes);

/// Interleaves a blue (k-i)-th power p and a blue (i-1)-th power q with all
/// cross edges blue into a blue k-th power of order exactly n. p and q are
/// trimmed from their ends. Throws PreconditionError naming the failed
/// condition (i)-(iv) or "order deficit".
PowerWitness combine_powers(const Colouring& g, const PowerWitness& p, const PowerWitness& q, int n, int k, int i);

/// Blue t-th power of order >= m in a colouring of K_{(n-2)t+m} with no red
/// P_n. t = 0 returns any m vertices.
PowerWitness power_cover_no_red_path(const Colouring& g, int n, int m, int t);

struct RedOrBluePower {
  std::optional<PathSeq> red;
  std::optional<PowerWitness> blue;
};

/// Red-connected colouring of K_{(n-1)(t-1)+m}, t >= 2: a red path of order
/// >= n or a blue t-th power of order >= m.
RedOrBluePower power_in_connected(const Colouring& g, int n, int m, int t);

/// Which of the three structural alternatives holds.
struct ClaimSplit {
  int branch = 0;                ///< 1, 2 or 3
  VertexSet component;           ///< branch 1: largest red component
  VertexSet separated;           ///< branch 2: blue-separated set
  std::vector<VertexSet> parts;  ///< branch 3: B_1, ..., B_k, sizes descending
};

/// Classifies a colouring of K_{(n-1)k + floor(n/(k+1))} with no red P_n,
/// k >= 2. Throws InternalError if no branch applies.
ClaimSplit classify_claim(const Colouring& g, int n, int k);

/// Branch 3 construction data.
struct CaseThreeLayout {
  int n = 0;
  int k = 0;
  int t = 0;                                   ///< parts 1..t carry a surplus
  std::vector<VertexSet> parts;                ///< B_1, ..., B_k
  std::vector<int> x;                          ///< x_1, ..., x_t
  std::vector<std::vector<Vertex>> r;          ///< R_i = r_{i,0..2x_i}, blue
  std::vector<std::vector<std::vector<Vertex>>> a;  ///< a[i][j] = A_{i,j} inside B_j
  std::vector<Vertex> spare;                   ///< b_2, ..., b_k, or empty when n = 0 mod k+1
};

CaseThreeLayout case_three_layout(const Colouring& g, int n, int k, const std::vector<VertexSet>& parts);
/// P_0 followed by the blocks P_{i,j}, cut to its last n vertices.
PowerWitness assemble_case_three(const CaseThreeLayout& layout);

enum class PowerPathCase { BluePath, LargeComponent, SeparatedSet, Multipartition };

struct PowerPathReport {
  PowerPathCase route = PowerPathCase::BluePath;
  int band = -1;  ///< LargeComponent: the index i
};

/// Blue P_n^k in a colouring of K_{(n-1)k + floor(n/(k+1))} with no red P_n.
/// Throws PreconditionError if the order is wrong or a red P_n is present.
PowerWitness power_path_witness(const Colouring& g, int n, int k, PowerPathReport* report = nullptr);

}  // namespace pathcover
