#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathcover/colouring.hpp"
#include "pathcover/witness.hpp"

namespace pathcover {

struct ComponentStats {
  std::vector<VertexSet> components;  ///< ordered by smallest vertex
  int largest = 0;                    ///< c(S)
  int count_of_reference = 0;         ///< f(S): components of the reference order
};

/// Red components of the subgraph induced on `s`. `reference_order`
/// defaults to the largest component order.
ComponentStats red_component_stats(const Colouring& g, VertexSet s,
                                   std::optional<int> reference_order = std::nullopt);

/// Red components only, same order as red_component_stats.
std::vector<VertexSet> red_components(const Colouring& g, VertexSet s);

/// Red component of `s` containing v (v must lie in s).
VertexSet red_component_of(const Colouring& g, VertexSet s, Vertex v);

/// Largest red component order inside s.
int largest_red_component(const Colouring& g, VertexSet s);

VertexSet red_neighbourhood(const Colouring& g, Vertex v);

/// Colour-generic power check: distinct in-range vertices and every pair at
/// sequence distance 1..w.exponent has colour w.colour.
bool is_kpower(const Colouring& g, const PowerWitness& w);
/// is_kpower restricted to blue claims.
bool is_blue_kpower(const Colouring& g, const PowerWitness& w);
bool is_red_kpower(const Colouring& g, const PowerWitness& w);
/// Consecutive-pair colour check for a path of the declared colour.
bool is_path(const Colouring& g, const PathSeq& p);

bool is_blue_multipartite(const Colouring& g, const PartiteWitness& w, bool require_balanced);

/// Edges red, form a tree spanning t.vertices, and the stored leaf list is
/// exactly the degree <= 1 vertices in ascending order.
bool is_red_tree(const Colouring& g, const TreeCover& t);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;                     ///< empty on success
  std::optional<Edge> counterexample;     ///< offending pair, when one exists
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool ok() const noexcept;
  const CheckResult* first_failure() const noexcept;
  std::string summary() const;
};

/// Checks a certificate against a colouring and the shape it claims.
/// Never throws on malformed certificates; failures are reported.
ValidationReport validate_cover(const Colouring& g, const CoverCertificate& cert,
                                const CoverShape& shape);
inline ValidationReport validate_cover(const Colouring& g, const CoverCertificate& cert) {
  return validate_cover(g, cert, cert.shape);
}

}  // namespace pathcover
