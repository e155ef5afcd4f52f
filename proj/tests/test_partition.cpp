#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pathcover/errors.hpp"
#include "pathcover/partition.hpp"
#include "pathcover/sweep.hpp"
#include "pathcover/validate.hpp"

using namespace pathcover;

namespace {

std::uint64_t pair_count(int n) { return static_cast<std::uint64_t>(n) * (n - 1) / 2; }

template <class F>
void for_each_colouring(int n, F&& f) {
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t code = 0; code < total; ++code) f(Colouring::from_code(n, code));
}

Colouring random_colouring(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution red(p);
  Colouring g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (red(rng)) g.set(u, v, Colour::Red);
    }
  }
  return g;
}

Colouring red_star(int n) {
  Colouring g(n);
  for (Vertex v = 1; v < n; ++v) g.set(0, v, Colour::Red);
  return g;
}

}  // namespace

TEST_CASE("two_path_cover examples") {
  auto c = two_path_cover(Colouring::all(5, Colour::Red));
  CHECK(c.red.vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(c.blue.empty());
  c = two_path_cover(Colouring::all(3, Colour::Blue));
  CHECK(validate_cover(Colouring::all(3, Colour::Blue), to_certificate(c)).ok());
  const Colouring g = Colouring::from_red_edges(4, {{0, 1}, {2, 3}});
  CHECK(validate_cover(g, to_certificate(two_path_cover(g))).ok());
  CHECK(two_path_cover(Colouring(0)).red.empty());
}

TEST_CASE("two_path_cover is sound on every colouring up to six vertices") {
  for (int n = 0; n <= 6; ++n) {
    for_each_colouring(n, [&](const Colouring& g) {
      const auto r = validate_cover(g, to_certificate(two_path_cover(g)));
      REQUIRE_MESSAGE(r.ok(), serialize(g) << r.summary());
    });
  }
}

TEST_CASE("path_bipartite_cover examples") {
  const Colouring blue = Colouring::all(4, Colour::Blue);
  auto c = path_bipartite_cover(blue);
  CHECK(c.paths.front().empty());
  CHECK(c.witness.part_size() == 2);
  const Colouring red = Colouring::all(5, Colour::Red);
  c = path_bipartite_cover(red);
  CHECK(c.paths.front().order() == 5);
  CHECK(c.witness.order() == 0);
  const Colouring g = Colouring::from_red_edges(3, {{0, 1}});
  c = path_bipartite_cover(g);
  CHECK(c.paths.front().order() == 1);
  CHECK(validate_cover(g, to_certificate(c, {ShapeKind::PathBipartite, 1, 0, 0})).ok());
}

TEST_CASE("path_bipartite_gap examples and range") {
  auto c = path_bipartite_gap(Colouring::all(5, Colour::Blue), 1);
  CHECK(c.paths.front().empty());
  CHECK(c.witness.parts[0].size() == 2);
  CHECK(c.witness.parts[1].size() == 3);
  c = path_bipartite_gap(Colouring::all(4, Colour::Red), 3);
  CHECK(c.paths.front().order() == 1);
  CHECK(c.witness.parts[0].empty());
  CHECK(c.witness.parts[1].size() == 3);
  CHECK_THROWS_AS(path_bipartite_gap(Colouring(3), 4), PreconditionError);
  CHECK_THROWS_AS(path_bipartite_gap(Colouring(3), -1), PreconditionError);
}

TEST_CASE("bipartite searches are sound and monotone on every colouring up to six vertices") {
  for (int n = 0; n <= 6; ++n) {
    for_each_colouring(n, [&](const Colouring& g) {
      for (int t = 0; t <= n; ++t) {
        SearchStats stats;
        const auto c = path_bipartite_gap(g, t, &stats);
        const auto r = validate_cover(g, to_certificate(c, {ShapeKind::PathBipartiteGap, 1, t, 0}));
        REQUIRE_MESSAGE(r.ok(), serialize(g) << r.summary());
        REQUIRE(stats.potential_violations == 0);
        REQUIRE(stats.steps == n - t);
      }
    });
  }
}

TEST_CASE("tree_to_paths") {
  const auto path = tree_to_paths(TreeCover::from_edges({0, 1, 2}, {{0, 1}, {1, 2}}));
  REQUIRE(path.size() == 1);
  CHECK(path.front().order() == 3);
  CHECK(tree_to_paths(TreeCover::from_edges({4}, {})).front().vertices == std::vector<Vertex>{4});
  const auto star = tree_to_paths(TreeCover::from_edges({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(star.size() == 2);
  CHECK(tree_to_paths(TreeCover{}).empty());
  CHECK_THROWS_AS(tree_to_paths(TreeCover::from_edges({0, 1, 2}, {{0, 1}})), PreconditionError);
}

TEST_CASE("tree_to_paths covers random trees with leaves - 1 paths") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 30;
    std::vector<Edge> edges;
    Colouring g(n);
    for (Vertex v = 1; v < n; ++v) {
      const Vertex p = static_cast<Vertex>(rng() % v);
      edges.emplace_back(p, v);
      g.set(p, v, Colour::Red);
    }
    const TreeCover t = TreeCover::from_edges(VertexSet::range(n), edges);
    const auto paths = tree_to_paths(t);
    CHECK(static_cast<int>(paths.size()) == t.leaf_count() - 1);
    VertexSet seen;
    for (const auto& p : paths) {
      REQUIRE(is_path(g, p));
      for (Vertex v : p.vertices) {
        REQUIRE_FALSE(seen.contains(v));
        seen.insert(v);
      }
    }
    CHECK(seen == VertexSet::range(n));
  }
}

TEST_CASE("multipartite_to_power") {
  const Colouring g = Colouring::from_red_edges(6, {{0, 1}, {2, 3}, {4, 5}});
  const auto p = multipartite_to_power(PartiteWitness{{{0, 1}, {2, 3}, {4, 5}}});
  CHECK(p.vertices == std::vector<Vertex>{0, 2, 4, 1, 3, 5});
  CHECK(p.exponent == 2);
  CHECK(is_blue_kpower(g, p));
  const auto single = multipartite_to_power(PartiteWitness{{{0, 1, 2}}});
  CHECK(single.vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(single.exponent == 0);
  CHECK(multipartite_to_power(PartiteWitness{}).vertices.empty());
  CHECK_THROWS_AS(multipartite_to_power(PartiteWitness{{{0}, {1, 2}}}), PreconditionError);
}

TEST_CASE("balanced_refine base and shortcut cases") {
  const Colouring blue = Colouring::all(6, Colour::Blue);
  auto r = balanced_refine(blue, BalancingState{{{0}, {1}}, {{}}, {{}}});
  CHECK(r.paths.front().empty());
  CHECK(r.witness.parts == std::vector<VertexSet>{{0}, {1}});
  r = balanced_refine(blue, BalancingState{{{0, 1}, {2}}, {{3}}, {{3}}});
  CHECK(r.paths.front().empty());
  CHECK(r.witness.parts == std::vector<VertexSet>{{0, 1}, {2, 3}});
}

TEST_CASE("balanced_refine peels a red-connected B along N") {
  const Colouring g = Colouring::from_red_edges(6, {{3, 4}, {4, 5}});
  int rounds = 0;
  const auto r = balanced_refine(g, BalancingState{{{0, 1}, {2}}, {{3, 4, 5}}, {{3}}}, &rounds);
  REQUIRE_FALSE(r.paths.front().empty());
  CHECK(r.paths.front().vertices.front() == 3);
  CHECK(r.witness.balanced());
  CHECK(r.witness.part_size() == 2);
  CHECK(rounds <= 3 + 1);
  CoverCertificate cert = to_certificate(r, {ShapeKind::PathMultipartite, 1, 0, 0});
  CHECK(validate_cover(g, cert).ok());
}

TEST_CASE("balanced_refine rejects bad states with the failed condition") {
  const Colouring g = Colouring::from_red_edges(4, {{0, 2}});
  try {
    balanced_refine(g, BalancingState{{{0}, {1}}, {{2}}, {{2}}});
    FAIL("expected rejection");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("condition (ii)") != std::string::npos);
  }
  CHECK_THROWS_AS(balanced_refine(g, BalancingState{{{1}, {3}}, {{2}}, {{}}}), PreconditionError);
  CHECK_THROWS_AS(balanced_refine(g, BalancingState{{{1}, {}}, {{}}, {{}}}), PreconditionError);
  CHECK_THROWS_AS(balanced_refine(g, BalancingState{{{1}}, {{}}, {{}}}), PreconditionError);
}

TEST_CASE("weak_tree_cover examples") {
  const Colouring red = Colouring::all(6, Colour::Red);
  auto w = weak_tree_cover(red, 2);
  CHECK(validate_cover(red, to_certificate(w, 2)).ok());
  const Colouring star = red_star(5);
  w = weak_tree_cover(star, 2);
  CHECK(validate_cover(star, to_certificate(w, 2)).ok());
  w = weak_tree_cover(Colouring(1), 2);
  CHECK(w.tree.vertices == VertexSet{0});
  CHECK(w.s.empty());
  CHECK_THROWS_AS(weak_tree_cover(star, 1), PreconditionError);
  CHECK_THROWS_AS(weak_tree_cover(Colouring(3), 2), PreconditionError);
}

TEST_CASE("weak_tree_cover is sound on red-connected colourings up to six vertices") {
  long fallbacks = 0;
  for (int n = 1; n <= 6; ++n) {
    for_each_colouring(n, [&](const Colouring& g) {
      if (!g.red_connected()) return;
      for (int k = 2; k <= 3; ++k) {
        SearchStats stats;
        const auto w = weak_tree_cover(g, k, &stats);
        const auto r = validate_cover(g, to_certificate(w, k));
        REQUIRE_MESSAGE(r.ok(), serialize(g) << r.summary());
        REQUIRE(stats.potential_violations == 0);
        fallbacks += stats.fallbacks;
      }
    });
  }
  // Leaf removal can create a new largest component, so some inputs need
  // the multipartite route.
  CHECK(fallbacks > 0);
}

TEST_CASE("weak_tree_cover on random larger colourings") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 7 + trial % 12;
    const int k = 2 + trial % 3;
    const Colouring g = random_colouring(n, 0.1 + 0.05 * (trial % 4), rng);
    if (!g.red_connected()) continue;
    SearchStats stats;
    const auto w = weak_tree_cover(g, k, &stats);
    const auto r = validate_cover(g, to_certificate(w, k));
    REQUIRE_MESSAGE(r.ok(), serialize(g) << r.summary());
    REQUIRE(stats.potential_violations == 0);
  }
}

TEST_CASE("tree_multipartite_cover examples") {
  const Colouring red = Colouring::all(5, Colour::Red);
  auto t = tree_multipartite_cover(red, 2);
  CHECK(t.tree.vertices.size() == 5);
  CHECK(validate_cover(red, to_certificate(t, 2)).ok());
  const Colouring star = red_star(5);
  t = tree_multipartite_cover(star, 2);
  CHECK(validate_cover(star, to_certificate(t, 2)).ok());
  CHECK_THROWS_AS(tree_multipartite_cover(Colouring(3), 2), PreconditionError);
  CHECK_THROWS_AS(tree_multipartite_cover(red, 0), PreconditionError);
  t = tree_multipartite_cover(Colouring(1), 3);
  CHECK(t.tree.vertices == VertexSet{0});
  CHECK(t.witness.parts.size() == 4);
}

TEST_CASE("tree_multipartite_cover with k = 1 on a red star") {
  const Colouring star = red_star(5);
  const auto t = tree_multipartite_cover(star, 1);
  CHECK(t.tree.vertices == VertexSet{0});
  CHECK(validate_cover(star, to_certificate(t, 1)).ok());
}

TEST_CASE("tree_multipartite_cover is sound on red-connected colourings up to six vertices") {
  for (int n = 1; n <= 6; ++n) {
    for_each_colouring(n, [&](const Colouring& g) {
      if (!g.red_connected()) return;
      for (int k = 2; k <= 3; ++k) {
        SearchStats stats;
        const auto t = tree_multipartite_cover(g, k, &stats);
        const auto r = validate_cover(g, to_certificate(t, k));
        REQUIRE_MESSAGE(r.ok(), serialize(g) << r.summary());
        REQUIRE(stats.potential_violations == 0);
        if (stats.fixed_point) REQUIRE(violated_claims(g, *stats.fixed_point).empty());
      }
    });
  }
}

TEST_CASE("tree_multipartite_cover on random larger colourings") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 7 + trial % 14;
    const int k = 2 + trial % 4;
    const Colouring g = random_colouring(n, 0.08 + 0.04 * (trial % 6), rng);
    if (!g.red_connected()) continue;
    SearchStats stats;
    const auto t = tree_multipartite_cover(g, k, &stats);
    const auto r = validate_cover(g, to_certificate(t, k));
    REQUIRE_MESSAGE(r.ok(), serialize(g) << r.summary());
    REQUIRE(violated_claims(g, *stats.fixed_point).empty());
  }
}

TEST_CASE("paths_multipartite_connected") {
  const Colouring red = Colouring::all(4, Colour::Red);
  auto c = paths_multipartite_connected(red, 1);
  REQUIRE(c.paths.size() == 1);
  CHECK(c.paths.front().order() == 4);
  CHECK(c.witness.parts.size() == 3);
  const Colouring star = red_star(7);
  c = paths_multipartite_connected(star, 1);
  CHECK(validate_cover(star, to_certificate(c, {ShapeKind::PathsConnected, 1, 0, 0})).ok());
  for (int n = 1; n <= 6; ++n) {
    for_each_colouring(n, [&](const Colouring& g) {
      if (!g.red_connected()) return;
      for (int k = 1; k <= 2; ++k) {
        const auto p = paths_multipartite_connected(g, k);
        const auto r = validate_cover(g, to_certificate(p, {ShapeKind::PathsConnected, k, 0, 0}));
        REQUIRE_MESSAGE(r.ok(), serialize(g) << r.summary());
      }
    });
  }
}

TEST_CASE("path_multipartite_cover examples") {
  const Colouring blue = Colouring::all(6, Colour::Blue);
  auto c = path_multipartite_cover(blue, 2);
  REQUIRE(c.paths.size() == 2);
  CHECK(c.paths[0].empty());
  CHECK(c.paths[1].empty());
  CHECK(c.witness.part_size() == 2);
  const Colouring red = Colouring::all(5, Colour::Red);
  c = path_multipartite_cover(red, 2);
  CHECK(c.paths[0].order() == 5);
  CHECK(c.paths[1].empty());
  CHECK(c.witness.order() == 0);
  CHECK_THROWS_AS(path_multipartite_cover(red, 0), PreconditionError);
}

TEST_CASE("path_multipartite_cover with k = 1 has the bipartite shape") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const Colouring g = random_colouring(1 + trial % 15, 0.5, rng);
    const auto a = path_multipartite_cover(g, 1);
    const auto b = path_bipartite_cover(g);
    CHECK(a.paths.size() == b.paths.size());
    CHECK(a.witness.parts.size() == 2);
    CHECK(validate_cover(g, to_certificate(a, {ShapeKind::PathBipartite, 1, 0, 0})).ok());
  }
}

TEST_CASE("path_multipartite_cover is sound on every colouring up to six vertices") {
  for (int n = 0; n <= 6; ++n) {
    for_each_colouring(n, [&](const Colouring& g) {
      for (int k = 1; k <= 4; ++k) {
        const auto c = path_multipartite_cover(g, k);
        const auto r = validate_cover(g, to_certificate(c, {ShapeKind::PathMultipartite, k, 0, 0}));
        REQUIRE_MESSAGE(r.ok(), serialize(g) << r.summary());
      }
    });
  }
}

TEST_CASE("serial and OpenMP sweeps agree on every counter") {
  for (auto engine : {SweepEngine::PathMultipartite, SweepEngine::TreeMultipartite}) {
    const SweepResult s = sweep_all_colourings(5, {1, 2, 3}, engine);
    const SweepResult p = sweep_all_colourings_parallel(5, {1, 2, 3}, engine);
    CHECK(s.colourings == p.colourings);
    CHECK(s.runs == p.runs);
    CHECK(s.failures == p.failures);
    CHECK(s.steps == p.steps);
    CHECK(s.potential_violations == p.potential_violations);
    CHECK(s.first_failure_code == p.first_failure_code);
    CHECK(s.first_failure == p.first_failure);
  }
  const SweepResult full = sweep_all_colourings_parallel(5, {2, 3}, SweepEngine::PathMultipartite);
  CHECK(full.colourings == 1024);
  CHECK(full.failures == 0);
  CHECK(full.potential_violations == 0);
}
