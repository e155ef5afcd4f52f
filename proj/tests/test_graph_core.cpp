#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "pathcover/certificate_io.hpp"
#include "pathcover/colouring.hpp"
#include "pathcover/errors.hpp"
#include "pathcover/validate.hpp"

using namespace pathcover;

namespace {

// Union-find over red pairs, independent of the bitmask BFS.
std::vector<int> naive_component_orders(const Colouring& g, VertexSet s) {
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Vertex u : s) {
    for (Vertex v : s) {
      if (u < v && g.is_red(u, v)) parent[find(u)] = find(v);
    }
  }
  std::vector<int> count(g.order(), 0);
  for (Vertex v : s) ++count[find(v)];
  std::vector<int> out;
  for (int c : count) {
    if (c) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
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

}  // namespace

TEST_CASE("vertex set basics") {
  VertexSet s{3, 1, 7};
  CHECK(s.size() == 3);
  CHECK(s.front() == 1);
  CHECK(s.to_vector() == std::vector<Vertex>{1, 3, 7});
  CHECK((s - VertexSet{1}).front() == 3);
  CHECK(VertexSet::range(64).size() == 64);
  CHECK(VertexSet{1, 3}.subset_of(s));
  CHECK_FALSE(VertexSet{2}.intersects(s));
}

TEST_CASE("colouring construction and queries") {
  const Colouring g = Colouring::from_red_edges(4, {{0, 1}, {2, 3}});
  CHECK(g.is_red(1, 0));
  CHECK(g.is_blue(0, 2));
  CHECK_FALSE(g.is_blue(1, 1));
  CHECK(g.red_neighbours(2) == VertexSet{3});
  CHECK(g.blue_neighbours(0) == (VertexSet{2, 3}));
  CHECK(g.swapped().is_blue(0, 1));
  CHECK(g.swapped().swapped() == g);
  CHECK_FALSE(g.red_connected());
  CHECK(g.with_apex(Colour::Red).red_connected());
  CHECK_THROWS_AS(Colouring(65), PreconditionError);
  CHECK_THROWS_AS(Colouring(3).set(1, 1, Colour::Red), PreconditionError);
}

TEST_CASE("code order matches lexicographic pairs") {
  // Pair (0,2) is the second pair, pair (1,2) the third.
  const Colouring g = Colouring::from_code(3, 0b110);
  CHECK(g.is_blue(0, 1));
  CHECK(g.is_red(0, 2));
  CHECK(g.is_red(1, 2));
}

TEST_CASE("relabelled and induced colourings") {
  const Colouring g = Colouring::from_red_edges(4, {{0, 1}});
  const std::vector<Vertex> perm{3, 1, 2, 0};
  const Colouring h = g.relabelled(perm);
  CHECK(h.is_red(3, 1));
  CHECK(h.is_blue(0, 1));
  const std::vector<Vertex> keep{1, 0};
  CHECK(g.induced(keep).is_red(0, 1));
}

TEST_CASE("serialization round trip and strict parsing") {
  std::mt19937_64 rng(7);
  for (int n : {0, 1, 2, 5, 11}) {
    const Colouring g = random_colouring(n, 0.4, rng);
    CHECK(parse_colouring(serialize(g)) == g);
  }
  CHECK(serialize(Colouring::from_red_edges(3, {{0, 2}})) == "n 3\nBRB\n");
  CHECK_THROWS_AS(parse_colouring("n 3\nBR\n"), PreconditionError);
  CHECK_THROWS_AS(parse_colouring("n 3\nBRX\n"), PreconditionError);
  CHECK_THROWS_AS(parse_colouring("n x\nBRB\n"), PreconditionError);
  CHECK_THROWS_AS(parse_colouring("3\nBRB\n"), PreconditionError);
  CHECK_THROWS_AS(parse_colouring("n 3\nBRB\nR\n"), PreconditionError);
}

TEST_CASE("red component statistics agree with union-find") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 14;
    const Colouring g = random_colouring(n, 0.15 + 0.05 * (trial % 5), rng);
    const VertexSet s(rng() & VertexSet::range(n).bits());
    const auto st = red_component_stats(g, s);
    std::vector<int> orders;
    for (VertexSet c : st.components) orders.push_back(c.size());
    std::sort(orders.begin(), orders.end());
    const auto expected = naive_component_orders(g, s);
    REQUIRE(orders == expected);
    CHECK(st.largest == (expected.empty() ? 0 : expected.back()));
    CHECK(st.count_of_reference == std::count(expected.begin(), expected.end(), st.largest));
    CHECK(largest_red_component(g, s) == st.largest);
  }
}

TEST_CASE("component stats with a reference order") {
  // Red triangle 0-1-2 and red edge 3-4.
  const Colouring g = Colouring::from_red_edges(6, {{0, 1}, {1, 2}, {3, 4}});
  const auto st = red_component_stats(g, g.vertices(), 2);
  CHECK(st.largest == 3);
  CHECK(st.count_of_reference == 1);
  CHECK(st.components.front() == (VertexSet{0, 1, 2}));
  CHECK(red_component_stats(g, {}).largest == 0);
}

TEST_CASE("power checks agree with the definition") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 8;
    const Colouring g = random_colouring(n, 0.3, rng);
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::shuffle(seq.begin(), seq.end(), rng);
    seq.resize(1 + rng() % n);
    const int t = static_cast<int>(rng() % 4);
    bool expected = true;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      for (std::size_t j = 0; j < seq.size(); ++j) {
        const auto d = i > j ? i - j : j - i;
        if (d >= 1 && static_cast<int>(d) <= t && !g.is_blue(seq[i], seq[j])) expected = false;
      }
    }
    CHECK(is_blue_kpower(g, PowerWitness{seq, t, Colour::Blue}) == expected);
    CHECK(is_red_kpower(g.swapped(), PowerWitness{seq, t, Colour::Red}) == expected);
  }
}

TEST_CASE("power check edge cases") {
  const Colouring g = Colouring::all(4, Colour::Red);
  CHECK(is_blue_kpower(g, PowerWitness{{0, 1, 2}, 0, Colour::Blue}));
  CHECK_FALSE(is_blue_kpower(g, PowerWitness{{0, 1}, 1, Colour::Blue}));
  CHECK_FALSE(is_blue_kpower(g, PowerWitness{{0, 0}, 0, Colour::Blue}));
  CHECK_FALSE(is_blue_kpower(g, PowerWitness{{0, 9}, 0, Colour::Blue}));
  CHECK(is_path(g, PathSeq{{3, 1, 0, 2}, Colour::Red}));
  CHECK(is_path(g, PathSeq{{}, Colour::Red}));
}

TEST_CASE("blue multipartite check") {
  const Colouring g = Colouring::from_red_edges(4, {{0, 1}, {2, 3}});
  CHECK(is_blue_multipartite(g, PartiteWitness{{{0, 1}, {2, 3}}}, true));
  CHECK_FALSE(is_blue_multipartite(g, PartiteWitness{{{0, 2}, {1, 3}}}, false));
  CHECK_FALSE(is_blue_multipartite(g, PartiteWitness{{{0, 1}, {2}}}, true));
  CHECK(is_blue_multipartite(g, PartiteWitness{{{0, 1}, {2}}}, false));
  CHECK_FALSE(is_blue_multipartite(g, PartiteWitness{{{0, 1}, {1, 2}}}, false));
}

TEST_CASE("red tree check") {
  const Colouring g = Colouring::from_red_edges(4, {{0, 1}, {1, 2}, {1, 3}});
  CHECK(is_red_tree(g, TreeCover::from_edges({0, 1, 2, 3}, {{1, 0}, {1, 2}, {3, 1}})));
  CHECK(TreeCover::from_edges({0, 1, 2, 3}, {{1, 0}, {1, 2}, {3, 1}}).leaf_count() == 3);
  CHECK(is_red_tree(g, TreeCover::from_edges({2}, {})));
  CHECK(TreeCover::from_edges({2}, {}).leaf_count() == 1);
  CHECK(is_red_tree(g, TreeCover::from_edges({}, {})));
  CHECK_FALSE(is_red_tree(g, TreeCover::from_edges({0, 2}, {{0, 2}})));
  CHECK_FALSE(is_red_tree(g, TreeCover::from_edges({0, 1, 2}, {{0, 1}})));
}

TEST_CASE("validate_cover accepts good certificates") {
  const Colouring g = Colouring::from_red_edges(5, {{0, 1}, {1, 2}});
  CoverCertificate cert;
  cert.red_paths = {PathSeq{{0, 1, 2}, Colour::Red}};
  cert.witness.parts = {VertexSet{3}, VertexSet{4}};
  const CoverShape shape{ShapeKind::PathBipartite, 1, 0, 0};
  const auto report = validate_cover(g, cert, shape);
  CHECK_MESSAGE(report.ok(), report.summary());
}

TEST_CASE("validate_cover reports the offending pair") {
  const Colouring g = Colouring::from_red_edges(4, {{0, 1}, {2, 3}});
  CoverCertificate cert;
  cert.red_paths = {PathSeq{{}, Colour::Red}};
  cert.witness.parts = {VertexSet{0, 2}, VertexSet{1, 3}};
  const auto report = validate_cover(g, cert, CoverShape{ShapeKind::PathBipartite, 1, 0, 0});
  REQUIRE_FALSE(report.ok());
  const CheckResult* bad = report.first_failure();
  CHECK(bad->name == "blue-multipartite");
  REQUIRE(bad->counterexample.has_value());
  CHECK(g.is_red(bad->counterexample->first, bad->counterexample->second));
}

TEST_CASE("validate_cover catches coverage, overlap and shape errors") {
  const Colouring g = Colouring::all(4, Colour::Blue);
  CoverCertificate cert;
  cert.witness.parts = {VertexSet{0}, VertexSet{1}};
  CoverShape shape{ShapeKind::PathMultipartite, 1, 0, 0};
  CHECK_FALSE(validate_cover(g, cert, shape).ok());  // 2, 3 uncovered
  cert.red_paths = {PathSeq{{2, 3}, Colour::Red}};
  CHECK_FALSE(validate_cover(g, cert, shape).ok());  // blue path edge
  cert.red_paths = {PathSeq{{2}, Colour::Red}, PathSeq{{3}, Colour::Red}};
  CHECK_FALSE(validate_cover(g, cert, shape).ok());  // two paths for k = 1
  shape.k = 2;
  CHECK_FALSE(validate_cover(g, cert, shape).ok());  // needs three parts
  cert.witness.parts.push_back(VertexSet{1});
  CHECK_FALSE(validate_cover(g, cert, shape).ok());  // overlap
  cert.witness.parts = {VertexSet{}, VertexSet{}, VertexSet{0, 1}};
  CHECK_FALSE(validate_cover(g, cert, shape).ok());  // unbalanced
  cert.witness.parts = {VertexSet{0}, VertexSet{1}, VertexSet{}};
  CHECK_FALSE(validate_cover(g, cert, shape).ok());
}

TEST_CASE("validate_cover on gap, weak tree and power shapes") {
  const Colouring g = Colouring::all(5, Colour::Blue);
  CoverCertificate gap;
  gap.red_paths = {PathSeq{{}, Colour::Red}};
  gap.witness.parts = {VertexSet{0, 1}, VertexSet{2, 3, 4}};
  CHECK(validate_cover(g, gap, CoverShape{ShapeKind::PathBipartiteGap, 1, 1, 0}).ok());
  CHECK_FALSE(validate_cover(g, gap, CoverShape{ShapeKind::PathBipartiteGap, 1, 2, 0}).ok());

  const Colouring star = Colouring::from_red_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CoverCertificate weak;
  weak.red_tree = TreeCover::from_edges({0, 1, 2}, {{0, 1}, {0, 2}});
  weak.witness.parts = {VertexSet{3, 4, 5}};
  CHECK(validate_cover(star, weak, CoverShape{ShapeKind::WeakTree, 2, 0, 0}).ok());
  // (k+1) c(S) = 4 > |S| = 3.
  CHECK_FALSE(validate_cover(star, weak, CoverShape{ShapeKind::WeakTree, 3, 0, 0}).ok());
  weak.witness.parts = {VertexSet{3, 4}, VertexSet{5}};
  CHECK_FALSE(validate_cover(star, weak, CoverShape{ShapeKind::WeakTree, 2, 0, 0}).ok());

  CoverCertificate power;
  power.power = PowerWitness{{0, 1, 2, 3}, 3, Colour::Blue};
  CHECK(validate_cover(g, power, CoverShape{ShapeKind::PowerPath, 3, 0, 4}).ok());
  CHECK_FALSE(validate_cover(g, power, CoverShape{ShapeKind::PowerPath, 3, 0, 5}).ok());
  CHECK_FALSE(validate_cover(Colouring::all(5, Colour::Red), power, CoverShape{ShapeKind::PowerPath, 3, 0, 4}).ok());
}

TEST_CASE("shape names round trip") {
  for (auto k : {ShapeKind::TwoPath, ShapeKind::PathBipartite, ShapeKind::PathBipartiteGap,
                 ShapeKind::PathMultipartite, ShapeKind::TreeMultipartite, ShapeKind::PathsConnected,
                 ShapeKind::WeakTree, ShapeKind::PowerPath}) {
    CHECK(shape_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(shape_kind_from_string("triangle"), PreconditionError);
}

TEST_CASE("certificate JSON round trip") {
  CertificateDocument doc;
  doc.cert.shape = CoverShape{ShapeKind::PathMultipartite, 2, 0, 0};
  doc.cert.red_paths = {PathSeq{{0, 1, 2}, Colour::Red}, PathSeq{{}, Colour::Red}};
  doc.cert.witness.parts = {VertexSet{3, 4}, VertexSet{5, 6}, VertexSet{7, 8}};
  CHECK(parse_certificate(certificate_to_json(doc)).cert == doc.cert);

  CertificateDocument tree;
  tree.cert.shape = CoverShape{ShapeKind::TreeMultipartite, 3, 0, 0};
  tree.cert.red_tree = TreeCover::from_edges(VertexSet{0, 1, 2, 3}, {{0, 1}, {0, 2}, {3, 0}});
  tree.cert.power = PowerWitness{{4, 5, 6}, 2, Colour::Blue};
  tree.valid = false;
  tree.error = "engine failure";
  tree.state = "dump";
  const CertificateDocument back = parse_certificate(certificate_to_json(tree));
  CHECK(back.cert == tree.cert);
  CHECK_FALSE(back.valid);
  CHECK(back.error == "engine failure");
  CHECK(back.state == "dump");
  CHECK(certificate_to_json(back) == certificate_to_json(tree));
}

TEST_CASE("certificate parsing rejects malformed documents") {
  CHECK_THROWS_AS(parse_certificate("{"), PreconditionError);
  CHECK_THROWS_AS(parse_certificate("{}"), PreconditionError);
  CHECK_THROWS_AS(parse_certificate(R"({"shape":{"kind":"nope","k":1},"red_paths":[],"red_tree":null,"parts":[],"power":null})"),
                  PreconditionError);
  CHECK_THROWS_AS(parse_certificate(R"({"shape":{"kind":"two-path","k":1},"red_paths":[[0,99]],"red_tree":null,"parts":[],"power":null})"),
                  PreconditionError);
  CHECK_THROWS_AS(parse_certificate(R"({"shape":{"kind":"two-path","k":1},"red_paths":[],"red_tree":null,"parts":[[1,1]],"power":null})"),
                  PreconditionError);
}
