#include "pathcover/validate.hpp"

#include <sstream>

#include "pathcover/errors.hpp"

namespace pathcover {

std::vector<VertexSet> red_components(const Colouring& g, VertexSet s) {
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet comp = red_component_of(g, rest, rest.front());
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

VertexSet red_component_of(const Colouring& g, VertexSet s, Vertex v) {
  VertexSet comp = VertexSet::single(v);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex u : frontier) next |= g.red_neighbours(u);
    next &= s;
    frontier = next - comp;
    comp |= next;
  }
  return comp;
}

int largest_red_component(const Colouring& g, VertexSet s) {
  int best = 0;
  VertexSet rest = s;
  while (rest.size() > best) {
    VertexSet comp = red_component_of(g, rest, rest.front());
    best = std::max(best, comp.size());
    rest -= comp;
  }
  return best;
}

ComponentStats red_component_stats(const Colouring& g, VertexSet s,
                                   std::optional<int> reference_order) {
  ComponentStats st;
  st.components = red_components(g, s);
  for (VertexSet c : st.components) st.largest = std::max(st.largest, c.size());
  const int ref = reference_order.value_or(st.largest);
  for (VertexSet c : st.components) {
    if (c.size() == ref) ++st.count_of_reference;
  }
  return st;
}

VertexSet red_neighbourhood(const Colouring& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  }
  return g.red_neighbours(v);
}

namespace {

bool distinct_in_range(const Colouring& g, const std::vector<Vertex>& vs) {
  VertexSet seen;
  for (Vertex v : vs) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  return true;
}

std::optional<Edge> kpower_violation(const Colouring& g, const PowerWitness& w) {
  const auto& vs = w.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size() && j <= i + static_cast<std::size_t>(w.exponent); ++j) {
      if (g.colour(vs[i], vs[j]) != w.colour) return Edge{vs[i], vs[j]};
    }
  }
  return std::nullopt;
}

std::optional<Edge> multipartite_violation(const Colouring& g, const PartiteWitness& w) {
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    for (std::size_t j = i + 1; j < w.parts.size(); ++j) {
      for (Vertex u : w.parts[i]) {
        VertexSet bad = g.red_neighbours(u) & w.parts[j];
        if (!bad.empty()) return Edge{u, bad.front()};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_kpower(const Colouring& g, const PowerWitness& w) {
  if (w.exponent < 0 || !distinct_in_range(g, w.vertices)) return false;
  return !kpower_violation(g, w).has_value();
}

bool is_blue_kpower(const Colouring& g, const PowerWitness& w) {
  return w.colour == Colour::Blue && is_kpower(g, w);
}

bool is_red_kpower(const Colouring& g, const PowerWitness& w) {
  return w.colour == Colour::Red && is_kpower(g, w);
}

bool is_path(const Colouring& g, const PathSeq& p) {
  return is_kpower(g, PowerWitness{p.vertices, 1, p.colour});
}

bool is_blue_multipartite(const Colouring& g, const PartiteWitness& w, bool require_balanced) {
  VertexSet seen;
  for (VertexSet p : w.parts) {
    if (!p.subset_of(g.vertices()) || p.intersects(seen)) return false;
    seen |= p;
  }
  if (require_balanced && !w.balanced()) return false;
  return !multipartite_violation(g, w).has_value();
}

namespace {

std::string tree_problem(const Colouring& g, const TreeCover& t, std::optional<Edge>& bad) {
  if (!t.vertices.subset_of(g.vertices())) return "tree vertex out of range";
  const int nv = t.vertices.size();
  if (nv == 0) {
    if (!t.edges.empty()) return "empty tree with edges";
    if (!t.leaves.empty()) return "empty tree with leaves";
    return {};
  }
  if (static_cast<int>(t.edges.size()) != nv - 1) return "edge count is not |V|-1";
  std::vector<VertexSet> adj(kMaxVertices);
  for (auto [u, v] : t.edges) {
    if (u == v || !t.vertices.contains(u) || !t.vertices.contains(v)) return "edge leaves the vertex set";
    if (!g.is_red(u, v)) {
      bad = Edge{u, v};
      return "tree edge is not red";
    }
    if (adj[u].contains(v)) return "repeated edge";
    adj[u].insert(v);
    adj[v].insert(u);
  }
  VertexSet reach = VertexSet::single(t.vertices.front());
  VertexSet frontier = reach;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= adj[v];
    frontier = next - reach;
    reach |= next;
  }
  if (reach != t.vertices) return "tree is disconnected";
  std::vector<Vertex> leaves;
  for (Vertex v : t.vertices) {
    if (adj[v].size() <= 1) leaves.push_back(v);
  }
  if (leaves != t.leaves) return "leaf list does not match degrees";
  return {};
}

void add(ValidationReport& r, std::string name, std::string problem,
         std::optional<Edge> bad = std::nullopt) {
  CheckResult c;
  c.name = std::move(name);
  c.passed = problem.empty();
  c.detail = std::move(problem);
  c.counterexample = bad;
  r.checks.push_back(std::move(c));
}

std::string count_problem(const char* what, std::size_t got, std::size_t lo, std::size_t hi) {
  if (got < lo || got > hi) {
    std::ostringstream os;
    os << what << " count " << got << " outside [" << lo << ", " << hi << "]";
    return os.str();
  }
  return {};
}

}  // namespace

bool is_red_tree(const Colouring& g, const TreeCover& t) {
  std::optional<Edge> bad;
  return tree_problem(g, t, bad).empty();
}

bool ValidationReport::ok() const noexcept { return first_failure() == nullptr; }

const CheckResult* ValidationReport::first_failure() const noexcept {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "pass " : "FAIL ") << c.name;
    if (!c.passed) {
      os << ": " << c.detail;
      if (c.counterexample) os << " (pair " << c.counterexample->first << "," << c.counterexample->second << ")";
    }
    os << '\n';
  }
  return os.str();
}

ValidationReport validate_cover(const Colouring& g, const CoverCertificate& cert,
                                const CoverShape& shape) {
  ValidationReport r;
  const int n = g.order();
  const VertexSet all = g.vertices();

  // Structural expectations of the shape.
  std::size_t min_paths = 0, max_paths = 0, parts_lo = 0, parts_hi = 0;
  bool wants_tree = false;
  bool wants_power = false;
  switch (shape.kind) {
    case ShapeKind::TwoPath:
      max_paths = 1;
      wants_power = true;
      parts_hi = 0;
      break;
    case ShapeKind::PathBipartite:
    case ShapeKind::PathBipartiteGap:
      max_paths = 1;
      parts_lo = parts_hi = 2;
      break;
    case ShapeKind::PathMultipartite:
      max_paths = static_cast<std::size_t>(shape.k);
      parts_lo = parts_hi = static_cast<std::size_t>(shape.k) + 1;
      break;
    case ShapeKind::PathsConnected:
      max_paths = static_cast<std::size_t>(shape.k);
      parts_lo = parts_hi = static_cast<std::size_t>(shape.k) + 2;
      break;
    case ShapeKind::TreeMultipartite:
      wants_tree = true;
      parts_lo = parts_hi = static_cast<std::size_t>(shape.k) + 1;
      break;
    case ShapeKind::WeakTree:
      wants_tree = true;
      parts_hi = 1;
      break;
    case ShapeKind::PowerPath:
      wants_power = true;
      break;
  }
  add(r, "shape-structure", [&]() -> std::string {
    if (auto p = count_problem("red path", cert.red_paths.size(), min_paths, max_paths); !p.empty()) return p;
    if (shape.kind != ShapeKind::PowerPath) {
      if (auto p = count_problem("part", cert.witness.parts.size(), parts_lo, parts_hi); !p.empty()) return p;
    }
    if (!wants_tree && cert.red_tree && !cert.red_tree->vertices.empty()) return "unexpected red tree";
    if (wants_tree && !cert.red_tree && n > 0) return "missing red tree";
    if (wants_power && !cert.power) return "missing power witness";
    if (!wants_power && cert.power && !cert.power->vertices.empty()) return "unexpected power witness";
    return {};
  }());

  // Per-witness validity.
  {
    std::string problem;
    std::optional<Edge> bad;
    for (const auto& p : cert.red_paths) {
      if (p.colour != Colour::Red) { problem = "path declared blue"; break; }
      if (!distinct_in_range(g, p.vertices)) { problem = "path vertices not distinct or out of range"; break; }
      if (auto v = kpower_violation(g, PowerWitness{p.vertices, 1, Colour::Red})) {
        problem = "consecutive path vertices joined by a blue edge";
        bad = v;
        break;
      }
    }
    add(r, "red-paths", problem, bad);
  }
  if (cert.red_tree) {
    std::optional<Edge> bad;
    std::string problem = tree_problem(g, *cert.red_tree, bad);
    if (problem.empty() && (shape.kind == ShapeKind::TreeMultipartite || shape.kind == ShapeKind::WeakTree) &&
        cert.red_tree->leaf_count() > shape.k) {
      problem = "tree has " + std::to_string(cert.red_tree->leaf_count()) + " leaves, bound " +
                std::to_string(shape.k);
    }
    add(r, "red-tree", problem, bad);
  }
  {
    std::string problem;
    std::optional<Edge> bad;
    VertexSet seen;
    for (VertexSet p : cert.witness.parts) {
      if (!p.subset_of(all)) { problem = "part vertex out of range"; break; }
      if (p.intersects(seen)) { problem = "parts overlap"; break; }
      seen |= p;
    }
    if (problem.empty() && shape.kind != ShapeKind::WeakTree) {
      bad = multipartite_violation(g, cert.witness);
      if (bad) problem = "red edge between two parts";
    }
    if (problem.empty()) {
      const auto& parts = cert.witness.parts;
      switch (shape.kind) {
        case ShapeKind::PathBipartite:
        case ShapeKind::PathMultipartite:
        case ShapeKind::PathsConnected:
        case ShapeKind::TreeMultipartite:
          if (!cert.witness.balanced()) problem = "parts not balanced";
          break;
        case ShapeKind::PathBipartiteGap:
          if (parts.size() == 2 && parts[1].size() - parts[0].size() != shape.gap) {
            problem = "part sizes " + std::to_string(parts[0].size()) + "," + std::to_string(parts[1].size()) +
                      " do not differ by " + std::to_string(shape.gap);
          }
          break;
        case ShapeKind::WeakTree: {
          VertexSet s = cert.witness.vertices();
          const int c = largest_red_component(g, s);
          if ((shape.k + 1) * c > s.size()) {
            problem = "c(S) = " + std::to_string(c) + " exceeds |S|/(k+1) with |S| = " + std::to_string(s.size());
          }
          break;
        }
        default:
          break;
      }
    }
    add(r, "blue-multipartite", problem, bad);
  }
  if (cert.power) {
    std::string problem;
    std::optional<Edge> bad;
    const auto& w = *cert.power;
    if (w.colour != Colour::Blue) {
      problem = "power witness declared red";
    } else if (!distinct_in_range(g, w.vertices)) {
      problem = "power vertices not distinct or out of range";
    } else if ((bad = kpower_violation(g, w))) {
      problem = "pair within distance " + std::to_string(w.exponent) + " is red";
    } else if (shape.kind == ShapeKind::TwoPath && w.exponent != 1) {
      problem = "blue path witness must have exponent 1";
    } else if (shape.kind == ShapeKind::PowerPath && (w.exponent != shape.k || w.order() < shape.n)) {
      problem = "power has exponent " + std::to_string(w.exponent) + " and order " + std::to_string(w.order()) +
                ", need exponent " + std::to_string(shape.k) + " and order >= " + std::to_string(shape.n);
    }
    add(r, "blue-power", problem, bad);
  }

  if (shape.is_cover()) {
    std::string problem;
    std::optional<Edge> bad;
    VertexSet covered;
    auto claim = [&](Vertex v) {
      if (!problem.empty()) return;
      if (v < 0 || v >= n) {
        problem = "vertex " + std::to_string(v) + " out of range";
      } else if (covered.contains(v)) {
        problem = "vertex " + std::to_string(v) + " used twice";
        bad = Edge{v, v};
      } else {
        covered.insert(v);
      }
    };
    for (const auto& p : cert.red_paths) {
      for (Vertex v : p.vertices) claim(v);
    }
    if (cert.red_tree) {
      for (Vertex v : cert.red_tree->vertices) claim(v);
    }
    for (VertexSet p : cert.witness.parts) {
      for (Vertex v : p) claim(v);
    }
    if (cert.power) {
      for (Vertex v : cert.power->vertices) claim(v);
    }
    add(r, "disjointness", problem, bad);
    std::string cov;
    if (problem.empty() && covered != all) {
      cov = "vertex " + std::to_string((all - covered).front()) + " not covered";
    }
    add(r, "coverage", cov);
  }
  return r;
}

}  // namespace pathcover
