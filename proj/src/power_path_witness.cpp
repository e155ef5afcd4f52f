#include <algorithm>
#include <string>

#include "pathcover/errors.hpp"
#include "pathcover/oracle.hpp"
#include "pathcover/ramsey.hpp"
#include "pathcover/validate.hpp"

namespace pathcover {
namespace {

std::string set_string(VertexSet s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? " " : "") + std::to_string(v);
  return out + "}";
}

std::vector<Vertex> lift(const std::vector<Vertex>& ids, const std::vector<Vertex>& local) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(ids[static_cast<std::size_t>(v)]);
  return out;
}

bool has_red_path(const Colouring& g, int n) {
  for (VertexSet c : red_components(g, g.vertices())) {
    if (c.size() >= n && find_path_of_order(g, Colour::Red, c, n)) return true;
  }
  return false;
}

/// Subsets of components by total order; can[j][s] means the first j
/// components have a sub-collection of total order s.
class SubsetSums {
public:
  explicit SubsetSums(const std::vector<VertexSet>& comps) : comps_(comps) {
    int total = 0;
    for (VertexSet c : comps) total += c.size();
    can_.assign(comps.size() + 1, std::vector<char>(static_cast<std::size_t>(total) + 1, 0));
    can_[0][0] = 1;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      const int s = comps[j].size();
      for (int x = 0; x <= total; ++x) {
        if (!can_[j][x]) continue;
        can_[j + 1][x] = 1;
        can_[j + 1][x + s] = 1;
      }
    }
  }
  int total() const { return static_cast<int>(can_.back().size()) - 1; }
  bool reachable(int s) const { return s >= 0 && s <= total() && can_.back()[s]; }
  VertexSet build(int s) const {
    VertexSet out;
    for (std::size_t j = comps_.size(); j-- > 0;) {
      if (can_[j][s]) continue;
      out |= comps_[j];
      s -= comps_[j].size();
    }
    return out;
  }

private:
  std::vector<VertexSet> comps_;
  std::vector<std::vector<char>> can_;
};

bool by_size_desc(VertexSet a, VertexSet b) {
  return a.size() != b.size() ? a.size() > b.size() : a.front() < b.front();
}

}  // namespace

ClaimSplit classify_claim(const Colouring& g, int n, int k) {
  if (k < 2) throw PreconditionError("classify_claim needs k >= 2");
  const int f = n / (k + 1);
  const int fc = (n + k) / (k + 1);
  std::vector<VertexSet> comps = red_components(g, g.vertices());
  std::sort(comps.begin(), comps.end(), by_size_desc);
  ClaimSplit out;
  const int hi = 2 * (n - 1) - (k - 2) * f;
  if (!comps.empty() && comps.front().size() >= hi + 1) {
    out.branch = 1;
    out.component = comps.front();
    return out;
  }
  const SubsetSums sums(comps);
  for (int s = n + f; s <= hi; ++s) {
    if (sums.reachable(s)) {
      out.branch = 2;
      out.separated = sums.build(s);
      return out;
    }
  }
  int best = std::min(n - 1 + f, sums.total());
  while (!sums.reachable(best)) --best;
  const VertexSet b = sums.build(best);
  std::vector<VertexSet> groups(static_cast<std::size_t>(k - 1));
  std::size_t next = 0;
  for (VertexSet c : comps) {
    if (c.intersects(b)) continue;
    groups[next] |= c;
    next = (next + 1) % groups.size();
  }
  out.parts = {b};
  out.parts.insert(out.parts.end(), groups.begin(), groups.end());
  std::stable_sort(out.parts.begin(), out.parts.end(), [](VertexSet x, VertexSet y) { return x.size() > y.size(); });
  for (VertexSet p : out.parts) {
    if (p.size() < fc) {
      std::string dump;
      for (VertexSet q : out.parts) dump += set_string(q) + " ";
      throw InternalError("no branch of the trichotomy applies: a part is below ceil(n/(k+1))", dump);
    }
  }
  out.branch = 3;
  return out;
}

CaseThreeLayout case_three_layout(const Colouring& g, int n, int k, const std::vector<VertexSet>& parts) {
  if (k < 2 || static_cast<int>(parts.size()) != k) throw PreconditionError("case three needs k >= 2 parts");
  const int f = n / (k + 1);
  for (int i = 0; i < k; ++i) {
    if (i > 0 && parts[i].size() > parts[i - 1].size()) throw PreconditionError("parts must be sorted by size");
    for (int j = i + 1; j < k; ++j) {
      for (Vertex v : parts[i]) {
        if (g.red_neighbours(v).intersects(parts[j])) throw PreconditionError("red edge between two parts");
      }
    }
  }
  CaseThreeLayout L;
  L.n = n;
  L.k = k;
  L.parts = parts;
  int budget = f;
  for (int i = 0; i < k && budget > 0 && parts[i].size() > n - 1; ++i) {
    const int x = std::min(parts[i].size() - n + 1, budget);
    L.x.push_back(x);
    budget -= x;
  }
  if (budget > 0) throw InternalError("case three: surpluses below floor(n/(k+1))");
  L.t = static_cast<int>(L.x.size());

  std::vector<VertexSet> used(static_cast<std::size_t>(k));
  for (int i = 0; i < L.t; ++i) {
    auto r = find_path_of_order(g, Colour::Blue, parts[i], 2 * L.x[i] + 1);
    if (!r) throw InternalError("case three: no blue path of order 2x+1 in part " + std::to_string(i + 1));
    L.r.push_back(r->vertices);
    used[i] = VertexSet::from(r->vertices);
  }
  L.a.assign(static_cast<std::size_t>(L.t), std::vector<std::vector<Vertex>>(static_cast<std::size_t>(k)));
  for (int i = 0; i < L.t; ++i) {
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      VertexSet free = parts[j] - used[j];
      for (int s = 0; s < L.x[i]; ++s) {
        if (free.empty()) throw InternalError("case three: part " + std::to_string(j + 1) + " has no room for transversals");
        const Vertex v = free.front();
        free.erase(v);
        used[j].insert(v);
        L.a[i][j].push_back(v);
      }
    }
  }
  if (n % (k + 1) != 0) {
    for (int j = 1; j < k; ++j) {
      const VertexSet free = parts[j] - used[j];
      if (free.empty()) throw InternalError("case three: no spare vertex in part " + std::to_string(j + 1));
      L.spare.push_back(free.front());
    }
  }
  return L;
}

PowerWitness assemble_case_three(const CaseThreeLayout& L) {
  const int k = L.k;
  std::vector<Vertex> seq;
  if (!L.spare.empty()) {
    seq.push_back(L.r[0][0]);
    seq.insert(seq.end(), L.spare.begin(), L.spare.end());
  }
  for (int i = 0; i < L.t; ++i) {
    for (int j = 1; j <= L.x[i]; ++j) {
      std::vector<Vertex> block(static_cast<std::size_t>(k + 1));
      block[0] = L.r[i][2 * j - 1];
      block[i + 1] = L.r[i][2 * j];
      for (int l = 0; l < k; ++l) {
        if (l != i) block[l + 1] = L.a[i][l][j - 1];
      }
      if (j == L.x[i] && i + 1 < L.t) block[i + 2] = L.r[i + 1][0];
      seq.insert(seq.end(), block.begin(), block.end());
    }
  }
  if (static_cast<int>(seq.size()) < L.n) throw InternalError("case three: assembled sequence shorter than n");
  PowerWitness out;
  out.exponent = k;
  out.colour = Colour::Blue;
  out.vertices.assign(seq.end() - L.n, seq.end());
  return out;
}

PowerWitness power_path_witness(const Colouring& g, int n, int k, PowerPathReport* report) {
  if (k < 1) throw PreconditionError("power_path_witness needs k >= 1");
  if (n < k + 1) throw PreconditionError("constraint violated: n >= k+1");
  const int f = n / (k + 1);
  if (g.order() != (n - 1) * k + f) throw PreconditionError("order must be (n-1)k + floor(n/(k+1))");
  if (has_red_path(g, n)) throw PreconditionError("red path present");
  PowerPathReport local;
  PowerPathReport& rep = report ? *report : local;
  PowerWitness out;
  out.exponent = k;
  out.colour = Colour::Blue;

  if (k == 1) {
    rep.route = PowerPathCase::BluePath;
    auto p = find_path_of_order(g, Colour::Blue, g.vertices(), n);
    if (!p) throw InternalError("no blue path of order n");
    out.vertices = p->vertices;
  } else {
    const ClaimSplit split = classify_claim(g, n, k);
    if (split.branch == 1) {
      rep.route = PowerPathCase::LargeComponent;
      const int size = split.component.size();
      int i = 0;
      while ((k - i) * (n - 1) - i * f + 1 > size) ++i;
      rep.band = i;
      const std::vector<Vertex> inside = split.component.to_vector();
      const RedOrBluePower res = power_in_connected(g.induced(inside), n, n - i * f, k - i);
      if (!res.blue) throw InternalError("red path inside the largest component");
      PowerWitness p{lift(inside, res.blue->vertices), k - i, Colour::Blue};
      if (i == 0) {
        out.vertices.assign(p.vertices.begin(), p.vertices.begin() + n);
      } else {
        const std::vector<Vertex> rest = (g.vertices() - split.component).to_vector();
        const PowerWitness q0 = power_cover_no_red_path(g.induced(rest), n, i * f + i - 1, i - 1);
        const PowerWitness q{lift(rest, q0.vertices), i - 1, Colour::Blue};
        out = combine_powers(g, p, q, n, k, i);
      }
    } else if (split.branch == 2) {
      rep.route = PowerPathCase::SeparatedSet;
      auto path = find_path_of_order(g, Colour::Blue, split.separated, 2 * f + 2);
      if (!path) throw InternalError("no blue path of order 2 floor(n/(k+1)) + 2 in the separated set");
      const PowerWitness p{path->vertices, 1, Colour::Blue};
      const std::vector<Vertex> rest = (g.vertices() - split.separated).to_vector();
      const PowerWitness q0 = power_cover_no_red_path(g.induced(rest), n, (k - 1) * f + k - 2, k - 2);
      const PowerWitness q{lift(rest, q0.vertices), k - 2, Colour::Blue};
      out = combine_powers(g, p, q, n, k, k - 1);
    } else {
      rep.route = PowerPathCase::Multipartition;
      out = assemble_case_three(case_three_layout(g, n, k, split.parts));
    }
  }
  if (out.order() != n || !is_blue_kpower(g, out)) {
    std::string dump = "seq:";
    for (Vertex v : out.vertices) dump += " " + std::to_string(v);
    throw InternalError("power_path_witness produced an invalid power", dump);
  }
  return out;
}

}  // namespace pathcover
