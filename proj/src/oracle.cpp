#include "pathcover/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "pathcover/errors.hpp"

namespace pathcover {

BudgetMeter::BudgetMeter(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {
  if (b.max_vertices <= 0 || b.max_nodes == 0 || b.max_seconds <= 0) {
    throw PreconditionError("search budget caps must be positive");
  }
}

void BudgetMeter::tick() {
  if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("search budget: node cap exceeded");
  if ((nodes_ & 0xFFF) == 0) {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (s > budget_.max_seconds) throw BudgetExceeded("search budget: time cap exceeded");
  }
}

void BudgetMeter::check_order(int n) const {
  if (n > budget_.max_vertices) {
    throw BudgetExceeded("search budget: " + std::to_string(n) + " vertices exceeds the vertex cap");
  }
}

namespace {

constexpr int kDpLimit = 20;

/// Vertices of `within` reachable from v by colour-c edges inside `within`.
VertexSet reach(const Colouring& g, Colour c, VertexSet within, Vertex v) {
  VertexSet seen = VertexSet::single(v);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex u : frontier) next |= g.neighbours(u, c) & within;
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

PathResult path_dp(const Colouring& g, Colour c, VertexSet within, BudgetMeter& meter) {
  const std::vector<Vertex> ids = within.to_vector();
  const int w = static_cast<int>(ids.size());
  if (w == 0) return {};
  std::vector<std::uint32_t> nb(w, 0);
  for (int i = 0; i < w; ++i) {
    for (int j = 0; j < w; ++j) {
      if (i != j && g.colour(ids[i], ids[j]) == c) nb[i] |= 1U << j;
    }
  }
  std::vector<std::uint32_t> ends(std::size_t{1} << w, 0);
  for (int i = 0; i < w; ++i) ends[1U << i] = 1U << i;
  std::uint32_t best = 1;
  for (std::uint32_t mask = 1; mask < (1U << w); ++mask) {
    meter.tick();
    std::uint32_t e = ends[mask];
    if (!e) continue;
    if (std::popcount(mask) > std::popcount(best)) best = mask;
    while (e) {
      const int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t out = nb[v] & ~mask;
      while (out) {
        const int u = std::countr_zero(out);
        out &= out - 1;
        ends[mask | (1U << u)] |= 1U << u;
      }
    }
  }
  PathResult r;
  r.order = std::popcount(best);
  r.path.colour = c;
  std::uint32_t mask = best;
  int v = std::countr_zero(ends[mask]);
  while (true) {
    r.path.vertices.push_back(ids[v]);
    const std::uint32_t rest = mask & ~(1U << v);
    if (!rest) break;
    const std::uint32_t prev = ends[rest] & nb[v];
    mask = rest;
    v = std::countr_zero(prev);
  }
  return r;
}

/// Depth-first extension with a reachability bound; stops once `target`
/// vertices are reached.
class PathDfs {
public:
  PathDfs(const Colouring& g, Colour c, VertexSet within, int target, BudgetMeter& meter)
      : g_(g), c_(c), within_(within), target_(target), meter_(meter) {}

  PathResult run() {
    for (Vertex s : within_) {
      if (best_.order >= target_) break;
      if (reach(g_, c_, within_, s).size() <= best_.order) continue;
      cur_ = {s};
      extend(within_ - VertexSet::single(s));
    }
    best_.path.colour = c_;
    return best_;
  }

private:
  void extend(VertexSet free) {
    meter_.tick();
    if (static_cast<int>(cur_.size()) > best_.order) {
      best_.order = static_cast<int>(cur_.size());
      best_.path.vertices = cur_;
      if (best_.order >= target_) return;
    }
    const Vertex last = cur_.back();
    const int bound = static_cast<int>(cur_.size()) + reach(g_, c_, free | VertexSet::single(last), last).size() - 1;
    if (bound <= best_.order) return;
    for (Vertex u : g_.neighbours(last, c_) & free) {
      cur_.push_back(u);
      extend(free - VertexSet::single(u));
      cur_.pop_back();
      if (best_.order >= target_) return;
    }
  }

  const Colouring& g_;
  Colour c_;
  VertexSet within_;
  int target_;
  BudgetMeter& meter_;
  std::vector<Vertex> cur_;
  PathResult best_;
};

}  // namespace

PathResult longest_path_exact(const Colouring& g, Colour c, VertexSet within, const SearchBudget& budget,
                              PathMethod method) {
  BudgetMeter meter(budget);
  meter.check_order(g.order());
  within &= g.vertices();
  if (method == PathMethod::Auto) method = within.size() <= kDpLimit ? PathMethod::SubsetDP : PathMethod::BranchBound;
  if (method == PathMethod::SubsetDP) {
    if (within.size() > kDpLimit) throw PreconditionError("subset DP path search supports at most 20 vertices");
    return path_dp(g, c, within, meter);
  }
  return PathDfs(g, c, within, within.size(), meter).run();
}

PathResult longest_red_path_exact(const Colouring& g, const SearchBudget& budget, PathMethod method) {
  return longest_path_exact(g, Colour::Red, g.vertices(), budget, method);
}

std::optional<PathSeq> find_path_of_order(const Colouring& g, Colour c, VertexSet within, int order,
                                          const SearchBudget& budget) {
  BudgetMeter meter(budget);
  meter.check_order(g.order());
  within &= g.vertices();
  if (order <= 0) return PathSeq{{}, c};
  if (order > within.size()) return std::nullopt;
  PathResult r = PathDfs(g, c, within, order, meter).run();
  if (r.order < order) return std::nullopt;
  r.path.vertices.resize(static_cast<std::size_t>(order));
  return r.path;
}

namespace {

class PowerDfs {
public:
  PowerDfs(const Colouring& g, int t, int target, BudgetMeter& meter) : g_(g), t_(t), target_(target), meter_(meter) {}

  PowerResult run() {
    for (Vertex s : g_.vertices()) {
      if (best_.order >= target_) break;
      cur_ = {s};
      extend(g_.vertices() - VertexSet::single(s));
    }
    best_.power.exponent = t_;
    best_.power.colour = Colour::Blue;
    return best_;
  }

private:
  void extend(VertexSet free) {
    meter_.tick();
    const int len = static_cast<int>(cur_.size());
    if (len > best_.order) {
      best_.order = len;
      best_.power.vertices = cur_;
      if (best_.order >= target_) return;
    }
    const Vertex last = cur_.back();
    if (len + reach(g_, Colour::Blue, free | VertexSet::single(last), last).size() - 1 <= best_.order) return;
    VertexSet cand = free;
    for (int d = 1; d <= std::min(t_, len); ++d) cand &= g_.blue_neighbours(cur_[len - d]);
    for (Vertex u : cand) {
      cur_.push_back(u);
      extend(free - VertexSet::single(u));
      cur_.pop_back();
      if (best_.order >= target_) return;
    }
  }

  const Colouring& g_;
  int t_;
  int target_;
  BudgetMeter& meter_;
  std::vector<Vertex> cur_;
  PowerResult best_;
};

PowerResult power_search(const Colouring& g, int t, int target, const SearchBudget& budget) {
  if (t < 0) throw PreconditionError("power exponent must be non-negative");
  BudgetMeter meter(budget);
  meter.check_order(g.order());
  if (t == 0 || g.order() <= 1) {
    PowerResult r;
    r.order = std::min(g.order(), target);
    r.power.exponent = t;
    for (int v = 0; v < r.order; ++v) r.power.vertices.push_back(v);
    return r;
  }
  return PowerDfs(g, t, target, meter).run();
}

class PartiteSearch {
public:
  PartiteSearch(const Colouring& g, std::vector<int> sizes, BudgetMeter& meter)
      : g_(g), sizes_(std::move(sizes)), meter_(meter) {
    suffix_.assign(sizes_.size() + 1, 0);
    for (std::size_t i = sizes_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + sizes_[i];
  }

  std::optional<PartiteWitness> run() {
    if (next_part(0, g_.vertices(), -1)) return PartiteWitness{parts_};
    return std::nullopt;
  }

private:
  bool next_part(std::size_t idx, VertexSet avail, Vertex prev_first) {
    if (idx == sizes_.size()) return true;
    if (avail.size() < suffix_[idx]) return false;
    const bool tied = idx > 0 && sizes_[idx] == sizes_[idx - 1];
    VertexSet start = avail;
    if (tied) start &= VertexSet(~((std::uint64_t{2} << prev_first) - 1));
    parts_.emplace_back();
    const bool ok = grow(idx, start, avail);
    if (!ok) parts_.pop_back();
    return ok;
  }

  /// Adds vertices from `cand` (ascending) to the current part; `pool` holds
  /// the vertices left for later parts, blue to everything chosen so far.
  bool grow(std::size_t idx, VertexSet cand, VertexSet pool) {
    meter_.tick();
    const int need = sizes_[idx] - parts_[idx].size();
    if (need == 0) return next_part(idx + 1, pool, parts_[idx].front());
    for (Vertex v : cand) {
      VertexSet rest = cand & VertexSet(~((std::uint64_t{2} << v) - 1));
      if (rest.size() < need - 1) break;
      const VertexSet next_pool = (pool & g_.blue_neighbours(v)) - VertexSet::single(v);
      if (next_pool.size() < suffix_[idx + 1]) continue;
      parts_[idx].insert(v);
      if (grow(idx, rest, next_pool)) return true;
      parts_[idx].erase(v);
    }
    return false;
  }

  const Colouring& g_;
  std::vector<int> sizes_;
  std::vector<int> suffix_;
  BudgetMeter& meter_;
  std::vector<VertexSet> parts_;
};

}  // namespace

PowerResult largest_blue_power_exact(const Colouring& g, int t, const SearchBudget& budget) {
  return power_search(g, t, g.order(), budget);
}

std::optional<PowerWitness> find_blue_power(const Colouring& g, int t, int m, const SearchBudget& budget) {
  if (m > g.order()) return std::nullopt;
  PowerResult r = power_search(g, t, m, budget);
  if (r.order < m) return std::nullopt;
  r.power.vertices.resize(static_cast<std::size_t>(std::max(m, 0)));
  return r.power;
}

std::optional<PartiteWitness> find_blue_multipartite(const Colouring& g, std::vector<int> sizes,
                                                     const SearchBudget& budget) {
  BudgetMeter meter(budget);
  meter.check_order(g.order());
  for (int s : sizes) {
    if (s < 0) throw PreconditionError("multipartite part sizes must be non-negative");
  }
  std::erase(sizes, 0);
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  if (std::accumulate(sizes.begin(), sizes.end(), 0) > g.order()) return std::nullopt;
  return PartiteSearch(g, std::move(sizes), meter).run();
}

std::optional<PartiteWitness> has_blue_balanced_multipartite(const Colouring& g, int m, int t,
                                                             const SearchBudget& budget) {
  if (m < 0 || t < 0) throw PreconditionError("multipartite parameters must be non-negative");
  return find_blue_multipartite(g, std::vector<int>(static_cast<std::size_t>(t), m), budget);
}

namespace {

/// Stable colour refinement on the red graph; returns canonical cell ranks.
std::vector<int> refine(const Colouring& g) {
  const int n = g.order();
  std::vector<int> rank(n, 0);
  for (int round = 0; round <= n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{rank[v]};
      std::vector<int> nb;
      for (Vertex u : g.red_neighbours(v)) nb.push_back(rank[u]);
      std::sort(nb.begin(), nb.end());
      s.push_back(static_cast<int>(nb.size()));
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<int>> keys;
    for (const auto& [s, v] : sig) keys.push_back(s);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    }
    const bool stable = std::set<int>(next.begin(), next.end()).size() == std::set<int>(rank.begin(), rank.end()).size();
    rank = std::move(next);
    if (stable) break;
  }
  return rank;
}

std::uint64_t code_of(const Colouring& g, const std::vector<Vertex>& at) {
  const int n = g.order();
  std::uint64_t code = 0;
  int e = 0;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q, ++e) {
      if (g.is_red(at[p], at[q])) code |= std::uint64_t{1} << e;
    }
  }
  return code;
}

}  // namespace

std::uint64_t canonical_code(const Colouring& g) {
  const int n = g.order();
  if (n * (n - 1) / 2 > 64) throw PreconditionError("canonical code supports at most 11 vertices");
  const std::vector<int> rank = refine(g);
  std::vector<Vertex> at(n);
  std::iota(at.begin(), at.end(), 0);
  std::sort(at.begin(), at.end(), [&](Vertex a, Vertex b) { return std::pair(rank[a], a) < std::pair(rank[b], b); });
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && rank[at[j]] == rank[at[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  auto walk = [&](auto&& self, std::size_t c) -> void {
    if (c == cells.size()) {
      best = std::min(best, code_of(g, at));
      return;
    }
    auto first = at.begin() + cells[c].first;
    auto last = at.begin() + cells[c].second;
    std::sort(first, last);
    do {
      self(self, c + 1);
    } while (std::next_permutation(first, last));
  };
  walk(walk, 0);
  return best;
}

}  // namespace pathcover
