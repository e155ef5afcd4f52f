#include "pathcover/ramsey_search.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>

#include "pathcover/errors.hpp"

namespace pathcover {

std::string RamseyTarget::describe() const {
  const std::string c = colour == Colour::Red ? "red" : "blue";
  if (kind == Kind::Multipartite) return c + " K_{" + std::to_string(m) + "x" + std::to_string(t) + "}";
  if (t == 1) return c + " P_" + std::to_string(m);
  return c + " P_" + std::to_string(m) + "^" + std::to_string(t);
}

bool contains_target(const Colouring& g, const RamseyTarget& target, const SearchBudget& budget) {
  if (target.m < 0 || target.t < 0) throw PreconditionError("target parameters must be non-negative");
  if (target.kind == RamseyTarget::Kind::Power && target.t == 1) {
    return longest_path_exact(g, target.colour, g.vertices(), budget).order >= target.m;
  }
  const Colouring h = target.colour == Colour::Blue ? g : g.swapped();
  if (target.kind == RamseyTarget::Kind::Power) return find_blue_power(h, target.t, target.m, budget).has_value();
  return has_blue_balanced_multipartite(h, target.m, target.t, budget).has_value();
}

namespace {

class Clock {
public:
  explicit Clock(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}
  void charge(std::uint64_t nodes) const {
    if (nodes > budget_.max_nodes) throw BudgetExceeded("search budget: node cap exceeded");
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (s > budget_.max_seconds) throw BudgetExceeded("search budget: time cap exceeded");
  }

private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
};

bool target_free(const Colouring& g, const RamseyTarget& a, const RamseyTarget& b, const SearchBudget& budget) {
  return !contains_target(g, a, budget) && !contains_target(g, b, budget);
}

/// Runs body(i, local) for i in [0, count) on `jobs` threads; rethrows the
/// first exception after the loop.
template <class Local, class Body, class Merge>
void parallel_range(std::int64_t count, int jobs, Body body, Merge merge) {
  std::exception_ptr error;
#pragma omp parallel num_threads(jobs)
  {
    Local local;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        body(i, local);
      } catch (...) {
#pragma omp critical(pathcover_ramsey_error)
        if (!error) error = std::current_exception();
      }
    }
#pragma omp critical(pathcover_ramsey_merge)
    merge(local);
  }
  if (error) std::rethrow_exception(error);
}

RamseySearchResult search_pruned(const RamseyTarget& a, const RamseyTarget& b, const RamseySearchOptions& o) {
  RamseySearchResult r;
  const Clock clock(o.budget);
  std::uint64_t examined = 0;
  std::vector<std::uint64_t> level;
  const Colouring k1(1);
  if (!target_free(k1, a, b, o.budget)) {
    r.value = 1;
    return r;
  }
  level.push_back(0);
  r.free_counts.push_back(1);
  r.extremal = k1;
  for (int n = 2; n <= o.max_n; ++n) {
    if (n * (n - 1) / 2 > 64) throw PreconditionError("pruned Ramsey search supports at most 11 vertices");
    const std::uint64_t ext = std::uint64_t{1} << (n - 1);
    const auto count = static_cast<std::int64_t>(level.size() * ext);
    std::vector<std::uint64_t> next;
    parallel_range<std::vector<std::uint64_t>>(
        count, o.jobs,
        [&](std::int64_t i, std::vector<std::uint64_t>& local) {
          const std::uint64_t parent = level[static_cast<std::size_t>(i) / ext];
          const std::uint64_t mask = static_cast<std::uint64_t>(i) % ext;
          Colouring g = Colouring::from_code(n - 1, parent).with_apex(Colour::Blue);
          for (int v = 0; v < n - 1; ++v) {
            if ((mask >> v) & 1U) g.set(v, n - 1, Colour::Red);
          }
          if (target_free(g, a, b, o.budget)) local.push_back(canonical_code(g));
        },
        [&](std::vector<std::uint64_t>& local) { next.insert(next.end(), local.begin(), local.end()); });
    examined += static_cast<std::uint64_t>(count);
    clock.charge(examined);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.empty()) {
      r.value = n;
      return r;
    }
    r.free_counts.push_back(next.size());
    r.extremal = Colouring::from_code(n, next.front());
    level = std::move(next);
  }
  return r;
}

RamseySearchResult search_brute(const RamseyTarget& a, const RamseyTarget& b, const RamseySearchOptions& o) {
  RamseySearchResult r;
  const Clock clock(o.budget);
  std::uint64_t examined = 0;
  for (int n = 1; n <= o.max_n; ++n) {
    const int pairs = n * (n - 1) / 2;
    if (pairs > 40) throw PreconditionError("unpruned Ramsey search supports at most 9 vertices");
    const auto total = static_cast<std::int64_t>(std::uint64_t{1} << pairs);
    examined += static_cast<std::uint64_t>(total);
    clock.charge(examined);
    struct Tally {
      std::uint64_t free = 0;
      std::uint64_t least = ~std::uint64_t{0};
    };
    Tally all;
    parallel_range<Tally>(
        total, o.jobs,
        [&](std::int64_t code, Tally& t) {
          const auto c = static_cast<std::uint64_t>(code);
          if (target_free(Colouring::from_code(n, c), a, b, o.budget)) {
            ++t.free;
            t.least = std::min(t.least, c);
          }
        },
        [&](Tally& t) {
          all.free += t.free;
          all.least = std::min(all.least, t.least);
        });
    if (all.free == 0) {
      r.value = n;
      return r;
    }
    r.free_counts.push_back(all.free);
    r.extremal = Colouring::from_code(n, all.least);
  }
  return r;
}

}  // namespace

RamseySearchResult ramsey_exhaustive(const RamseyTarget& first, const RamseyTarget& second,
                                     const RamseySearchOptions& options) {
  if (options.max_n < 1) throw PreconditionError("max-n must be at least 1");
  if (options.jobs < 1) throw PreconditionError("jobs must be at least 1");
  return options.prune ? search_pruned(first, second, options) : search_brute(first, second, options);
}

}  // namespace pathcover
