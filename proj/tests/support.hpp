#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "pathcover/colouring.hpp"

namespace pathcover::testing {

inline std::uint64_t pair_count(int n) { return static_cast<std::uint64_t>(n) * (n - 1) / 2; }

template <class F>
void for_each_colouring(int n, F&& f) {
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t code = 0; code < total; ++code) f(Colouring::from_code(n, code));
}

inline Colouring random_colouring(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution red(p);
  Colouring g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (red(rng)) g.set(u, v, Colour::Red);
    }
  }
  return g;
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace pathcover::testing
