#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pathcover {

enum class SweepEngine {
  PathMultipartite,  ///< every colouring, cover checked as k paths + (k+1) parts
  TreeMultipartite,  ///< red-connected colourings only, tree + (k+1) parts, claims checked
};

struct SweepResult {
  std::uint64_t colourings = 0;  ///< colourings the engine ran on (per k)
  std::uint64_t runs = 0;
  std::uint64_t failures = 0;    ///< invalid certificates or engine errors
  std::uint64_t potential_violations = 0;
  std::uint64_t steps = 0;
  std::optional<std::uint64_t> first_failure_code;  ///< least failing colouring code
  int first_failure_k = 0;
  std::string first_failure;
};

/// Runs the engine on every 2-colouring of K_n (codes 0 .. 2^(n(n-1)/2) - 1)
/// for each k and validates every certificate.
SweepResult sweep_all_colourings(int n, const std::vector<int>& ks, SweepEngine engine);
/// Same sweep with the code range split across OpenMP threads. Results are
/// identical to the serial sweep.
SweepResult sweep_all_colourings_parallel(int n, const std::vector<int>& ks, SweepEngine engine);

}  // namespace pathcover
