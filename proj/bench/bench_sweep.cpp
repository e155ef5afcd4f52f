// Serial vs OpenMP timing of the exhaustive soundness sweeps.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "pathcover/sweep.hpp"

using namespace pathcover;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, int n, const std::vector<int>& ks, SweepEngine engine) {
  SweepResult serial, parallel;
  const double ts = seconds([&] { serial = sweep_all_colourings(n, ks, engine); });
  const double tp = seconds([&] { parallel = sweep_all_colourings_parallel(n, ks, engine); });
  std::printf("%-18s n=%d runs=%llu serial=%.3fs parallel=%.3fs threads=%d speedup=%.2f agree=%s\n", name, n,
              static_cast<unsigned long long>(serial.runs), ts, tp, omp_get_max_threads(), ts / tp,
              serial.runs == parallel.runs && serial.failures == parallel.failures &&
                      serial.steps == parallel.steps && serial.first_failure_code == parallel.first_failure_code
                  ? "yes"
                  : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 6;
  report("path-multipartite", n, {1, 2, 3}, SweepEngine::PathMultipartite);
  report("tree-multipartite", n, {2, 3}, SweepEngine::TreeMultipartite);
  return 0;
}
