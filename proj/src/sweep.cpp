#include "pathcover/sweep.hpp"

#include <omp.h>

#include "pathcover/errors.hpp"
#include "pathcover/partition.hpp"
#include "pathcover/validate.hpp"

namespace pathcover {
namespace {

std::uint64_t code_count(int n) {
  const int pairs = n * (n - 1) / 2;
  if (n < 0 || pairs > 40) throw PreconditionError("exhaustive sweep supports at most 9 vertices");
  return std::uint64_t{1} << pairs;
}

void note_failure(SweepResult& r, std::uint64_t code, int k, std::string why) {
  ++r.failures;
  if (!r.first_failure_code || code < *r.first_failure_code) {
    r.first_failure_code = code;
    r.first_failure_k = k;
    r.first_failure = std::move(why);
  }
}

void check_one(int n, std::uint64_t code, const std::vector<int>& ks, SweepEngine engine, SweepResult& r) {
  const Colouring g = Colouring::from_code(n, code);
  if (engine == SweepEngine::TreeMultipartite && !g.red_connected()) return;
  ++r.colourings;
  for (int k : ks) {
    ++r.runs;
    SearchStats stats;
    try {
      CoverCertificate cert;
      if (engine == SweepEngine::PathMultipartite) {
        cert = to_certificate(path_multipartite_cover(g, k, &stats), {ShapeKind::PathMultipartite, k, 0, 0});
      } else {
        cert = to_certificate(tree_multipartite_cover(g, k, &stats), k);
      }
      const auto report = validate_cover(g, cert);
      if (!report.ok()) {
        note_failure(r, code, k, report.summary());
      } else if (engine == SweepEngine::TreeMultipartite && stats.fixed_point &&
                 !violated_claims(g, *stats.fixed_point).empty()) {
        note_failure(r, code, k, "fixed point violates a claim");
      }
    } catch (const InternalError& e) {
      note_failure(r, code, k, e.what());
    }
    r.steps += static_cast<std::uint64_t>(stats.steps);
    r.potential_violations += static_cast<std::uint64_t>(stats.potential_violations);
  }
}

void merge(SweepResult& into, const SweepResult& part) {
  into.colourings += part.colourings;
  into.runs += part.runs;
  into.steps += part.steps;
  into.potential_violations += part.potential_violations;
  if (part.failures) {
    const std::uint64_t rest = part.failures - 1;
    note_failure(into, *part.first_failure_code, part.first_failure_k, part.first_failure);
    into.failures += rest;
  }
}

}  // namespace

SweepResult sweep_all_colourings(int n, const std::vector<int>& ks, SweepEngine engine) {
  const std::uint64_t total = code_count(n);
  SweepResult r;
  for (std::uint64_t code = 0; code < total; ++code) check_one(n, code, ks, engine, r);
  return r;
}

SweepResult sweep_all_colourings_parallel(int n, const std::vector<int>& ks, SweepEngine engine) {
  const std::uint64_t total = code_count(n);
  const auto total_i = static_cast<long long>(total);
  SweepResult r;
#pragma omp parallel
  {
    SweepResult local;
#pragma omp for schedule(dynamic, 4096) nowait
    for (long long code = 0; code < total_i; ++code) {
      check_one(n, static_cast<std::uint64_t>(code), ks, engine, local);
    }
#pragma omp critical(pathcover_sweep_merge)
    merge(r, local);
  }
  return r;
}

}  // namespace pathcover
