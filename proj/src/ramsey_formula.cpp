#include <array>
#include <utility>

#include "pathcover/errors.hpp"
#include "pathcover/ramsey.hpp"

namespace pathcover {
namespace {

constexpr std::array<std::pair<RamseyFamily, const char*>, 5> kFamilyNames{{
    {RamseyFamily::PathPath, "path-path"},
    {RamseyFamily::PathMultipartite, "path-multipartite"},
    {RamseyFamily::PathPower, "path-power"},
    {RamseyFamily::Haggkvist, "haggkvist"},
    {RamseyFamily::Burr, "burr"},
}};

void require(bool ok, const char* constraint) {
  if (!ok) throw PreconditionError(std::string("constraint violated: ") + constraint);
}

void check(const RamseyFormulaQuery& q) {
  switch (q.family) {
    case RamseyFamily::PathPath:
      require(q.m >= 2, "m >= 2");
      require(q.m <= q.n, "m <= n");
      break;
    case RamseyFamily::PathMultipartite:
      require(q.n >= 2, "n >= 2");
      require(q.m >= 1, "m >= 1");
      require(q.t >= 1, "t >= 1");
      require((q.m - 1) % (q.n - 1) == 0, "m = 1 mod n-1");
      break;
    case RamseyFamily::PathPower:
      require(q.k >= 1, "k >= 1");
      require(q.n >= q.k + 1, "n >= k+1");
      break;
    case RamseyFamily::Haggkvist:
      require(q.n >= 2, "n >= 2");
      require(q.m >= 1 && q.l >= 1, "m, l >= 1");
      require((q.m - 1) % (q.n - 1) == 0, "m = 1 mod n-1");
      require((q.l - 1) % (q.n - 1) == 0, "l = 1 mod n-1");
      break;
    case RamseyFamily::Burr:
      require(q.host_order >= 1, "|G| >= 1");
      require(q.chi >= 1, "chi(H) >= 1");
      require(q.sigma >= 1, "sigma(H) >= 1");
      require(q.host_order >= q.sigma, "|G| >= sigma(H)");
      break;
  }
}

}  // namespace

std::string to_string(RamseyFamily f) {
  for (const auto& [k, name] : kFamilyNames) {
    if (k == f) return name;
  }
  return "unknown";
}

RamseyFamily ramsey_family_from_string(const std::string& name) {
  for (const auto& [k, s] : kFamilyNames) {
    if (name == s) return k;
  }
  throw PreconditionError("unknown family: " + name);
}

RamseyValue ramsey_formula(const RamseyFormulaQuery& q) {
  check(q);
  const long n = q.n, m = q.m, l = q.l, t = q.t, k = q.k;
  switch (q.family) {
    case RamseyFamily::PathPath:
      return {n + m / 2 - 1, false};
    case RamseyFamily::PathMultipartite:
      return {(t - 1) * (n - 1) + t * (m - 1) + 1, false};
    case RamseyFamily::PathPower:
      return {(n - 1) * k + n / (k + 1), false};
    case RamseyFamily::Haggkvist:
      return {n + m + l - 2, false};
    case RamseyFamily::Burr:
      return {static_cast<long>(q.chi - 1) * (q.host_order - 1) + q.sigma, true};
  }
  throw PreconditionError("unknown family");
}

int extremal_order(const RamseyFormulaQuery& q) {
  return static_cast<int>(ramsey_formula(q).value - 1);
}

Colouring red_cliques(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) {
    require(s >= 0, "clique sizes >= 0");
    n += s;
  }
  require(n <= kMaxVertices, "order <= 64");
  Colouring g(n);
  int base = 0;
  for (int s : sizes) {
    for (int u = base; u < base + s; ++u) {
      for (int v = u + 1; v < base + s; ++v) g.set(u, v, Colour::Red);
    }
    base += s;
  }
  return g;
}

Colouring extremal_construction(const RamseyFormulaQuery& q) {
  check(q);
  std::vector<int> sizes;
  switch (q.family) {
    case RamseyFamily::PathPath:
      throw PreconditionError("no clique construction for path-path");
    case RamseyFamily::PathMultipartite:
      sizes.assign(static_cast<std::size_t>((q.t - 1) + q.t * (q.m - 1) / (q.n - 1)), q.n - 1);
      break;
    case RamseyFamily::PathPower:
      sizes.assign(static_cast<std::size_t>(q.k), q.n - 1);
      sizes.push_back(q.n / (q.k + 1) - 1);
      break;
    case RamseyFamily::Haggkvist:
      sizes.assign(static_cast<std::size_t>(1 + (q.m + q.l - 2) / (q.n - 1)), q.n - 1);
      break;
    case RamseyFamily::Burr:
      sizes.assign(static_cast<std::size_t>(q.chi - 1), q.host_order - 1);
      sizes.push_back(q.sigma - 1);
      break;
  }
  return red_cliques(sizes);
}

}  // namespace pathcover
