#include <algorithm>
#include <sstream>

#include "pathcover/errors.hpp"
#include "pathcover/partition.hpp"
#include "pathcover/validate.hpp"

namespace pathcover {
namespace {

struct Slot {
  VertexSet b;
  VertexSet n;
  int id = 0;
};

std::string dump(const std::vector<VertexSet>& a, const std::vector<Slot>& b) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) os << "A_" << i << '=' << a[i] << ' ';
  for (std::size_t i = 0; i < b.size(); ++i) {
    os << "B_" << i + 1 << '=' << b[i].b << " N_" << i + 1 << '=' << b[i].n << ' ';
  }
  return os.str();
}

// Empty string when conditions (i)-(vi) hold.
std::string condition_failure(const Colouring& g, const std::vector<VertexSet>& a, const std::vector<Slot>& b) {
  std::vector<VertexSet> sets(a.begin(), a.end());
  for (const auto& s : b) sets.push_back(s.b);
  VertexSet seen;
  for (VertexSet s : sets) {
    if (!s.subset_of(g.vertices())) return "condition (i): vertex out of range";
    if (s.intersects(seen)) return "condition (i): sets overlap";
    seen |= s;
  }
  for (VertexSet s : sets) {
    for (Vertex v : s) {
      if ((g.red_neighbours(v) & seen).subset_of(s)) continue;
      const Vertex w = ((g.red_neighbours(v) & seen) - s).front();
      return "condition (ii): red edge " + std::to_string(v) + "-" + std::to_string(w) + " between sets";
    }
  }
  int min_b = b.empty() ? 0 : b.front().b.size();
  for (const auto& s : b) min_b = std::min(min_b, s.b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::string idx = std::to_string(i + 1);
    for (VertexSet comp : red_components(g, b[i].b)) {
      if (!comp.intersects(b[i].n)) return "condition (iii): a red component of B_" + idx + " misses N_" + idx;
    }
    const int ai = a[i + 1].size();
    const int bi = b[i].b.size();
    if (a[0].size() < ai) return "condition (iv): |A_0| < |A_" + idx + "|";
    if (ai + bi < a[0].size()) return "condition (v): |A_" + idx + "| + |B_" + idx + "| < |A_0|";
    if (bi > 2 * min_b && ai + bi > a[0].size() + min_b) return "condition (vi) fails for i = " + idx;
  }
  return {};
}

}  // namespace

PathsPartite balanced_refine(const Colouring& g, const BalancingState& st, int* iterations) {
  const std::size_t k = st.B.size();
  if (st.A.size() != k + 1 || st.N.size() != k) {
    throw PreconditionError("balanced_refine: need k+1 sets A, k sets B and k sets N");
  }
  std::vector<VertexSet> a = st.A;
  std::vector<Slot> b(k);
  for (std::size_t i = 0; i < k; ++i) b[i] = Slot{st.B[i], st.N[i], static_cast<int>(i)};
  std::vector<std::vector<Vertex>> prefix(k);
  int rounds = 0;

  auto finish = [&](std::vector<VertexSet> parts) {
    PathsPartite out;
    for (auto& p : prefix) out.paths.push_back(PathSeq{std::move(p), Colour::Red});
    out.witness.parts = std::move(parts);
    if (iterations) *iterations = rounds;
    return out;
  };

  for (bool top = true;; top = false, ++rounds) {
    if (auto why = condition_failure(g, a, b); !why.empty()) {
      if (top) throw PreconditionError("balanced_refine: " + why + "; " + dump(a, b));
      throw InternalError("balanced_refine: " + why, dump(a, b));
    }
    std::stable_sort(a.begin() + 1, a.end(), [](VertexSet x, VertexSet y) { return x.size() > y.size(); });
    std::stable_sort(b.begin(), b.end(), [](const Slot& x, const Slot& y) { return x.b.size() < y.b.size(); });
    const int a0 = a[0].size();

    int j = -1;
    for (std::size_t i = 0; i < k; ++i) {
      if (a[i + 1].size() + b[i].b.size() > a0) j = static_cast<int>(i);
    }
    if (j < 0) {
      std::vector<VertexSet> parts{a[0]};
      for (std::size_t i = 0; i < k; ++i) parts.push_back(a[i + 1] | b[i].b);
      return finish(std::move(parts));
    }
    Slot& bj = b[j];
    if (bj.b.size() <= 1) {
      std::vector<VertexSet> parts{a[0]};
      for (std::size_t i = 0; i < k; ++i) {
        if (a[i + 1].size() + b[i].b.size() > a0) {
          prefix[b[i].id].push_back(b[i].b.front());
          parts.push_back(a[i + 1]);
        } else {
          parts.push_back(a[i + 1] | b[i].b);
        }
      }
      return finish(std::move(parts));
    }
    const auto comps = red_components(g, bj.b);
    if (comps.size() == 1) {
      const VertexSet start = bj.b & bj.n;
      if (start.empty()) throw InternalError("balanced_refine: B_j misses N_j", dump(a, b));
      const Vertex v = start.front();
      prefix[bj.id].push_back(v);
      bj.b.erase(v);
      bj.n = g.red_neighbours(v);
      continue;
    }
    VertexSet minus = comps.front();
    for (VertexSet c : comps) {
      if (c.size() < minus.size()) minus = c;
    }
    bj.b -= minus;
    if (a[j + 1].size() + minus.size() <= a0) {
      a[j + 1] |= minus;
    } else if (static_cast<std::size_t>(j) + 1 < k) {
      a[j + 2] |= minus;
    } else {
      const VertexSet old0 = a[0];
      a[0] = a[j + 1] | minus;
      a[j + 1] = old0;
    }
  }
}

}  // namespace pathcover
