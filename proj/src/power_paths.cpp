#include <string>

#include "pathcover/errors.hpp"
#include "pathcover/partition.hpp"
#include "pathcover/ramsey.hpp"
#include "pathcover/validate.hpp"

namespace pathcover {
namespace {

std::string seq_string(const std::vector<Vertex>& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

bool blue_power_with(const Colouring& g, const PowerWitness& w, int exponent) {
  PowerWitness c = w;
  c.exponent = exponent;
  c.colour = Colour::Blue;
  return is_blue_kpower(g, c);
}

}  // namespace

PowerWitness combine_powers(const Colouring& g, const PowerWitness& p, const PowerWitness& q, int n, int k, int i) {
  if (k < 1 || i < 1 || i > k) throw PreconditionError("combine_powers needs 1 <= i <= k");
  if (n < 1) throw PreconditionError("combine_powers needs n >= 1");
  if (!blue_power_with(g, p, k - i)) throw PreconditionError("p is not a blue (k-i)-th power of a path");
  if (!blue_power_with(g, q, i - 1)) throw PreconditionError("q is not a blue (i-1)-th power of a path");
  const VertexSet ps = VertexSet::from(p.vertices);
  const VertexSet qs = VertexSet::from(q.vertices);
  if (ps.intersects(qs)) throw PreconditionError("condition (i): p and q share a vertex");
  for (Vertex a : ps) {
    if (!(g.red_neighbours(a) & qs).empty()) throw PreconditionError("condition (i): red edge between p and q");
  }
  const int f = n / (k + 1);
  const int width_p = k - i + 1;
  if (p.order() < width_p * f) throw PreconditionError("condition (ii): |p| < (k-i+1) floor(n/(k+1))");
  if (q.order() < i * f) throw PreconditionError("condition (iii): |q| < i floor(n/(k+1))");
  if (p.order() + q.order() < n) throw PreconditionError("condition (iv): order deficit, |p| + |q| < n");

  // Slot j of the periodic pattern takes from p iff j mod (k+1) < k-i+1; the
  // result is the window of length n starting at the first phase that fits.
  for (int phase = 0; phase <= k; ++phase) {
    int from_p = 0;
    for (int j = phase; j < phase + n; ++j) from_p += (j % (k + 1)) < width_p;
    if (from_p > p.order() || n - from_p > q.order()) continue;
    PowerWitness out;
    out.exponent = k;
    out.colour = Colour::Blue;
    std::size_t pi = 0, qi = 0;
    for (int j = phase; j < phase + n; ++j) {
      out.vertices.push_back((j % (k + 1)) < width_p ? p.vertices[pi++] : q.vertices[qi++]);
    }
    if (!is_blue_kpower(g, out)) {
      throw InternalError("combine_powers produced an invalid power", "seq: " + seq_string(out.vertices));
    }
    return out;
  }
  throw PreconditionError("remainder split: no interleaving of |p| = " + std::to_string(p.order()) +
                          " and |q| = " + std::to_string(q.order()) + " has order n");
}

PowerWitness power_cover_no_red_path(const Colouring& g, int n, int m, int t) {
  if (n < 2 || m < 0 || t < 0) throw PreconditionError("power_cover_no_red_path needs n >= 2, m >= 0, t >= 0");
  if (g.order() < (n - 2) * t + m) throw PreconditionError("order below (n-2)t + m");
  PowerWitness out;
  out.exponent = t;
  out.colour = Colour::Blue;
  if (t == 0) {
    for (Vertex v = 0; v < m; ++v) out.vertices.push_back(v);
    return out;
  }
  const PathsPartite cover = path_multipartite_cover(g, t);
  const PowerWitness body = multipartite_to_power(cover.witness);
  const VertexSet body_set = VertexSet::from(body.vertices);
  VertexSet ends;
  for (const PathSeq& p : cover.paths) {
    if (p.order() >= n) throw PreconditionError("red path present: cover path of order " + std::to_string(p.order()));
    if (p.order() == n - 1) {
      const Vertex v = p.vertices.front();
      if (!(g.red_neighbours(v) & (body_set | ends)).empty()) {
        throw PreconditionError("red path present: path end has a red edge to the blue part");
      }
      ends.insert(v);
    }
  }
  out.vertices = ends.to_vector();
  out.vertices.insert(out.vertices.end(), body.vertices.begin(), body.vertices.end());
  if (out.order() < m || !is_blue_kpower(g, out)) {
    throw InternalError("power_cover_no_red_path: extended power invalid or short", "seq: " + seq_string(out.vertices));
  }
  return out;
}

RedOrBluePower power_in_connected(const Colouring& g, int n, int m, int t) {
  if (t < 2 || n < 1 || m < 0) throw PreconditionError("power_in_connected needs t >= 2, n >= 1, m >= 0");
  if (g.order() < (n - 1) * (t - 1) + m) throw PreconditionError("order below (n-1)(t-1) + m");
  if (!g.red_connected()) throw PreconditionError("red colour class is not connected");
  const PathsPartite cover = paths_multipartite_connected(g, t - 1);
  RedOrBluePower out;
  for (const PathSeq& p : cover.paths) {
    if (p.order() >= n) {
      out.red = p;
      return out;
    }
  }
  PowerWitness w = multipartite_to_power(cover.witness);
  w.exponent = t;
  if (w.order() < m || !is_blue_kpower(g, w)) {
    throw InternalError("power_in_connected: blue part short or invalid", "seq: " + seq_string(w.vertices));
  }
  out.blue = std::move(w);
  return out;
}

}  // namespace pathcover
