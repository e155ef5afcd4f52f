#include "pathcover/colouring.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "pathcover/errors.hpp"

namespace pathcover {

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::ostream& operator<<(std::ostream& os, VertexSet s) {
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

Colouring::Colouring(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw PreconditionError("vertex count " + std::to_string(n) + " outside [0, 64]");
  }
  red_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Colouring Colouring::all(int n, Colour c) {
  Colouring g(n);
  if (c == Colour::Red) {
    for (Vertex v = 0; v < n; ++v) g.red_[v] = VertexSet::range(n) - VertexSet::single(v);
  }
  return g;
}

Colouring Colouring::from_red_edges(int n, std::span<const std::pair<Vertex, Vertex>> red) {
  Colouring g(n);
  for (auto [u, v] : red) g.set(u, v, Colour::Red);
  return g;
}

Colouring Colouring::from_code(int n, std::uint64_t code) {
  Colouring g(n);
  int e = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++e) {
      if ((code >> e) & 1U) {
        g.red_[u].insert(v);
        g.red_[v].insert(u);
      }
    }
  }
  return g;
}

void Colouring::set(Vertex u, Vertex v, Colour c) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw PreconditionError("invalid pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  if (c == Colour::Red) {
    red_[u].insert(v);
    red_[v].insert(u);
  } else {
    red_[u].erase(v);
    red_[v].erase(u);
  }
}

Colouring Colouring::swapped() const {
  Colouring g(n_);
  for (Vertex v = 0; v < n_; ++v) g.red_[v] = blue_neighbours(v);
  return g;
}

Colouring Colouring::induced(std::span<const Vertex> keep) const {
  Colouring g(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (is_red(keep[i], keep[j])) {
        g.red_[i].insert(static_cast<Vertex>(j));
        g.red_[j].insert(static_cast<Vertex>(i));
      }
    }
  }
  return g;
}

Colouring Colouring::relabelled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw PreconditionError("permutation size mismatch");
  return induced(perm);
}

Colouring Colouring::with_apex(Colour c) const {
  Colouring g(n_ + 1);
  for (Vertex v = 0; v < n_; ++v) g.red_[v] = red_[v];
  if (c == Colour::Red) {
    for (Vertex v = 0; v < n_; ++v) g.red_[v].insert(n_);
    g.red_[n_] = vertices();
  }
  return g;
}

bool Colouring::red_connected() const {
  if (n_ <= 1) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= red_[v];
    frontier = next - seen;
    seen |= next;
  }
  return seen == vertices();
}

std::string serialize(const Colouring& g) {
  const int n = g.order();
  std::string out = "n " + std::to_string(n) + "\n";
  out.reserve(out.size() + static_cast<std::size_t>(n) * (n - 1) / 2 + 1);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) out.push_back(g.is_red(u, v) ? 'R' : 'B');
  }
  out.push_back('\n');
  return out;
}

Colouring parse_colouring(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header) || header.rfind("n ", 0) != 0) {
    throw PreconditionError("colouring file: first line must be 'n <decimal>'");
  }
  const std::string digits = header.substr(2);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw PreconditionError("colouring file: bad vertex count '" + digits + "'");
  }
  const int n = std::stoi(digits);
  std::string pairs;
  if (!std::getline(in, pairs)) {
    throw PreconditionError("colouring file: missing pair line");
  }
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (pairs.size() != expected) {
    throw PreconditionError("colouring file: expected " + std::to_string(expected) +
                            " pair colours, got " + std::to_string(pairs.size()));
  }
  Colouring g(n);
  std::size_t e = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++e) {
      const char ch = pairs[e];
      if (ch == 'R') {
        g.set(u, v, Colour::Red);
      } else if (ch != 'B') {
        throw PreconditionError(std::string("colouring file: invalid colour character '") + ch + "'");
      }
    }
  }
  std::string rest;
  while (std::getline(in, rest)) {
    if (!rest.empty()) throw PreconditionError("colouring file: trailing content");
  }
  return g;
}

Colouring read_colouring(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open colouring file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_colouring(buf.str());
}

void write_colouring(const std::string& path, const Colouring& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write colouring file '" + path + "'");
  out << serialize(g);
}

}  // namespace pathcover
