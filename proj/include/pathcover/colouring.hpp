#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pathcover {

using Vertex = int;

enum class Colour : std::uint8_t { Red, Blue };

constexpr Colour opposite(Colour c) noexcept {
  return c == Colour::Red ? Colour::Blue : Colour::Red;
}

inline constexpr int kMaxVertices = 64;

/// Set of vertex ids in [0, 64), stored as a bitmask. Iteration is in
/// ascending id order.
class VertexSet {
public:
  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) noexcept {
    for (Vertex v : vs) insert(v);
  }
  static VertexSet from(std::span<const Vertex> vs) noexcept {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }
  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) noexcept {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr VertexSet single(Vertex v) noexcept { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(Vertex v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) noexcept { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  /// Smallest element; undefined on the empty set.
  constexpr Vertex front() const noexcept { return std::countr_zero(bits_); }
  constexpr bool intersects(VertexSet o) const noexcept { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(VertexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }

  constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const noexcept = default;
  /// Orders sets by their bitmask, which for equal sizes is not the
  /// lexicographic order of sorted id lists; only used for tie-breaking.
  constexpr bool operator<(VertexSet o) const noexcept { return bits_ < o.bits_; }

  class iterator {
  public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t b) noexcept : b_(b) {}
    constexpr Vertex operator*() const noexcept { return std::countr_zero(b_); }
    constexpr iterator& operator++() noexcept { b_ &= b_ - 1; return *this; }
    constexpr iterator operator++(int) noexcept { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const noexcept = default;

  private:
    std::uint64_t b_ = 0;
  };
  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  std::vector<Vertex> to_vector() const;

private:
  std::uint64_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, VertexSet s);

/// Two-colouring of the complete graph on n labelled vertices. Only the red
/// adjacency is stored; every other pair of distinct vertices is blue.
class Colouring {
public:
  Colouring() = default;
  /// All-blue colouring of K_n.
  explicit Colouring(int n);
  static Colouring all(int n, Colour c);
  /// Blue everywhere except the listed red edges.
  static Colouring from_red_edges(int n, std::span<const std::pair<Vertex, Vertex>> red);
  static Colouring from_red_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> red) {
    return from_red_edges(n, std::span<const std::pair<Vertex, Vertex>>(red.begin(), red.size()));
  }
  /// Bit e of `code` is the colour (1 = red) of the e-th pair in
  /// lexicographic order (0,1),(0,2),...,(n-2,n-1). Requires n(n-1)/2 <= 64.
  static Colouring from_code(int n, std::uint64_t code);

  int order() const noexcept { return n_; }
  VertexSet vertices() const noexcept { return VertexSet::range(n_); }

  Colour colour(Vertex u, Vertex v) const noexcept {
    return red_[u].contains(v) ? Colour::Red : Colour::Blue;
  }
  bool is_red(Vertex u, Vertex v) const noexcept { return red_[u].contains(v); }
  bool is_blue(Vertex u, Vertex v) const noexcept { return u != v && !red_[u].contains(v); }
  void set(Vertex u, Vertex v, Colour c);

  /// Red neighbours of v (never contains v).
  VertexSet red_neighbours(Vertex v) const noexcept { return red_[v]; }
  VertexSet blue_neighbours(Vertex v) const noexcept {
    return vertices() - red_[v] - VertexSet::single(v);
  }
  VertexSet neighbours(Vertex v, Colour c) const noexcept {
    return c == Colour::Red ? red_neighbours(v) : blue_neighbours(v);
  }

  /// Same graph with the two colours exchanged.
  Colouring swapped() const;
  /// Colouring induced on `keep`; new vertex i is keep[i].
  Colouring induced(std::span<const Vertex> keep) const;
  /// Vertex v of the result is perm[v] of this colouring.
  Colouring relabelled(std::span<const Vertex> perm) const;
  /// This colouring plus a new vertex n joined to everything by colour c.
  Colouring with_apex(Colour c) const;

  bool red_connected() const;

  bool operator==(const Colouring&) const = default;

private:
  int n_ = 0;
  std::vector<VertexSet> red_;
};

/// Line 1 `n <decimal>`, line 2 the n(n-1)/2 pair colours as R/B in
/// lexicographic pair order, trailing newline.
std::string serialize(const Colouring& g);
/// Inverse of serialize; throws PreconditionError on malformed input.
Colouring parse_colouring(const std::string& text);
Colouring read_colouring(const std::string& path);
void write_colouring(const std::string& path, const Colouring& g);

}  // namespace pathcover
