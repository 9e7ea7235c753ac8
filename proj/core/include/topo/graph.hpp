#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace topo {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on at most 64 vertices.
///
/// Adjacency is stored as one 64-bit row mask per vertex, so neighbourhood
/// queries and breadth-first layers reduce to word operations.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  /// The single-vertex graph.
  Graph();

  /// Builds from row masks. Rows must be symmetric, loop-free and only use
  /// bits below `n`; anything else raises an Error.
  static Graph from_rows(int n, std::span<const std::uint64_t> rows);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  std::uint64_t neighbours(Vertex v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const noexcept { return (neighbours(u) >> v) & 1U; }
  int degree(Vertex v) const noexcept;

  std::span<const std::uint64_t> rows() const noexcept {
    return {rows_.data(), static_cast<std::size_t>(n_)};
  }

  /// Degrees in vertex order.
  std::vector<int> degrees() const;
  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

 private:
  Graph(int n, const std::uint64_t* rows, bool checked);

  int n_ = 1;
  int m_ = 0;
  std::array<std::uint64_t, kMaxOrder> rows_{};
};

/// Edges may repeat and appear in either orientation; duplicates collapse.
Graph from_edge_list(int n, std::span<const Edge> edges);

/// Shortest-path lengths. Unreachable pairs hold `kInfinite`, which callers
/// must test for explicitly.
class DistanceMatrix {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  explicit DistanceMatrix(int n);

  int order() const noexcept { return n_; }
  int at(Vertex u, Vertex v) const noexcept {
    return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }
  bool finite(Vertex u, Vertex v) const noexcept { return at(u, v) != kInfinite; }
  bool all_finite() const noexcept;

 private:
  friend DistanceMatrix distance_matrix(const Graph& g);

  int n_;
  std::vector<int> d_;
};

DistanceMatrix distance_matrix(const Graph& g);

struct VertexDistanceView {
  Vertex source = 0;
  std::vector<int> distances;  // ascending, excludes the source itself
  int eccentricity = 0;
};

/// Throws DisconnectedGraph if some vertex is unreachable from `v`.
VertexDistanceView vertex_view(const Graph& g, Vertex v);

struct ClassFlags {
  bool connected = false;
  bool all_even_degrees = false;
  bool eulerian = false;
  bool two_edge_connected = false;
  bool two_connected = false;
  bool is_cycle = false;

  friend bool operator==(const ClassFlags&, const ClassFlags&) = default;
};

ClassFlags classify(const Graph& g);

bool is_connected(const Graph& g);

/// Weak majorization: both sequences sorted descending and zero padded to a
/// common length; true iff every prefix sum of `a` is at least that of `b`.
bool majorizes(std::span<const int> a, std::span<const int> b);

/// Plain-text edge list: "n m" on the first line, then m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace topo
