#include "topo/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <ostream>
#include <string>

#include "bitgraph.hpp"
#include "topo/error.hpp"

namespace topo {

Graph::Graph() = default;

Graph::Graph(int n, const std::uint64_t* rows, bool checked) : n_(n) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(ErrorKind::OrderOutOfRange, "order " + std::to_string(n) + " outside [1, 64]");
  }
  const std::uint64_t mask = detail::low_mask(n);
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    rows_[static_cast<std::size_t>(v)] = rows[v];
    degree_sum += std::popcount(rows[v]);
  }
  if (checked) {
    for (int v = 0; v < n; ++v) {
      const std::uint64_t row = rows[v];
      if ((row & ~mask) != 0) {
        throw Error(ErrorKind::VertexOutOfRange, "row " + std::to_string(v) + " references a vertex >= n");
      }
      if ((row >> v) & 1U) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(v));
      for (std::uint64_t r = row; r != 0; r &= r - 1) {
        const int u = std::countr_zero(r);
        if (((rows[u] >> v) & 1U) == 0) {
          throw Error(ErrorKind::SpecViolation, "adjacency rows are not symmetric");
        }
      }
    }
  }
  m_ = degree_sum / 2;
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(ErrorKind::OrderOutOfRange, "order " + std::to_string(n) + " outside [1, 64]");
  }
  if (rows.size() < static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::SpecViolation, "fewer rows than vertices");
  }
  return Graph(n, rows.data(), true);
}

int Graph::degree(Vertex v) const noexcept { return std::popcount(neighbours(v)); }

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = degree(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (std::uint64_t r = neighbours(u) & ~detail::low_mask(u + 1); r != 0; r &= r - 1) {
      out.emplace_back(u, std::countr_zero(r));
    }
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

Graph from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 1 || n > Graph::kMaxOrder) {
    throw Error(ErrorKind::OrderOutOfRange, "order " + std::to_string(n) + " outside [1, 64]");
  }
  detail::Rows rows{};
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u == v) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(u));
    rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  return Graph::from_rows(n, rows);
}

DistanceMatrix::DistanceMatrix(int n)
    : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kInfinite) {}

bool DistanceMatrix::all_finite() const noexcept {
  return std::none_of(d_.begin(), d_.end(), [](int x) { return x == kInfinite; });
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm(n);
  const auto rows = g.rows();
  for (int s = 0; s < n; ++s) {
    int* out = dm.d_.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n);
    out[s] = 0;
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    for (int depth = 1; frontier != 0; ++depth) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
      next &= ~seen;
      for (std::uint64_t x = next; x != 0; x &= x - 1) out[std::countr_zero(x)] = depth;
      seen |= next;
      frontier = next;
    }
  }
  return dm;
}

VertexDistanceView vertex_view(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  std::array<std::uint32_t, detail::kMaxDistance + 1> levels{};
  int ecc = 0;
  if (detail::bfs_levels(g.rows().data(), g.order(), v, levels.data(), &ecc) != detail::low_mask(g.order())) {
    throw Error(ErrorKind::DisconnectedGraph, "vertex_view requires a connected graph");
  }
  VertexDistanceView view;
  view.source = v;
  view.eccentricity = ecc;
  view.distances.reserve(static_cast<std::size_t>(g.order() - 1));
  for (int d = 1; d <= ecc; ++d) view.distances.insert(view.distances.end(), levels[static_cast<std::size_t>(d)], d);
  return view;
}

bool is_connected(const Graph& g) { return detail::rows_connected(g.rows().data(), g.order()); }

ClassFlags classify(const Graph& g) {
  ClassFlags f;
  const int n = g.order();
  f.connected = is_connected(g);
  f.all_even_degrees = true;
  bool all_two = true;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    f.all_even_degrees = f.all_even_degrees && d % 2 == 0;
    all_two = all_two && d == 2;
  }
  f.eulerian = f.connected && f.all_even_degrees;
  f.is_cycle = f.connected && all_two;
  if (f.connected && n >= 2) {
    const auto cut = detail::cut_info(g.rows().data(), n);
    f.two_edge_connected = !cut.has_bridge;
    f.two_connected = n >= 3 && !cut.has_cut_vertex;
  }
  return f;
}

bool majorizes(std::span<const int> a, std::span<const int> b) {
  const std::size_t len = std::max(a.size(), b.size());
  std::vector<int> heap_x;
  std::vector<int> heap_y;
  std::array<int, Graph::kMaxOrder> stack_x{};
  std::array<int, Graph::kMaxOrder> stack_y{};
  std::span<int> x(stack_x.data(), std::min(len, stack_x.size()));
  std::span<int> y(stack_y.data(), std::min(len, stack_y.size()));
  if (len > stack_x.size()) {
    heap_x.assign(len, 0);
    heap_y.assign(len, 0);
    x = heap_x;
    y = heap_y;
  }
  std::copy(a.begin(), a.end(), x.begin());
  std::copy(b.begin(), b.end(), y.begin());
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  long long px = 0;
  long long py = 0;
  for (std::size_t i = 0; i < len; ++i) {
    px += x[i];
    py += y[i];
    if (px < py) return false;
  }
  return true;
}

Graph read_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || m < 0) {
    throw Error(ErrorKind::SpecViolation, "edge list must start with \"n m\"");
  }
  if (n < 1 || n > Graph::kMaxOrder) {
    throw Error(ErrorKind::OrderOutOfRange, "order " + std::to_string(n) + " outside [1, 64]");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 64 * 63 / 2)));
  for (long long i = 0; i < m; ++i) {
    int u = 0;
    int v = 0;
    if (!(in >> u >> v)) {
      throw Error(ErrorKind::SpecViolation, "edge list truncated at edge " + std::to_string(i));
    }
    edges.emplace_back(u, v);
  }
  return from_edge_list(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace topo
