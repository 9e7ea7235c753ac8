#include "topo/constructions.hpp"

#include <string>

#include "bitgraph.hpp"
#include "topo/error.hpp"

namespace topo {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::SpecViolation, what);
}

void link(detail::Rows& rows, int u, int v) {
  rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void check_order(int n) {
  if (n > Graph::kMaxOrder) {
    throw Error(ErrorKind::OrderOutOfRange, "order " + std::to_string(n) + " exceeds 64");
  }
}

}  // namespace

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::path: return "path";
    case FamilyKind::complete: return "complete";
    case FamilyKind::complete_minus_matching: return "complete_minus_matching";
    case FamilyKind::bouquet: return "bouquet";
    case FamilyKind::g1: return "g1";
    case FamilyKind::g2: return "g2";
    case FamilyKind::h: return "h";
  }
  return "cycle";
}

std::optional<FamilyKind> parse_family_kind(std::string_view text) noexcept {
  for (const auto kind : {FamilyKind::cycle, FamilyKind::path, FamilyKind::complete,
                          FamilyKind::complete_minus_matching, FamilyKind::bouquet, FamilyKind::g1,
                          FamilyKind::g2, FamilyKind::h}) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  check_order(n);
  detail::Rows rows{};
  for (int v = 0; v < n; ++v) link(rows, v, (v + 1) % n);
  return Graph::from_rows(n, rows);
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  check_order(n);
  detail::Rows rows{};
  for (int v = 0; v + 1 < n; ++v) link(rows, v, v + 1);
  return Graph::from_rows(n, rows);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  check_order(n);
  detail::Rows rows{};
  for (int v = 0; v < n; ++v) {
    rows[static_cast<std::size_t>(v)] = detail::low_mask(n) & ~(std::uint64_t{1} << v);
  }
  return Graph::from_rows(n, rows);
}

Graph complete_minus_matching(int n) {
  require(n >= 4 && n % 2 == 0, "complete_minus_matching needs even n >= 4");
  check_order(n);
  detail::Rows rows{};
  for (int v = 0; v < n; ++v) {
    rows[static_cast<std::size_t>(v)] =
        detail::low_mask(n) & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << (v ^ 1));
  }
  return Graph::from_rows(n, rows);
}

Graph bouquet(std::span<const int> lengths) {
  require(!lengths.empty(), "bouquet needs at least one cycle");
  int n = 1;
  for (const int len : lengths) {
    require(len >= 3, "bouquet cycle lengths must be >= 3");
    n += len - 1;
    check_order(n);
  }
  detail::Rows rows{};
  int next = 1;
  for (const int len : lengths) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      link(rows, prev, next);
      prev = next++;
    }
    link(rows, prev, 0);
  }
  return Graph::from_rows(n, rows);
}

Graph amalgamate(const Graph& g, Vertex u, const Graph& h, Vertex v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= h.order()) {
    throw Error(ErrorKind::VertexOutOfRange, "amalgamation vertex out of range");
  }
  const int n = g.order() + h.order() - 1;
  check_order(n);
  detail::Rows rows{};
  for (int x = 0; x < g.order(); ++x) rows[static_cast<std::size_t>(x)] = g.neighbours(x);
  auto map_h = [&](Vertex x) { return x == v ? u : g.order() + (x < v ? x : x - 1); };
  for (const auto& [a, b] : h.edges()) link(rows, map_h(a), map_h(b));
  return Graph::from_rows(n, rows);
}

Graph h_gadget() {
  // v1..v7 -> ids 0..6; squares v1 v2 v6 v7 and v6 v4 v3 v5.
  const std::array<Edge, 8> edges{{{0, 1}, {1, 5}, {5, 6}, {6, 0}, {5, 3}, {3, 2}, {2, 4}, {4, 5}}};
  return from_edge_list(7, edges);
}

GPair g_pair(int n) {
  require(n >= 10, "g1/g2 need n >= 10");
  check_order(n);
  const Graph big = cycle(n - 6);
  GPair out{amalgamate(big, 0, cycle(7), 0), amalgamate(big, 0, h_gadget(), kGadgetAttachment), {}, n - 6};
  out.labels[0] = 0;
  for (int i = 1; i < 7; ++i) out.labels[static_cast<std::size_t>(i)] = n - 7 + i;

  // Postcondition: seen from the big cycle, h differs from C_7 only at v3,
  // which is pushed two steps further away.
  const auto d1 = distance_matrix(out.g1);
  const auto d2 = distance_matrix(out.g2);
  for (Vertex u = 0; u < out.big_cycle_order; ++u) {
    for (std::size_t i = 0; i < out.labels.size(); ++i) {
      const Vertex vi = out.labels[i];
      const int shift = vi == out.labels[kGadgetFar] ? 2 : 0;
      if (d2.at(u, vi) != d1.at(u, vi) + shift) {
        throw Error(ErrorKind::SpecViolation, "g2 distance relation broken at n=" + std::to_string(n));
      }
    }
  }
  return out;
}

Graph build(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::cycle: return cycle(spec.order);
    case FamilyKind::path: return path(spec.order);
    case FamilyKind::complete: return complete(spec.order);
    case FamilyKind::complete_minus_matching: return complete_minus_matching(spec.order);
    case FamilyKind::bouquet: return bouquet(spec.cycle_lengths);
    case FamilyKind::g1: return g_pair(spec.order).g1;
    case FamilyKind::g2: return g_pair(spec.order).g2;
    case FamilyKind::h:
      require(spec.order == 0 || spec.order == 7, "h has fixed order 7");
      return h_gadget();
  }
  throw Error(ErrorKind::SpecViolation, "unknown family");
}

}  // namespace topo
