#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "topo/graph.hpp"

namespace topo {

enum class FamilyKind { cycle, path, complete, complete_minus_matching, bouquet, g1, g2, h };

std::string_view to_string(FamilyKind kind) noexcept;
std::optional<FamilyKind> parse_family_kind(std::string_view text) noexcept;

struct FamilySpec {
  FamilyKind kind = FamilyKind::cycle;
  int order = 0;                   // unused for bouquet and h
  std::vector<int> cycle_lengths;  // bouquet only
};

/// Throws SpecViolation when the spec's constraints fail.
Graph build(const FamilySpec& spec);

Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
/// K_n without the matching {2i, 2i+1}.
Graph complete_minus_matching(int n);
/// Cycles of the given lengths all passing through vertex 0.
Graph bouquet(std::span<const int> lengths);

/// Identifies vertex u of g with vertex v of h. Vertices of g keep their ids;
/// the remaining vertices of h follow in increasing order.
Graph amalgamate(const Graph& g, Vertex u, const Graph& h, Vertex v);

/// Two 4-cycles sharing one vertex. Vertex i carries the figure label v_{i+1}:
/// v1 (id 0) is the attachment vertex, v6 (id 5) the shared vertex, and v3
/// (id 2) the far vertex at distance 4 from v1.
Graph h_gadget();

inline constexpr Vertex kGadgetAttachment = 0;
inline constexpr Vertex kGadgetShared = 5;
inline constexpr Vertex kGadgetFar = 2;

struct GPair {
  Graph g1;  // C_{n-6} with C_7 glued at one vertex
  Graph g2;  // C_{n-6} with h glued at v1
  /// labels[i] is the id of v_{i+1} in both graphs; v1 is big-cycle vertex 0.
  std::array<Vertex, 7> labels{};
  /// Ids 0..n-7 form the big cycle in both graphs.
  int big_cycle_order = 0;
};

GPair g_pair(int n);

}  // namespace topo
