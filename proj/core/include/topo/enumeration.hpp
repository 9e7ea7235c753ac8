#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "topo/graph.hpp"

namespace topo {

enum class GraphClass { eulerian, two_edge_connected, two_connected, connected };

std::string_view to_string(GraphClass c) noexcept;
std::optional<GraphClass> parse_graph_class(std::string_view text) noexcept;

inline constexpr int kEulerianMaxOrder = 10;
inline constexpr int kAllGraphsMaxOrder = 8;

struct EnumSpec {
  int n = 3;
  GraphClass graph_class = GraphClass::eulerian;
  bool dedupe = false;
};

/// Throws SpecViolation when n is outside the class bounds
/// (3..10 for eulerian, 3..8 otherwise).
void validate(const EnumSpec& spec);

struct EnumStats {
  std::uint64_t candidates = 0;  // labelled graphs examined before filtering
  std::uint64_t emitted = 0;
};

/// Worker count from the WORKERS environment variable, falling back to the
/// hardware concurrency. A non-positive or non-numeric value throws.
int default_workers();

using GraphSink = std::function<void(const Graph&)>;

/// Streams every member of the class. Without dedupe each labelled graph is
/// emitted once, in an order fixed by the search-space partitioning (not by
/// the worker count). With dedupe one canonical representative per
/// isomorphism class is emitted, sorted by canonical form. The sink is only
/// ever called from the calling thread.
EnumStats enumerate(const EnumSpec& spec, const GraphSink& sink, int workers = default_workers());

std::vector<Graph> enumerate_all(const EnumSpec& spec, int workers = default_workers());

/// Connected and 2-regular.
bool is_isomorphic_to_cycle(const Graph& g);

}  // namespace topo
