#pragma once

#include <compare>
#include <string>

#include "topo/graph.hpp"

namespace topo {

inline constexpr int kCanonicalMaxOrder = 10;

/// Isomorphism-invariant encoding: the graph6 text of the relabelling whose
/// upper-triangle bit string is lexicographically smallest among the
/// orderings the refinement search admits.
struct CanonicalForm {
  std::string graph6;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Throws OrderTooLarge for n > 10.
CanonicalForm canonical_form(const Graph& g);

/// The canonical representative itself.
Graph canonical_graph(const Graph& g);

}  // namespace topo
