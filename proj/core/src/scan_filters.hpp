#pragma once

#include <cstdint>

#include "bitgraph.hpp"
#include "enum_kernel.hpp"
#include "topo/enumeration.hpp"

namespace topo::detail {

/// Length of the word the partition prefix is taken from.
inline int class_word_bits(GraphClass c, int n) {
  const int m = c == GraphClass::eulerian ? n - 1 : n;
  return m * (m - 1) / 2;
}

/// Walks one partition of the labelled search space for `c` and calls
/// leaf(rows, degrees) for each member. Returns the candidate count: every
/// labelled graph generated before the class filter (for the eulerian class
/// exactly 2^C(n-1,2) over all partitions).
template <class Leaf>
std::uint64_t walk_class(GraphClass c, int n, PartitionSlice slice, Leaf& leaf) {
  switch (c) {
    case GraphClass::eulerian: {
      auto keep = [&](const std::uint64_t* rows, const int* degree) {
        if (rows_connected(rows, n)) leaf(rows, degree);
      };
      return walk_even_graphs(n, slice, keep);
    }
    case GraphClass::connected: {
      auto keep = [&](const std::uint64_t* rows, const int* degree) {
        if (rows_connected(rows, n)) leaf(rows, degree);
      };
      LabeledWalker<decltype(keep)> walker(n, false, slice, keep);
      return walker.run();
    }
    case GraphClass::two_edge_connected:
    case GraphClass::two_connected: {
      const bool need_vertex = c == GraphClass::two_connected;
      auto keep = [&](const std::uint64_t* rows, const int* degree) {
        if (!rows_connected(rows, n)) return;
        const CutInfo cut = cut_info(rows, n);
        if (need_vertex ? !cut.has_cut_vertex : !cut.has_bridge) leaf(rows, degree);
      };
      LabeledWalker<decltype(keep)> walker(n, true, slice, keep);
      return walker.run();
    }
  }
  return 0;
}

}  // namespace topo::detail
