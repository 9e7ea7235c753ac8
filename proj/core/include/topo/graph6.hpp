#pragma once

#include <string>
#include <string_view>

#include "topo/graph.hpp"

namespace topo {

// graph6, single-byte order form only: one byte n+63, then the upper
// triangle in column order (0,1),(0,2),(1,2),(0,3),... packed six bits per
// byte, big-endian, zero padded, each group offset by 63.

inline constexpr int kGraph6MaxOrder = 62;

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

}  // namespace topo
