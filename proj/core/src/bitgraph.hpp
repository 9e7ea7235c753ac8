#pragma once

// Word-level graph kernels shared by the public API and the exhaustive scans.
// Everything here works on raw row masks so the enumeration loops never have
// to materialise a Graph.

#include <array>
#include <bit>
#include <cstdint>

namespace topo::detail {

inline constexpr int kMaxDistance = 64;

using Rows = std::array<std::uint64_t, 64>;

inline std::uint64_t low_mask(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Counts, for one source, how many vertices sit at each distance.
/// `levels[d]` is incremented for d >= 1. Returns the set reached.
inline std::uint64_t bfs_levels(const std::uint64_t* rows, int n, int source,
                                std::uint32_t* levels, int* eccentricity) noexcept {
  const std::uint64_t all = low_mask(n);
  std::uint64_t seen = std::uint64_t{1} << source;
  std::uint64_t frontier = seen;
  int depth = 0;
  while (frontier != 0 && seen != all) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= rows[std::countr_zero(f)];
    }
    next &= ~seen;
    if (next == 0) break;
    ++depth;
    levels[depth] += static_cast<std::uint32_t>(std::popcount(next));
    seen |= next;
    frontier = next;
  }
  if (eccentricity != nullptr) *eccentricity = depth;
  return seen;
}

inline bool rows_connected(const std::uint64_t* rows, int n) noexcept {
  const std::uint64_t all = low_mask(n);
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= rows[std::countr_zero(f)];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

/// Unordered-pair distance histogram: hist[d] = number of pairs at distance d.
/// Returns false (histogram partially filled) if the graph is disconnected.
inline bool pair_histogram(const std::uint64_t* rows, int n, std::uint32_t* hist,
                           int* diameter) noexcept {
  const std::uint64_t all = low_mask(n);
  int diam = 0;
  for (int s = 0; s < n; ++s) {
    int ecc = 0;
    if (bfs_levels(rows, n, s, hist, &ecc) != all) return false;
    if (ecc > diam) diam = ecc;
  }
  for (int d = 1; d <= diam; ++d) hist[d] /= 2;
  if (diameter != nullptr) *diameter = diam;
  return true;
}

struct CutInfo {
  bool has_bridge = false;
  bool has_cut_vertex = false;
};

/// Low-link pass over a connected graph. Requires n <= 64.
inline CutInfo cut_info(const std::uint64_t* rows, int n) noexcept {
  CutInfo info;
  if (n <= 1) return info;
  std::array<int, 64> disc{};
  std::array<int, 64> low{};
  std::array<int, 64> parent{};
  std::array<std::uint64_t, 64> pending{};
  std::array<int, 64> stack{};
  disc.fill(-1);
  int timer = 0;
  int top = 0;
  int root_children = 0;
  stack[top++] = 0;
  disc[0] = low[0] = timer++;
  parent[0] = -1;
  pending[0] = rows[0];
  while (top > 0) {
    const int v = stack[top - 1];
    if (pending[v] != 0) {
      const int w = std::countr_zero(pending[v]);
      pending[v] &= pending[v] - 1;
      if (disc[w] < 0) {
        disc[w] = low[w] = timer++;
        parent[w] = v;
        pending[w] = rows[w];
        stack[top++] = w;
        if (v == 0) ++root_children;
      } else if (w != parent[v]) {
        if (disc[w] < low[v]) low[v] = disc[w];
      }
      continue;
    }
    --top;
    const int p = parent[v];
    if (p < 0) continue;
    if (low[v] < low[p]) low[p] = low[v];
    if (low[v] > disc[p]) info.has_bridge = true;
    if (parent[p] >= 0 && low[v] >= disc[p]) info.has_cut_vertex = true;
  }
  if (root_children > 1) info.has_cut_vertex = true;
  return info;
}

/// Bit index of the pair (i, j), i < j, in graph6 column order.
inline constexpr int pair_bit(int i, int j) noexcept { return j * (j - 1) / 2 + i; }

/// Upper triangle in column order packed into a word; valid for n <= 11.
inline std::uint64_t rows_to_word(const std::uint64_t* rows, int n) noexcept {
  std::uint64_t word = 0;
  for (int j = 1; j < n; ++j) {
    const std::uint64_t col = rows[j] & low_mask(j);
    word |= col << pair_bit(0, j);
  }
  return word;
}

inline void word_to_rows(std::uint64_t word, int n, std::uint64_t* rows) noexcept {
  for (int v = 0; v < n; ++v) rows[v] = 0;
  for (int j = 1; j < n; ++j) {
    const std::uint64_t col = (word >> pair_bit(0, j)) & low_mask(j);
    rows[j] |= col;
    for (std::uint64_t c = col; c != 0; c &= c - 1) {
      rows[std::countr_zero(c)] |= std::uint64_t{1} << j;
    }
  }
}

}  // namespace topo::detail
