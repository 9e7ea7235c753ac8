#include "topo/graph6.hpp"

#include <bit>
#include <cstdint>

#include "bitgraph.hpp"
#include "topo/error.hpp"

namespace topo {

namespace {

constexpr int kOffset = 63;

std::size_t payload_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw Error(ErrorKind::OrderTooLarge, "graph6 encoder supports n <= 62, got " + std::to_string(n));
  }
  std::string out(1 + payload_bytes(n), static_cast<char>(kOffset));
  out[0] = static_cast<char>(n + kOffset);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) {
        out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
      }
    }
  }
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::MalformedGraph6, "empty input");
  for (const char c : text) {
    if (c < 63 || c > 126) {
      throw Error(ErrorKind::MalformedGraph6, "byte " + std::to_string(static_cast<int>(c)) + " outside [63,126]");
    }
  }
  const int n = text[0] - kOffset;
  if (n == kGraph6MaxOrder + 1) {
    throw Error(ErrorKind::OrderTooLarge, "multi-byte graph6 orders are not supported");
  }
  if (n < 1) throw Error(ErrorKind::MalformedGraph6, "graph6 order must be at least 1");
  if (text.size() != 1 + payload_bytes(n)) {
    throw Error(ErrorKind::MalformedGraph6, "expected " + std::to_string(1 + payload_bytes(n)) +
                                                " bytes for n=" + std::to_string(n) + ", got " +
                                                std::to_string(text.size()));
  }
  detail::Rows rows{};
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int group = text[1 + bit / 6] - kOffset;
      if ((group >> (5 - bit % 6)) & 1) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  // Padding bits must be zero for the text to be the canonical encoding.
  const std::size_t total = payload_bytes(n) * 6;
  for (; bit < total; ++bit) {
    if (((text[1 + bit / 6] - kOffset) >> (5 - bit % 6)) & 1) {
      throw Error(ErrorKind::MalformedGraph6, "non-zero padding bits");
    }
  }
  return Graph::from_rows(n, rows);
}

}  // namespace topo
