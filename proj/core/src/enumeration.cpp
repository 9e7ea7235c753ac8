#include "topo/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "canonical_kernel.hpp"
#include "enum_kernel.hpp"
#include "scan_filters.hpp"
#include "topo/error.hpp"

namespace topo {

std::string_view to_string(GraphClass c) noexcept {
  switch (c) {
    case GraphClass::eulerian: return "eulerian";
    case GraphClass::two_edge_connected: return "two_edge_connected";
    case GraphClass::two_connected: return "two_connected";
    case GraphClass::connected: return "connected";
  }
  return "eulerian";
}

std::optional<GraphClass> parse_graph_class(std::string_view text) noexcept {
  for (const auto c : {GraphClass::eulerian, GraphClass::two_edge_connected, GraphClass::two_connected,
                       GraphClass::connected}) {
    if (to_string(c) == text) return c;
  }
  if (text == "twoec" || text == "2ec") return GraphClass::two_edge_connected;
  if (text == "twoconn" || text == "2conn") return GraphClass::two_connected;
  return std::nullopt;
}

void validate(const EnumSpec& spec) {
  const int hi = spec.graph_class == GraphClass::eulerian ? kEulerianMaxOrder : kAllGraphsMaxOrder;
  if (spec.n < 3 || spec.n > hi) {
    throw Error(ErrorKind::SpecViolation, std::string(to_string(spec.graph_class)) + " enumeration needs 3 <= n <= " +
                                              std::to_string(hi) + ", got " + std::to_string(spec.n));
  }
}

int default_workers() {
  if (const char* env = std::getenv("WORKERS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value <= 0 || value > 4096) {
      throw Error(ErrorKind::SpecViolation, std::string("WORKERS must be a positive integer, got '") + env + "'");
    }
    return static_cast<int>(value);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

bool is_isomorphic_to_cycle(const Graph& g) {
  if (g.order() < 3) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

namespace {

Graph graph_from_word(std::uint64_t word, int n) {
  detail::Rows rows{};
  detail::word_to_rows(word, n, rows.data());
  return Graph::from_rows(n, rows);
}

Graph graph_from_key(std::uint64_t key, int n) {
  detail::Rows rows{};
  detail::key_to_rows(key, n, rows.data());
  return Graph::from_rows(n, rows);
}

}  // namespace

EnumStats enumerate(const EnumSpec& spec, const GraphSink& sink, int workers) {
  validate(spec);
  const int n = spec.n;
  const int parts_bits = detail::partition_bits(detail::class_word_bits(spec.graph_class, n));
  const int parts = 1 << parts_bits;
  workers = std::max(1, workers);

  struct Bucket {
    std::vector<std::uint64_t> words;
    std::uint64_t candidates = 0;
  };
  EnumStats stats;

  auto fill = [&](int p, Bucket& bucket) {
    auto keep = [&](const std::uint64_t* rows, const int*) {
      bucket.words.push_back(spec.dedupe ? detail::canonical_key(rows, n) : detail::rows_to_word(rows, n));
    };
    bucket.candidates = detail::walk_class(spec.graph_class, n, {parts_bits, static_cast<std::uint64_t>(p)}, keep);
    if (spec.dedupe) {
      std::sort(bucket.words.begin(), bucket.words.end());
      bucket.words.erase(std::unique(bucket.words.begin(), bucket.words.end()), bucket.words.end());
    }
  };

  if (spec.dedupe) {
    std::vector<Bucket> buckets(static_cast<std::size_t>(parts));
    detail::run_partitions(parts, workers, [&](int p) { fill(p, buckets[static_cast<std::size_t>(p)]); });
    std::vector<std::uint64_t> keys;
    for (auto& b : buckets) {
      stats.candidates += b.candidates;
      keys.insert(keys.end(), b.words.begin(), b.words.end());
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    // Smallest key first is the lexicographically smallest canonical string.
    for (const auto key : keys) sink(graph_from_key(key, n));
    stats.emitted = keys.size();
    return stats;
  }

  // Batches of `workers` partitions; each batch is flushed in partition
  // order so the output does not depend on scheduling.
  for (int first = 0; first < parts; first += workers) {
    const int count = std::min(workers, parts - first);
    std::vector<Bucket> buckets(static_cast<std::size_t>(count));
    detail::run_partitions(count, workers, [&](int k) { fill(first + k, buckets[static_cast<std::size_t>(k)]); });
    for (const auto& b : buckets) {
      stats.candidates += b.candidates;
      for (const auto word : b.words) sink(graph_from_word(word, n));
      stats.emitted += b.words.size();
    }
  }
  return stats;
}

std::vector<Graph> enumerate_all(const EnumSpec& spec, int workers) {
  std::vector<Graph> out;
  enumerate(spec, [&](const Graph& g) { out.push_back(g); }, workers);
  return out;
}

}  // namespace topo
