#include "topo/verification.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "scan_engine.hpp"
#include "scan_filters.hpp"
#include "topo/constructions.hpp"
#include "topo/error.hpp"

namespace topo {

std::string_view to_string(IndexKind kind) noexcept {
  switch (kind) {
    case IndexKind::wiener: return "wiener";
    case IndexKind::harary: return "harary";
    case IndexKind::m1: return "m1";
    case IndexKind::m2: return "m2";
    case IndexKind::pi1: return "pi1";
    case IndexKind::pi2: return "pi2";
  }
  return "wiener";
}

std::string_view to_string(Direction d) noexcept { return d == Direction::min ? "min" : "max"; }

std::string_view to_string(ClaimStatus s) noexcept {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::info: return "info";
  }
  return "info";
}

std::optional<IndexKind> parse_index_kind(std::string_view text) noexcept {
  for (const auto k : {IndexKind::wiener, IndexKind::harary, IndexKind::m1, IndexKind::m2, IndexKind::pi1,
                       IndexKind::pi2}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

std::optional<Direction> parse_direction(std::string_view text) noexcept {
  if (text == "min") return Direction::min;
  if (text == "max") return Direction::max;
  return std::nullopt;
}

Rational index_value(const Graph& g, IndexKind kind) {
  switch (kind) {
    case IndexKind::wiener: return Rational(wiener(g));
    case IndexKind::harary: return harary(g);
    case IndexKind::m1: return Rational(zagreb(g).m1);
    case IndexKind::m2: return Rational(zagreb(g).m2);
    case IndexKind::pi1: return Rational(zagreb(g).pi1);
    case IndexKind::pi2: return Rational(zagreb(g).pi2);
  }
  return Rational();
}

// ---------------------------------------------------------------------------

namespace {

template <class V, class ValueFn, class ToRational>
ExtremalReport scan_index(GraphClass graph_class, int n, IndexKind index, Direction direction, int workers,
                          ValueFn make_value, ToRational to_rational) {
  const int bits = detail::partition_bits(detail::class_word_bits(graph_class, n));
  const int parts = 1 << bits;
  struct Part {
    detail::Tracker<V> tracker;
    std::uint64_t candidates = 0;
    std::uint64_t members = 0;
  };
  std::vector<Part> results;
  results.reserve(static_cast<std::size_t>(parts));
  for (int p = 0; p < parts; ++p) results.push_back(Part{detail::Tracker<V>(direction, n)});

  detail::run_partitions(parts, workers, [&](int p) {
    Part& part = results[static_cast<std::size_t>(p)];
    auto fn = make_value();
    auto leaf = [&](const std::uint64_t* rows, const int* degree) {
      ++part.members;
      part.tracker.offer(fn(rows, degree), detail::rows_to_word(rows, n));
    };
    part.candidates = detail::walk_class(graph_class, n, {bits, static_cast<std::uint64_t>(p)}, leaf);
  });

  ExtremalReport report;
  report.graph_class = graph_class;
  report.n = n;
  report.index = index;
  report.direction = direction;
  detail::Tracker<V> total(direction, n);
  for (auto& part : results) {
    report.scan_size += part.candidates;
    report.class_members += part.members;
    total.merge(std::move(part.tracker));
  }
  if (!total.best()) {
    throw Error(ErrorKind::SpecViolation, "class is empty at n=" + std::to_string(n));
  }
  report.best_value = to_rational(*total.best());
  report.best_witnesses = detail::canonical_witnesses(total.best_words(), n);
  if (total.second()) {
    report.second_value = to_rational(*total.second());
    report.second_witnesses = detail::canonical_witnesses(total.second_words(), n);
  }
  return report;
}

}  // namespace

ExtremalReport extremal_scan(GraphClass graph_class, int n, IndexKind index, Direction direction, int workers) {
  validate(EnumSpec{n, graph_class, false});
  const std::int64_t scale = detail::harary_scale(n);
  auto as_int = [](std::int64_t v) { return Rational(v); };

  auto distance_fn = [n, scale](bool want_harary) {
    return [n, scale, want_harary] {
      return [n, scale, want_harary](const std::uint64_t* rows, const int*) {
        std::array<std::uint32_t, detail::kMaxDistance + 1> hist{};
        int diameter = 0;
        detail::pair_histogram(rows, n, hist.data(), &diameter);
        const auto v = detail::distance_values(hist.data(), diameter, scale);
        return want_harary ? v.harary_scaled : v.wiener;
      };
    };
  };
  auto degree_fn = [n](IndexKind kind) {
    return [n, kind] {
      return [n, kind](const std::uint64_t* rows, const int* degree) {
        const auto v = detail::degree_values(rows, degree, n);
        return kind == IndexKind::m1 ? v.m1 : kind == IndexKind::m2 ? v.m2 : v.pi1;
      };
    };
  };

  switch (index) {
    case IndexKind::wiener:
      return scan_index<std::int64_t>(graph_class, n, index, direction, workers, distance_fn(false), as_int);
    case IndexKind::harary:
      return scan_index<std::int64_t>(graph_class, n, index, direction, workers, distance_fn(true),
                                      [scale](std::int64_t v) { return Rational(v, scale); });
    case IndexKind::m1:
    case IndexKind::m2:
    case IndexKind::pi1:
      return scan_index<std::int64_t>(graph_class, n, index, direction, workers, degree_fn(index), as_int);
    case IndexKind::pi2:
      return scan_index<BigInt>(
          graph_class, n, index, direction, workers,
          [n] {
            return [n, cache = std::make_shared<detail::Pi2Cache>()](const std::uint64_t* rows, const int* degree) {
              return cache->get(detail::degree_values(rows, degree, n).histogram);
            };
          },
          [](const BigInt& v) { return Rational(v); });
  }
  throw Error(ErrorKind::SpecViolation, "unknown index");
}

// ---------------------------------------------------------------------------

std::vector<int> cycle_vertex_sequence(int n) {
  std::vector<int> seq;
  for (int j = 0; j + 1 < n; ++j) seq.push_back(j / 2 + 1);
  return seq;
}

bool DominationReport::all_dominated() const {
  return std::all_of(vertices.begin(), vertices.end(), [](const auto& v) { return v.dominated; });
}

bool DominationReport::all_reach_threshold() const {
  return std::all_of(vertices.begin(), vertices.end(), [&](const auto& v) { return v.reciprocal_sum >= threshold; });
}

DominationReport vertex_domination_check(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw Error(ErrorKind::OrderOutOfRange, "domination check compares against C_n, n >= 3");
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedGraph, "domination check needs a connected graph");
  DominationReport report;
  report.threshold = Rational(2, n) * profile_indices(cycle_profile(n)).harary;
  const auto reference = cycle_vertex_sequence(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto view = vertex_view(g, v);
    VertexDomination rec;
    rec.vertex = v;
    rec.dominated = std::equal(view.distances.begin(), view.distances.end(), reference.begin(),
                               [](int mine, int cyc) { return mine <= cyc; });
    for (const int d : view.distances) rec.reciprocal_sum += Rational(1, d);
    report.vertices.push_back(std::move(rec));
  }
  return report;
}

// ---------------------------------------------------------------------------

DistanceProfile multiset_difference(const DistanceProfile& lhs, const DistanceProfile& rhs) {
  DistanceProfile out;
  for (const auto& [d, c] : lhs.multiplicity) {
    const auto other = rhs.count(d);
    if (c > other) out.add(d, c - other);
  }
  return out;
}

Claim1Report claim1_check(int a, int b) {
  if (a < 3 || b < a) throw Error(ErrorKind::SpecViolation, "claim1 needs 3 <= a <= b");
  if (a + b - 1 > Graph::kMaxOrder) throw Error(ErrorKind::SpecViolation, "claim1 needs a + b - 1 <= 64");
  Claim1Report r;
  r.a = a;
  r.b = b;
  r.n = a + b - 1;
  r.x = a / 2;
  r.y = b / 2;

  // Glue a path on b vertices to C_a at the path's endpoint (vertex 0).
  const Graph glued = amalgamate(cycle(a), 0, path(b), 0);
  const auto dm = distance_matrix(glued);
  r.s = cycle_profile(a);
  for (const auto& [d, c] : cycle_profile(b).multiplicity) r.s.add(d, c);
  for (Vertex u = 1; u < a; ++u) {
    for (Vertex w = a; w < r.n; ++w) r.s.add(dm.at(u, w));
  }
  r.t = cycle_profile(r.n);

  const auto un = static_cast<std::uint64_t>(r.n);
  r.low_range_ok = true;
  for (int i = 1; i <= r.y - 1; ++i) r.low_range_ok = r.low_range_ok && r.s.count(i) >= un;
  r.high_range_ok = true;
  for (const auto& [d, c] : r.s.multiplicity) {
    if (d >= r.y + 1) r.high_range_ok = r.high_range_ok && c <= static_cast<std::uint64_t>(a - 1);
  }

  const auto s_minus_t = multiset_difference(r.s, r.t);
  const auto t_minus_s = multiset_difference(r.t, r.s);
  r.separation_ok = s_minus_t.multiplicity.empty() || t_minus_s.multiplicity.empty() ||
                    s_minus_t.multiplicity.rbegin()->first < t_minus_s.multiplicity.begin()->first;

  r.reciprocal_margin = profile_indices(r.s).harary - profile_indices(r.t).harary;
  r.reciprocal_ok = r.reciprocal_margin.sign() >= 0;
  return r;
}

// ---------------------------------------------------------------------------

std::vector<CrossingRow> crossing_table(int from, int to) {
  if (from < 10 || to < from || to > Graph::kMaxOrder) {
    throw Error(ErrorKind::SpecViolation, "crossing table needs 10 <= from <= to <= 64");
  }
  std::vector<CrossingRow> rows;
  for (int n = from; n <= to; ++n) {
    const auto pair = g_pair(n);
    CrossingRow row{n, harary(pair.g1), harary(pair.g2), 0};
    row.sign = (row.h_g1 > row.h_g2) ? 1 : (row.h_g1 < row.h_g2 ? -1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace topo
