#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topo/canonical.hpp"
#include "topo/enumeration.hpp"
#include "topo/graph.hpp"
#include "topo/indices.hpp"
#include "topo/rational.hpp"

namespace topo {

enum class IndexKind { wiener, harary, m1, m2, pi1, pi2 };
enum class Direction { min, max };

std::string_view to_string(IndexKind kind) noexcept;
std::string_view to_string(Direction d) noexcept;
std::optional<IndexKind> parse_index_kind(std::string_view text) noexcept;
std::optional<Direction> parse_direction(std::string_view text) noexcept;

/// Exact value of one index; distance indices need a connected graph.
Rational index_value(const Graph& g, IndexKind kind);

// ---------------------------------------------------------------------------
// Extremal scans

struct ExtremalReport {
  GraphClass graph_class = GraphClass::eulerian;
  int n = 0;
  IndexKind index = IndexKind::wiener;
  Direction direction = Direction::max;
  Rational best_value;
  std::vector<CanonicalForm> best_witnesses;  // sorted, distinct
  std::optional<Rational> second_value;       // next distinct value, if any
  std::vector<CanonicalForm> second_witnesses;
  std::uint64_t scan_size = 0;     // labelled candidates examined
  std::uint64_t class_members = 0;  // labelled members of the class
};

/// Exhaustive scan of one class at one order. Deterministic for any worker
/// count. Throws SpecViolation outside the enumeration bounds.
ExtremalReport extremal_scan(GraphClass graph_class, int n, IndexKind index, Direction direction,
                             int workers = default_workers());

// ---------------------------------------------------------------------------
// Per-vertex domination by the cycle

/// (1,1,2,2,...) truncated to n-1 entries: the sorted distances from any
/// vertex of C_n.
std::vector<int> cycle_vertex_sequence(int n);

struct VertexDomination {
  Vertex vertex = 0;
  bool dominated = false;  // sorted distances pointwise <= cycle_vertex_sequence
  Rational reciprocal_sum;  // sum over u != v of 1/d(u,v)
};

struct DominationReport {
  Rational threshold;  // (2/n) * H(C_n)
  std::vector<VertexDomination> vertices;

  bool all_dominated() const;
  bool all_reach_threshold() const;
};

/// Throws DisconnectedGraph for disconnected input, OrderOutOfRange for n < 3.
DominationReport vertex_domination_check(const Graph& g);

// ---------------------------------------------------------------------------
// Multiset comparison behind the 2-edge-connected Harary bound

struct Claim1Report {
  int a = 0;  // order of the cycle part
  int b = 0;  // order of the remainder
  int n = 0;  // a + b - 1
  int x = 0;  // floor(a/2)
  int y = 0;  // floor(b/2)
  DistanceProfile s;
  DistanceProfile t;
  bool low_range_ok = false;   // each of 1..y-1 occurs >= n times in S
  bool high_range_ok = false;  // each value >= y+1 occurs <= a-1 times in S
  bool separation_ok = false;  // max(S\T) < min(T\S)
  bool reciprocal_ok = false;  // sum_S 1/i >= sum_T 1/i
  Rational reciprocal_margin;  // sum_S 1/i - sum_T 1/i
};

/// S = distances inside C_a, inside C_b, and across C_a glued to a path on
/// b vertices at a shared endpoint; T = distances of C_{a+b-1}.
/// Requires 3 <= a <= b and a + b - 1 <= 64.
Claim1Report claim1_check(int a, int b);

/// Count-wise truncated difference lhs \ rhs.
DistanceProfile multiset_difference(const DistanceProfile& lhs, const DistanceProfile& rhs);

// ---------------------------------------------------------------------------
// Harary values of the G1/G2 pair

struct CrossingRow {
  int n = 0;
  Rational h_g1;
  Rational h_g2;
  int sign = 0;  // sign of H(g1) - H(g2)
};

/// Requires 10 <= from <= to <= 64.
std::vector<CrossingRow> crossing_table(int from, int to);

// ---------------------------------------------------------------------------
// Theorem suite

enum class ClaimStatus { pass, fail, info };

std::string_view to_string(ClaimStatus s) noexcept;

struct ClaimRecord {
  std::string id;
  std::string graph_class;  // "-" when the claim is not about a class scan
  int n = 0;                // order, or the top of `range`
  std::string range;        // parameter range, e.g. "3..9"
  ClaimStatus status = ClaimStatus::info;
  std::string value;                    // exact value, "p/q" for rationals
  std::vector<std::string> witnesses;   // graph6
  std::string counterexample;           // graph6 of a refuting graph, if any
  std::string note;
  double wall_ms = 0.0;
};

struct VerificationReport {
  std::vector<ClaimRecord> claims;  // sorted by (id, n)

  bool passed() const;
  const ClaimRecord* find(std::string_view id, int n) const;
};

/// Runs the exhaustive checks: eulerian class for n = 3..n_max_eulerian,
/// 2-edge-connected and 2-connected classes for n = 3..n_max_2ec, plus the
/// fixed-value and parametric claims. Failures become records, never
/// exceptions; bounds outside the enumeration limits throw SpecViolation.
VerificationReport theorem_suite(int n_max_eulerian, int n_max_2ec, int workers = default_workers());

}  // namespace topo
