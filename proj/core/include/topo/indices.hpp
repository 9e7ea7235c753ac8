#pragma once

#include <cstdint>
#include <map>

#include "topo/graph.hpp"
#include "topo/rational.hpp"

namespace topo {

/// Multiset of pairwise distances: distance -> number of unordered pairs.
struct DistanceProfile {
  std::map<int, std::uint64_t> multiplicity;

  std::uint64_t pair_total() const;
  std::uint64_t count(int distance) const;
  void add(int distance, std::uint64_t times = 1);

  friend bool operator==(const DistanceProfile&, const DistanceProfile&) = default;
};

struct DegreeIndices {
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  BigInt pi1{1};
  BigInt pi2{1};

  friend bool operator==(const DegreeIndices&, const DegreeIndices&) = default;
};

struct IndexBundle {
  std::int64_t wiener = 0;
  Rational harary;
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  BigInt pi1{1};
  BigInt pi2{1};

  friend bool operator==(const IndexBundle&, const IndexBundle&) = default;
};

// Distance indices reject disconnected graphs with DisconnectedGraph.
std::int64_t wiener(const Graph& g);
Rational harary(const Graph& g);
DistanceProfile distance_profile(const Graph& g);

/// Degree indices are defined for every graph; an isolated vertex
/// contributes 0^0 = 1 to pi2 (and 0 to pi1).
DegreeIndices zagreb(const Graph& g);

struct ProfileIndices {
  std::int64_t wiener = 0;
  Rational harary;
};

ProfileIndices profile_indices(const DistanceProfile& profile);

/// All six indices of a connected graph.
IndexBundle compute_indices(const Graph& g);

/// Pairwise distances of C_n, n >= 3: 1..floor(n/2) each n times, except
/// that for even n the antipodal distance n/2 occurs n/2 times.
DistanceProfile cycle_profile(int n);

/// Closed forms for C_n without building the graph.
IndexBundle cycle_closed_forms(int n);

}  // namespace topo
