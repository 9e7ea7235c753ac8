#include "topo/indices.hpp"

#include <array>

#include "bitgraph.hpp"
#include "topo/error.hpp"

namespace topo {

std::uint64_t DistanceProfile::pair_total() const {
  std::uint64_t total = 0;
  for (const auto& [d, c] : multiplicity) total += c;
  return total;
}

std::uint64_t DistanceProfile::count(int distance) const {
  const auto it = multiplicity.find(distance);
  return it == multiplicity.end() ? 0 : it->second;
}

void DistanceProfile::add(int distance, std::uint64_t times) {
  if (distance < 1) throw Error(ErrorKind::SpecViolation, "profile distances must be positive");
  if (times != 0) multiplicity[distance] += times;
}

DistanceProfile distance_profile(const Graph& g) {
  std::array<std::uint32_t, detail::kMaxDistance + 1> hist{};
  int diameter = 0;
  if (!detail::pair_histogram(g.rows().data(), g.order(), hist.data(), &diameter)) {
    throw Error(ErrorKind::DisconnectedGraph, "distance indices need a connected graph");
  }
  DistanceProfile p;
  for (int d = 1; d <= diameter; ++d) p.add(d, hist[static_cast<std::size_t>(d)]);
  return p;
}

ProfileIndices profile_indices(const DistanceProfile& profile) {
  ProfileIndices out;
  for (const auto& [d, c] : profile.multiplicity) {
    out.wiener += static_cast<std::int64_t>(d) * static_cast<std::int64_t>(c);
    out.harary += Rational(static_cast<long long>(c), d);
  }
  return out;
}

std::int64_t wiener(const Graph& g) { return profile_indices(distance_profile(g)).wiener; }

Rational harary(const Graph& g) { return profile_indices(distance_profile(g)).harary; }

DegreeIndices zagreb(const Graph& g) {
  DegreeIndices z;
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    const long d = g.degree(v);
    z.m1 += d * d;
    z.pi1 *= d;
    if (d > 0) {
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(d));
      z.pi2 *= power;
    }
  }
  for (const auto& [u, v] : g.edges()) {
    z.m2 += static_cast<std::int64_t>(g.degree(u)) * g.degree(v);
  }
  return z;
}

IndexBundle compute_indices(const Graph& g) {
  const auto dist = profile_indices(distance_profile(g));
  auto deg = zagreb(g);
  return IndexBundle{dist.wiener, dist.harary, deg.m1, deg.m2, std::move(deg.pi1), std::move(deg.pi2)};
}

DistanceProfile cycle_profile(int n) {
  if (n < 3) throw Error(ErrorKind::OrderOutOfRange, "cycles need n >= 3, got " + std::to_string(n));
  DistanceProfile p;
  const auto un = static_cast<std::uint64_t>(n);
  if (n % 2 == 1) {
    for (int d = 1; d <= (n - 1) / 2; ++d) p.add(d, un);
  } else {
    const int k = n / 2;
    for (int d = 1; d < k; ++d) p.add(d, un);
    p.add(k, static_cast<std::uint64_t>(k));
  }
  return p;
}

IndexBundle cycle_closed_forms(int n) {
  if (n < 3) throw Error(ErrorKind::OrderOutOfRange, "cycles need n >= 3, got " + std::to_string(n));
  IndexBundle b;
  const std::int64_t nn = n;
  if (n % 2 == 0) {
    b.wiener = nn * nn * nn / 8;
    b.harary = Rational(nn) * harmonic_number(n / 2 - 1) + Rational(1);
  } else {
    b.wiener = nn * (nn * nn - 1) / 8;
    b.harary = Rational(nn) * harmonic_number((n - 1) / 2);
  }
  b.m1 = 4 * nn;
  b.m2 = 4 * nn;
  mpz_ui_pow_ui(b.pi1.get_mpz_t(), 2, static_cast<unsigned long>(n));
  mpz_ui_pow_ui(b.pi2.get_mpz_t(), 4, static_cast<unsigned long>(n));
  return b;
}

}  // namespace topo
