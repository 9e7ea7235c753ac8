#include <gtest/gtest.h>

#include "oracle.hpp"
#include "topo/constructions.hpp"
#include "topo/error.hpp"
#include "topo/indices.hpp"

using namespace topo;

namespace {

Graph bowtie() {
  const std::array<int, 2> lengths{3, 3};
  return bouquet(lengths);
}

DistanceProfile make_profile(std::initializer_list<std::pair<int, std::uint64_t>> entries) {
  DistanceProfile p;
  for (auto [d, k] : entries) p.add(d, k);
  return p;
}

BigInt power(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Rational to_rational(const mpq_class& q) { return Rational(BigInt(q.get_num()), BigInt(q.get_den())); }

}  // namespace

TEST(Wiener, Examples) {
  EXPECT_EQ(wiener(cycle(5)), 15);
  EXPECT_EQ(wiener(complete(5)), 10);
  EXPECT_EQ(wiener(bowtie()), 14);
  EXPECT_EQ(wiener(Graph{}), 0);
}

TEST(Harary, Examples) {
  EXPECT_EQ(harary(complete(5)), Rational(10));
  EXPECT_EQ(harary(cycle(7)), Rational(77, 6));
  EXPECT_EQ(harary(amalgamate(cycle(6), 0, cycle(3), 0)), Rational(101, 6));
  EXPECT_EQ(harary(bowtie()), Rational(8));
}

TEST(DistanceIndices, RejectDisconnected) {
  const std::vector<Edge> e{{0, 1}};
  const Graph g = from_edge_list(3, e);
  EXPECT_THROW(wiener(g), Error);
  EXPECT_THROW(harary(g), Error);
  EXPECT_THROW(distance_profile(g), Error);
  EXPECT_THROW(compute_indices(g), Error);
}

TEST(DistanceProfile, Examples) {
  EXPECT_EQ(distance_profile(cycle(5)), make_profile({{1, 5}, {2, 5}}));
  EXPECT_EQ(distance_profile(cycle(8)), make_profile({{1, 8}, {2, 8}, {3, 8}, {4, 4}}));
  EXPECT_EQ(distance_profile(complete(4)), make_profile({{1, 6}}));
  EXPECT_EQ(distance_profile(amalgamate(cycle(6), 0, cycle(3), 0)),
            make_profile({{1, 9}, {2, 10}, {3, 7}, {4, 2}}));
}

TEST(DistanceProfile, Accessors) {
  DistanceProfile p = make_profile({{2, 3}, {1, 1}});
  EXPECT_EQ(p.pair_total(), 4U);
  EXPECT_EQ(p.count(2), 3U);
  EXPECT_EQ(p.count(7), 0U);
  p.add(2);
  EXPECT_EQ(p.count(2), 4U);
  p.add(5, 0);
  EXPECT_EQ(p.multiplicity.count(5), 0U);
  EXPECT_THROW(p.add(0), Error);
}

TEST(Zagreb, Examples) {
  const auto c = zagreb(cycle(9));
  EXPECT_EQ(c.m1, 36);
  EXPECT_EQ(c.m2, 36);
  EXPECT_EQ(c.pi1, power(2, 9));
  EXPECT_EQ(c.pi2, power(4, 9));

  const auto b = zagreb(bowtie());
  EXPECT_EQ(b.m1, 32);
  EXPECT_EQ(b.m2, 40);
  EXPECT_EQ(b.pi1, 64);
  EXPECT_EQ(b.pi2, 65536);

  const auto k = zagreb(complete(5));
  EXPECT_EQ(k.m1, 80);
  EXPECT_EQ(k.m2, 160);
  EXPECT_EQ(k.pi1, 1024);
  EXPECT_EQ(k.pi2, power(4, 20));
}

TEST(Zagreb, IsolatedVertexConventions) {
  const auto z = zagreb(Graph{});
  EXPECT_EQ(z.m1, 0);
  EXPECT_EQ(z.m2, 0);
  EXPECT_EQ(z.pi1, 0);
  EXPECT_EQ(z.pi2, 1);
}

TEST(ProfileIndices, Examples) {
  const auto fig = profile_indices(make_profile({{1, 10}, {2, 10}, {3, 4}, {4, 4}}));
  EXPECT_EQ(fig.harary, Rational(52, 3));
  EXPECT_NE(fig.harary, Rational(95, 6));
  const auto c5 = profile_indices(make_profile({{1, 5}, {2, 5}}));
  EXPECT_EQ(c5.wiener, 15);
  EXPECT_EQ(c5.harary, Rational(15, 2));
  const auto edge = profile_indices(make_profile({{1, 1}}));
  EXPECT_EQ(edge.wiener, 1);
  EXPECT_EQ(edge.harary, Rational(1));
  const auto empty = profile_indices(DistanceProfile{});
  EXPECT_EQ(empty.wiener, 0);
  EXPECT_EQ(empty.harary, Rational(0));
}

TEST(CycleProfile, Examples) {
  EXPECT_EQ(cycle_profile(5), make_profile({{1, 5}, {2, 5}}));
  EXPECT_EQ(cycle_profile(8), make_profile({{1, 8}, {2, 8}, {3, 8}, {4, 4}}));
  EXPECT_EQ(cycle_profile(3), make_profile({{1, 3}}));
  EXPECT_THROW(cycle_profile(2), Error);
}

TEST(CycleClosedForms, Examples) {
  EXPECT_EQ(cycle_closed_forms(8).wiener, 64);
  EXPECT_EQ(cycle_closed_forms(8).harary, Rational(47, 3));
  EXPECT_EQ(cycle_closed_forms(7).harary, Rational(77, 6));
  EXPECT_EQ(cycle_closed_forms(5).m1, 20);
  EXPECT_THROW(cycle_closed_forms(2), Error);
}

TEST(CycleClosedForms, LargeOrdersStayExact) {
  const auto b = cycle_closed_forms(1000);
  EXPECT_EQ(b.wiener, 125000000);
  EXPECT_EQ(b.pi2, power(4, 1000));
  const auto p = profile_indices(cycle_profile(1000));
  EXPECT_EQ(p.wiener, b.wiener);
  EXPECT_EQ(p.harary, b.harary);
}

TEST(ComputeIndices, MatchesOracleOnConstructions) {
  std::vector<Graph> graphs{cycle(11), path(7), complete(9), complete_minus_matching(10), bowtie(),
                            h_gadget(), build({FamilyKind::g1, 14, {}}), build({FamilyKind::g2, 21, {}})};
  for (const Graph& g : graphs) {
    const auto m = oracle::Matrix::of(g);
    const auto b = compute_indices(g);
    EXPECT_EQ(BigInt(static_cast<long>(b.wiener)), oracle::wiener(m));
    EXPECT_EQ(b.harary, to_rational(oracle::harary(m)));
    EXPECT_EQ(BigInt(static_cast<long>(b.m1)), oracle::m1(m));
    EXPECT_EQ(BigInt(static_cast<long>(b.m2)), oracle::m2(m));
    EXPECT_EQ(b.pi1, oracle::pi1(m));
    EXPECT_EQ(b.pi2, oracle::pi2(m));
  }
}
