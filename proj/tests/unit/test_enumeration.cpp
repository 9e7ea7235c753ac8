#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "oracle.hpp"
#include "topo/canonical.hpp"
#include "topo/constructions.hpp"
#include "topo/error.hpp"
#include "topo/enumeration.hpp"
#include "topo/graph6.hpp"

using namespace topo;

namespace {

std::set<std::string> forms_of(const std::vector<Graph>& graphs) {
  std::set<std::string> out;
  for (const auto& g : graphs) out.insert(canonical_form(g).graph6);
  return out;
}

bool in_class(GraphClass c, const oracle::Matrix& m) {
  if (!oracle::connected(m)) return false;
  switch (c) {
    case GraphClass::eulerian:
      for (int v = 0; v < m.n; ++v) {
        if (m.degree(v) % 2 != 0) return false;
      }
      return true;
    case GraphClass::two_edge_connected:
      return !oracle::has_bridge(m);
    case GraphClass::two_connected:
      return !oracle::has_cut_vertex(m);
    case GraphClass::connected:
      return true;
  }
  return false;
}

bool in_class(GraphClass c, const Graph& g) {
  const auto f = classify(g);
  switch (c) {
    case GraphClass::eulerian: return f.eulerian;
    case GraphClass::two_edge_connected: return f.two_edge_connected;
    case GraphClass::two_connected: return f.two_connected;
    case GraphClass::connected: return f.connected;
  }
  return false;
}

constexpr std::array<GraphClass, 4> kClasses{GraphClass::eulerian, GraphClass::two_edge_connected,
                                             GraphClass::two_connected, GraphClass::connected};

class ScopedWorkers {
 public:
  explicit ScopedWorkers(const char* value) {
    if (const char* old = std::getenv("WORKERS")) saved_ = old;
    if (value) {
      setenv("WORKERS", value, 1);
    } else {
      unsetenv("WORKERS");
    }
  }
  ~ScopedWorkers() {
    if (saved_) {
      setenv("WORKERS", saved_->c_str(), 1);
    } else {
      unsetenv("WORKERS");
    }
  }

 private:
  std::optional<std::string> saved_;
};

}  // namespace

TEST(Enumeration, TriangleIsTheOnlyEulerianOrder3) {
  const auto graphs = enumerate_all({3, GraphClass::eulerian, true}, 1);
  ASSERT_EQ(graphs.size(), 1U);
  EXPECT_EQ(canonical_form(graphs[0]), canonical_form(cycle(3)));
}

TEST(Enumeration, EulerianOrder5) {
  const auto forms = forms_of(enumerate_all({5, GraphClass::eulerian, true}, 1));
  EXPECT_EQ(forms.size(), 4U);
  const std::array<int, 2> bowtie{3, 3};
  EXPECT_TRUE(forms.count(canonical_form(cycle(5)).graph6));
  EXPECT_TRUE(forms.count(canonical_form(bouquet(bowtie)).graph6));
  EXPECT_TRUE(forms.count(canonical_form(complete(5)).graph6));
}

TEST(Enumeration, BridgelessOrder4) {
  const auto forms = forms_of(enumerate_all({4, GraphClass::two_edge_connected, true}, 1));
  EXPECT_EQ(forms.size(), 3U);
  EXPECT_TRUE(forms.count(canonical_form(cycle(4)).graph6));
  EXPECT_TRUE(forms.count(canonical_form(complete(4)).graph6));
  const std::vector<Edge> k4_minus_edge{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}};
  EXPECT_TRUE(forms.count(canonical_form(from_edge_list(4, k4_minus_edge)).graph6));
}

TEST(Enumeration, DedupedCountsMatchOrbitOracle) {
  for (GraphClass c : kClasses) {
    for (int n = 3; n <= 6; ++n) {
      const auto stats = enumerate({n, c, true}, [](const Graph&) {}, 2);
      const auto expected = oracle::count_classes(n, [c](const oracle::Matrix& m) { return in_class(c, m); });
      EXPECT_EQ(stats.emitted, expected) << to_string(c) << " n=" << n;
    }
  }
}

TEST(Enumeration, LabelledCountsMatchBruteForce) {
  for (GraphClass c : kClasses) {
    for (int n = 3; n <= 6; ++n) {
      std::uint64_t expected = 0;
      const int pairs = n * (n - 1) / 2;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        expected += in_class(c, oracle::from_code(n, code));
      }
      std::set<std::string> seen;
      const auto stats = enumerate({n, c, false}, [&](const Graph& g) {
        EXPECT_TRUE(in_class(c, g));
        seen.insert(to_graph6(g));
      }, 1);
      EXPECT_EQ(stats.emitted, expected) << to_string(c) << " n=" << n;
      EXPECT_EQ(seen.size(), expected) << "duplicate labelled graphs for " << to_string(c) << " n=" << n;
    }
  }
}

TEST(Enumeration, KnownLabelledCounts) {
  EXPECT_EQ(enumerate({7, GraphClass::eulerian, false}, [](const Graph&) {}, 1).emitted, 26614U);
  EXPECT_EQ(enumerate({7, GraphClass::two_connected, false}, [](const Graph&) {}, 1).emitted, 1014888U);
}

TEST(Enumeration, EulerianCandidatesArePowerOfTwo) {
  const auto stats = enumerate({7, GraphClass::eulerian, false}, [](const Graph&) {}, 1);
  EXPECT_EQ(stats.candidates, std::uint64_t{1} << 15);
}

TEST(Enumeration, StreamIndependentOfWorkers) {
  for (bool dedupe : {false, true}) {
    std::vector<std::string> one;
    std::vector<std::string> many;
    enumerate({6, GraphClass::two_edge_connected, dedupe}, [&](const Graph& g) { one.push_back(to_graph6(g)); }, 1);
    enumerate({6, GraphClass::two_edge_connected, dedupe}, [&](const Graph& g) { many.push_back(to_graph6(g)); }, 5);
    EXPECT_EQ(one, many);
  }
}

TEST(Enumeration, DedupedOutputIsSortedCanonical) {
  std::vector<std::string> out;
  enumerate({7, GraphClass::eulerian, true}, [&](const Graph& g) {
    EXPECT_EQ(to_graph6(g), canonical_form(g).graph6);
    out.push_back(to_graph6(g));
  }, 2);
  EXPECT_EQ(out.size(), 37U);
  EXPECT_TRUE(std::is_sorted(out.begin(), out.end()));
}

TEST(Enumeration, SinkExceptionPropagates) {
  EXPECT_THROW(enumerate({6, GraphClass::eulerian, false}, [](const Graph&) { throw std::runtime_error("stop"); }, 2),
               std::runtime_error);
}

TEST(Enumeration, Bounds) {
  EXPECT_THROW(validate({2, GraphClass::eulerian, false}), Error);
  EXPECT_THROW(validate({11, GraphClass::eulerian, false}), Error);
  EXPECT_NO_THROW(validate({10, GraphClass::eulerian, false}));
  EXPECT_THROW(validate({9, GraphClass::two_edge_connected, false}), Error);
  EXPECT_NO_THROW(validate({8, GraphClass::connected, true}));
  EXPECT_THROW(enumerate({9, GraphClass::connected, false}, [](const Graph&) {}, 1), Error);
}

TEST(Enumeration, ClassNames) {
  for (GraphClass c : kClasses) EXPECT_EQ(parse_graph_class(to_string(c)), c);
  EXPECT_FALSE(parse_graph_class("planar"));
  EXPECT_EQ(parse_graph_class("2ec"), GraphClass::two_edge_connected);
  EXPECT_EQ(parse_graph_class("twoconn"), GraphClass::two_connected);
}

TEST(Workers, EnvironmentVariable) {
  {
    ScopedWorkers w("3");
    EXPECT_EQ(default_workers(), 3);
  }
  {
    ScopedWorkers w(nullptr);
    EXPECT_GE(default_workers(), 1);
  }
  for (const char* bad : {"0", "-2", "many", "4x"}) {
    ScopedWorkers w(bad);
    EXPECT_THROW(default_workers(), Error) << bad;
  }
}

TEST(CycleTest, Examples) {
  EXPECT_TRUE(is_isomorphic_to_cycle(cycle(9)));
  const std::array<int, 2> bowtie{3, 3};
  EXPECT_FALSE(is_isomorphic_to_cycle(bouquet(bowtie)));
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  EXPECT_FALSE(is_isomorphic_to_cycle(from_edge_list(6, e)));
  EXPECT_FALSE(is_isomorphic_to_cycle(path(4)));
}
