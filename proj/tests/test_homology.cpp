#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/canonical.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/enumerate.hpp"
#include "rainbow/homology.hpp"

using namespace rainbow;

namespace {

Graph cycle(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

}  // namespace

TEST(IndependenceComplex, Faces) {
  const auto full = independence_complex(Graph(3));
  EXPECT_EQ(full.face_count(), 8U);
  EXPECT_EQ(full.dimension(), 2);
  const auto k2 = independence_complex(Graph(2, {{0, 1}}));
  EXPECT_EQ(k2.dimension(), 0);
  EXPECT_EQ(k2.faces(0).size(), 2U);
  const auto c4 = independence_complex(cycle(4));
  ASSERT_EQ(c4.faces(1).size(), 2U);
  EXPECT_EQ(c4.faces(1)[0], 0b0101U);
  EXPECT_EQ(c4.faces(1)[1], 0b1010U);
  EXPECT_TRUE(c4.is_closed_downward());
  EXPECT_THROW(SimplicialComplex(std::vector<std::vector<VertexMask>>{}), std::invalid_argument);
}

TEST(IndependenceComplex, FaceCapIsEnforced) {
  ComplexLimits tiny;
  tiny.max_faces = 10;
  EXPECT_THROW(independence_complex(Graph(5), tiny), ResourceLimitExceeded);
}

TEST(Betti, KnownComplexes) {
  EXPECT_TRUE(betti(independence_complex(Graph(4))).all_zero());
  const auto two_points = betti(independence_complex(Graph(2, {{0, 1}})));
  EXPECT_EQ(two_points.at(0), 1U);
  EXPECT_EQ(two_points.at(-1), 0U);
  const auto c6 = betti(independence_complex(cycle(6)));
  EXPECT_EQ(c6.at(1), 2U);  // I(C6) is a wedge of two circles
  EXPECT_EQ(c6.at(0), 0U);
  const auto empty = betti(independence_complex(Graph(0)));
  EXPECT_EQ(empty.at(-1), 1U);
}

TEST(Betti, AgreesWithModularRankOracle) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& g : nonisomorphic_graphs(n)) {
      const auto b = betti(independence_complex(g));
      auto expected = oracle::reduced_betti(g);
      auto got = b.values();
      got.resize(std::max(got.size(), expected.size()), 0);
      expected.resize(got.size(), 0);
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(Betti, NativeIntegerRankAgreesWithMultiprecision) {
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    const auto c = independence_complex(random_graph(9, 1, 3, rng));
    EXPECT_EQ(betti<long long>(c), betti(c));
  }
}

TEST(Betti, EulerPoincare) {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto c = independence_complex(random_graph(rng.between(0, 10), rng.between(1, 3), 4, rng));
    EXPECT_EQ(euler_poincare_defect(c, betti(c)), 0);
  }
}

TEST(Eta, Conventions) {
  EXPECT_EQ(eta_of_graph(Graph(3)), ConnectivityValue::infinity());
  EXPECT_EQ(eta_of_graph(Graph(2, {{0, 1}})), ConnectivityValue(1));
  EXPECT_EQ(eta_of_graph(Graph(0)), ConnectivityValue(0));
  EXPECT_EQ(eta_of_graph(cycle(6)), ConnectivityValue(2));
  EXPECT_EQ(eta_from_betti(BettiVector({0, 0, 3})), ConnectivityValue(2));
}

TEST(TopologicalHall, SmallCases) {
  PartitionedGraph free(Graph(3), {{0}, {1}, {2}});
  auto r = check_topological_hall(free, 0);
  EXPECT_TRUE(r.hypothesis);
  EXPECT_TRUE(r.conclusion);
  EXPECT_FALSE(r.violation);
  PartitionedGraph clash(Graph(2, {{0, 1}}), {{0}, {1}});
  r = check_topological_hall(clash, 0);
  EXPECT_FALSE(r.hypothesis);
  EXPECT_EQ(minimal_hall_deficiency(clash), 1U);
  EXPECT_TRUE(check_topological_hall(clash, 1).hypothesis);
}

TEST(TopologicalHall, DeficiencyBoundsTheOptimum) {
  Rng rng(29);
  for (int t = 0; t < 200; ++t) {
    const auto v = rng.between(1, 9), m = rng.between(1, 5);
    const auto p = random_partitioned_graph(v, m, m <= v && rng.coin(), rng);
    const auto d = minimal_hall_deficiency(p);
    EXPECT_GE(oracle::transversal_optimum(p) + d, p.part_count());
    const auto r = check_topological_hall(p, d);
    EXPECT_TRUE(r.hypothesis);
    EXPECT_TRUE(r.conclusion);
  }
}
