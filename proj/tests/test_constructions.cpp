#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/enumerate.hpp"
#include "rainbow/matching.hpp"

using namespace rainbow;

TEST(DriskoExtremal, Shape) {
  const auto f2 = gen_drisko_extremal(2);
  EXPECT_EQ(f2.size(), 2U);
  EXPECT_EQ(find_rainbow_matching(f2).optimum, 1U);
  const auto f3 = gen_drisko_extremal(3);
  EXPECT_EQ(f3.size(), 4U);
  for (const auto& m : f3.members()) EXPECT_EQ(m.size(), 3U);
  EXPECT_THROW(gen_drisko_extremal(1), std::invalid_argument);
}

TEST(DriskoExtremal, AnyOddMatchingCompletesIt) {
  for (std::size_t n : {2U, 3U}) {
    auto f = gen_drisko_extremal(n);
    auto members = f.members();
    members.push_back(cycle_odd_edges(n));
    EXPECT_TRUE(find_rainbow_matching(MatchingFamily(f.host(), members), n).feasible);
    members.back() = cycle_even_edges(n);
    EXPECT_TRUE(find_rainbow_matching(MatchingFamily(f.host(), members), n).feasible);
  }
}

TEST(Accommodating, Threshold) {
  EXPECT_TRUE(meets_accommodating_threshold({1, 2, 2}, 2));
  EXPECT_FALSE(meets_accommodating_threshold({0, 2, 2}, 2));
  EXPECT_TRUE(meets_accommodating_threshold({1, 2, 3, 3, 3}, 3));
  EXPECT_FALSE(meets_accommodating_threshold({1, 1, 3, 3, 3}, 3));
  EXPECT_THROW(require_size_sequence({2, 1, 2}, 2), std::invalid_argument);
  EXPECT_THROW(require_size_sequence({1, 2}, 2), std::invalid_argument);
}

TEST(Accommodating, CounterexamplesHaveNoRainbowMatching) {
  for (auto [a, n] : {std::pair{std::vector<std::size_t>{0, 1, 2}, std::size_t{2}}, std::pair{std::vector<std::size_t>{0, 2, 2}, std::size_t{2}},
                      std::pair{std::vector<std::size_t>{1, 1, 3, 3, 3}, std::size_t{3}}}) {
    const auto f = gen_accommodating_counterexample(a, n);
    ASSERT_EQ(f.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_GE(f.members()[i].size(), a[i]);
      if (i < n) {
        EXPECT_EQ(f.members()[i].size(), std::min<std::size_t>(n, a[i]));
      }
    }
    EXPECT_LT(oracle::rainbow(f), n);
    EXPECT_FALSE(find_rainbow_matching(f, n).feasible);
  }
  EXPECT_THROW(gen_accommodating_counterexample({1, 2, 2}, 2), std::invalid_argument);
}

TEST(P3Family, MemberSizesAndOptimum) {
  for (std::size_t k : {1U, 2U, 3U, 4U}) {
    const auto f = gen_p3_family(k);
    ASSERT_EQ(f.size(), 2 * k);
    for (std::size_t i = 1; i <= 2 * k; ++i) EXPECT_GE(f.members()[i - 1].size(), std::min(i, 2 * k));
    EXPECT_EQ(find_rainbow_matching(f).optimum, 3 * k / 2);
  }
  EXPECT_EQ(oracle::rainbow(gen_p3_family(2)), 3U);
}

TEST(FracdSharp, RegularSimpleAndOneShort) {
  for (std::size_t n : {2U, 3U}) {
    const auto h = gen_fracd_sharp(n);
    EXPECT_TRUE(is_simple(h));
    EXPECT_TRUE(is_regular(h, 2 * n - 2));
    EXPECT_EQ(oracle::nu(h), n - 1);
    EXPECT_EQ(max_matching_size(h).optimum, n - 1);
    for (Vertex x = 1; x < n; ++x) {
      for (auto t : {Triple{0, 0, x}, Triple{0, x, 0}, Triple{x, 0, 0}}) {
        EXPECT_EQ(std::count(h.edges().begin(), h.edges().end(), t), 1);
      }
    }
  }
}

TEST(DoubleSideA, Properties) {
  const auto h = latin_to_hypergraph(cyclic_latin(3));
  const auto d = double_side_a(h);
  EXPECT_EQ(d.edge_count(), 2 * h.edge_count());
  EXPECT_EQ(d.side_size(Side::A), 6U);
  EXPECT_TRUE(is_p_simple(d, SidePair::BC, 2));
  EXPECT_TRUE(is_simple_pair(d, SidePair::AC));
  const auto one = double_side_a(TriHypergraph({1, 1, 1}, {{0, 0, 0}}));
  ASSERT_EQ(one.edge_count(), 2U);
  EXPECT_EQ(one.edges()[1], (Triple{1, 0, 0}));
}

TEST(DoubleSideA, RowLatinMeetsAlmostDriskoHypotheses) {
  for_each_row_latin_normalized(3, [](const LatinSquare& sq) {
    const auto d = double_side_a(latin_to_hypergraph(sq));
    EXPECT_GE(d.side_size(Side::A), 5U);
    EXPECT_TRUE(is_simple_pair(d, SidePair::AC));
    EXPECT_TRUE(is_p_simple(d, SidePair::BC, 2));
    for (auto deg : degrees(d, Side::A)) EXPECT_EQ(deg, 3U);
    EXPECT_EQ(max_matching_size(d).optimum, 3U);
    return true;
  });
}

TEST(LatinStreams, Counts) {
  std::size_t count = 0;
  for_each_latin_square(4, [&](const LatinSquare& sq) {
    EXPECT_TRUE(sq.is_latin());
    ++count;
    return true;
  });
  EXPECT_EQ(count, 576U);
  for (auto [n, expected] : {std::pair{2U, 2U}, std::pair{3U, 36U}, std::pair{4U, 13824U}}) {
    count = 0;
    for_each_row_latin_normalized(n, [&](const LatinSquare& sq) {
      EXPECT_TRUE(sq.is_row_latin());
      ++count;
      return true;
    });
    EXPECT_EQ(count, expected);
  }
}

TEST(LatinStreams, RandomIsLatinAndSeeded) {
  Rng a(99), b(99);
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto x = random_latin(n, a);
    EXPECT_TRUE(x.is_latin());
    EXPECT_EQ(x, random_latin(n, b));
    EXPECT_TRUE(random_row_latin(n, a).is_row_latin());
    random_row_latin(n, b);
  }
}

TEST(DoubledInstances, MeetHypotheses) {
  Rng rng(19);
  for (std::size_t n : {2U, 3U, 4U}) {
    for (int t = 0; t < 100; ++t) {
      const auto h = gen_theorem19_instance(n, rng);
      EXPECT_EQ(h.side_size(Side::A), 2 * n - 1);
      EXPECT_EQ(h.side_size(Side::B), n);
      EXPECT_EQ(h.side_size(Side::C), n);
      EXPECT_TRUE(is_simple_pair(h, SidePair::AC));
      EXPECT_TRUE(is_p_simple(h, SidePair::BC, 2));
      for (auto d : degrees(h, Side::A)) EXPECT_EQ(d, n);
    }
  }
}

TEST(RandomGenerators, CappedHypergraphRespectsCaps) {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    try {
      const auto h = random_capped_hypergraph({5, 4, 4}, 3, 5, t % 2 == 0, rng);
      for (auto d : degrees(h, Side::A)) EXPECT_EQ(d, 3U);
      EXPECT_LE(max_degree(h, {Side::B, Side::C}), 5U);
      if (t % 2 == 0) {
        EXPECT_TRUE(is_simple(h));
      }
    } catch (const ConstructionError&) {
    }
  }
  const auto s = random_simple_regular(4, 3, rng);
  EXPECT_TRUE(is_simple(s));
  EXPECT_TRUE(is_regular(s, 3));
  const auto st = random_stein_instance(4, rng);
  EXPECT_TRUE(is_regular(st, 4));
  EXPECT_TRUE(is_simple_pair(st, SidePair::AB));
}

TEST(RandomGenerators, DegreeConditionGraphs) {
  Rng rng(37);
  for (std::size_t level : {2U, 3U}) {
    for (int t = 0; t < 50; ++t) {
      const auto g = random_degree_condition_graph(level, 12, rng);
      EXPECT_LE(g.edges().size(), 12U);
      EXPECT_GE(degree_condition_level(g), level);
    }
  }
}

TEST(Enumeration, Counts) {
  std::size_t count = 0;
  for_each_family(3, {3, 3, 3}, [&](const MatchingFamily&) { return ++count, true; });
  EXPECT_EQ(static_cast<double>(count), family_count(3, {3, 3, 3}));
  count = 0;
  for_each_set_partition(5, [&](const auto&) { return ++count, true; });
  EXPECT_EQ(count, 52U);
  EXPECT_EQ(bell_number(5), 52);
  count = 0;
  for_each_stein_instance(2, [&](const TriHypergraph& h) {
    EXPECT_TRUE(is_regular(h, 2));
    return ++count, true;
  });
  EXPECT_EQ(static_cast<double>(count), stein_count(2));
  count = 0;
  for_each_simple_regular(2, 2, [&](const TriHypergraph& h) {
    EXPECT_TRUE(is_simple(h));
    EXPECT_TRUE(is_regular(h, 2));
    return ++count, true;
  });
  std::size_t brute = 0;
  const auto cube = all_triples({2, 2, 2});
  for (unsigned mask = 0; mask < 256; ++mask) {
    std::vector<Triple> e;
    for (unsigned i = 0; i < 8; ++i) {
      if ((mask >> i) & 1U) e.push_back(cube[i]);
    }
    brute += is_regular(TriHypergraph({2, 2, 2}, e), 2);
  }
  EXPECT_EQ(count, brute);
  EXPECT_EQ(function_fibers(2, 3).size(), 8U);
  EXPECT_EQ(function_fibers(0, 0).size(), 1U);
  EXPECT_TRUE(function_fibers(0, 2).empty());
  EXPECT_EQ(pair_fibers(2, 2, 2, false).size(), 6U);
  EXPECT_EQ(pair_fibers(2, 2, 2, true).size(), 10U);
}

TEST(Generators, SeedDeterminism) {
  Rng a(5), b(5);
  EXPECT_EQ(random_family(4, 4, {3, 3, 2}, a), random_family(4, 4, {3, 3, 2}, b));
  EXPECT_EQ(gen_theorem19_instance(3, a), gen_theorem19_instance(3, b));
  EXPECT_EQ(derive_seed(1, 2), derive_seed(1, 2));
  EXPECT_NE(derive_seed(1, 2), derive_seed(1, 3));
}
