#include <gtest/gtest.h>

#include "helpers.hpp"
#include "webx/oracle.hpp"

using namespace webx;
using namespace webx::test;

TEST(BruteCleanSet, Examples) {
  const auto inst = plant_subdivision(6, 2, 0.0, 0);
  const auto r = oracle::brute_clean_set(inst.graph, inst.web, 3);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(*r.witness, (VertexSet{0, 1, 2}));
  EXPECT_TRUE(oracle::brute_clean_set(inst.graph, inst.web, 7).absent());
  EXPECT_TRUE(oracle::brute_clean_set(complete_graph(6), complete_web(6), 2).absent());
}

TEST(BruteCleanSet, RefusesOverGuard) {
  const auto inst = plant_subdivision(21, 1, 0.0, 0);
  const auto r = oracle::brute_clean_set(inst.graph, inst.web, 2);
  EXPECT_EQ(r.answer, oracle::Answer::refused);
  EXPECT_FALSE(r.note.empty());
}

TEST(BruteRamseyMin, Examples) {
  const auto r33 = oracle::brute_ramsey_min(2, 2, 3, 8);
  ASSERT_TRUE(r33.found());
  EXPECT_EQ(*r33.witness, 6u);
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(*oracle::brute_ramsey_min(1, 2, n, 8).witness, n);
  EXPECT_EQ(*oracle::brute_ramsey_min(3, 4, 3, 8).witness, 3u);
  EXPECT_EQ(*oracle::brute_ramsey_min(2, 1, 4, 10).witness, 7u);
  EXPECT_TRUE(oracle::brute_ramsey_min(2, 2, 3, 5).absent());
  EXPECT_EQ(oracle::brute_ramsey_min(2, 2, 4, 17, 1000).answer, oracle::Answer::refused);
}

TEST(BruteInduced, Examples) {
  const auto k4 = oracle::brute_induced(complete_graph(4), 3);
  ASSERT_TRUE(k4.found());
  EXPECT_TRUE(k4.witness->clique.has_value());
  const auto c4 = oracle::brute_induced(cycle_graph(4), 2);
  EXPECT_TRUE(c4.witness->biclique.has_value());
  const auto sub = plant_subdivision(5, 2, 0.0, 0);
  const auto r = oracle::brute_induced(sub.graph, 3);
  EXPECT_TRUE(r.absent());
  EXPECT_FALSE(r.witness->clique || r.witness->biclique);
  EXPECT_EQ(oracle::brute_induced(path_graph(17), 2).answer, oracle::Answer::refused);
}

TEST(Oracle, OutputsPassVerifiers) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t k = 3 + seed % 4;
    const auto inst = plant_subdivision(k, random_lengths(k, 1, 3, seed), 0.25, seed);
    for (std::size_t s = 1; s <= 3; ++s) {
      const auto cs = oracle::brute_clean_set(inst.graph, inst.web, s);
      if (cs.found()) {
        EXPECT_TRUE(certify::verify_clean_set(inst.graph, inst.web, {*cs.witness}, s));
      }
    }
    const auto pp = oracle::brute_pinned_pair(inst.graph, inst.web, 1, 1);
    if (pp.found()) {
      EXPECT_TRUE(certify::verify_pinned_pair(inst.graph, inst.web, *pp.witness, 1, 1));
    }
    const auto tf = oracle::brute_touching_families(inst.graph, inst.web, 1);
    if (tf.found()) {
      EXPECT_TRUE(certify::verify_touching_families(inst.graph, inst.web, *tf.witness, 1));
    }
  }
}
