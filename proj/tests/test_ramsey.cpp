#include <gtest/gtest.h>

#include "webx/bound.hpp"
#include "webx/oracle.hpp"
#include "webx/ramsey.hpp"

using namespace webx;

namespace {

// 2-colouring of the 15 pairs of a 6-set from the bits of `mask`.
ColoringTable pair_colouring(std::size_t n, std::uint64_t mask) {
  std::vector<Color> by_rank(comb::binomial(n, 2));
  for (std::size_t i = 0; i < by_rank.size(); ++i) by_rank[i] = (mask >> i) & 1u;
  return ColoringTable::from_colex(n, 2, 2, by_rank);
}

ColoringTable random_table(std::size_t ground, std::size_t arity, std::uint64_t palette, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Color> by_rank(comb::binomial(ground, arity));
  for (auto& c : by_rank) c = static_cast<Color>(rng() % palette);
  return ColoringTable::from_colex(ground, arity, palette, by_rank);
}

}  // namespace

TEST(Combinatorics, ColexRankAndSubsets) {
  std::vector<std::size_t> idx = comb::first_subset(3);
  for (std::uint64_t r = 0; r < comb::binomial(7, 3); ++r) {
    EXPECT_EQ(comb::colex_rank(idx), r);
    comb::next_colex(idx);
  }
  std::size_t count = 0;
  comb::for_each_subset(6, 2, [&](const std::vector<std::size_t>&) { return ++count, true; });
  EXPECT_EQ(count, 15u);
  EXPECT_EQ(comb::binomial(5, 7), 0u);
}

TEST(ColoringTable, RejectsOutOfPaletteAndBadQueries) {
  ColoringTable t(4, 2, 2, [](std::span<const Index> s) { return Color(s[0] + s[1]); });
  const std::vector<Index> ok{0, 1}, bad{1, 3}, rev{1, 0};
  EXPECT_EQ(t.color(ok), 1u);
  EXPECT_THROW(t.color(bad), InputError);
  EXPECT_THROW(t.color(rev), InputError);
}

TEST(FindMonochromatic, SmallNIsTrivial) {
  const auto t = random_table(6, 3, 4, 1);
  for (auto mode : {SearchMode::exact, SearchMode::constructive}) {
    const auto r2 = find_monochromatic(t, 2, mode);
    ASSERT_TRUE(r2.found());
    EXPECT_EQ(r2.witness->subset.size(), 2u);
    const auto r3 = find_monochromatic(t, 3, mode);
    ASSERT_TRUE(r3.found());
    EXPECT_EQ(r3.witness->color, t.color(r3.witness->subset));
  }
}

TEST(FindMonochromatic, SingleColourWholeSet) {
  ColoringTable t(7, 3, 1, [](std::span<const Index>) { return Color{0}; });
  for (auto mode : {SearchMode::exact, SearchMode::constructive}) {
    const auto r = find_monochromatic(t, 7, mode);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.witness->subset.size(), 7u);
  }
  EXPECT_TRUE(find_monochromatic(t, 8, SearchMode::exact).absent());
}

TEST(FindMonochromatic, EveryTwoColouringOfK6HasATriangle) {
  for (std::uint64_t mask = 0; mask < (1u << 15); ++mask) {
    const auto r = find_monochromatic(pair_colouring(6, mask), 3, SearchMode::exact);
    ASSERT_TRUE(r.found()) << mask;
  }
}

TEST(FindMonochromatic, PentagonColouringOfK5AvoidsTriangles) {
  std::vector<Color> by_rank(10);
  std::vector<std::size_t> idx{0, 1};
  for (std::size_t r = 0; r < 10; ++r, comb::next_colex(idx)) {
    const auto d = idx[1] - idx[0];
    by_rank[r] = (d == 1 || d == 4) ? 0 : 1;
  }
  const auto t = ColoringTable::from_colex(5, 2, 2, by_rank);
  EXPECT_TRUE(find_monochromatic(t, 3, SearchMode::exact).absent());
  EXPECT_TRUE(find_monochromatic(t, 3, SearchMode::constructive).inconclusive());
}

TEST(FindMonochromatic, ExactReturnsColexFirst) {
  // Colour 0 only on pairs inside {1,2,4}.
  ColoringTable t(6, 2, 2, [](std::span<const Index> s) {
    auto in = [](Index x) { return x == 1 || x == 2 || x == 4; };
    return Color(in(s[0]) && in(s[1]) ? 0 : 1);
  });
  const auto r = find_monochromatic(t, 3, SearchMode::exact);
  ASSERT_TRUE(r.found());
  // {0,1,2} mixes colours; {0,1,3} is the first monochromatic triple.
  EXPECT_EQ(r.witness->subset, (std::vector<Index>{0, 1, 3}));
  EXPECT_EQ(r.witness->color, 1u);
}

TEST(FindMonochromatic, BudgetGivesInconclusive) {
  const auto t = pair_colouring(5, 0b0110100110);
  const auto r = find_monochromatic(t, 4, SearchMode::exact, Budget::steps(2));
  EXPECT_TRUE(r.inconclusive());
}

TEST(FindMonochromatic, ConstructiveWitnessesAreValid) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto t = random_table(12, 2 + seed % 2, 2, seed);
    for (std::size_t n = 3; n <= 5; ++n) {
      const auto c = find_monochromatic(t, n, SearchMode::constructive);
      const auto e = find_monochromatic(t, n, SearchMode::exact);
      if (c.found()) {
        EXPECT_TRUE(verify_monochromatic(t, *c.witness, n));
        EXPECT_TRUE(e.found());
      }
      if (e.found()) {
        EXPECT_TRUE(verify_monochromatic(t, *e.witness, n));
      }
    }
  }
}

TEST(FindMonochromatic, ConstructiveSucceedsAtItsBound) {
  // Ground sizes at rho_upper for small parameters: constructive must succeed.
  for (auto [f, g, n] : std::vector<std::array<std::uint64_t, 3>>{{2, 1, 4}, {3, 1, 3}, {2, 2, 3}, {3, 2, 3}, {2, 2, 4}}) {
    const auto bound = rho_upper(f, g, n).as_u64();
    ASSERT_TRUE(bound.has_value());
    if (*bound > 60) continue;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto t = random_table(*bound, g, f, seed);
      const auto r = find_monochromatic(t, n, SearchMode::constructive);
      EXPECT_TRUE(r.found()) << f << "," << g << "," << n << " seed " << seed;
    }
  }
}

TEST(FindMonochromatic, CorruptedWitnessIsRejected) {
  const auto t = pair_colouring(6, 0b101010101010101);
  const auto r = find_monochromatic(t, 3, SearchMode::exact);
  ASSERT_TRUE(r.found());
  auto w = *r.witness;
  w.color ^= 1u;
  EXPECT_FALSE(verify_monochromatic(t, w, 3));
  w = *r.witness;
  w.subset.pop_back();
  EXPECT_FALSE(verify_monochromatic(t, w, 3));
  w = *r.witness;
  std::swap(w.subset[0], w.subset[1]);
  EXPECT_FALSE(verify_monochromatic(t, w, 3));
}

TEST(FindMonochromatic, DeterministicPerTable) {
  const auto t = random_table(10, 3, 3, 5);
  for (auto mode : {SearchMode::exact, SearchMode::constructive}) {
    const auto a = find_monochromatic(t, 4, mode);
    const auto b = find_monochromatic(random_table(10, 3, 3, 5), 4, mode);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(RhoUpper, Examples) {
  for (std::uint64_t f = 1; f <= 5; ++f) {
    for (std::uint64_t n = 1; n <= 6; ++n) EXPECT_EQ(rho_upper(f, 1, n), BigBound(f * (n - 1) + 1));
  }
  EXPECT_EQ(rho_upper(7, 4, 3), BigBound(3));
  EXPECT_EQ(rho_upper(7, 4, 4), BigBound(4));
  EXPECT_GE(rho_upper(2, 2, 3).value(), 6);
  EXPECT_EQ(rho_upper(1, 3, 9), BigBound(9));
}

TEST(RhoUpper, MonotoneInEachArgument) {
  for (std::uint64_t f = 1; f <= 3; ++f) {
    for (std::uint64_t g = 1; g <= 3; ++g) {
      for (std::uint64_t n = 1; n <= 6; ++n) {
        const auto here = rho_upper(f, g, n);
        EXPECT_NE(less_than(rho_upper(f + 1, g, n), here), std::optional<bool>(true));
        EXPECT_NE(less_than(rho_upper(f, g, n + 1), here), std::optional<bool>(true));
        // n <= g pins the value to n, so growth in g is only meaningful past that.
        if (n > g + 1) {
          EXPECT_NE(less_than(rho_upper(f, g + 1, n), here), std::optional<bool>(true));
        }
      }
    }
  }
}

TEST(RhoUpper, SoundAgainstBruteForce) {
  for (auto [f, g, n] : std::vector<std::array<std::size_t, 3>>{
           {2, 2, 3}, {2, 1, 3}, {3, 1, 3}, {2, 2, 2}, {1, 2, 5}, {2, 3, 3}, {3, 2, 2}, {2, 1, 5}}) {
    const auto brute = oracle::brute_ramsey_min(f, g, n, 10);
    ASSERT_TRUE(brute.found()) << f << g << n;
    const auto upper = rho_upper(f, g, n);
    EXPECT_FALSE(less_than(upper, BigBound(*brute.witness)).value_or(true)) << f << g << n;
  }
}

TEST(RhoUpper, ExactModeNeverAbsentAtTheBound) {
  for (std::uint64_t f = 1; f <= 3; ++f) {
    for (std::uint64_t g = 1; g <= 3; ++g) {
      for (std::uint64_t n = 1; n <= 5; ++n) {
        const auto b = rho_upper(f, g, n).as_u64();
        if (!b || *b > 8) continue;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
          const auto t = random_table(*b, g, f, seed * 31 + f);
          EXPECT_FALSE(find_monochromatic(t, n, SearchMode::exact).absent()) << f << g << n;
        }
      }
    }
  }
}

TEST(RhoUpper, HugeValuesOverflowWithExpression) {
  const auto big = rho_upper(std::uint64_t{1} << 15, 4, 9);
  EXPECT_TRUE(big.is_overflow());
  EXPECT_EQ(big.expr(), "rho(32768,4,9)");
  EXPECT_THROW(big.value(), InputError);
  EXPECT_EQ(less_than(BigBound(5), big), std::optional<bool>(true));
}

TEST(BoundChain, ArgumentChecks) {
  EXPECT_EQ(bound_chain(3, 1, 1).xi_set_size, 6u);
  EXPECT_EQ(bound_chain(1, 1, 1).xi_set_size, 4u);
  EXPECT_EQ(pinned_target(BigBound(1), BigBound(1), BigBound(1)), BigBound(5));
  EXPECT_EQ(interior_target(BigBound(2), BigBound(9)), BigBound(9));
  const auto c = bound_chain(1, 4, 3);
  EXPECT_EQ(c.xi_palette, BigBound(std::uint64_t{1} << 16));
  EXPECT_EQ(c.xi_target, BigBound(6));
  EXPECT_EQ(c.sigma_c, c.xi);
  EXPECT_EQ(c.tau_s, c.sigma);
  EXPECT_EQ(c.omega, c.theta);
}

TEST(BoundChain, Deterministic) {
  const auto a = bound_chain(2, 5, 2);
  const auto b = bound_chain(2, 5, 2);
  EXPECT_EQ(a.omega, b.omega);
  EXPECT_EQ(a.omega.expr(), b.omega.expr());
}
