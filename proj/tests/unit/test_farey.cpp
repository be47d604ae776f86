#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "twobridge/error.hpp"
#include "twobridge/farey.hpp"
#include "twobridge/slope.hpp"

#include "orbit_oracle.hpp"

using namespace twobridge;
using Int = std::int64_t;

namespace {

using namespace oracle;

std::vector<Slope> grid(Int max_den) {
  auto out = slopes_between(Slope::integer(-2), Slope::integer(2), max_den);
  out.push_back(Slope::infinity());
  return out;
}

std::vector<Slope> open_unit(Int max_p) {
  std::vector<Slope> out;
  for (Int p = 2; p <= max_p; ++p) {
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(q, p) == 1) out.emplace_back(q, p);
    }
  }
  return out;
}

}  // namespace

TEST(Reflection, EdgeExamples) {
  const Reflection neg = reflection_in_edge(Slope::infinity(), Slope(0, 1));
  EXPECT_EQ(apply(neg, Slope(2, 5)), Slope(-2, 5));
  EXPECT_EQ(apply(neg, Slope::infinity()), Slope::infinity());
  const Reflection m = reflection_in_edge(Slope(1, 3), Slope(0, 1));
  EXPECT_EQ(m, Reflection::from_entries(1, 0, 6, -1));
  EXPECT_EQ(m.to_string(), "(1,0;6,-1)");
  EXPECT_EQ(apply(m, Slope::infinity()), Slope(1, 6));
  EXPECT_EQ(apply(m, Slope(1, 3)), Slope(1, 3));
  EXPECT_EQ(apply(m, Slope(0, 1)), Slope(0, 1));
  const Reflection two_minus = reflection_in_edge(Slope::infinity(), Slope(1, 1));
  for (Int n = -5; n <= 5; ++n) EXPECT_EQ(apply(two_minus, Slope(n, 3)), Slope(6 - n, 3));
  EXPECT_THROW(Reflection::from_entries(1, 0, 0, 1), DomainError);
  EXPECT_THROW(reflection_in_edge(Slope(1, 3), Slope(2, 3)), DomainError);
}

TEST(Reflection, MatchesConjugatedDiagonal) {
  const auto slopes = slopes_between(Slope::integer(-2), Slope::integer(2), 15);
  for (const auto& x : slopes) {
    for (const auto& y : slopes) {
      if (!(x < y) || !farey_neighbors(x, y)) continue;
      const Reflection m = reflection_in_edge(x, y);
      const Mat o = edge_reflection(to_frac(x), to_frac(y));
      EXPECT_EQ(m.determinant(), -1);
      EXPECT_EQ(apply(m, x), x);
      EXPECT_EQ(apply(m, y), y);
      for (const auto& z : slopes) {
        EXPECT_EQ(to_frac(apply(m, z)), act(o, to_frac(z)));
        EXPECT_EQ(apply(m, apply(m, z)), z);
      }
    }
  }
}

TEST(GammaInfFold, IntoTheUnitInterval) {
  EXPECT_EQ(gamma_inf_fold(Slope(7, 3)).image, Slope(1, 3));
  EXPECT_EQ(gamma_inf_fold(Slope(-2, 5)).image, Slope(2, 5));
  EXPECT_EQ(gamma_inf_fold(Slope(-2, 5)).reflections.size(), 1u);
  EXPECT_EQ(gamma_inf_fold(Slope(1, 2)).image, Slope(1, 2));
  EXPECT_TRUE(gamma_inf_fold(Slope(1, 2)).reflections.empty());
  EXPECT_EQ(gamma_inf_fold(Slope::infinity()).image, Slope::infinity());

  for (const auto& s : slopes_between(Slope::integer(-9), Slope::integer(9), 12)) {
    const Fold f = gamma_inf_fold(s);
    // x mod 2 in [0, 2), then x -> 2 - x above 1.
    Int n = ((s.num() % (2 * s.den())) + 2 * s.den()) % (2 * s.den());
    if (n > s.den()) n = 2 * s.den() - n;
    EXPECT_EQ(f.image, Slope(n, s.den())) << s.to_string();
    Slope x = s;
    for (const auto& m : f.reflections) x = apply(m, x);
    EXPECT_EQ(x, f.image);
  }
}

TEST(GammaRFold, LeavesTheOpenInterval) {
  for (const auto& r : open_unit(14)) {
    const auto [r1, r2] = fundamental_endpoints(r);
    for (const auto& s : slopes_between(r1, r2, 40)) {
      if (s == r1 || s == r2 || s == r) continue;
      const Fold f = gamma_r_fold(s, r);
      EXPECT_TRUE(f.image.is_infinite() || f.image <= r1 || r2 <= f.image)
          << s.to_string() << " r=" << r.to_string() << " -> " << f.image.to_string();
      Slope x = s;
      for (const auto& m : f.reflections) {
        EXPECT_EQ(apply(m, r), r);
        x = apply(m, x);
      }
      EXPECT_EQ(x, f.image);
    }
    EXPECT_THROW(gamma_r_fold(r1, r), DomainError);
  }
}

TEST(ReduceToFundamental, Examples) {
  const auto t = reduce_to_fundamental(Slope::infinity(), Slope(1, 3));
  EXPECT_EQ(t.result, Slope::infinity());
  EXPECT_TRUE(t.steps.empty());
  const auto t2 = reduce_to_fundamental(Slope(1, 6), Slope(1, 3));
  EXPECT_EQ(t2.result, Slope::infinity());
  ASSERT_EQ(t2.steps.size(), 1u);
  EXPECT_EQ(t2.steps[0].matrix, Reflection::from_entries(1, 0, 6, -1));
  const auto t3 = reduce_to_fundamental(Slope(1, 2), Slope(1, 3));
  EXPECT_EQ(t3.result, Slope(1, 2));
  EXPECT_TRUE(t3.steps.empty());
}

TEST(ReduceToFundamental, TraceComposesAndLandsInTheDomain) {
  for (const auto& r : open_unit(12)) {
    for (const auto& s : grid(20)) {
      const ReductionTrace t = reduce_to_fundamental(s, r);
      EXPECT_EQ(t.start, s);
      Slope x = s;
      for (const auto& step : t.steps) {
        EXPECT_EQ(step.matrix.determinant(), -1);
        x = apply(step.matrix, x);
        EXPECT_EQ(x, step.image);
      }
      EXPECT_EQ(x, t.result);
      EXPECT_TRUE(t.result.is_infinite() || t.result == r || in_fundamental_intervals(t.result, r))
          << s.to_string() << " r=" << r.to_string();
      EXPECT_EQ(reduce_to_fundamental(t.result, r).result, t.result);
    }
  }
}

TEST(Orbit, Examples) {
  EXPECT_TRUE(is_orbit_member(Slope::infinity(), Slope::infinity()));
  EXPECT_FALSE(is_orbit_member(Slope(0, 1), Slope::infinity()));
  EXPECT_FALSE(is_orbit_member(Slope(1, 1), Slope(0, 1)));
  EXPECT_TRUE(is_orbit_member(Slope(1, 6), Slope(1, 3)));
  EXPECT_FALSE(is_orbit_member(Slope(1, 2), Slope(1, 3)));
  EXPECT_EQ(orbit_generators(Slope(1, 3)).size(), 4u);
  EXPECT_EQ(orbit_generators(Slope(0, 1)).size(), 3u);
  EXPECT_EQ(orbit_generators(Slope::infinity()).size(), 2u);
}

TEST(Orbit, MembershipMatchesMatrixClosure) {
  const Int max_den = 12;
  const Int bound = 32 * max_den;
  std::vector<Slope> rs = open_unit(10);
  for (Int n = -1; n <= 3; ++n) rs.push_back(Slope::integer(n));
  rs.push_back(Slope::infinity());
  for (const auto& r : rs) {
    const auto orbit = null_orbit(r, bound);
    const bool bfs_domain = r.is_infinite() || (Slope(0, 1) <= r && r <= Slope(1, 1));
    std::set<Slope> lib;
    if (bfs_domain) lib = orbit_bfs(r, {r, Slope::infinity()}, max_den);
    for (const auto& s : grid(max_den)) {
      const bool expected = orbit.count(to_frac(s)) > 0;
      EXPECT_EQ(is_orbit_member(s, r), expected) << s.to_string() << " r=" << r.to_string();
      EXPECT_EQ(classify_orbit(s, r).member, expected);
      if (bfs_domain) {
        EXPECT_EQ(lib.count(s) > 0, expected) << s.to_string() << " r=" << r.to_string();
      }
    }
  }
}

TEST(Orbit, Routes) {
  EXPECT_EQ(classify_orbit(Slope(1, 5), Slope(1, 3)).route, OrbitRoute::Generic);
  EXPECT_EQ(classify_orbit(Slope(1, 5), Slope(0, 1)).route, OrbitRoute::RInteger);
  EXPECT_EQ(classify_orbit(Slope(1, 5), Slope(4, 3)).route, OrbitRoute::Generic);
  EXPECT_EQ(classify_orbit(Slope(1, 5), Slope::infinity()).route, OrbitRoute::RInfinity);
  EXPECT_EQ(to_string(OrbitRoute::RInteger), "R_INTEGER");
  // r is normalized into [0, 1] by the same Γ∞ fold that moves s.
  EXPECT_EQ(classify_orbit(Slope(1, 5), Slope(7, 3)).normalized_r, Slope(1, 3));
}
