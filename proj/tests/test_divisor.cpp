#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support/test_support.hpp"
#include "toric/divisor.hpp"

namespace toric {
namespace {

using testing::fixture;

Fan p2() { return Fan({{1, 0}, {0, 1}, {-1, -1}}, {Cone{{0, 1}}, Cone{{1, 2}}, Cone{{0, 2}}}); }
Fan f1() {
  return Fan({{1, 0}, {0, 1}, {-1, 1}, {0, -1}},
             {Cone{{0, 1}}, Cone{{1, 2}}, Cone{{2, 3}}, Cone{{3, 0}}});
}
Fan p1() { return Fan({{1}, {-1}}, {Cone{{0}}, Cone{{1}}}); }

TEST(CartierData, P2) {
  const auto phi = cartier_data(p2(), TorusDivisor{0, 0, 1});
  EXPECT_EQ(phi.cartier(0), (LatticeVector{0, 0}));
  EXPECT_EQ(phi.cartier(1), (LatticeVector{1, 0}));
  EXPECT_EQ(phi.cartier(2), (LatticeVector{0, 1}));
}

TEST(CartierData, ZeroDivisor) {
  for (const Fan& f : {p2(), f1(), p1()}) {
    const auto phi = cartier_data(f, TorusDivisor(std::vector<Integer>(f.rays().size(), 0)));
    for (const auto& m : phi.cartier()) EXPECT_TRUE(m.is_zero());
  }
}

TEST(CartierData, F1) {
  const auto phi = cartier_data(f1(), TorusDivisor{1, 0, 0, 0});
  EXPECT_EQ(phi.cartier(0), (LatticeVector{-1, 0}));
  EXPECT_EQ(phi.cartier(1), (LatticeVector{0, 0}));
  EXPECT_EQ(phi.cartier(2), (LatticeVector{0, 0}));
  EXPECT_EQ(phi.cartier(3), (LatticeVector{-1, 0}));
}

TEST(CartierData, Errors) {
  EXPECT_THROW(cartier_data(p2(), TorusDivisor{0, 1}), DimensionMismatch);
  const Fan singular({{1, 0}, {1, 2}, {-1, -1}}, {Cone{{0, 1}}, Cone{{1, 2}}, Cone{{0, 2}}});
  EXPECT_THROW(cartier_data(singular, TorusDivisor{0, 0, 1}), NotUnimodular);
}

TEST(CartierData, SatisfiesDefiningEquations) {
  for (const auto& name : testing::all_fixtures()) {
    const auto v = fixture(name);
    for (std::size_t k = 0; k < v.fan.maximal_cones().size(); ++k)
      for (auto i : v.fan.maximal_cone(k).generators)
        EXPECT_EQ(dot(v.phi.cartier(k), v.fan.ray(i)), -v.divisor[i]) << name;
  }
}

TEST(SupportValue, Examples) {
  const auto phi = cartier_data(p2(), TorusDivisor{0, 0, 1});
  EXPECT_EQ(support_value(phi, RationalVector{Rational(1), Rational(0)}), 0);
  EXPECT_EQ(support_value(phi, RationalVector{Rational(-1), Rational(-1)}), -1);
  EXPECT_EQ(support_value(phi, RationalVector{Rational(0), Rational(0)}), 0);
  EXPECT_EQ(support_value(phi, RationalVector{Rational(-3, 2), Rational(1, 2)}), Rational(-3, 2));
}

TEST(SupportValue, OutsideSupport) {
  const Fan quadrant({{1, 0}, {0, 1}}, {Cone{{0, 1}}});
  const auto phi = cartier_data(quadrant, TorusDivisor{1, 1});
  EXPECT_THROW(support_value(phi, RationalVector{Rational(-1), Rational(0)}), OutsideSupport);
}

TEST(SupportValue, ValueOnRays) {
  for (const auto& name : testing::all_fixtures()) {
    const auto v = fixture(name);
    for (std::size_t i = 0; i < v.fan.rays().size(); ++i)
      EXPECT_EQ(support_value(v.phi, RationalVector(v.fan.ray(i))), Rational(-v.divisor[i])) << name;
  }
}

TEST(Convexity, Examples) {
  EXPECT_TRUE(is_convex(cartier_data(p2(), TorusDivisor{0, 0, 1})));
  EXPECT_TRUE(is_convex(cartier_data(p2(), TorusDivisor{0, 0, 0})));
  EXPECT_FALSE(is_convex(cartier_data(p2(), TorusDivisor{0, 0, -1})));

  EXPECT_TRUE(is_strictly_convex(cartier_data(p2(), TorusDivisor{0, 0, 1})));
  EXPECT_FALSE(is_strictly_convex(cartier_data(f1(), TorusDivisor{1, 0, 0, 0})));
  EXPECT_FALSE(is_strictly_convex(cartier_data(p2(), TorusDivisor{0, 0, 0})));
}

TEST(Positivity, Examples) {
  const auto o1 = cartier_data(p2(), TorusDivisor{0, 0, 1});
  EXPECT_TRUE(is_ample(o1));
  EXPECT_TRUE(is_very_ample(o1));
  EXPECT_TRUE(is_basepoint_free(o1));

  const auto fiber = cartier_data(f1(), TorusDivisor{1, 0, 0, 0});
  EXPECT_TRUE(is_basepoint_free(fiber));
  EXPECT_FALSE(is_ample(fiber));

  const auto anti = cartier_data(p2(), TorusDivisor{0, 0, -1});
  EXPECT_FALSE(is_ample(anti));
  EXPECT_FALSE(is_very_ample(anti));
  EXPECT_FALSE(is_basepoint_free(anti));
}

TEST(Polytope, Examples) {
  const auto p = polytope(cartier_data(p2(), TorusDivisor{0, 0, 1}));
  const std::vector<LatticeVector> expected = {{0, 0}, {0, 1}, {1, 0}};
  ASSERT_TRUE(p.has_vertices());
  EXPECT_EQ(std::vector<LatticeVector>(p.vertices().begin(), p.vertices().end()), expected);
  EXPECT_EQ(p.dim(), 2);

  const auto q = polytope(cartier_data(f1(), TorusDivisor{1, 0, 0, 0}));
  const std::vector<LatticeVector> seg = {{-1, 0}, {0, 0}};
  EXPECT_EQ(std::vector<LatticeVector>(q.vertices().begin(), q.vertices().end()), seg);
  EXPECT_EQ(q.dim(), 1);

  const auto r = polytope(cartier_data(p1(), TorusDivisor{0, 1}));
  const std::vector<LatticeVector> unit = {{0}, {1}};
  EXPECT_EQ(std::vector<LatticeVector>(r.vertices().begin(), r.vertices().end()), unit);
  EXPECT_TRUE(r.contains(LatticeVector{0}));
  EXPECT_TRUE(r.contains(LatticeVector{1}));
  EXPECT_FALSE(r.contains(LatticeVector{2}));
  EXPECT_TRUE(r.contains(LatticeVector{2}, 2));
}

TEST(Polytope, NotBasepointFreeHasNoVertices) {
  const auto p = polytope(cartier_data(p2(), TorusDivisor{0, 0, -1}));
  EXPECT_FALSE(p.has_vertices());
  EXPECT_THROW(p.vertices(), VerticesUnavailable);
  EXPECT_EQ(p.dim(), -1);
  EXPECT_TRUE(p.empty());
}

TEST(Polytope, VerticesSatisfyHRepTightly) {
  for (const auto& name : testing::all_fixtures()) {
    const auto v = fixture(name);
    if (!v.polytope.has_vertices()) continue;
    for (const auto& m : v.polytope.vertices()) {
      EXPECT_TRUE(v.polytope.contains(m)) << name;
      std::size_t tight = 0;
      for (std::size_t i = 0; i < v.fan.rays().size(); ++i)
        tight += dot(m, v.fan.ray(i)) == -v.divisor[i];
      EXPECT_GE(tight, v.fan.dim()) << name;
    }
    // With Cartier vertices available, the H-representation agrees.
    std::vector<RationalVector> from_cartier;
    for (const auto& m : v.polytope.vertices()) from_cartier.emplace_back(m);
    std::sort(from_cartier.begin(), from_cartier.end());
    EXPECT_EQ(std::vector<RationalVector>(v.polytope.hrep_vertices().begin(),
                                          v.polytope.hrep_vertices().end()),
              from_cartier)
        << name;
  }
}

// Global min-formula against random rational directions.
TEST(MinFormula, RandomRationalPoints) {
  testing::Rng rng(99);
  for (const auto& name : testing::all_fixtures()) {
    const auto v = fixture(name);
    if (!is_convex(v.phi)) continue;
    for (int t = 0; t < 500; ++t) {
      const auto u = rng.rational_vector(v.fan.dim(), 40, 9);
      Rational best = dot(v.polytope.vertices()[0], u);
      for (const auto& m : v.polytope.vertices()) best = std::min(best, dot(m, u));
      EXPECT_EQ(support_value(v.phi, u), best) << name << " " << u;
    }
  }
}

TEST(Strictness, DistinctCartierData) {
  for (const auto& name : testing::all_fixtures()) {
    const auto v = fixture(name);
    std::set<LatticeVector> distinct(v.phi.cartier().begin(), v.phi.cartier().end());
    const bool pairwise_distinct = distinct.size() == v.phi.cartier().size();
    if (is_strictly_convex(v.phi)) EXPECT_TRUE(pairwise_distinct) << name;
    // Converse on convex divisors of the suite.
    if (is_convex(v.phi) && pairwise_distinct) EXPECT_TRUE(is_strictly_convex(v.phi)) << name;
  }
}

TEST(Scaling, CartierDataAndConvexity) {
  for (const auto& name : testing::all_fixtures()) {
    const auto v = fixture(name);
    for (long k = 1; k <= 4; ++k) {
      const auto phik = cartier_data(v.fan, v.divisor.scaled(k));
      for (std::size_t c = 0; c < v.fan.maximal_cones().size(); ++c)
        EXPECT_EQ(phik.cartier(c), v.phi.cartier(c).scaled(k)) << name;
      EXPECT_EQ(is_convex(phik), is_convex(v.phi)) << name;
      EXPECT_EQ(is_strictly_convex(phik), is_strictly_convex(v.phi)) << name;
      if (is_convex(v.phi)) {
        const auto pk = polytope(phik);
        std::set<LatticeVector> scaled;
        for (const auto& m : v.polytope.vertices()) scaled.insert(m.scaled(k));
        EXPECT_EQ(std::set<LatticeVector>(pk.vertices().begin(), pk.vertices().end()), scaled) << name;
      }
    }
  }
}

TEST(Sum, ConvexPlusConvexIsConvex) {
  const std::vector<std::pair<Fan, std::vector<TorusDivisor>>> suites = {
      {p2(), {{0, 0, 1}, {0, 0, 2}, {1, 0, 0}, {0, 0, 0}, {0, 0, -1}}},
      {f1(), {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}, {1, 0, 0, -1}}},
  };
  for (const auto& [fan, divisors] : suites)
    for (const auto& a : divisors)
      for (const auto& b : divisors) {
        const auto pa = cartier_data(fan, a);
        const auto pb = cartier_data(fan, b);
        if (is_convex(pa) && is_convex(pb)) EXPECT_TRUE(is_convex(cartier_data(fan, a + b)));
      }
}

TEST(F1, SectionOfNegativeCurveIsNotNef) {
  // D = D_4 (the ray (0,-1)): <m_sigma, v> < -a on some outside ray.
  const auto phi = cartier_data(f1(), TorusDivisor{0, 0, 0, 1});
  EXPECT_TRUE(is_convex(phi));
  const auto psi = cartier_data(f1(), TorusDivisor{0, 1, 0, 0});
  EXPECT_FALSE(is_convex(psi));
}

}  // namespace
}  // namespace toric
