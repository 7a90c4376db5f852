#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "support/test_support.hpp"
#include "toric/lelong/grid.hpp"
#include "toric/lelong/weights.hpp"
#include "toric/sections.hpp"

namespace toric::lelong {
namespace {

using testing::fixture;
using Terms = std::vector<std::pair<LatticeVector, std::complex<double>>>;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

GridPoint at(const std::vector<double>& x, const std::vector<double>& th) { return {x, th}; }

TEST(Grid, LayoutAndNodes) {
  const WeightGrid g(GridSpec{1, 8.0, 64, 16});
  EXPECT_EQ(g.size(), 65u * 16u);
  EXPECT_DOUBLE_EQ(g.point(0).x[0], -8.0);
  EXPECT_DOUBLE_EQ(g.point(g.size() - 1).x[0], 8.0);
  // Log index is major: x = 0 is node 32.
  EXPECT_EQ(g.point(32 * 16).x[0], 0.0);
  EXPECT_DOUBLE_EQ(g.point(32 * 16 + 4).theta[0], std::numbers::pi / 2);
}

TEST(Grid, TwoDimensional) {
  const WeightGrid g(GridSpec{2, 4.0, 4, 2});
  EXPECT_EQ(g.size(), 25u * 4u);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(g.point(i).x.size(), 2u);
    for (double v : g.point(i).x) EXPECT_LE(std::abs(v), 4.0);
  }
}

TEST(Grid, RefinedContainsEveryNode) {
  const WeightGrid g(GridSpec{1, 8.0, 16, 4});
  const auto r = g.refined();
  EXPECT_EQ(r.spec().cells, 32u);
  EXPECT_EQ(r.spec().phases, 8u);
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < r.size() && !found; ++j)
      found = r.point(j).x[0] == g.point(i).x[0] && r.point(j).theta[0] == g.point(i).theta[0];
    EXPECT_TRUE(found) << i;
  }
  EXPECT_EQ(WeightGrid(GridSpec{1, 8.0, 16, 1}).refined().spec().phases, 1u);
}

TEST(Grid, Neighbours) {
  const WeightGrid g(GridSpec{1, 8.0, 8, 4});
  const auto corner = g.neighbours(0);  // x = -8, theta = 0: phases wrap, x does not
  EXPECT_EQ(corner.size(), 6u);
  const auto mid = g.neighbours(4 * 4 + 1);
  EXPECT_EQ(mid.size(), 9u);
  const WeightGrid real(GridSpec{1, 8.0, 8, 1});
  EXPECT_EQ(real.neighbours(0).size(), 2u);
  EXPECT_EQ(real.neighbours(3).size(), 3u);
}

TEST(Grid, WithinRadiusAndColumns) {
  WeightGrid g(GridSpec{1, 8.0, 16, 1});
  EXPECT_EQ(g.within_radius(8.0).size(), 17u);
  EXPECT_EQ(g.within_radius(2.0).size(), 5u);
  g.set_column("a", std::vector<double>(g.size(), 1.0));
  EXPECT_TRUE(g.has_column("a"));
  EXPECT_FALSE(g.has_column("b"));
  EXPECT_THROW(g.set_column("b", {1.0}), DimensionMismatch);
  EXPECT_THROW(g.column("b"), std::out_of_range);
  EXPECT_THROW(WeightGrid(GridSpec{1, 8.0, 0, 1}), DimensionMismatch);
}

TEST(Psi, Examples) {
  const auto p1 = fixture("p1_o1").polytope;
  for (double x : {-3.0, -0.5, 0.0, 0.25, 7.0})
    EXPECT_DOUBLE_EQ(psi_eval(p1, LogPoint{{x}}), std::max(0.0, x));
  const auto p2 = fixture("p2_o1").polytope;
  EXPECT_DOUBLE_EQ(psi_eval(p2, LogPoint{{-1.0, 2.0}}), 2.0);
  EXPECT_DOUBLE_EQ(psi_eval(p2, LogPoint{{-1.0, -2.0}}), 0.0);
  EXPECT_DOUBLE_EQ(psi_eval(p2, LogPoint{{3.0, 2.0}}), 3.0);
  for (const auto& name : testing::all_fixtures()) {
    const auto v = fixture(name);
    if (v.polytope.has_vertices())
      EXPECT_EQ(psi_eval(v.polytope, LogPoint{std::vector<double>(v.fan.dim(), 0.0)}), 0.0) << name;
  }
}

TEST(Psi, NeedsVertices) {
  EXPECT_THROW(psi_eval(fixture("p2_antiample").polytope, LogPoint{{0.0, 0.0}}), VerticesUnavailable);
}

TEST(Lambda, Examples) {
  const auto p1 = fixture("p1_o1").polytope;
  EXPECT_DOUBLE_EQ(lambda_eval(p1, LogPoint{{0.0}}), 0.5 * std::log(2.0));
  for (double x : {-700.0, -5.0, 1.5, 700.0}) {
    const double l = lambda_eval(p1, LogPoint{{x}});
    EXPECT_TRUE(std::isfinite(l));
    EXPECT_GE(l, std::max(0.0, x));
    EXPECT_LE(l, std::max(0.0, x) + 0.5 * std::log(2.0) + 1e-12);
  }
}

// psi <= lambda <= psi + (1/2) log r on the default grid.
TEST(Lambda, Sandwich) {
  for (const auto& name : testing::all_fixtures()) {
    const auto v = fixture(name);
    if (!v.polytope.has_vertices()) continue;
    const PolytopeWeights w(v.polytope);
    const double slack = 0.5 * std::log(static_cast<double>(w.lattice_count()));
    const WeightGrid g(GridSpec{v.fan.dim(), 8.0, 64, 1});
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto x = g.point(i).x;
      EXPECT_LE(w.psi(x), w.lambda(x) + 1e-12) << name;
      EXPECT_LE(w.lambda(x), w.psi(x) + slack + 1e-12) << name;
    }
  }
}

// (1/d) <m, x> <= psi(x) for m in dP, checked in exact rationals at grid points.
TEST(Psi, MonomialBoundExact) {
  for (const auto& name : testing::all_fixtures()) {
    const auto v = fixture(name);
    if (!v.polytope.has_vertices()) continue;
    const WeightGrid g(GridSpec{v.fan.dim(), 8.0, 16, 1});
    for (unsigned d = 1; d <= 3; ++d) {
      const auto pts = lattice_points(v.polytope, d);
      for (std::size_t i = 0; i < g.size(); ++i) {
        std::vector<Rational> xr;
        for (double c : g.point(i).x) xr.emplace_back(c);
        const RationalVector x(xr);
        Rational psi = dot(v.polytope.vertices()[0], x);
        for (const auto& m : v.polytope.vertices()) psi = std::max(psi, dot(m, x));
        for (const auto& m : pts) EXPECT_LE(dot(m, x) / Rational(d), psi) << name;
      }
    }
  }
}

TEST(Section, ConstantAndMonomial) {
  const auto p = fixture("p2_o1").polytope;
  const PolySection one(p, 1, Terms{{LatticeVector{0, 0}, 1.0}});
  const TorusPoint z{{std::complex<double>(2.0, 1.0), std::complex<double>(0.0, -0.3)}};
  EXPECT_DOUBLE_EQ(section_log_weight(one, z), 0.0);

  const PolySection mono(p, 2, Terms{{LatticeVector{1, 1}, 1.0}});
  const auto lx = log_point(z);
  EXPECT_NEAR(section_log_weight(mono, z), 0.5 * (lx.x[0] + lx.x[1]), 1e-14);
  EXPECT_LE(section_log_weight(mono, z), psi_eval(p, lx) + 1e-14);
}

TEST(Section, ZeroGivesNegativeInfinity) {
  const auto p = fixture("p1_o1").polytope;
  const PolySection q(p, 2, Terms{{LatticeVector{2}, 1.0}, {LatticeVector{0}, -1.0}});
  EXPECT_EQ(section_log_weight(q, TorusPoint{{1.0}}), kNegInf);
  EXPECT_EQ(section_log_weight(q, TorusPoint{{-1.0}}), kNegInf);
  EXPECT_EQ(section_eval(q, TorusPoint{{1.0}}), std::complex<double>(0.0));
  EXPECT_NEAR(section_log_weight(q, TorusPoint{{std::complex<double>(0.0, 1.0)}}), 0.5 * std::log(2.0), 1e-15);
}

TEST(Section, Validation) {
  const auto p = fixture("p1_o1").polytope;
  EXPECT_THROW(PolySection(p, 1, Terms{{LatticeVector{2}, 1.0}}), InvalidSection);
  EXPECT_THROW(PolySection(p, 1, Terms{{LatticeVector{-1}, 1.0}}), InvalidSection);
  EXPECT_THROW(PolySection(p, 1, Terms{{LatticeVector{0}, 0.0}}), InvalidSection);
  EXPECT_THROW(PolySection(p, 1, Terms{}), InvalidSection);
  EXPECT_NO_THROW(PolySection(p, 2, Terms{{LatticeVector{2}, 1.0}}));
}

TEST(Section, EvaluationAgreesWithLogAbs) {
  const auto p = fixture("p2_o2").polytope;
  const PolySection q(p, 1,
                      Terms{{LatticeVector{0, 0}, {0.3, -1.0}}, {LatticeVector{2, 0}, 2.0},
                            {LatticeVector{1, 1}, {0.0, 0.7}}, {LatticeVector{0, 2}, -0.2}});
  testing::Rng rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 200; ++t) {
    const TorusPoint z{{std::polar(std::exp(u(rng.engine())), u(rng.engine())),
                        std::polar(std::exp(u(rng.engine())), u(rng.engine()))}};
    const double direct = std::log(std::abs(section_eval(q, z)));
    EXPECT_NEAR(section_log_weight(q, z), direct, 1e-10);
  }
}

TEST(Section, PowersStaySymbolic) {
  const auto p = fixture("p1_o1").polytope;
  const PolySection q(p, 1, Terms{{LatticeVector{0}, 0.6}, {LatticeVector{1}, 0.8}});
  const auto q50 = q.pow(50);
  EXPECT_EQ(q50.degree(), 50u);
  const std::vector<double> x{300.0};
  const std::vector<double> th{0.0};
  const double w = section_log_weight(q50, at(x, th));
  EXPECT_TRUE(std::isfinite(w));
  EXPECT_NEAR(w, section_log_weight(q, at(x, th)), 1e-12);
  EXPECT_THROW(q.pow(0), InvalidSection);
  const auto s = q.scaled(2.0);
  EXPECT_NEAR(s.log_abs(at(x, th)), std::log(2.0) + q.log_abs(at(x, th)), 1e-12);
  EXPECT_THROW(q.scaled(0.0), InvalidSection);
}

TEST(Laurent, LargeModuliDoNotOverflow) {
  const LaurentPolynomial f(1, Terms{{LatticeVector{3}, 1.0}, {LatticeVector{-2}, 1.0}});
  const std::vector<double> th{0.0};
  EXPECT_NEAR(f.log_abs(at({600.0}, th)), 1800.0, 1e-9);
  EXPECT_NEAR(f.log_abs(at({-600.0}, th)), 1200.0, 1e-9);
  EXPECT_THROW(LaurentPolynomial(2, Terms{{LatticeVector{1}, 1.0}}), DimensionMismatch);
}

}  // namespace
}  // namespace toric::lelong
