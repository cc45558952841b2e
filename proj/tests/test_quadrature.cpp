#include <gtest/gtest.h>

#include "oracles.hpp"
#include "weylindex/error.hpp"
#include "weylindex/quadrature.hpp"

using namespace weylindex;

namespace {

WeightVector w(std::initializer_list<Rational> xs) { return WeightVector(xs); }

MultiPoly mono(std::size_t n, std::vector<int> e, Rational c = 1) {
  MultiPoly p(n);
  p.add_term(e, c);
  return p;
}

}  // namespace

TEST(Quadrature, ConstantIsVolume) {
  auto s = make_simplex({w({0, 0}), w({3, 0}), w({0, 2})});
  auto lat = LatticeSpec::standard(2);
  auto one = MultiPoly::constant(2, 1);
  EXPECT_EQ(integrate_simplex_monomial(one, s, lat), 3);
  EXPECT_EQ(integrate_simplex_polarization(one, s, lat), 3);
}

TEST(Quadrature, OneDimensional) {
  auto a1 = build_root_system({{'A', 1}}, 0);
  auto lat = LatticeSpec::simply_connected(a1);
  auto t2 = mono(1, {2});
  for (int m = 1; m <= 4; ++m) {
    auto s = make_simplex({w({0}), w({m})});
    Rational expected = oracle::integrate_interval({0, 0, 1}, m);
    EXPECT_EQ(expected, Rational(m * m * m) / 3);
    EXPECT_EQ(integrate_simplex_monomial(t2, s, lat), expected);
    EXPECT_EQ(integrate_simplex_polarization(t2, s, lat), expected);
  }
}

TEST(Quadrature, StandardTriangle) {
  auto s = make_simplex({w({0, 0}), w({1, 0}), w({0, 1})});
  EXPECT_EQ(integrate_simplex_monomial(mono(2, {1, 0}), s, LatticeSpec::standard(2)), Rational(1, 6));
  EXPECT_EQ(integrate_simplex_polarization(mono(2, {1, 0}), s, LatticeSpec::standard(2)), Rational(1, 6));
}

TEST(Quadrature, LatticeMeasure) {
  // Same segment, index-2 sublattice: the measure halves.
  auto a1 = build_root_system({{'A', 1}}, 0);
  auto s = make_simplex({w({0}), w({2})});
  auto t2 = mono(1, {2});
  EXPECT_EQ(integrate_simplex_monomial(t2, s, LatticeSpec::adjoint(a1)) * 2,
            integrate_simplex_monomial(t2, s, LatticeSpec::simply_connected(a1)));
}

TEST(Quadrature, PolarizationNeedsHomogeneous) {
  auto s = make_simplex({w({0}), w({1})});
  auto p = mono(1, {2}) + MultiPoly::constant(1, 1);
  try {
    integrate_simplex_polarization(p, s, LatticeSpec::standard(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_homogeneous);
  }
  // integrate_simplices splits into graded parts first.
  EXPECT_EQ(integrate_simplices(p, {s}, LatticeSpec::standard(1), IntegrationMethod::polarization),
            Rational(4, 3));
}

TEST(Quadrature, DegenerateSimplexRejected) {
  Simplex flat{{w({0, 0}), w({1, 1}), w({2, 2})}};
  EXPECT_THROW(integrate_simplex_monomial(mono(2, {1, 0}), flat, LatticeSpec::standard(2)), Error);
}

TEST(Quadrature, Polytopes) {
  auto square = convex_hull({w({0, 0}), w({1, 0}), w({0, 1}), w({1, 1})});
  EXPECT_EQ(integrate_polytope(MultiPoly::constant(2, 1), square).value, 1);
  auto r = integrate_polytope(mono(2, {2, 2}), square, IntegrationMethod::polarization);
  EXPECT_EQ(r.value, Rational(1, 9));
  EXPECT_FALSE(r.degenerate);

  auto flat = convex_hull({w({0, 0}), w({1, 1})});
  auto d = integrate_polytope(MultiPoly::constant(2, 1), flat);
  EXPECT_EQ(d.value, 0);
  EXPECT_TRUE(d.degenerate);
}

TEST(Quadrature, TriangulationIndependence) {
  auto a2 = build_root_system({{'A', 2}}, 0);
  auto hex = convex_hull(weyl_orbit(a2, w({2, 1})), LatticeSpec::simply_connected(a2));
  auto p = mono(2, {3, 1}) + mono(2, {0, 2}, -5) + MultiPoly::constant(2, 2);
  auto pulled = integrate_simplices(p, triangulate(hex), hex.lattice);
  auto coned = integrate_simplices(p, triangulate_from(hex, hex.vertex_barycenter()), hex.lattice);
  auto off_centre = integrate_simplices(p, triangulate_from(hex, w({Rational(1, 3), Rational(1, 5)})), hex.lattice);
  EXPECT_EQ(pulled, coned);
  EXPECT_EQ(pulled, off_centre);
}

TEST(Quadrature, UnimodularInvariance) {
  // x -> M x with M in GL2(Z): int_{M S} p = int_S p(M x).
  linalg::Matrix m{w({2, 1}), w({1, 1})};
  auto s = make_simplex({w({0, 0}), w({1, 0}), w({Rational(1, 2), 2})});
  std::vector<WeightVector> image;
  for (const auto& v : s.points) image.push_back(linalg::apply(m, v));
  auto p = mono(2, {2, 1}) + mono(2, {0, 1}, 3);
  auto lat = LatticeSpec::standard(2);
  EXPECT_EQ(integrate_simplex_monomial(p, make_simplex(image), lat),
            integrate_simplex_monomial(substitute_linear(p, m), s, lat));
}
