#pragma once

// Exact integration of polynomials over simplices and polytopes. The
// measure is Lebesgue measure normalized so that the lattice has covolume 1.

#include "weylindex/polyalg.hpp"
#include "weylindex/polytope.hpp"

namespace weylindex {

enum class IntegrationMethod { monomial, polarization };

const char* to_string(IntegrationMethod m);

/// Affine pullback to the standard simplex, then
/// int_{std} u^b du = prod b_i! / (|b| + k)!.
Rational integrate_simplex_monomial(const MultiPoly& p, const Simplex& s, const LatticeSpec& lattice);

/// Vol(s) / C(d+k, k) * sum over multisets of vertices of the polarization
/// of p. p must be homogeneous.
Rational integrate_simplex_polarization(const MultiPoly& p, const Simplex& s, const LatticeSpec& lattice);

struct IntegrationResult {
  Rational value;
  bool degenerate = false;  // P was lower-dimensional; value is 0
};

IntegrationResult integrate_polytope(const MultiPoly& p, const Polytope& poly,
                                     IntegrationMethod method = IntegrationMethod::monomial);

/// Integral over a given triangulation (used to check triangulation
/// independence).
Rational integrate_simplices(const MultiPoly& p, const std::vector<Simplex>& simplices, const LatticeSpec& lattice,
                             IntegrationMethod method = IntegrationMethod::monomial);

}  // namespace weylindex
