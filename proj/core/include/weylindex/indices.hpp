#pragma once

// Enumerative invariants of a reductive group from its root data and the
// weights of a representation:
//
//   degree            H^n        = n! int_{P cap D} F(x, x) dx
//   chern_index(i)    S_i H^{n-i} = (n-i)! int_{P cap D} [D]_i F(x, x) dx
//   euler             chi(H)     = (-1)^{n-1} sum_j (-1)^j (n-j)! int [D]_j F(x, x) dx
//
// where P is the weight polytope, D the dominant chamber and the measure
// gives the character lattice covolume 1. Chern indices on regular data are
// also available through the flag subdivision of P cap D, which never
// integrates anything.

#include <string>
#include <vector>

#include "weylindex/polyalg.hpp"
#include "weylindex/polytope.hpp"
#include "weylindex/quadrature.hpp"
#include "weylindex/rootsys.hpp"

namespace weylindex {

struct IndexResult {
  Rational value;
  bool degenerate = false;  // dim(P cap D) < k
};

/// Convex hull of the Weyl closure of `weights`. All weights must lie in one
/// coset of the lattice; throws Errc::weight_outside_lattice naming the
/// first offender.
Polytope weight_polytope(const RootSystem& rs, const LatticeSpec& lattice, const std::vector<WeightVector>& weights);

/// int_{Q} [D]_j F(x, x) dx for j = 0 .. 2|R+|, Q = P cap D.
std::vector<IntegrationResult> graded_integrals(const RootSystem& rs, const Polytope& truncated,
                                                IntegrationMethod method = IntegrationMethod::monomial);

IndexResult degree(const RootSystem& rs, const LatticeSpec& lattice, const std::vector<WeightVector>& weights,
                   IntegrationMethod method = IntegrationMethod::monomial);

/// 0 <= i <= n. Classes with n - k < i <= n vanish and give 0; anything else
/// throws Errc::index_out_of_range.
IndexResult chern_index(const RootSystem& rs, const LatticeSpec& lattice, const std::vector<WeightVector>& weights,
                        int i, IntegrationMethod method = IntegrationMethod::monomial);

/// sum over full flags of c_F * sum_{|m| = n-k-i} pol(F_i; lambda_{F_1}^{m_1}, ..., lambda_{F_k}^{m_k})
/// with F_i = (n-k-i)! [D]_i F(x, x). Requires a regular weight polytope
/// (Errc::not_regular) and 0 <= i <= n - k.
IndexResult chern_index_flag_path(const RootSystem& rs, const LatticeSpec& lattice,
                                  const std::vector<WeightVector>& weights, int i);

IndexResult euler_characteristic(const RootSystem& rs, const LatticeSpec& lattice,
                                 const std::vector<WeightVector>& weights,
                                 IntegrationMethod method = IntegrationMethod::monomial);

/// Multilinear extension of the degree to n different representations, by
/// inclusion-exclusion over Minkowski sums of their weight polytopes.
IndexResult mixed_degree(const RootSystem& rs, const LatticeSpec& lattice,
                         const std::vector<std::vector<WeightVector>>& weight_lists,
                         IntegrationMethod method = IntegrationMethod::monomial);

}  // namespace weylindex
