#pragma once

// Root data of a connected reductive group: a product of simple factors
// (given by Cartan type) times a central torus.
//
// Coordinates: every WeightVector is written in the standard basis, which
// is the fundamental weights of the simply connected semisimple part (factor
// by factor, Bourbaki numbering) followed by `central_rank` central
// characters. Simple root i of the semisimple part is paired with
// coordinate i, so <alpha_i^vee, v> = v[i] and s_i(v) = v - v[i] alpha_i.

#include <cstddef>
#include <string>
#include <vector>

#include "weylindex/halfspace.hpp"
#include "weylindex/linalg.hpp"
#include "weylindex/rational.hpp"

namespace weylindex {

struct CartanType {
  char letter;  // A..G
  int rank;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

std::string to_string(const CartanType& t);

/// Cartan matrix with entries <alpha_i^vee, alpha_j>, Bourbaki numbering.
/// Throws Error(Errc::invalid_cartan_type).
linalg::Matrix cartan_matrix(const CartanType& t);

struct RootSystem {
  std::vector<CartanType> factors;
  int central_rank = 0;
  int total_rank = 0;
  std::vector<WeightVector> positive_roots;
  std::vector<WeightVector> simple_roots;
  WeightVector rho;
  linalg::Matrix gram;
  /// First standard coordinate of each simple factor.
  std::vector<std::size_t> factor_offsets;

  int semisimple_rank() const { return total_rank - central_rank; }
  /// Dimension n of the group: k + 2|R+|.
  int dimension() const { return total_rank + 2 * static_cast<int>(positive_roots.size()); }
  std::string describe() const;
};

RootSystem build_root_system(const std::vector<CartanType>& factors, int central_rank);

/// Copy of `rs` with the invariant form on simple factor `factor` multiplied
/// by `scale` > 0. No reported index may depend on such a rescaling.
RootSystem rescale_factor(const RootSystem& rs, std::size_t factor, const Rational& scale);

Rational inner_product(const RootSystem& rs, const WeightVector& v, const WeightVector& w);

/// Simple reflection s_i for a semisimple simple-root index i.
WeightVector reflect(const RootSystem& rs, std::size_t i, const WeightVector& v);

/// Full Weyl orbit of v, lexicographically sorted, without duplicates.
std::vector<WeightVector> weyl_orbit(const RootSystem& rs, const WeightVector& v);

long weyl_order(const RootSystem& rs);

bool is_dominant(const RootSystem& rs, const WeightVector& v);

/// H-description of the dominant chamber: one halfspace <-e_i, x> <= 0 per
/// simple root; central directions are unconstrained.
std::vector<Halfspace> chamber_inequalities(const RootSystem& rs);

/// The character lattice L_T, as a basis matrix whose columns are the basis
/// vectors in standard coordinates.
struct LatticeSpec {
  linalg::Matrix basis;
  linalg::Matrix basis_inverse;
  Rational covolume;
  std::string name;

  static LatticeSpec from_basis(linalg::Matrix basis, std::string name = "custom");
  static LatticeSpec standard(std::size_t dim);
  static LatticeSpec simply_connected(const RootSystem& rs);
  /// Root lattice on the semisimple block, identity on the central block.
  static LatticeSpec adjoint(const RootSystem& rs);

  std::size_t rank() const { return basis.size(); }
  WeightVector coordinates(const WeightVector& v) const { return linalg::apply(basis_inverse, v); }
  bool contains(const WeightVector& v) const;
  /// Rescales a covector to be primitive integral in the dual lattice
  /// (positively, so halfspace orientation is preserved).
  Halfspace primitive(const Halfspace& h) const;
};

}  // namespace weylindex
