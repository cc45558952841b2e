#pragma once

// Exact convex geometry over the rationals: hulls, chamber truncation,
// triangulation, support numbers, face census, regularity and the flag
// subdivision of P cap D.

#include <cstddef>
#include <string>
#include <vector>

#include "weylindex/halfspace.hpp"
#include "weylindex/rational.hpp"
#include "weylindex/rootsys.hpp"

namespace weylindex {

/// A convex polytope given by both representations. Facet normals are
/// primitive integral covectors of the dual of `lattice`, so a facet offset
/// is the integral distance from the origin when the facet hyperplane does
/// not pass through it.
struct Polytope {
  std::size_t ambient_dim = 0;
  int dim = -1;  // -1 for the empty polytope
  std::vector<WeightVector> vertices;  // lexicographically sorted
  std::vector<Halfspace> facets;       // sorted, irredundant
  std::vector<Halfspace> equations;    // affine span, empty when full-dimensional
  LatticeSpec lattice;

  bool empty() const { return dim < 0; }
  bool full_dimensional() const { return dim == static_cast<int>(ambient_dim) && dim >= 0; }
  bool contains(const WeightVector& x) const;
  /// Indices of vertices lying on facet `f`.
  std::vector<std::size_t> facet_vertices(std::size_t f) const;
  WeightVector vertex_barycenter() const;
};

struct Simplex {
  std::vector<WeightVector> points;  // k + 1 affinely independent points
};

/// Validates affine independence. Throws Error(Errc::degenerate_simplex).
Simplex make_simplex(std::vector<WeightVector> points);

struct Face {
  std::vector<std::size_t> saturated_facets;
  std::vector<std::size_t> vertex_indices;
  int codim = 0;
  WeightVector sample_point;  // vertex barycenter, lies in the relative interior
};

struct FlagChain {
  std::vector<std::size_t> facet_sequence;  // (i_1, ..., i_k)
  std::vector<WeightVector> points;         // (lambda_{F_1}, ..., lambda_{F_k})
  Simplex simplex;                          // (0, lambda_{F_1}, ..., lambda_{F_k})
  Rational coefficient;                     // c_F from support numbers
};

struct CensusRow {
  int codim;
  std::size_t faces;
  std::size_t orbits;
};

struct RegularityVerdict {
  bool regular;
  std::string reason;
};

Polytope convex_hull(const std::vector<WeightVector>& points, const LatticeSpec& lattice);
Polytope convex_hull(const std::vector<WeightVector>& points);

/// P cut by additional halfspaces; vertices are recomputed exactly.
Polytope intersect(const Polytope& p, const std::vector<Halfspace>& halfspaces);
Polytope intersect_chamber(const Polytope& p, const RootSystem& rs);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// Pulling triangulation using only vertices of P (each face is coned from
/// its smallest vertex). Deterministic. Throws Errc::not_full_dimensional.
std::vector<Simplex> triangulate(const Polytope& p);
/// Triangulation coned from `apex` over pulled facet triangulations. `apex`
/// must lie in P; facets containing it contribute nothing.
std::vector<Simplex> triangulate_from(const Polytope& p, const WeightVector& apex);

Rational lattice_volume(const Simplex& s, const LatticeSpec& lattice);
/// Lattice-normalized volume of P; zero when P is not full-dimensional.
Rational volume(const Polytope& p);

Rational support_number(const Polytope& p, const WeightVector& covector);

std::vector<Face> faces(const Polytope& p);

/// Throws Errc::not_weyl_invariant when the vertex set is not closed under
/// simple reflections.
std::vector<CensusRow> face_census(const Polytope& p, const RootSystem& rs);

bool is_weyl_invariant(const Polytope& p, const RootSystem& rs);

RegularityVerdict is_regular(const Polytope& p, const RootSystem& rs, const LatticeSpec& lattice);

/// One FlagChain per full flag of chamber-meeting faces whose simplex is
/// nondegenerate; the simplices tile P cap D (checked).
std::vector<FlagChain> flag_subdivision(const Polytope& p, const RootSystem& rs, const LatticeSpec& lattice);

}  // namespace weylindex
