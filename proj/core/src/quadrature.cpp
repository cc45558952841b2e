#include "weylindex/quadrature.hpp"

#include <numeric>

#include "weylindex/error.hpp"

namespace weylindex {

const char* to_string(IntegrationMethod m) {
  return m == IntegrationMethod::monomial ? "monomial" : "polarization";
}

namespace {

void check_shape(const MultiPoly& p, const Simplex& s, const LatticeSpec& lattice) {
  const std::size_t k = lattice.rank();
  if (p.nvars() != k) throw Error(Errc::length_mismatch, "integrand variable count differs from the lattice rank");
  if (s.points.size() != k + 1) throw Error(Errc::degenerate_simplex, "simplex has wrong number of points");
}

}  // namespace

Rational integrate_simplex_monomial(const MultiPoly& p, const Simplex& s, const LatticeSpec& lattice) {
  check_shape(p, s, lattice);
  const std::size_t k = lattice.rank();
  Rational vol = lattice_volume(s, lattice);
  if (vol == 0) throw Error(Errc::degenerate_simplex, "simplex has zero volume");
  if (p.is_zero()) return 0;

  // x_j = a0_j + sum_i u_i (a_i - a0)_j
  std::vector<MultiPoly> coords;
  for (std::size_t j = 0; j < k; ++j) {
    WeightVector coeffs(k);
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = s.points[i + 1][j] - s.points[0][j];
    coords.push_back(MultiPoly::linear(coeffs, s.points[0][j]));
  }
  std::vector<std::vector<MultiPoly>> powers(k);
  for (std::size_t j = 0; j < k; ++j) powers[j].push_back(MultiPoly::constant(k, 1));

  MultiPoly pulled(k);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(k, c);
    for (std::size_t j = 0; j < k; ++j) {
      while (static_cast<int>(powers[j].size()) <= e[j]) powers[j].push_back(powers[j].back() * coords[j]);
      if (e[j] > 0) term = term * powers[j][e[j]];
    }
    pulled += term;
  }

  Rational standard = 0;
  for (const auto& [b, c] : pulled.terms()) {
    Rational num = c;
    for (int bi : b) num *= factorial(bi);
    standard += num / factorial(std::accumulate(b.begin(), b.end(), 0L) + static_cast<long>(k));
  }
  // The standard simplex has normalized volume 1/k!.
  return standard * vol * factorial(static_cast<long>(k));
}

Rational integrate_simplex_polarization(const MultiPoly& p, const Simplex& s, const LatticeSpec& lattice) {
  check_shape(p, s, lattice);
  if (!p.is_homogeneous())
    throw Error(Errc::not_homogeneous, "polarization quadrature needs a homogeneous integrand");
  const std::size_t k = lattice.rank();
  Rational vol = lattice_volume(s, lattice);
  if (vol == 0) throw Error(Errc::degenerate_simplex, "simplex has zero volume");
  if (p.is_zero()) return 0;
  const int d = p.degree();
  Rational sum = complete_homogeneous_sum(d, static_cast<int>(k + 1), [&](std::span<const int> mult) {
    return polarization_value(p, s.points, mult);
  });
  return vol * sum / binomial(d + static_cast<long>(k), static_cast<long>(k));
}

Rational integrate_simplices(const MultiPoly& p, const std::vector<Simplex>& simplices, const LatticeSpec& lattice,
                             IntegrationMethod method) {
  Rational total = 0;
  if (method == IntegrationMethod::monomial) {
    for (const auto& s : simplices) total += integrate_simplex_monomial(p, s, lattice);
    return total;
  }
  const int top = p.degree();
  for (int d = 0; d <= top; ++d) {
    auto part = graded_component(p, d);
    if (part.is_zero()) continue;
    for (const auto& s : simplices) total += integrate_simplex_polarization(part, s, lattice);
  }
  return total;
}

IntegrationResult integrate_polytope(const MultiPoly& p, const Polytope& poly, IntegrationMethod method) {
  if (!poly.full_dimensional()) return {Rational(0), true};
  return {integrate_simplices(p, triangulate(poly), poly.lattice, method), false};
}

}  // namespace weylindex
