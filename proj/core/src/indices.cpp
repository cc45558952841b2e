#include "weylindex/indices.hpp"

#include <set>

#include "weylindex/error.hpp"

namespace weylindex {

Polytope weight_polytope(const RootSystem& rs, const LatticeSpec& lattice, const std::vector<WeightVector>& weights) {
  const std::size_t k = rs.total_rank;
  if (lattice.rank() != k) throw Error(Errc::length_mismatch, "lattice rank differs from the group rank");
  if (weights.empty()) throw Error(Errc::weight_outside_lattice, "no weights given");
  for (const auto& w : weights)
    if (w.size() != k)
      throw Error(Errc::length_mismatch, "weight " + to_string(w) + " has length " + std::to_string(w.size()) +
                                             ", expected " + std::to_string(k));
  // Weights of a representation of G differ by characters of T; a common
  // shift is invisible after projectivization.
  for (const auto& w : weights)
    if (!lattice.contains(sub(w, weights.front())))
      throw Error(Errc::weight_outside_lattice,
                  "weight " + to_string(w) + " is not congruent to " + to_string(weights.front()) +
                      " modulo the character lattice");

  std::set<WeightVector> closure;
  for (const auto& w : weights)
    for (auto& u : weyl_orbit(rs, w)) closure.insert(std::move(u));
  return convex_hull({closure.begin(), closure.end()}, lattice);
}

std::vector<IntegrationResult> graded_integrals(const RootSystem& rs, const Polytope& truncated,
                                                IntegrationMethod method) {
  std::vector<IntegrationResult> out;
  for (const auto& part : graded_D_on_diagonal(rs)) out.push_back(integrate_polytope(part, truncated, method));
  return out;
}

namespace {

void check_chern_range(const RootSystem& rs, int i, int upper) {
  if (i < 0 || i > upper)
    throw Error(Errc::index_out_of_range, "Chern index " + std::to_string(i) + " outside [0, " +
                                              std::to_string(upper) + "] for a group of dimension " +
                                              std::to_string(rs.dimension()) + " and rank " +
                                              std::to_string(rs.total_rank));
}

}  // namespace

IndexResult degree(const RootSystem& rs, const LatticeSpec& lattice, const std::vector<WeightVector>& weights,
                   IntegrationMethod method) {
  auto truncated = intersect_chamber(weight_polytope(rs, lattice, weights), rs);
  auto integrand = diagonal(build_F(rs));
  auto r = integrate_polytope(integrand, truncated, method);
  return {factorial(rs.dimension()) * r.value, r.degenerate};
}

IndexResult chern_index(const RootSystem& rs, const LatticeSpec& lattice, const std::vector<WeightVector>& weights,
                        int i, IntegrationMethod method) {
  const int n = rs.dimension(), k = rs.total_rank;
  check_chern_range(rs, i, n);
  auto truncated = intersect_chamber(weight_polytope(rs, lattice, weights), rs);
  if (i > n - k) return {Rational(0), !truncated.full_dimensional()};
  const int top = n - k;  // = 2|R+|
  auto part = graded_component(diagonal(apply_D(rs, build_F(rs))), top - i);
  auto r = integrate_polytope(part, truncated, method);
  return {factorial(n - i) * r.value, r.degenerate};
}

IndexResult chern_index_flag_path(const RootSystem& rs, const LatticeSpec& lattice,
                                  const std::vector<WeightVector>& weights, int i) {
  const int n = rs.dimension(), k = rs.total_rank;
  check_chern_range(rs, i, n - k);
  auto polytope = weight_polytope(rs, lattice, weights);
  auto flags = flag_subdivision(polytope, rs, lattice);

  const int d = n - k - i;
  auto chern_poly = graded_component(diagonal(apply_D(rs, build_F(rs))), n - k - i) * factorial(d);

  Rational total = 0;
  for (const auto& flag : flags) {
    total += flag.coefficient * complete_homogeneous_sum(d, k, [&](std::span<const int> mult) {
               return polarization_value(chern_poly, flag.points, mult);
             });
  }
  return {total, flags.empty()};
}

IndexResult euler_characteristic(const RootSystem& rs, const LatticeSpec& lattice,
                                 const std::vector<WeightVector>& weights, IntegrationMethod method) {
  const int n = rs.dimension();
  auto truncated = intersect_chamber(weight_polytope(rs, lattice, weights), rs);
  auto integrals = graded_integrals(rs, truncated, method);
  Rational total = 0;
  for (std::size_t j = 0; j < integrals.size(); ++j) {
    Rational term = factorial(n - static_cast<long>(j)) * integrals[j].value;
    total += (j % 2 == 0) ? term : Rational(-term);
  }
  if ((n - 1) % 2 != 0) total = -total;
  return {total, !truncated.full_dimensional()};
}

IndexResult mixed_degree(const RootSystem& rs, const LatticeSpec& lattice,
                         const std::vector<std::vector<WeightVector>>& weight_lists, IntegrationMethod method) {
  const int n = rs.dimension();
  if (static_cast<int>(weight_lists.size()) != n)
    throw Error(Errc::wrong_argument_count, "mixed degree needs " + std::to_string(n) + " weight lists, got " +
                                                std::to_string(weight_lists.size()));
  if (n > 20) throw Error(Errc::index_out_of_range, "mixed degree supports groups of dimension at most 20");

  std::vector<Polytope> polytopes;
  for (const auto& list : weight_lists) polytopes.push_back(weight_polytope(rs, lattice, list));
  auto integrand = diagonal(build_F(rs));

  // (1/n!) sum_S (-1)^{n-|S|} n! int_{(sum_{j in S} P_j) cap D} F(x, x) dx
  const unsigned long subsets = 1UL << n;
  std::vector<Polytope> sums(subsets);
  Rational total = 0;
  bool degenerate = true;
  for (unsigned long mask = 1; mask < subsets; ++mask) {
    const int low = __builtin_ctzl(mask);
    const unsigned long rest = mask & (mask - 1);
    sums[mask] = rest ? minkowski_sum(sums[rest], polytopes[low]) : polytopes[low];
    auto r = integrate_polytope(integrand, intersect_chamber(sums[mask], rs), method);
    if (mask == subsets - 1) degenerate = r.degenerate;
    const int size = __builtin_popcountl(mask);
    total += ((n - size) % 2 == 0) ? r.value : Rational(-r.value);
  }
  return {total, degenerate};
}

}  // namespace weylindex
