#pragma once

// Sparse multivariate polynomials with exact rational coefficients, and the
// operations the index formulas need: F(x, y), the operator
// prod (1 + d_alpha)(1 + d~_alpha), diagonal restriction, grading and
// polarization.

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "weylindex/rational.hpp"
#include "weylindex/rootsys.hpp"

namespace weylindex {

class MultiPoly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);
  /// sum_j coeffs[j] x_j + c
  static MultiPoly linear(const WeightVector& coeffs, const Rational& c = 0);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c x^e; zero results are erased so no zero coefficient is stored.
  void add_term(const Exponent& e, const Rational& c);

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// The zero polynomial counts as homogeneous of every degree.
  bool is_homogeneous() const;
  Rational evaluate(const WeightVector& point) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(int e) const;
  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// F(x, y) = prod_{alpha in R+} (x, alpha)(y, alpha) / (rho, alpha)^2 in the
/// 2k variables (x_1..x_k, y_1..y_k).
MultiPoly build_F(const RootSystem& rs);

/// sum_j v_j dp/dx_j. Throws Errc::length_mismatch.
MultiPoly directional_derivative(const MultiPoly& p, const WeightVector& v);

/// prod_{alpha in R+} (1 + d_(alpha,0)) (1 + d_(0,alpha)) applied to p in 2k
/// variables, one factor at a time.
MultiPoly apply_D(const RootSystem& rs, const MultiPoly& p);

/// p(x, x). Throws Errc::length_mismatch for an odd variable count.
MultiPoly diagonal(const MultiPoly& p);

MultiPoly graded_component(const MultiPoly& p, int d);

/// Substitution x_j -> x . m_j for a linear change of variables whose j-th
/// row is m_j.
MultiPoly substitute_linear(const MultiPoly& p, const linalg::Matrix& m);

/// (1/d!) d^d f / dv_1 ... dv_d for f homogeneous of degree d.
/// Throws Errc::not_homogeneous or Errc::wrong_argument_count.
Rational polarization_value(const MultiPoly& f, std::span<const WeightVector> args);

/// Polarization at the multiset where points[j] is repeated multiplicity[j]
/// times.
Rational polarization_value(const MultiPoly& f, std::span<const WeightVector> points,
                            std::span<const int> multiplicity);

/// Sum over all (i_1, ..., i_s) with i_j >= 0 and sum i_j = d of
/// evaluator(i_1, ..., i_s).
Rational complete_homogeneous_sum(int d, int s, const std::function<Rational(std::span<const int>)>& evaluator);

/// [D]_i F(x, x), read off as the degree 2|R+| - i part of diagonal(apply_D(F)).
std::vector<MultiPoly> graded_D_on_diagonal(const RootSystem& rs);

}  // namespace weylindex
