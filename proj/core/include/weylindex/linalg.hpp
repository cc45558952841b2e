#pragma once

// Small dense exact linear algebra. Matrices are row-major vectors of rows;
// dimensions in this library never exceed a few dozen.

#include <optional>
#include <vector>

#include "weylindex/rational.hpp"

namespace weylindex::linalg {

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity(std::size_t n);
Matrix transpose(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
WeightVector apply(const Matrix& a, const WeightVector& v);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& a);

std::size_t rank(Matrix a);
Rational determinant(Matrix a);
std::optional<Matrix> inverse(const Matrix& a);

/// Some solution of a x = b, or nullopt when the system is inconsistent.
std::optional<WeightVector> solve(const Matrix& a, const WeightVector& b);

/// Basis of {x : a x = 0}; `cols` gives the ambient size when a has no rows.
std::vector<WeightVector> nullspace(const Matrix& a, std::size_t cols);

/// Dimension of the affine span of the points; -1 for an empty set.
int affine_dimension(const std::vector<WeightVector>& points);

}  // namespace weylindex::linalg
