#pragma once

#include "weylindex/rational.hpp"

namespace weylindex {

/// The closed halfspace <normal, x> <= offset (or the hyperplane, when used
/// as an equation).
struct Halfspace {
  WeightVector normal;
  Rational offset;

  bool contains(const WeightVector& x) const { return dot(normal, x) <= offset; }
  bool saturated_by(const WeightVector& x) const { return dot(normal, x) == offset; }

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

}  // namespace weylindex
