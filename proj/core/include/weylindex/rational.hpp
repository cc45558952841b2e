#pragma once

// Exact rational scalars and vectors used throughout the library.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace weylindex {

using Rational = mpq_class;
using Integer = mpz_class;

/// A point or covector in the weight space L_T (x) R, written in the
/// standard basis: fundamental weights of the semisimple part followed by
/// the central coordinates.
using WeightVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" exactly. Throws Error(Errc::malformed_rational).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const WeightVector& v);

bool is_integer(const Rational& q);

Rational factorial(long n);
Rational binomial(long n, long k);

Rational dot(const WeightVector& a, const WeightVector& b);
WeightVector add(const WeightVector& a, const WeightVector& b);
WeightVector sub(const WeightVector& a, const WeightVector& b);
WeightVector scale(const WeightVector& a, const Rational& s);
bool is_zero(const WeightVector& v);

/// Positive rational multiple of v whose entries are coprime integers.
/// Returns the zero vector unchanged.
WeightVector primitive_integer(const WeightVector& v);

}  // namespace weylindex
